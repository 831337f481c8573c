#include "blockspec/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace blockspec {

namespace {

// Regularized incomplete gamma functions P(a, x) and Q(a, x) via the
// standard series / continued-fraction pair.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-15) {
            break;
        }
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_continued_fraction(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) {
            d = tiny;
        }
        c = b + an / c;
        if (std::abs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) {
            break;
        }
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) {
        throw std::invalid_argument("gamma_q: bad arguments");
    }
    if (x == 0.0) {
        return 1.0;
    }
    if (x < a + 1.0) {
        return 1.0 - gamma_p_series(a, x);
    }
    return gamma_q_continued_fraction(a, x);
}

} // namespace

double chi_square_tail(double x, int dof) {
    if (dof < 1) {
        throw std::invalid_argument("chi_square_tail: dof must be >= 1");
    }
    if (x <= 0.0) {
        return 1.0;
    }
    return gamma_q(0.5 * static_cast<double>(dof), 0.5 * x);
}

ChiSquareTest chi_square_gof(const std::vector<long>& observed,
                             const std::vector<double>& expected) {
    if (observed.size() != expected.size() || observed.size() < 2) {
        throw std::invalid_argument("chi_square_gof: need matching cells, at least 2");
    }
    double chi2 = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0.0) {
            throw std::invalid_argument("chi_square_gof: expected counts must be positive");
        }
        const double diff = static_cast<double>(observed[i]) - expected[i];
        chi2 += diff * diff / expected[i];
    }
    ChiSquareTest t;
    t.chi2 = chi2;
    t.dof = static_cast<int>(observed.size()) - 1;
    t.pvalue = chi_square_tail(chi2, t.dof);
    return t;
}

ChiSquareTest chi_square_independence(const std::vector<std::vector<long>>& table) {
    const std::size_t rows = table.size();
    if (rows < 2 || table[0].size() < 2) {
        throw std::invalid_argument("chi_square_independence: need at least a 2x2 table");
    }
    const std::size_t cols = table[0].size();
    std::vector<double> row_tot(rows, 0.0);
    std::vector<double> col_tot(cols, 0.0);
    double total = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
        if (table[r].size() != cols) {
            throw std::invalid_argument("chi_square_independence: ragged table");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            row_tot[r] += static_cast<double>(table[r][c]);
            col_tot[c] += static_cast<double>(table[r][c]);
            total += static_cast<double>(table[r][c]);
        }
    }
    if (total <= 0.0) {
        throw std::invalid_argument("chi_square_independence: empty table");
    }
    double chi2 = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const double expected = row_tot[r] * col_tot[c] / total;
            if (expected <= 0.0) {
                continue;
            }
            const double diff = static_cast<double>(table[r][c]) - expected;
            chi2 += diff * diff / expected;
        }
    }
    ChiSquareTest t;
    t.chi2 = chi2;
    t.dof = static_cast<int>((rows - 1) * (cols - 1));
    t.pvalue = chi_square_tail(chi2, t.dof);
    return t;
}

double kolmogorov_q(double lambda) {
    if (lambda <= 0.0) {
        return 1.0;
    }
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 200; ++k) {
        const double term = std::exp(-2.0 * static_cast<double>(k) * static_cast<double>(k) *
                                     lambda * lambda);
        sum += sign * term;
        if (term < 1e-16) {
            break;
        }
        sign = -sign;
    }
    return std::min(1.0, std::max(0.0, 2.0 * sum));
}

double ks_statistic_two_sample(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("ks_statistic_two_sample: empty sample");
    }
    std::size_t i = 0;
    std::size_t j = 0;
    double dist = 0.0;
    while (i < a.size() && j < b.size()) {
        const double t = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= t) {
            ++i;
        }
        while (j < b.size() && b[j] <= t) {
            ++j;
        }
        const double fa = static_cast<double>(i) / static_cast<double>(a.size());
        const double fb = static_cast<double>(j) / static_cast<double>(b.size());
        dist = std::max(dist, std::abs(fa - fb));
    }
    return dist;
}

double ks_p_value_two_sample(double statistic, std::size_t n, std::size_t m) {
    const double ne = std::sqrt(static_cast<double>(n) * static_cast<double>(m) /
                                static_cast<double>(n + m));
    return kolmogorov_q((ne + 0.12 + 0.11 / ne) * statistic);
}

double ks_critical_value_two_sample(double alpha, std::size_t n, std::size_t m) {
    double c = 0.0;
    if (alpha == 0.05) {
        c = 1.3581;
    } else if (alpha == 0.01) {
        c = 1.6276;
    } else {
        // c(alpha) = sqrt(-ln(alpha/2)/2)
        c = std::sqrt(-0.5 * std::log(alpha / 2.0));
    }
    return c * std::sqrt(static_cast<double>(n + m) /
                         (static_cast<double>(n) * static_cast<double>(m)));
}

void RunningMoments::add(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
}

double RunningMoments::variance() const {
    if (count_ < 2) {
        return 0.0;
    }
    return m2_ / static_cast<double>(count_ - 1);
}

double RunningMoments::std_error() const {
    if (count_ < 2) {
        return 0.0;
    }
    return std::sqrt(variance() / static_cast<double>(count_));
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("fit_slope: need matching samples, at least 2");
    }
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

} // namespace blockspec
