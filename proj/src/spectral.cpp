#include "blockspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace blockspec {

void tridiagonalize(DenseMatrix& a, std::vector<double>& diag, std::vector<double>& offdiag,
                    bool accumulate) {
    const Index n = a.rows();
    diag.assign(static_cast<std::size_t>(n), 0.0);
    offdiag.assign(static_cast<std::size_t>(n), 0.0);
    auto d = [&](Index i) -> double& { return diag[static_cast<std::size_t>(i)]; };
    auto e = [&](Index i) -> double& { return offdiag[static_cast<std::size_t>(i)]; };

    for (Index i = n - 1; i >= 1; --i) {
        const Index l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (Index k = 0; k <= l; ++k) {
                scale += std::abs(a(i, k));
            }
            if (scale == 0.0) {
                e(i) = a(i, l);
            } else {
                for (Index k = 0; k <= l; ++k) {
                    a(i, k) /= scale;
                    h += a(i, k) * a(i, k);
                }
                double f = a(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e(i) = scale * g;
                h -= f * g;
                a(i, l) = f - g;
                f = 0.0;
                for (Index j = 0; j <= l; ++j) {
                    if (accumulate) {
                        a(j, i) = a(i, j) / h;
                    }
                    g = 0.0;
                    for (Index k = 0; k <= j; ++k) {
                        g += a(j, k) * a(i, k);
                    }
                    for (Index k = j + 1; k <= l; ++k) {
                        g += a(k, j) * a(i, k);
                    }
                    e(j) = g / h;
                    f += e(j) * a(i, j);
                }
                const double hh = f / (h + h);
                for (Index j = 0; j <= l; ++j) {
                    f = a(i, j);
                    g = e(j) - hh * f;
                    e(j) = g;
                    for (Index k = 0; k <= j; ++k) {
                        a(j, k) -= f * e(k) + g * a(i, k);
                    }
                }
            }
        } else {
            e(i) = a(i, l);
        }
        d(i) = h;
    }
    d(0) = 0.0;
    e(0) = 0.0;

    if (accumulate) {
        for (Index i = 0; i < n; ++i) {
            const Index l = i - 1;
            if (d(i) != 0.0) {
                for (Index j = 0; j <= l; ++j) {
                    double g = 0.0;
                    for (Index k = 0; k <= l; ++k) {
                        g += a(i, k) * a(k, j);
                    }
                    for (Index k = 0; k <= l; ++k) {
                        a(k, j) -= g * a(k, i);
                    }
                }
            }
            d(i) = a(i, i);
            a(i, i) = 1.0;
            for (Index j = 0; j <= l; ++j) {
                a(j, i) = 0.0;
                a(i, j) = 0.0;
            }
        }
    } else {
        for (Index i = 0; i < n; ++i) {
            d(i) = a(i, i);
        }
    }
}

void tql_implicit_shift(std::vector<double>& diag, std::vector<double>& offdiag, DenseMatrix* z) {
    const Index n = static_cast<Index>(diag.size());
    auto d = [&](Index i) -> double& { return diag[static_cast<std::size_t>(i)]; };
    auto e = [&](Index i) -> double& { return offdiag[static_cast<std::size_t>(i)]; };
    constexpr double eps = std::numeric_limits<double>::epsilon();

    for (Index i = 1; i < n; ++i) {
        e(i - 1) = e(i);
    }
    e(n - 1) = 0.0;

    for (Index l = 0; l < n; ++l) {
        int iterations = 0;
        Index m = l;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d(m)) + std::abs(d(m + 1));
                if (std::abs(e(m)) <= eps * dd) {
                    break;
                }
            }
            if (m != l) {
                if (iterations++ == 50) {
                    throw std::runtime_error("tql_implicit_shift: no convergence in 50 iterations");
                }
                double g = (d(l + 1) - d(l)) / (2.0 * e(l));
                double r = std::hypot(g, 1.0);
                g = d(m) - d(l) + e(l) / (g + std::copysign(r, g));
                double s = 1.0;
                double c = 1.0;
                double p = 0.0;
                bool underflow = false;
                for (Index i = m - 1; i >= l; --i) {
                    double f = s * e(i);
                    const double b = c * e(i);
                    r = std::hypot(f, g);
                    e(i + 1) = r;
                    if (r == 0.0) {
                        d(i + 1) -= p;
                        e(m) = 0.0;
                        underflow = (i >= l);
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d(i + 1) - p;
                    r = (d(i) - g) * s + 2.0 * c * b;
                    p = s * r;
                    d(i + 1) = g + p;
                    g = c * r - b;
                    if (z) {
                        for (Index k = 0; k < z->rows(); ++k) {
                            f = (*z)(k, i + 1);
                            (*z)(k, i + 1) = s * (*z)(k, i) + c * f;
                            (*z)(k, i) = c * (*z)(k, i) - s * f;
                        }
                    }
                }
                if (underflow) {
                    continue;
                }
                d(l) -= p;
                e(l) = g;
                e(m) = 0.0;
            }
        } while (m != l);
    }
}

namespace {

void check_consistency(const SymMatrix& m, const std::vector<double>& eigenvalues) {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double v : eigenvalues) {
        sum += v;
        sum_sq += v * v;
    }
    const double tr = m.trace();
    if (std::abs(sum - tr) > 1e-8 * (1.0 + std::abs(tr))) {
        throw std::runtime_error("eig_symmetric: eigenvalue sum disagrees with trace");
    }
    const double frob_sq = m.frobenius_norm() * m.frobenius_norm();
    if (std::abs(sum_sq - frob_sq) > 1e-8 * (1.0 + frob_sq)) {
        throw std::runtime_error("eig_symmetric: eigenvalue square-sum disagrees with ||M||_F^2");
    }
}

} // namespace

Spectrum eig_symmetric(const SymMatrix& m) {
    if (m.dim() < 1) {
        throw std::invalid_argument("eig_symmetric: empty matrix");
    }
    if (!m.all_finite()) {
        throw std::invalid_argument("eig_symmetric: matrix has non-finite entries");
    }
    DenseMatrix work = m.to_dense();
    std::vector<double> d;
    std::vector<double> e;
    tridiagonalize(work, d, e, false);
    tql_implicit_shift(d, e, nullptr);
    std::sort(d.begin(), d.end());
    check_consistency(m, d);
    Spectrum sp;
    sp.eigenvalues = std::move(d);
    return sp;
}

EigResult eig_symmetric_with_vectors(const SymMatrix& m) {
    if (m.dim() < 1) {
        throw std::invalid_argument("eig_symmetric: empty matrix");
    }
    if (!m.all_finite()) {
        throw std::invalid_argument("eig_symmetric: matrix has non-finite entries");
    }
    DenseMatrix work = m.to_dense();
    std::vector<double> d;
    std::vector<double> e;
    tridiagonalize(work, d, e, true);
    tql_implicit_shift(d, e, &work);

    const Index n = m.dim();
    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        return d[static_cast<std::size_t>(a)] < d[static_cast<std::size_t>(b)];
    });

    EigResult out;
    out.spectrum.eigenvalues.resize(static_cast<std::size_t>(n));
    out.vectors = DenseMatrix(n, n);
    for (Index k = 0; k < n; ++k) {
        const Index src = order[static_cast<std::size_t>(k)];
        out.spectrum.eigenvalues[static_cast<std::size_t>(k)] = d[static_cast<std::size_t>(src)];
        for (Index r = 0; r < n; ++r) {
            out.vectors(r, k) = work(r, src);
        }
    }
    check_consistency(m, out.spectrum.eigenvalues);
    return out;
}

void require_upper_half(std::complex<double> z) {
    if (!(z.imag() > 0.0)) {
        throw std::invalid_argument("expected a point in the open upper half-plane (Im z > 0)");
    }
}

std::complex<double> stieltjes(const Spectrum& sp, std::complex<double> z) {
    require_upper_half(z);
    if (sp.eigenvalues.empty()) {
        throw std::invalid_argument("stieltjes: empty spectrum");
    }
    std::complex<double> acc{0.0, 0.0};
    for (double lambda : sp.eigenvalues) {
        acc += 1.0 / (lambda - z);
    }
    return acc / static_cast<double>(sp.eigenvalues.size());
}

double ks_distance(const Spectrum& sp, const std::function<double(double)>& cdf) {
    const auto& x = sp.eigenvalues;
    if (x.empty()) {
        throw std::invalid_argument("ks_distance: empty spectrum");
    }
    const double n = static_cast<double>(x.size());
    double dist = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double f = cdf(x[i]);
        const double below = f - static_cast<double>(i) / n;
        const double above = static_cast<double>(i + 1) / n - f;
        dist = std::max(dist, std::max(below, above));
    }
    return dist;
}

double ks_distance_two_sample(const Spectrum& a, const Spectrum& b) {
    const auto& x = a.eigenvalues;
    const auto& y = b.eigenvalues;
    if (x.empty() || y.empty()) {
        throw std::invalid_argument("ks_distance_two_sample: empty spectrum");
    }
    std::size_t i = 0;
    std::size_t j = 0;
    double dist = 0.0;
    while (i < x.size() && j < y.size()) {
        const double t = std::min(x[i], y[j]);
        while (i < x.size() && x[i] <= t) {
            ++i;
        }
        while (j < y.size() && y[j] <= t) {
            ++j;
        }
        const double fa = static_cast<double>(i) / static_cast<double>(x.size());
        const double fb = static_cast<double>(j) / static_cast<double>(y.size());
        dist = std::max(dist, std::abs(fa - fb));
    }
    return dist;
}

double quantile_interpolated(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) {
        throw std::invalid_argument("quantile_interpolated: empty sample");
    }
    const double pos = q * static_cast<double>(sorted.size()) - 0.5;
    if (pos <= 0.0) {
        return sorted.front();
    }
    if (pos >= static_cast<double>(sorted.size() - 1)) {
        return sorted.back();
    }
    const std::size_t lo = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

std::vector<std::pair<double, double>> qq_pairs(const Spectrum& a, const Spectrum& b) {
    if (a.eigenvalues.empty() || b.eigenvalues.empty()) {
        throw std::invalid_argument("qq_pairs: empty spectrum");
    }
    const std::size_t k = std::min(a.eigenvalues.size(), b.eigenvalues.size());
    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const double level = (static_cast<double>(i) + 0.5) / static_cast<double>(k);
        pairs.emplace_back(quantile_interpolated(a.eigenvalues, level),
                           quantile_interpolated(b.eigenvalues, level));
    }
    return pairs;
}

RankPerturbationCheck rank_perturbation_check(const SymMatrix& a, const SymMatrix& b,
                                              std::complex<double> z) {
    require_upper_half(z);
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("rank_perturbation_check: dimension mismatch");
    }
    const Index n = a.dim();
    SymMatrix delta(n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = i; j < n; ++j) {
            delta.set(i, j, a(i, j) - b(i, j));
        }
    }
    const Spectrum delta_spectrum = eig_symmetric(delta);
    const double threshold = 1e-10 * delta.frobenius_norm();
    int rank = 0;
    for (double lambda : delta_spectrum.eigenvalues) {
        if (std::abs(lambda) > threshold) {
            ++rank;
        }
    }
    const std::complex<double> ma = stieltjes(eig_symmetric(a), z);
    const std::complex<double> mb = stieltjes(eig_symmetric(b), z);
    RankPerturbationCheck out;
    out.rank = rank;
    out.lhs = std::abs(static_cast<double>(n) * (ma - mb));
    out.bound = static_cast<double>(rank) / z.imag();
    out.ok = out.lhs <= out.bound * (1.0 + 1e-9);
    return out;
}

} // namespace blockspec
