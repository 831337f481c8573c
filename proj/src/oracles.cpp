#include "blockspec/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blockspec::oracles {

namespace {

long count_eigenvalues_below(const std::vector<double>& d, const std::vector<double>& e,
                             double x) {
    // Negative pivots of the LDL^T factorization of T - xI.
    long count = 0;
    double q = d[0] - x;
    if (q < 0.0) {
        ++count;
    }
    for (std::size_t i = 1; i < d.size(); ++i) {
        if (q == 0.0) {
            q = 1e-300;
        }
        q = d[i] - x - e[i] * e[i] / q;
        if (q < 0.0) {
            ++count;
        }
    }
    return count;
}

} // namespace

std::vector<double> sturm_eigenvalues(const std::vector<double>& diag,
                                      const std::vector<double>& offdiag) {
    const std::size_t n = diag.size();
    if (n == 0 || offdiag.size() != n) {
        throw std::invalid_argument("sturm_eigenvalues: bad tridiagonal sizes");
    }
    double lo = diag[0];
    double hi = diag[0];
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) {
            radius += std::abs(offdiag[i]);
        }
        if (i + 1 < n) {
            radius += std::abs(offdiag[i + 1]);
        }
        lo = std::min(lo, diag[i] - radius);
        hi = std::max(hi, diag[i] + radius);
    }
    const double span = std::max(hi - lo, 1e-300);
    lo -= 1e-12 * span;
    hi += 1e-12 * span;

    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        double a = lo;
        double b = hi;
        for (int iter = 0; iter < 200 && b - a > 1e-14 * span; ++iter) {
            const double mid = 0.5 * (a + b);
            if (count_eigenvalues_below(diag, offdiag, mid) > static_cast<long>(k)) {
                b = mid;
            } else {
                a = mid;
            }
        }
        out[k] = 0.5 * (a + b);
    }
    return out;
}

std::complex<double> resolvent_trace_direct(const SymMatrix& m, std::complex<double> z) {
    const Index n = m.dim();
    using cplx = std::complex<double>;
    std::vector<cplx> a(static_cast<std::size_t>(n * n));
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            a[static_cast<std::size_t>(i * n + j)] = cplx(m(i, j), 0.0);
        }
        a[static_cast<std::size_t>(i * n + i)] -= z;
    }
    // LU with partial pivoting.
    std::vector<Index> perm(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        perm[static_cast<std::size_t>(i)] = i;
    }
    auto at = [&](Index i, Index j) -> cplx& { return a[static_cast<std::size_t>(i * n + j)]; };
    for (Index k = 0; k < n; ++k) {
        Index pivot = k;
        double best = std::abs(at(k, k));
        for (Index i = k + 1; i < n; ++i) {
            if (std::abs(at(i, k)) > best) {
                best = std::abs(at(i, k));
                pivot = i;
            }
        }
        if (best == 0.0) {
            throw std::runtime_error("resolvent_trace_direct: singular shift");
        }
        if (pivot != k) {
            for (Index j = 0; j < n; ++j) {
                std::swap(at(k, j), at(pivot, j));
            }
            std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(pivot)]);
        }
        for (Index i = k + 1; i < n; ++i) {
            at(i, k) /= at(k, k);
            const cplx f = at(i, k);
            for (Index j = k + 1; j < n; ++j) {
                at(i, j) -= f * at(k, j);
            }
        }
    }
    cplx trace{0.0, 0.0};
    std::vector<cplx> x(static_cast<std::size_t>(n));
    for (Index col = 0; col < n; ++col) {
        for (Index i = 0; i < n; ++i) {
            x[static_cast<std::size_t>(i)] =
                (perm[static_cast<std::size_t>(i)] == col) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
        }
        for (Index i = 1; i < n; ++i) {
            for (Index j = 0; j < i; ++j) {
                x[static_cast<std::size_t>(i)] -= at(i, j) * x[static_cast<std::size_t>(j)];
            }
        }
        for (Index i = n - 1; i >= 0; --i) {
            for (Index j = i + 1; j < n; ++j) {
                x[static_cast<std::size_t>(i)] -= at(i, j) * x[static_cast<std::size_t>(j)];
            }
            x[static_cast<std::size_t>(i)] /= at(i, i);
        }
        trace += x[static_cast<std::size_t>(col)];
    }
    return trace;
}

std::pair<long, double> align_pair_exhaustive(const std::vector<double>& zi,
                                              const std::vector<double>& zj) {
    const std::size_t p = zi.size();
    if (p == 0 || zj.size() != p) {
        throw std::invalid_argument("align_pair_exhaustive: signals must share a positive length");
    }
    long best = 0;
    double best_dist = 0.0;
    for (std::size_t shift = 0; shift < p; ++shift) {
        double acc = 0.0;
        for (std::size_t k = 0; k < p; ++k) {
            std::size_t idx = k + shift;
            if (idx >= p) {
                idx -= p;
            }
            const double diff = zi[k] - zj[idx];
            acc += diff * diff;
        }
        if (shift == 0 || acc < best_dist) {
            best_dist = acc;
            best = static_cast<long>(shift);
        }
    }
    return {best, std::sqrt(best_dist)};
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(b > a)) {
        return 0.0;
    }
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 60);
}

double integrate_to_infinity(const std::function<double(double)>& f, double a, double tol) {
    const auto transformed = [&f, a](double t) {
        const double u = 1.0 - t;
        return f(a + t / u) / (u * u);
    };
    return integrate(transformed, 0.0, 1.0 - 1e-12, tol);
}

} // namespace blockspec::oracles
