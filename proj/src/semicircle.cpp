#include "blockspec/semicircle.hpp"

#include <cmath>
#include <stdexcept>

#include "blockspec/spectral.hpp"

namespace blockspec {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

SemicircleRef::SemicircleRef(double sigma_) : sigma(sigma_) {
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("SemicircleRef: sigma must be positive");
    }
}

SemicircleRef SemicircleRef::for_block_dimension(Index d) {
    if (d < 1) {
        throw std::invalid_argument("SemicircleRef: block dimension must be >= 1");
    }
    return SemicircleRef(1.0 / std::sqrt(static_cast<double>(d)));
}

double sc_density(const SemicircleRef& ref, double x) {
    const double edge = 2.0 * ref.sigma;
    if (std::abs(x) >= edge) {
        return 0.0;
    }
    return std::sqrt(edge * edge - x * x) / (2.0 * kPi * ref.sigma * ref.sigma);
}

double sc_cdf(const SemicircleRef& ref, double x) {
    const double edge = 2.0 * ref.sigma;
    if (x <= -edge) {
        return 0.0;
    }
    if (x >= edge) {
        return 1.0;
    }
    const double s2 = ref.sigma * ref.sigma;
    return 0.5 + x * std::sqrt(edge * edge - x * x) / (4.0 * kPi * s2) +
           std::asin(x / edge) / kPi;
}

double sc_quantile(const SemicircleRef& ref, double q) {
    if (!(q > 0.0 && q < 1.0)) {
        throw std::invalid_argument("sc_quantile: level must be in (0, 1)");
    }
    double lo = -2.0 * ref.sigma;
    double hi = 2.0 * ref.sigma;
    while (hi - lo > 1e-10 * ref.sigma) {
        const double mid = 0.5 * (lo + hi);
        if (sc_cdf(ref, mid) < q) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::complex<double> sc_stieltjes(const SemicircleRef& ref, std::complex<double> z) {
    require_upper_half(z);
    const double s2 = ref.sigma * ref.sigma;
    const std::complex<double> root = std::sqrt(z * z - 4.0 * s2);
    const std::complex<double> m_plus = (-z + root) / (2.0 * s2);
    const std::complex<double> m_minus = (-z - root) / (2.0 * s2);
    return (m_plus.imag() > 0.0) ? m_plus : m_minus;
}

} // namespace blockspec
