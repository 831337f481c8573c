#pragma once

#include <complex>

#include "blockspec/matrix.hpp"

namespace blockspec {

/// Wigner semicircle law at scale sigma: support [-2 sigma, 2 sigma],
/// standard deviation sigma. The limit law for Haar O(d)/SO(d) block
/// matrices uses sigma = 1/sqrt(d).
struct SemicircleRef {
    double sigma = 1.0;

    explicit SemicircleRef(double sigma_);
    static SemicircleRef for_block_dimension(Index d);
};

double sc_density(const SemicircleRef& ref, double x);
double sc_cdf(const SemicircleRef& ref, double x);

/// Inverse CDF by bisection on the support, to 1e-10. Requires 0 < q < 1.
double sc_quantile(const SemicircleRef& ref, double q);

/// Stieltjes transform of the semicircle law, the upper-half-plane root of
/// sigma^2 m^2 + z m + 1 = 0.
std::complex<double> sc_stieltjes(const SemicircleRef& ref, std::complex<double> z);

} // namespace blockspec
