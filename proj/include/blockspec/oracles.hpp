#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "blockspec/matrix.hpp"

namespace blockspec::oracles {

/// Eigenvalues of a symmetric tridiagonal matrix by bisection on Sturm
/// sequence sign counts; offdiag[0] is ignored. Independent of the QL path.
std::vector<double> sturm_eigenvalues(const std::vector<double>& diag,
                                      const std::vector<double>& offdiag);

/// Trace of (M - zI)^-1 by complex LU solves against every basis vector.
std::complex<double> resolvent_trace_direct(const SymMatrix& m, std::complex<double> z);

/// Exhaustive cyclic-shift minimizer of the distance formula, evaluated
/// candidate by candidate.
std::pair<long, double> align_pair_exhaustive(const std::vector<double>& zi,
                                              const std::vector<double>& zj);

/// Adaptive Simpson quadrature on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b, double tol);

/// Quadrature of f over [a, infinity) via the substitution x = a + t/(1-t).
double integrate_to_infinity(const std::function<double(double)>& f, double a, double tol);

} // namespace blockspec::oracles
