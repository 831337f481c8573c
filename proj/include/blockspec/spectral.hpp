#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "blockspec/matrix.hpp"

namespace blockspec {

/// Provenance carried with every computed spectrum.
struct SpectrumMeta {
    std::string law;
    long n = 0;
    long d = 0;
    std::uint64_t seed = 0;
    std::string scale;
};

/// Eigenvalues of a real symmetric matrix in ascending order.
struct Spectrum {
    std::vector<double> eigenvalues;
    SpectrumMeta meta;

    Index size() const { return static_cast<Index>(eigenvalues.size()); }
    double min() const { return eigenvalues.front(); }
    double max() const { return eigenvalues.back(); }
};

struct EigResult {
    Spectrum spectrum;
    DenseMatrix vectors; // column k pairs with eigenvalue k
};

/// Reduces a symmetric matrix in place to tridiagonal form (diag, offdiag with
/// offdiag[0] = 0). When accumulate is set, `a` is overwritten with the
/// orthogonal transform Q such that Q^T A Q is the tridiagonal matrix.
void tridiagonalize(DenseMatrix& a, std::vector<double>& diag, std::vector<double>& offdiag,
                    bool accumulate);

/// Implicit-shift QL on a tridiagonal matrix; offdiag[0] is ignored. When `z`
/// is non-null its columns are rotated along, turning an input transform into
/// the full eigenvector matrix.
void tql_implicit_shift(std::vector<double>& diag, std::vector<double>& offdiag, DenseMatrix* z);

/// All eigenvalues of a symmetric matrix, ascending. Rejects non-finite input
/// and cross-checks sum(lambda) against the trace and sum(lambda^2) against
/// the squared Frobenius norm before returning.
Spectrum eig_symmetric(const SymMatrix& m);

/// Same computation with eigenvectors accumulated.
EigResult eig_symmetric_with_vectors(const SymMatrix& m);

/// Throws unless Im z > 0.
void require_upper_half(std::complex<double> z);

/// Stieltjes transform (1/N) sum_k 1/(lambda_k - z) for Im z > 0.
std::complex<double> stieltjes(const Spectrum& sp, std::complex<double> z);

/// Kolmogorov-Smirnov distance between the empirical CDF of the spectrum and
/// a reference CDF, evaluated two-sided at every order statistic.
double ks_distance(const Spectrum& sp, const std::function<double(double)>& cdf);

/// Two-sample KS distance between the empirical CDFs of two spectra.
double ks_distance_two_sample(const Spectrum& a, const Spectrum& b);

/// Quantile of a sorted sample at level q by linear interpolation of the
/// order statistics, with sample k sitting at level (k + 1/2) / size.
double quantile_interpolated(const std::vector<double>& sorted, double q);

/// Quantile-quantile pairs of two spectra at levels (k - 1/2)/K,
/// K = min(len a, len b).
std::vector<std::pair<double, double>> qq_pairs(const Spectrum& a, const Spectrum& b);

struct RankPerturbationCheck {
    double lhs = 0.0;   // |trace resolvent difference|
    double bound = 0.0; // numerical rank of A - B over Im z
    int rank = 0;
    bool ok = false;
};

/// Verifies |tr(A - zI)^-1 - tr(B - zI)^-1| <= rank(A - B) / Im z on one
/// instance, with the rank computed numerically from the spectrum of A - B.
RankPerturbationCheck rank_perturbation_check(const SymMatrix& a, const SymMatrix& b,
                                              std::complex<double> z);

} // namespace blockspec
