#pragma once

#include <cstdint>
#include <vector>

#include "blockspec/matrix.hpp"
#include "blockspec/random.hpp"
#include "blockspec/spectral.hpp"
#include "blockspec/stats.hpp"

namespace blockspec {

/// n pure-noise signals sampled on p equispaced circle grid points; rotating
/// a signal is a cyclic shift of its samples.
struct SurrogateEnsemble {
    Index n = 0;
    Index p = 0;
    std::vector<std::vector<double>> data;
    std::uint64_t seed = 0;
};

/// Pairwise optimal cyclic shifts and rotationally invariant distances.
/// shifts(j,i) = (p - shifts(i,j)) mod p and rids is symmetric with zero
/// diagonal, both maintained by construction.
struct AlignmentResult {
    Index n = 0;
    Index p = 0;
    std::vector<long> shifts; // row-major n x n
    std::vector<double> rids; // row-major n x n
    std::uint64_t seed = 0;

    long shift(Index i, Index j) const { return shifts[static_cast<std::size_t>(i * n + j)]; }
    double rid(Index i, Index j) const { return rids[static_cast<std::size_t>(i * n + j)]; }
};

enum class AlignMethod {
    BruteForce,  // evaluate the distance at every shift
    Correlation, // maximize circular cross-correlation, then evaluate the
                 // distance once at the winning shift
};

SurrogateEnsemble gen_surrogates(const RandomStream& s, Index n, Index p);

/// Smallest shift minimizing ||zi - cyclic_shift(zj, shift)||_2 and that
/// minimum. Ties resolve to the first (smallest) shift.
std::pair<long, double> align_pair(const std::vector<double>& zi, const std::vector<double>& zj,
                                   AlignMethod method = AlignMethod::Correlation);

/// Aligns all pairs i < j and mirrors the results.
AlignmentResult align_all(const SurrogateEnsemble& e,
                          AlignMethod method = AlignMethod::Correlation);

/// Lower order-statistic quantile of the n(n-1)/2 upper-triangle rid values.
double epsilon_from_quantile(const AlignmentResult& a, double q = 0.25);

/// S: 2n x 2n with block (i,j) = exp(-rid^2/epsilon) * rotation2(2 pi shift / p),
/// zero diagonal blocks; symmetric because the reverse rotation is the transpose.
SymMatrix build_S(const AlignmentResult& a, double epsilon);

/// D: block diagonal with block i = (sum_{j != i} exp(-rid(i,j)^2/epsilon)) I_2.
SymMatrix build_D(const AlignmentResult& a, double epsilon);

/// Eigenvalues of D^-1 S through the symmetric similar matrix
/// D^-1/2 S D^-1/2. All eigenvalues are real and lie in [-1, 1] up to
/// round-off. The graph connection Laplacian C = I - D^-1 S has spectrum
/// one minus this one.
Spectrum gcl_spectrum(const SymMatrix& s, const SymMatrix& d);

/// Chi-square goodness of fit of the upper-triangle shift angles against the
/// uniform law on the p-point circle grid. Rejects configurations with fewer
/// than 5 expected counts per bin.
ChiSquareTest uniformity_test(const AlignmentResult& a, int bins);

/// Chi-square independence test of (shift(i,j), shift(i,k)) over disjoint
/// pairs j < k from row i, binned to bins x bins cells. Requires at least
/// 5 bins^2 usable pairs.
ChiSquareTest pairwise_independence_test(const AlignmentResult& a, Index i, int bins);

/// Same test pooled over every row, each row contributing its disjoint pairs.
ChiSquareTest pairwise_independence_test_pooled(const AlignmentResult& a, int bins);

} // namespace blockspec
