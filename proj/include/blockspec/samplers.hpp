#pragma once

#include <string>

#include "blockspec/matrix.hpp"
#include "blockspec/random.hpp"

namespace blockspec {

enum class BlockLawKind {
    HaarOrthogonal,        // "o-haar"
    HaarSpecialOrthogonal, // "so-haar"
    QrNaiveOrthogonal,     // "o-qr-naive"
    Sl,                    // "sl"
    GoeBlock,              // "goe"
    GaussianIid,           // "gauss-iid"
};

/// One block ensemble: which matrix-group law and the block dimension d.
struct BlockLaw {
    BlockLawKind kind = BlockLawKind::GaussianIid;
    Index d = 1;

    void validate() const;
    std::string to_string() const;

    /// Parses CLI strings like "so-haar:2". A missing ":d" suffix uses fallback_d.
    static BlockLaw parse(const std::string& text, Index fallback_d = 2);
};

/// Which column gets negated when the determinant of a candidate Sl(d) draw
/// is -1: the first column (the numerical-recipe default) or one picked
/// uniformly at random (the even-d construction variant).
enum class SlSignFix { FirstColumn, RandomColumn };

/// d x d matrix with i.i.d. standard normal entries.
DenseMatrix gaussian_matrix(RandomStream& s, Index rows, Index cols);

/// Haar-distributed orthogonal matrix: QR of a Gaussian matrix with the sign
/// correction that makes R's diagonal positive.
DenseMatrix haar_orthogonal(RandomStream& s, Index d);

/// Haar on SO(d): Haar O(d) draw with the last column negated when det = -1.
DenseMatrix haar_special_orthogonal(RandomStream& s, Index d);

/// Planar rotation by theta.
DenseMatrix rotation2(double theta);

/// Orthogonal factor of an uncorrected Householder QR of a Gaussian matrix.
/// Deliberately non-Haar: E[Q] != 0, which is what plants spectral outliers
/// when these blocks are assembled into a large symmetric matrix.
DenseMatrix qr_orthogonal_naive(RandomStream& s, Index d);

/// Sl(d, R) draw: G Gaussian, B = G / |det G|^(1/d), then one column negated
/// if det(B) = -1. Resamples while |det G| underflows. Requires d >= 2.
DenseMatrix sl_matrix(RandomStream& s, Index d, SlSignFix fix = SlSignFix::FirstColumn);

/// Symmetric Gaussian block (G + G^T)/sqrt(2): off-diagonal variance 1,
/// diagonal variance 2. The diagonal block of a Gaussian orthogonal ensemble.
DenseMatrix goe_block(RandomStream& s, Index d);

/// Upper-triangular Bartlett factor for a d x d identity-scale Wishart:
/// T(i,i)^2 ~ chi-square(d - i), i zero-based, T(i,j) ~ N(0,1) above the
/// diagonal, zeros below, all entries independent.
DenseMatrix bartlett_T(RandomStream& s, Index d);

/// Draws one block from the law (the off-diagonal block distribution).
DenseMatrix sample_block(RandomStream& s, const BlockLaw& law);

/// Draws one diagonal block: same as sample_block except for the GOE law,
/// whose diagonal blocks are symmetric with doubled diagonal variance.
DenseMatrix sample_diagonal_block(RandomStream& s, const BlockLaw& law);

/// Density of the largest eigenvalue y of B^T B for Sl(2, R) draws:
/// 2 (1 - y^-2) / (y + 1/y)^2 for y > 1, 0 otherwise.
double sl2_top_density(double y);

/// Unnormalized joint density of the d-1 largest, strictly decreasing
/// eigenvalues of B^T B for Sl(d, R): R(y) / gamma(y)^(d^2/2) on the region
/// where prod(y) > 1/y_last, 0 outside it. Throws if the input is not
/// strictly decreasing and positive.
double sl_joint_density_unnormalized(const std::vector<double>& y);

/// Largest eigenvalue of B^T B for a 2x2 matrix B with det(B) = 1.
double sl2_top_eigenvalue(const DenseMatrix& b);

/// Monte Carlo estimate of the semicircle scale for Sl(d) blocks:
/// sigma^2 = E[trace(B^T B)] / d^2.
double estimate_sl_sigma(RandomStream& s, Index d, long reps);

} // namespace blockspec
