#pragma once

#include "blockspec/matrix.hpp"
#include "blockspec/random.hpp"
#include "blockspec/samplers.hpp"

namespace blockspec {

enum class DiagonalPolicy { Zero, Sampled };
enum class Scale { None, InvSqrtN };

/// Full description of one block random matrix ensemble: n x n blocks of
/// size d, i.i.d. blocks above the block diagonal.
struct BlockMatrixSpec {
    Index n = 1;
    Index d = 1;
    BlockLaw law;
    DiagonalPolicy diagonal_policy = DiagonalPolicy::Zero;
    Scale scale = Scale::None;

    Index dimension() const { return n * d; }
    void validate() const;
};

/// Assembles the symmetric N x N matrix, N = n d. Block (i, j) for i < j is
/// drawn from the law with substream split(s, i n + j); block (j, i) is its
/// transpose via symmetric storage. Diagonal blocks are zero or sampled per
/// the policy (a sampled block keeps its upper triangle, which symmetric
/// storage mirrors), and every entry is divided by sqrt(n d) under
/// Scale::InvSqrtN.
SymMatrix assemble(const RandomStream& s, const BlockMatrixSpec& spec);

/// Block row i (0-based) of M as a d x N strip.
DenseMatrix strip(const SymMatrix& m, Index i, Index d);

/// Entrywise Monte Carlo mean over reps draws: picks out non-centered laws,
/// the ones whose assembled matrices grow spectral outliers.
DenseMatrix block_mean_estimate(const RandomStream& s, const BlockLaw& law, long reps);

/// Fraction of reps for which the block diagonal of a GOE matrix, scaled by
/// 1/sqrt(n d), has max block operator norm within 1.5x of the
/// sqrt(2/(nd)) sqrt(2 log(n d^2)) envelope.
double diagonal_block_norm_bound_check(const RandomStream& s, Index n, Index d, long reps);

/// The envelope itself.
double diagonal_block_norm_bound(Index n, Index d);

} // namespace blockspec
