#include "blockspec/block_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "blockspec/spectral.hpp"

namespace blockspec {

void BlockMatrixSpec::validate() const {
    if (n < 1) {
        throw std::invalid_argument("BlockMatrixSpec: n must be >= 1");
    }
    law.validate();
    if (law.d != d) {
        throw std::invalid_argument("BlockMatrixSpec: law.d must equal d");
    }
}

SymMatrix assemble(const RandomStream& s, const BlockMatrixSpec& spec) {
    spec.validate();
    const Index n = spec.n;
    const Index d = spec.d;
    SymMatrix m(n * d);

    for (Index i = 0; i < n; ++i) {
        for (Index j = i; j < n; ++j) {
            if (i == j && spec.diagonal_policy == DiagonalPolicy::Zero) {
                continue;
            }
            RandomStream sub = s.split(static_cast<std::uint64_t>(i * n + j));
            const DenseMatrix block = (i == j) ? sample_diagonal_block(sub, spec.law)
                                               : sample_block(sub, spec.law);
            if (!block.all_finite()) {
                throw std::runtime_error("assemble: sampler produced non-finite block");
            }
            for (Index r = 0; r < d; ++r) {
                const Index c0 = (i == j) ? r : Index{0};
                for (Index c = c0; c < d; ++c) {
                    m.set(i * d + r, j * d + c, block(r, c));
                }
            }
        }
    }
    if (spec.scale == Scale::InvSqrtN) {
        m.scale(1.0 / std::sqrt(static_cast<double>(n * d)));
    }
    return m;
}

DenseMatrix strip(const SymMatrix& m, Index i, Index d) {
    if (d < 1 || m.dim() % d != 0) {
        throw std::invalid_argument("strip: block size does not divide the dimension");
    }
    const Index n = m.dim() / d;
    if (i < 0 || i >= n) {
        throw std::out_of_range("strip: block row index out of range");
    }
    DenseMatrix out(d, m.dim());
    for (Index r = 0; r < d; ++r) {
        for (Index c = 0; c < m.dim(); ++c) {
            out(r, c) = m(i * d + r, c);
        }
    }
    return out;
}

DenseMatrix block_mean_estimate(const RandomStream& s, const BlockLaw& law, long reps) {
    if (reps < 1) {
        throw std::invalid_argument("block_mean_estimate: reps must be >= 1");
    }
    law.validate();
    DenseMatrix acc(law.d, law.d);
    for (long r = 0; r < reps; ++r) {
        RandomStream sub = s.split(static_cast<std::uint64_t>(r));
        const DenseMatrix block = sample_block(sub, law);
        for (Index i = 0; i < law.d; ++i) {
            for (Index j = 0; j < law.d; ++j) {
                acc(i, j) += block(i, j);
            }
        }
    }
    return (1.0 / static_cast<double>(reps)) * acc;
}

double diagonal_block_norm_bound(Index n, Index d) {
    const double nd = static_cast<double>(n * d);
    const double dd = static_cast<double>(d);
    return std::sqrt(2.0 / nd) * std::sqrt(2.0 * std::log(nd * dd));
}

double diagonal_block_norm_bound_check(const RandomStream& s, Index n, Index d, long reps) {
    if (n < 1 || d < 1 || reps < 1) {
        throw std::invalid_argument("diagonal_block_norm_bound_check: bad arguments");
    }
    const double limit = 1.5 * diagonal_block_norm_bound(n, d);
    const double inv_sqrt_nd = 1.0 / std::sqrt(static_cast<double>(n * d));
    long hits = 0;
    for (long r = 0; r < reps; ++r) {
        RandomStream rep_stream = s.split(static_cast<std::uint64_t>(r));
        double max_norm = 0.0;
        for (Index i = 0; i < n; ++i) {
            RandomStream sub = rep_stream.split(static_cast<std::uint64_t>(i));
            const DenseMatrix block = goe_block(sub, d);
            SymMatrix sym(d);
            for (Index a = 0; a < d; ++a) {
                for (Index b = a; b < d; ++b) {
                    sym.set(a, b, block(a, b));
                }
            }
            const Spectrum sp = eig_symmetric(sym);
            max_norm = std::max(max_norm,
                                std::max(std::abs(sp.min()), std::abs(sp.max())));
        }
        if (max_norm * inv_sqrt_nd <= limit) {
            ++hits;
        }
    }
    return static_cast<double>(hits) / static_cast<double>(reps);
}

} // namespace blockspec
