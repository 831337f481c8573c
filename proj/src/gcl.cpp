#include "blockspec/gcl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "blockspec/samplers.hpp"

namespace blockspec {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double distance_at_shift(const std::vector<double>& zi, const std::vector<double>& zj,
                         std::size_t shift) {
    const std::size_t p = zi.size();
    double acc = 0.0;
    for (std::size_t k = 0; k < p; ++k) {
        std::size_t idx = k + shift;
        if (idx >= p) {
            idx -= p;
        }
        const double diff = zi[k] - zj[idx];
        acc += diff * diff;
    }
    return acc;
}

} // namespace

SurrogateEnsemble gen_surrogates(const RandomStream& s, Index n, Index p) {
    if (n < 2 || p < 2) {
        throw std::invalid_argument("gen_surrogates: need n >= 2 and p >= 2");
    }
    SurrogateEnsemble e;
    e.n = n;
    e.p = p;
    e.seed = s.seed();
    e.data.resize(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        RandomStream sub = s.split(static_cast<std::uint64_t>(i));
        auto& v = e.data[static_cast<std::size_t>(i)];
        v.resize(static_cast<std::size_t>(p));
        for (auto& x : v) {
            x = sub.next_gaussian();
        }
    }
    return e;
}

std::pair<long, double> align_pair(const std::vector<double>& zi, const std::vector<double>& zj,
                                   AlignMethod method) {
    const std::size_t p = zi.size();
    if (p == 0 || zj.size() != p) {
        throw std::invalid_argument("align_pair: signals must share a positive length");
    }
    std::size_t best = 0;
    if (method == AlignMethod::BruteForce) {
        double best_dist = distance_at_shift(zi, zj, 0);
        for (std::size_t shift = 1; shift < p; ++shift) {
            const double dist = distance_at_shift(zi, zj, shift);
            if (dist < best_dist) {
                best_dist = dist;
                best = shift;
            }
        }
        return {static_cast<long>(best), std::sqrt(best_dist)};
    }
    // The norms are shift-invariant, so minimizing the distance is maximizing
    // the circular cross-correlation <zi, shift(zj)>.
    double best_corr = 0.0;
    for (std::size_t k = 0; k < p; ++k) {
        best_corr += zi[k] * zj[k];
    }
    for (std::size_t shift = 1; shift < p; ++shift) {
        double corr = 0.0;
        const std::size_t wrap = p - shift;
        for (std::size_t k = 0; k < wrap; ++k) {
            corr += zi[k] * zj[k + shift];
        }
        for (std::size_t k = wrap; k < p; ++k) {
            corr += zi[k] * zj[k + shift - p];
        }
        if (corr > best_corr) {
            best_corr = corr;
            best = shift;
        }
    }
    // Evaluate the distance at the winner directly so both methods report
    // the identical rid whenever they agree on the shift.
    return {static_cast<long>(best), std::sqrt(distance_at_shift(zi, zj, best))};
}

AlignmentResult align_all(const SurrogateEnsemble& e, AlignMethod method) {
    AlignmentResult a;
    a.n = e.n;
    a.p = e.p;
    a.seed = e.seed;
    a.shifts.assign(static_cast<std::size_t>(e.n * e.n), 0);
    a.rids.assign(static_cast<std::size_t>(e.n * e.n), 0.0);
    for (Index i = 0; i < e.n; ++i) {
        for (Index j = i + 1; j < e.n; ++j) {
            const auto [shift, rid] = align_pair(e.data[static_cast<std::size_t>(i)],
                                                 e.data[static_cast<std::size_t>(j)], method);
            a.shifts[static_cast<std::size_t>(i * e.n + j)] = shift;
            a.shifts[static_cast<std::size_t>(j * e.n + i)] =
                (shift == 0) ? 0 : static_cast<long>(e.p) - shift;
            a.rids[static_cast<std::size_t>(i * e.n + j)] = rid;
            a.rids[static_cast<std::size_t>(j * e.n + i)] = rid;
        }
    }
    return a;
}

double epsilon_from_quantile(const AlignmentResult& a, double q) {
    if (a.n < 2) {
        throw std::invalid_argument("epsilon_from_quantile: need n >= 2");
    }
    if (!(q > 0.0 && q <= 1.0)) {
        throw std::invalid_argument("epsilon_from_quantile: level must be in (0, 1]");
    }
    std::vector<double> upper;
    upper.reserve(static_cast<std::size_t>(a.n * (a.n - 1) / 2));
    for (Index i = 0; i < a.n; ++i) {
        for (Index j = i + 1; j < a.n; ++j) {
            upper.push_back(a.rid(i, j));
        }
    }
    std::sort(upper.begin(), upper.end());
    const double scaled = q * static_cast<double>(upper.size());
    std::size_t idx = static_cast<std::size_t>(std::ceil(scaled));
    if (idx > 0) {
        --idx;
    }
    idx = std::min(idx, upper.size() - 1);
    return upper[idx];
}

SymMatrix build_S(const AlignmentResult& a, double epsilon) {
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("build_S: epsilon must be positive");
    }
    SymMatrix s(2 * a.n);
    for (Index i = 0; i < a.n; ++i) {
        for (Index j = i + 1; j < a.n; ++j) {
            const double rid = a.rid(i, j);
            const double w = std::exp(-rid * rid / epsilon);
            const double theta =
                kTwoPi * static_cast<double>(a.shift(i, j)) / static_cast<double>(a.p);
            const DenseMatrix g = rotation2(theta);
            for (Index r = 0; r < 2; ++r) {
                for (Index c = 0; c < 2; ++c) {
                    s.set(2 * i + r, 2 * j + c, w * g(r, c));
                }
            }
        }
    }
    return s;
}

SymMatrix build_D(const AlignmentResult& a, double epsilon) {
    if (a.n < 2) {
        throw std::invalid_argument("build_D: need n >= 2");
    }
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("build_D: epsilon must be positive");
    }
    SymMatrix d(2 * a.n);
    for (Index i = 0; i < a.n; ++i) {
        double degree = 0.0;
        for (Index j = 0; j < a.n; ++j) {
            if (j == i) {
                continue;
            }
            const double rid = a.rid(i, j);
            degree += std::exp(-rid * rid / epsilon);
        }
        d.set(2 * i, 2 * i, degree);
        d.set(2 * i + 1, 2 * i + 1, degree);
    }
    return d;
}

Spectrum gcl_spectrum(const SymMatrix& s, const SymMatrix& d) {
    if (s.dim() != d.dim()) {
        throw std::invalid_argument("gcl_spectrum: dimension mismatch");
    }
    const Index n = s.dim();
    std::vector<double> inv_sqrt(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        const double di = d(i, i);
        if (!(di > 0.0)) {
            throw std::invalid_argument("gcl_spectrum: D must have positive diagonal");
        }
        inv_sqrt[static_cast<std::size_t>(i)] = 1.0 / std::sqrt(di);
    }
    // D^-1 S is similar to the symmetric D^-1/2 S D^-1/2.
    SymMatrix w(n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = i; j < n; ++j) {
            w.set(i, j,
                  inv_sqrt[static_cast<std::size_t>(i)] * s(i, j) *
                      inv_sqrt[static_cast<std::size_t>(j)]);
        }
    }
    return eig_symmetric(w);
}

namespace {

std::vector<double> lattice_bin_probabilities(Index p, int bins) {
    std::vector<double> probs(static_cast<std::size_t>(bins), 0.0);
    for (Index shift = 0; shift < p; ++shift) {
        const int b = static_cast<int>((static_cast<long>(shift) * bins) / p);
        probs[static_cast<std::size_t>(b)] += 1.0 / static_cast<double>(p);
    }
    return probs;
}

int shift_bin(long shift, Index p, int bins) {
    return static_cast<int>((shift * bins) / static_cast<long>(p));
}

} // namespace

ChiSquareTest uniformity_test(const AlignmentResult& a, int bins) {
    if (bins < 2) {
        throw std::invalid_argument("uniformity_test: need at least 2 bins");
    }
    const long samples = a.n * (a.n - 1) / 2;
    const std::vector<double> probs = lattice_bin_probabilities(a.p, bins);
    std::vector<double> expected(static_cast<std::size_t>(bins));
    for (int b = 0; b < bins; ++b) {
        expected[static_cast<std::size_t>(b)] =
            probs[static_cast<std::size_t>(b)] * static_cast<double>(samples);
        if (expected[static_cast<std::size_t>(b)] < 5.0) {
            throw std::invalid_argument("uniformity_test: fewer than 5 expected counts per bin");
        }
    }
    std::vector<long> observed(static_cast<std::size_t>(bins), 0);
    for (Index i = 0; i < a.n; ++i) {
        for (Index j = i + 1; j < a.n; ++j) {
            ++observed[static_cast<std::size_t>(shift_bin(a.shift(i, j), a.p, bins))];
        }
    }
    return chi_square_gof(observed, expected);
}

namespace {

ChiSquareTest independence_from_rows(const AlignmentResult& a, Index row_begin, Index row_end,
                                     int bins) {
    std::vector<std::vector<long>> table(static_cast<std::size_t>(bins),
                                         std::vector<long>(static_cast<std::size_t>(bins), 0));
    long pairs = 0;
    for (Index i = row_begin; i < row_end; ++i) {
        // Disjoint (j, k) pairs: within a row the optimal shifts are jointly
        // independent, so pairs that share no column are i.i.d. samples.
        std::vector<Index> others;
        others.reserve(static_cast<std::size_t>(a.n - 1));
        for (Index j = 0; j < a.n; ++j) {
            if (j != i) {
                others.push_back(j);
            }
        }
        for (std::size_t t = 0; t + 1 < others.size(); t += 2) {
            const int bj = shift_bin(a.shift(i, others[t]), a.p, bins);
            const int bk = shift_bin(a.shift(i, others[t + 1]), a.p, bins);
            ++table[static_cast<std::size_t>(bj)][static_cast<std::size_t>(bk)];
            ++pairs;
        }
    }
    if (pairs < 5L * static_cast<long>(bins) * static_cast<long>(bins)) {
        throw std::invalid_argument(
            "pairwise_independence_test: fewer than 5 bins^2 usable pairs");
    }
    return chi_square_independence(table);
}

} // namespace

ChiSquareTest pairwise_independence_test(const AlignmentResult& a, Index i, int bins) {
    if (bins < 2) {
        throw std::invalid_argument("pairwise_independence_test: need at least 2 bins");
    }
    if (i < 0 || i >= a.n) {
        throw std::out_of_range("pairwise_independence_test: row out of range");
    }
    return independence_from_rows(a, i, i + 1, bins);
}

ChiSquareTest pairwise_independence_test_pooled(const AlignmentResult& a, int bins) {
    if (bins < 2) {
        throw std::invalid_argument("pairwise_independence_test: need at least 2 bins");
    }
    return independence_from_rows(a, 0, a.n, bins);
}

} // namespace blockspec
