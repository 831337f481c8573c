#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace blockspec {

/// Deterministic counter-based random stream (Philox4x32-10).
///
/// A stream is identified by its seed and its split path: equal (seed, path)
/// pairs produce the identical variate sequence on every run and platform.
/// split() derives a child stream keyed through the Philox function itself,
/// so substreams are independent by construction rather than by jump-ahead.
/// Streams are single-owner; split once per worker and hand each child over.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    /// Child stream with path = this->path() ++ [index]. Parent is unchanged.
    RandomStream split(std::uint64_t index) const;

    /// Uniform on [0, 1) with 53 random bits.
    double next_uniform();

    /// Standard normal variate. Method pinned per release (see gaussian_method()).
    double next_gaussian();

    /// Chi-square variate with dof >= 1 degrees of freedom, as the sum of
    /// dof squared standard normals. Throws std::invalid_argument for dof < 1.
    double next_chi_square(int dof);

    std::uint64_t next_u64();

    std::uint64_t seed() const { return seed_; }
    const std::vector<std::uint64_t>& path() const { return path_; }

    /// Recorded in run metadata so published outputs can be reproduced bit-exactly.
    static const char* gaussian_method() { return "box-muller"; }

private:
    RandomStream() = default;
    void refill();

    std::uint64_t seed_ = 0;
    std::vector<std::uint64_t> path_;
    std::array<std::uint32_t, 2> key_{{0, 0}};
    std::array<std::uint32_t, 4> counter_{{0, 0, 0, 0}};
    std::array<std::uint32_t, 4> block_{{0, 0, 0, 0}};
    int block_pos_ = 4;
    double cached_gaussian_ = 0.0;
    bool has_cached_gaussian_ = false;
};

} // namespace blockspec
