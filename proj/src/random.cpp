#include "blockspec/random.hpp"

#include <cmath>
#include <stdexcept>

namespace blockspec {

namespace {

// Philox4x32-10 (Salmon et al., SC 2011).
constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline std::array<std::uint32_t, 4> philox_block(std::array<std::uint32_t, 4> ctr,
                                                 std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
        const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
        const std::array<std::uint32_t, 4> next = {
            static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
            static_cast<std::uint32_t>(p1),
            static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
            static_cast<std::uint32_t>(p0),
        };
        ctr = next;
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

constexpr double kUniformScale = 1.0 / 9007199254740992.0; // 2^-53
constexpr double kTwoPi = 6.283185307179586476925286766559;

} // namespace

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed) {
    key_ = {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
}

RandomStream RandomStream::split(std::uint64_t index) const {
    // Child key is the Philox image of the split index under the parent key.
    // Counter word 3 = 1 domain-separates key derivation from data blocks,
    // which always run with word 3 = 0.
    const std::array<std::uint32_t, 4> derived = philox_block(
        {static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0u, 1u},
        key_);
    RandomStream child;
    child.seed_ = seed_;
    child.path_ = path_;
    child.path_.push_back(index);
    child.key_ = {derived[0], derived[1]};
    return child;
}

void RandomStream::refill() {
    block_ = philox_block(counter_, key_);
    block_pos_ = 0;
    if (++counter_[0] == 0) {
        if (++counter_[1] == 0) {
            ++counter_[2];
        }
    }
}

std::uint64_t RandomStream::next_u64() {
    if (block_pos_ > 2) {
        refill();
    }
    const std::uint64_t lo = block_[block_pos_];
    const std::uint64_t hi = block_[block_pos_ + 1];
    block_pos_ += 2;
    return lo | (hi << 32);
}

double RandomStream::next_uniform() {
    return static_cast<double>(next_u64() >> 11) * kUniformScale;
}

double RandomStream::next_gaussian() {
    if (has_cached_gaussian_) {
        has_cached_gaussian_ = false;
        return cached_gaussian_;
    }
    // Box-Muller; 1 - u keeps the log argument in (0, 1].
    const double r = std::sqrt(-2.0 * std::log(1.0 - next_uniform()));
    const double theta = kTwoPi * next_uniform();
    cached_gaussian_ = r * std::sin(theta);
    has_cached_gaussian_ = true;
    return r * std::cos(theta);
}

double RandomStream::next_chi_square(int dof) {
    if (dof < 1) {
        throw std::invalid_argument("next_chi_square: degrees of freedom must be >= 1");
    }
    double sum = 0.0;
    for (int i = 0; i < dof; ++i) {
        const double g = next_gaussian();
        sum += g * g;
    }
    return sum;
}

} // namespace blockspec
