#pragma once

#include <array>
#include <cstdint>

namespace psum {

/// splitmix64 step. Used for seeding and for deriving independent substreams.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256** seeded through splitmix64. Fixed algorithm so generated
/// instances are bit-identical across platforms and standard libraries.
class Xoshiro256 {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256(std::uint64_t seed) {
        for (auto& word : state_) word = splitmix64_next(seed);
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~std::uint64_t{0}; }

    result_type operator()() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    std::array<std::uint64_t, 4> state_{};
};

/// Unbiased draw from {0, ..., bound-1} via rejection sampling.
/// Deterministic given the generator state (no std::uniform_int_distribution,
/// whose output is implementation-defined).
inline std::uint64_t uniform_below(Xoshiro256& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw > limit);
    return draw % bound;
}

/// Integer uniform in [lo, hi], inclusive.
inline std::int64_t uniform_in(Xoshiro256& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace psum
