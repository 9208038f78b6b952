#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <limits>

namespace lcsm {

/// splitmix64 output function.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed of the substream `ids` below `master`. Distinct id paths give
/// statistically unrelated seeds; the mapping is a pure integer function, so
/// replicate r of an experiment sees the same stream on every platform and
/// under any scheduling.
constexpr std::uint64_t derive_seed(std::uint64_t master,
                                    std::initializer_list<std::uint64_t> ids) noexcept
{
    std::uint64_t h = mix64(master ^ 0x6c63736d6f6d656eULL);
    for (std::uint64_t id : ids) {
        h = mix64(h ^ mix64(id + 0x2545f4914f6cdd1dULL));
    }
    return h;
}

/// xoshiro256** seeded through splitmix64.
///
/// Satisfies UniformRandomBitGenerator, but callers inside this library use
/// uniform() and below() rather than <random> distributions, whose output is
/// implementation-defined.
__extension__ typedef unsigned __int128 uint128_t;

class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) noexcept
    {
        std::uint64_t z = seed;
        for (auto& word : state_) {
            z += 0x9e3779b97f4a7c15ULL;
            std::uint64_t x = z;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
            word = x ^ (x >> 31);
        }
    }

    static Rng stream(std::uint64_t master, std::initializer_list<std::uint64_t> ids) noexcept
    {
        return Rng(derive_seed(master, ids));
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept
    {
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

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound), bound > 0 (Lemire's multiply-and-reject).
    std::uint64_t below(std::uint64_t bound) noexcept
    {
        uint128_t product = static_cast<uint128_t>((*this)()) * bound;
        auto low = static_cast<std::uint64_t>(product);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                product = static_cast<uint128_t>((*this)()) * bound;
                low = static_cast<std::uint64_t>(product);
            }
        }
        return static_cast<std::uint64_t>(product >> 64);
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept
    {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

}  // namespace lcsm
