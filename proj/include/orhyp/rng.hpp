#pragma once

#include <cstdint>
#include <random>

namespace orhyp {

// Seeded 64-bit Mersenne Twister with a portable bounded-integer draw, so
// generated instances do not depend on the standard library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t span = hi - lo;
        if (span == UINT64_MAX) return engine_();
        const std::uint64_t bound = span + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return lo + x % bound;
    }

    bool coin() { return (engine_() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

// Derives an independent stream seed from a base seed and a tag (splitmix64).
constexpr std::uint64_t mix_seed(std::uint64_t base, std::uint64_t tag) noexcept {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace orhyp
