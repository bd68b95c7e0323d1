#pragma once

#include <cstdint>

namespace patternforge {

// splitmix64 finalizer (Steele, Lea, Flood). Portable: plain uint64 arithmetic.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic 64-bit generator. Streams are derived from (seed, tag), so a
// consumer can add or remove phases without shifting the draws of the others.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static SplitMix64 stream(std::uint64_t seed, std::uint64_t tag) {
        return SplitMix64(mix64(seed ^ mix64(tag)));
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); modulo bias is acceptable for synthesis workloads.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    // Uniform in [lo, hi).
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo); }

    bool chance(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return (next() >> 11) * 0x1.0p-53 < p;
    }

private:
    std::uint64_t state_;
};

} // namespace patternforge
