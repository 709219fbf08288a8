#pragma once

#include <cstdint>

namespace amalgrade {

// SplitMix64: tiny, fast, and identical across platforms, unlike the
// distributions in <random>. Every sampled family and test uses this so runs
// are reproducible bit-for-bit from a seed.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n > 0. Modulo bias is irrelevant at our sample sizes.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

} // namespace amalgrade
