#pragma once

#include <cstdint>

namespace cayley {

/// SplitMix64: a tiny deterministic generator with an identical stream on
/// every platform.  All randomized drivers in this project take an explicit
/// seed; there is no ambient entropy anywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n); n >= 1.  Plain reduction: bias is irrelevant
    /// for these drivers and the stream stays platform-independent.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Uniform value in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

}  // namespace cayley
