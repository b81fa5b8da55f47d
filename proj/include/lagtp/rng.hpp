#pragma once

#include <cstdint>

namespace lagtp {

// xorshift64* seeded through one splitmix64 step, so that seed 0 is usable.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        s_ = z ^ (z >> 31);
        if (s_ == 0) s_ = 0x2545f4914f6cdd1dull;
    }

    std::uint64_t next() {
        s_ ^= s_ >> 12;
        s_ ^= s_ << 25;
        s_ ^= s_ >> 27;
        return s_ * 0x2545f4914f6cdd1dull;
    }

    // Uniform on [0, n) for small n; the top bits are used.
    std::uint64_t below(std::uint64_t n) { return (next() >> 32) % n; }

    // Uniform on [lo, hi].
    long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

private:
    std::uint64_t s_;
};

}  // namespace lagtp
