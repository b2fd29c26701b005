#ifndef ADJFACT_RNG_HPP
#define ADJFACT_RNG_HPP

#include <cstdint>

namespace adjfact {

// SplitMix64.  Chosen over std::mt19937 + distributions because the entire
// byte stream is pinned by these ten lines: the seed contract of the CLI
// ("same seed, same output") must hold across platforms and standard
// libraries, and std::uniform_int_distribution is implementation-defined.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish draw in [lo, hi] by reduction; the modulo bias is
    // irrelevant here, reproducibility is what matters.
    long integer(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(next() % span);
    }

private:
    std::uint64_t state_;
};

} // namespace adjfact

#endif
