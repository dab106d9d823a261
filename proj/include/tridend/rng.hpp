#ifndef TRIDEND_RNG_HPP
#define TRIDEND_RNG_HPP

#include <cstdint>

#include "rational.hpp"

namespace tridend {

// splitmix64: 64-bit state, output = mix of the incremented state.
// Chosen as the PRNG contract so every failure is replayable from a
// single --seed value.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound)
    {
        return next() % bound;
    }

    // Small random rational, numerator in [-mag, mag], denominator in [1, den].
    Rational rational(long mag = 5, long den = 3)
    {
        const long num = static_cast<long>(below(2 * mag + 1)) - mag;
        const long d = 1 + static_cast<long>(below(den));
        return rat(num, d);
    }

private:
    std::uint64_t state_;
};

} // namespace tridend

#endif
