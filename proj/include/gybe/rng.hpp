// Seeded RNG with platform-independent uniform doubles. std::mt19937_64 is
// bit-exact across implementations; the distributions are not, so draws are
// converted by hand.
#pragma once

#include <cstdint>
#include <random>

namespace gybe {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform in [0,1)
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    // magnitude kept away from 0 and infinity for conditioning
    double rate(double lo = 0.1, double hi = 1.5) {
        const double m = uniform(lo, hi);
        return unit() < 0.5 ? -m : m;
    }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

}  // namespace gybe
