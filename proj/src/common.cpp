#include "ridgekit/common.hpp"

#include <cmath>

namespace ridgekit {

double measure_scale(Measure measure, int m) {
    if (measure == Measure::normalized) return 1.0;
    return std::ldexp(1.0, m);
}

double sincpi(double u) noexcept {
    if (u == 0.0) return 1.0;
    if (u == std::nearbyint(u)) return 0.0;
    return std::sin(pi * u) / (pi * u);
}

std::uint64_t Rng::next_u64() {
    // splitmix64 (Steele, Lea, Flood 2014); public-domain reference constants.
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

int Rng::uniform_int(int lo, int hi) {
    auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) -
                                           static_cast<std::int64_t>(lo) + 1);
    return lo + static_cast<int>(next_u64() % span);
}

cplx Rng::uniform_cplx(double lo, double hi) {
    double re = uniform(lo, hi);
    double im = uniform(lo, hi);
    return {re, im};
}

}  // namespace ridgekit
