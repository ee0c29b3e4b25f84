#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace ridgekit {

using cplx = std::complex<double>;
using ivec = std::vector<int>;
using rvec = std::vector<double>;

inline constexpr double pi = std::numbers::pi;

/** Which inner product a quantity refers to.
 *
 * `normalized` uses the probability measure dx / 2^m on the cube [-1,1]^m,
 * under which the lattice exponentials exp(i pi k.x) are orthonormal.
 * `lebesgue` uses plain dx; every inner product and squared norm picks up a
 * factor 2^m relative to the normalized one.
 */
enum class Measure { normalized, lebesgue };

/** Scale factor turning a normalized-measure inner product into `measure`. */
double measure_scale(Measure measure, int m);

/** sin(pi*u) / (pi*u) with exact special cases.
 *
 * Returns exactly 1.0 at u == 0 and exactly 0.0 at every other integer, so
 * products of these factors vanish bitwise when any coordinate sits on a
 * nonzero integer. Evaluation uses sin(pi*u) directly; there is no
 * cancellation near the zeros because the zeros are roots of sin itself.
 */
double sincpi(double u) noexcept;

/** u, with values within two roundings of a whole number replaced by it.
 *
 * Dividing a lattice coordinate n*pi back by pi drifts off the integer by
 * one ulp once |n| > 10, which would miss the exact branches of sincpi.
 * The snap window is 2 ulp, far below any spacing that matters elsewhere.
 */
inline double snap_integer(double u) noexcept {
    double r = std::nearbyint(u);
    if (std::abs(u - r) <=
        2.0 * std::numeric_limits<double>::epsilon() * std::abs(u))
        return r;
    return u;
}

/** Deterministic 64-bit generator (splitmix64) with portable mappings.
 *
 * The standard <random> distributions are not pinned across library
 * implementations; generating raw 64-bit words and mapping them manually
 * keeps every seeded run byte-identical everywhere.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /** Uniform in [0, 1). */
    double uniform();

    /** Uniform in [lo, hi). */
    double uniform(double lo, double hi);

    /** Uniform integer in [lo, hi] inclusive. */
    int uniform_int(int lo, int hi);

    /** Complex with independent uniform re/im in [lo, hi). */
    cplx uniform_cplx(double lo, double hi);

    std::uint64_t next_u64();

private:
    std::uint64_t state_;
};

}  // namespace ridgekit
