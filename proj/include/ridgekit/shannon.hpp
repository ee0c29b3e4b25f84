#pragma once

#include <map>

#include "ridgekit/direction.hpp"
#include "ridgekit/spectrum.hpp"

namespace ridgekit {

/** Transform values on the scaled integer lattice: H[n] = Fhat(pi * n) for
 * |n_j| <= K, where Fhat(xi) = integral over [-1,1]^m of F(x) e^{-i xi.x} dx.
 * For a lattice spectrum these samples are exactly 2^m c_n.
 */
struct HatSamples {
    int m = 0;
    int K = 0;
    std::map<ivec, cplx> H;
};

/** Lattice samples of the spectrum's transform; entries outside the band are
 * dropped (they only affect off-lattice reconstruction accuracy).
 */
HatSamples hat_samples(const LatticeSpectrum& S, int K);

/** The box kernel prod_j 2 sin(xi_j)/xi_j. Value 2^m at 0; exactly 0.0 at
 * every other point of the lattice (pi Z)^m (coordinates are divided by pi
 * and snapped to the integer they round to, then hit sincpi's exact zero).
 */
double kernel(const rvec& xi);

/** Cardinal series sum_n H[n] kernel(xi - pi n) / 2^m.
 *
 * Exact (to within a bitwise-equal term) at stored lattice points, and equal
 * to the true transform everywhere when the generating spectrum fits inside
 * the band.
 */
cplx interpolate(const HatSamples& H, const rvec& xi);

/** Transform of the grid's alias-free trigonometric interpolant.
 *
 * Integrates exp(-i xi.x) against the unique band-limited function matching
 * the samples (per-axis frequencies |k| <= ceil(n_j/2) - 1); for grids
 * sampled from in-band spectra this is the exact transform. Implemented as
 * a separable quadrature: per-axis weights contracted against the values.
 */
cplx hat_direct(const GridFunction& G, const rvec& xi);

/** Plain midpoint-rule transform: sum F(cell) e^{-i xi.x_cell} cellvol.
 * Second-order accurate in the cell size; kept as an independent
 * cross-check route for hat_direct.
 */
cplx hat_direct_midpoint(const GridFunction& G, const rvec& xi);

struct LineRestriction {
    rvec ts;
    std::vector<cplx> values;
    double max_abs = 0.0;
};

/** Interpolated transform along the line t -> t*w at the given t values. */
LineRestriction line_restriction(const HatSamples& H, const rvec& w,
                                 const rvec& ts);

LineRestriction line_restriction(const HatSamples& H, const DirectionClass& w,
                                 const rvec& ts);

}  // namespace ridgekit
