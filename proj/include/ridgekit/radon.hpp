#pragma once

#include "ridgekit/direction.hpp"
#include "ridgekit/spectrum.hpp"

namespace ridgekit {

/** Binned chordal projection of a grid function along a direction.
 *
 * `w` is the unit vector actually used (input scaled to 2-norm 1), `ts` the
 * bin centers over [-R, R] with R = sum_j |w_j|, `values` the averaged slice
 * integrals: the cell masses F * cellvol landing in a bin, divided by
 * `bin_width`. Total mass sum values * bin_width equals the integral of F.
 */
struct RadonProfile {
    rvec w;
    rvec ts;
    std::vector<cplx> values;
    double bin_width = 0.0;
};

/** Bin the grid's cells by s = w.x (w normalized internally).
 *
 * Throws std::invalid_argument: "not a direction" for a zero vector,
 * "dimension mismatch", "nbins must be at least 4", and "undersampled" when
 * the bin width falls below one cell's footprint along w
 * (sum_j 2|w_j| / n_j), where bins would go systematically unfilled.
 */
RadonProfile radon_profile(const GridFunction& G, const rvec& w, int nbins);

struct RadonZeroReport {
    bool zero = false;
    double max_abs = 0.0;
};

/** True when every profile value over every direction stays within tol. */
RadonZeroReport radon_zero(const GridFunction& G,
                           const std::vector<rvec>& directions, int nbins,
                           double tol);

RadonZeroReport radon_zero(const GridFunction& G, const DirectionSet& W,
                           int nbins, double tol);

}  // namespace ridgekit
