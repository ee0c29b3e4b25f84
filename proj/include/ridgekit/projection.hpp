#pragma once

#include "ridgekit/direction.hpp"
#include "ridgekit/spectrum.hpp"

namespace ridgekit {

/** Result of splitting a spectrum against the span of ridge directions W:
 * `projected` keeps the coefficients on the union of lines Z*w (the zero
 * frequency included), `residual` keeps everything else, and `distance_sq`
 * is the squared norm of the residual under the requested measure.
 */
struct ProjectionSplit {
    LatticeSpectrum projected;
    LatticeSpectrum residual;
    double distance_sq = 0.0;
};

/** Lattice points of the union of lines, clipped to |k_j| <= K, with the
 * origin always included. Sorted lexicographically, no duplicates.
 */
std::vector<ivec> line_support(const DirectionSet& W, int K);

/** Orthogonal split of S against the ridge span of W. The decision is made
 * per stored coefficient on the full lattice (no band limit).
 */
ProjectionSplit project(const LatticeSpectrum& S, const DirectionSet& W,
                        Measure measure);

/** True when every coefficient of S on the union of lines Z*w vanishes,
 * the mean (zero frequency) included.
 */
bool annihilates(const LatticeSpectrum& S, const DirectionSet& W);

/** Coefficientwise product: under the normalized measure this is the
 * frequency side of convolution on the 2-torus.
 */
LatticeSpectrum convolve(const LatticeSpectrum& S1, const LatticeSpectrum& S2);

}  // namespace ridgekit
