#pragma once

#include <functional>

#include "ridgekit/common.hpp"

namespace ridgekit {

/** Paired observations (x_i, f_i) of equal nonempty length: an empirical
 * draw of a scalar variable together with function values over it.
 */
struct EmpiricalSample {
    rvec xs;
    std::vector<cplx> fs;

    std::size_t n() const { return xs.size(); }
};

/** Lift a function of the variable onto the sample: f_i = phi(x_i). The
 * base sample only contributes its xs.
 */
EmpiricalSample compose(const std::function<cplx(double)>& phi,
                        const EmpiricalSample& base);

/** (1/n) sum |f_i|^2, accumulated in sample order. */
double sample_norm_sq(const EmpiricalSample& S);

/** Piecewise-constant conditional expectation over bins of the x range.
 *
 * `edges` has nbins+1 ascending entries; bin b covers [edges[b],
 * edges[b+1]), with the right endpoint of the last bin included. `means`
 * are defined only where `counts` is positive (NaN otherwise). Means use
 * shifted accumulation (first value plus the mean of differences), so a bin
 * whose values are all equal reproduces that value bitwise.
 */
struct BinnedConditional {
    rvec edges;
    std::vector<cplx> means;
    std::vector<std::size_t> counts;

    int nbins() const { return static_cast<int>(counts.size()); }
};

/** Equal-width bins over [min xs, max xs]. A degenerate range (all xs
 * equal) puts every sample in bin 0. nbins must be positive.
 */
BinnedConditional conditional_expectation(const EmpiricalSample& S, int nbins);

/** Explicit ascending edges (at least 2, strictly increasing). */
BinnedConditional conditional_expectation(const EmpiricalSample& S,
                                          const rvec& edges);

/** Edges at the sample quantiles: nbins+1 values from min to max. Repeated
 * sample values can produce equal edges; those are nudged by collapsing
 * duplicates, so fewer than nbins distinct bins may result.
 */
rvec quantile_edges(rvec xs, int nbins);

/** Bin index for x (clamped to the covered range). */
int bin_of(const BinnedConditional& C, double x);

/** Replace every f_i by the mean of the bin x_i falls in. */
EmpiricalSample apply_conditional(const BinnedConditional& C,
                                  const EmpiricalSample& S);

/** | (1/n) sum psi(x_i) mean(bin(x_i))  -  (1/n) sum psi(x_i) f_i |,
 * the discrepancy between conditioning-then-pairing and pairing directly.
 * C must cover S (built from it, or from edges spanning its range).
 */
double adjointness_residual(const EmpiricalSample& S,
                            const std::function<cplx(double)>& psi,
                            const BinnedConditional& C);

/** Convenience form that first bins S into nbins equal-width bins. */
double adjointness_residual(const EmpiricalSample& S,
                            const std::function<cplx(double)>& psi, int nbins);

/** max_i |applying the conditional twice - applying it once| over the
 * sample; exactly 0.0, since bins of an already-conditioned sample hold
 * equal values and shifted accumulation reproduces them bitwise.
 */
double projection_identity_check(const EmpiricalSample& S, int nbins);

}  // namespace ridgekit
