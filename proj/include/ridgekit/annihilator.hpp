#pragma once

#include <variant>
#include <vector>

#include "ridgekit/direction.hpp"
#include "ridgekit/spectrum.hpp"

namespace ridgekit {

/** The scalar Haar bump profile (cos u - 1) / u, continued by 0 at u = 0.
 *
 * Below |u| < 1e-4 the Taylor form -u/2 + u^3/24 is used (the alternating
 * tail is bounded by |u|^5/720 ~ 1.4e-23 there); elsewhere the
 * cancellation-free identity cos u - 1 = -2 sin^2(u/2) is evaluated.
 */
double haar_profile(double u);

/** Frequency-side description of a separable annihilator: a product of
 * factors, each either a Haar bump along a displacement z, the box kernel,
 * or a weighted sum of further hats. Evaluation multiplies the factors.
 */
class HatFunction {
public:
    struct Haar {
        rvec z;
    };
    struct SincBox {
        int m;
    };
    struct Weighted {
        rvec weights;
        std::vector<HatFunction> atoms;
    };
    using Factor = std::variant<Haar, SincBox, Weighted>;

    int dim() const { return m_; }
    const std::vector<Factor>& factors() const { return factors_; }

    double operator()(const rvec& xi) const;

    friend HatFunction haar_hat(const rvec& z);
    friend HatFunction sinc_box(int m);
    friend HatFunction convolve_hats(const HatFunction& a,
                                     const HatFunction& b);
    friend HatFunction averaged_hat(const std::vector<rvec>& zs,
                                    const rvec& weights);
    friend HatFunction weighted_sum(const rvec& weights,
                                    std::vector<HatFunction> atoms);

private:
    HatFunction(int m, std::vector<Factor> factors)
        : m_(m), factors_(std::move(factors)) {}
    int m_ = 0;
    std::vector<Factor> factors_;
};

/** Hat of the Haar ridge bump displaced along z: one Haar factor.
 * Throws std::invalid_argument("not a direction") for a zero z.
 */
HatFunction haar_hat(const rvec& z);

/** Hat of the box indicator: prod_j 2 sin(xi_j)/xi_j, value 2^m at 0. */
HatFunction sinc_box(int m);

/** Hat of the convolution: the concatenated factor list (pointwise product
 * on the frequency side). Throws on dimension mismatch.
 */
HatFunction convolve_hats(const HatFunction& a, const HatFunction& b);

/** Fold of the binary form; a one-element list returns its element. Throws
 * std::invalid_argument on an empty list.
 */
HatFunction convolve_hats(const std::vector<HatFunction>& hats);

/** Hat of a finite average of Haar bumps: a single weighted-sum factor with
 * one Haar atom per displacement. Throws std::invalid_argument on length
 * mismatch, an empty list, or an all-zero weight vector.
 */
HatFunction averaged_hat(const std::vector<rvec>& zs, const rvec& weights);

/** General weighted sum of hats as a single factor; same validity rules as
 * averaged_hat but with arbitrary atoms.
 */
HatFunction weighted_sum(const rvec& weights, std::vector<HatFunction> atoms);

struct AnnihilationReport {
    bool pass = false;
    /** max |hat(t*w)| over every direction and sampled t. */
    double max_abs = 0.0;
};

/** The t grid verify_annihilation samples: `count` Chebyshev nodes of
 * [-8 pi, 8 pi], in node order. count must be at least 16.
 */
rvec chebyshev_samples(int count);

/** Sample |hat| along each direction's line at `t_samples` Chebyshev points
 * of [-8 pi, 8 pi]; pass when the maximum stays within tol. Directions may
 * be arbitrary nonzero real vectors. t_samples must be at least 16
 * (default 64).
 */
AnnihilationReport verify_annihilation(const HatFunction& hat,
                                       const std::vector<rvec>& W, double tol,
                                       int t_samples = 64);

AnnihilationReport verify_annihilation(const HatFunction& hat,
                                       const DirectionSet& W, double tol,
                                       int t_samples = 64);

/** Tensor product of odd one-variable coefficient profiles:
 * c_k = prod_j a_j(k_j). Every profile must have zero mean and satisfy
 * a(-k) == -a(k); otherwise throws std::invalid_argument("not odd"). The
 * result carries no coefficient on any axis line, so it annihilates every
 * coordinate direction.
 */
LatticeSpectrum odd_product_spectrum(const std::vector<OneDSpectrum>& phis);

}  // namespace ridgekit
