#pragma once

#include <functional>
#include <map>
#include <vector>

#include "ridgekit/common.hpp"
#include "ridgekit/direction.hpp"

namespace ridgekit {

/** Sparse frequency-side representation of a 2-periodic function on the cube
 * [-1,1]^m: the coefficients c_k of exp(i pi k.x) over lattice points k.
 * Exact zeros are never stored; absent keys read as zero.
 */
struct LatticeSpectrum {
    int m = 0;
    std::map<ivec, cplx> c;

    explicit LatticeSpectrum(int dim = 0) : m(dim) {}

    cplx at(const ivec& k) const {
        auto it = c.find(k);
        return it == c.end() ? cplx{0.0, 0.0} : it->second;
    }

    /** Assign c_k = v, erasing the entry when v is an exact zero. */
    void set(const ivec& k, cplx v) {
        if (static_cast<int>(k.size()) != m)
            throw std::invalid_argument("dimension mismatch");
        if (v == cplx{0.0, 0.0})
            c.erase(k);
        else
            c[k] = v;
    }

    void add(const ivec& k, cplx v) { set(k, at(k) + v); }

    std::size_t support_size() const { return c.size(); }
};

/** Coefficients of a 2-periodic function of one variable. */
struct OneDSpectrum {
    std::map<int, cplx> a;

    cplx at(int k) const {
        auto it = a.find(k);
        return it == a.end() ? cplx{0.0, 0.0} : it->second;
    }

    void set(int k, cplx v) {
        if (v == cplx{0.0, 0.0})
            a.erase(k);
        else
            a[k] = v;
    }
};

/** Complex samples of a function on the midpoint grid of [-1,1]^m: along
 * axis j with n_j cells the nodes are x_i = (2i + 1 - n_j) / n_j. Values are
 * stored row-major (last axis fastest). Every axis needs at least 2 cells.
 */
struct GridFunction {
    int m = 0;
    std::vector<int> shape;
    std::vector<cplx> values;

    GridFunction() = default;
    GridFunction(std::vector<int> shape_in, std::vector<cplx> values_in);

    /** Zero-filled grid of the given shape. */
    static GridFunction zeros(const std::vector<int>& shape);

    /** Sample a callable taking the node coordinate vector. */
    static GridFunction sample(const std::vector<int>& shape,
                               const std::function<cplx(const rvec&)>& f);

    /** Node coordinate along one axis; exactly antisymmetric in i. */
    double coord(int axis, int i) const {
        int n = shape[static_cast<std::size_t>(axis)];
        return (2.0 * i + 1.0 - n) / n;
    }

    std::size_t cell_count() const { return values.size(); }

    /** Volume of one cell, prod_j 2/n_j. */
    double cell_volume() const;
};

/** Place the one-variable coefficients along the line Z*w: the profile's
 * k-th coefficient becomes the coefficient of lattice point k*w.
 */
LatticeSpectrum ridge_synthesize(const OneDSpectrum& phi,
                                 const DirectionClass& w);

/** Evaluate the spectrum's trigonometric sum on a midpoint grid. */
GridFunction synthesize_grid(const LatticeSpectrum& S,
                             const std::vector<int>& shape);

/** Coefficients c_k for |k_j| <= K from midpoint-grid samples.
 *
 * Exact for content inside the alias-free band of the grid; requires
 * n_j >= 2K + 2 on every axis and throws std::invalid_argument("aliasing")
 * otherwise.
 */
LatticeSpectrum analyze_grid(const GridFunction& G, int K);

/** Frequency-side inner product: sum_k c_k conj(d_k), scaled by 2^m under
 * the Lebesgue measure.
 */
cplx inner_product(const LatticeSpectrum& S1, const LatticeSpectrum& S2,
                   Measure measure);

double norm_sq(const LatticeSpectrum& S, Measure measure);

/** Midpoint-quadrature inner product of two grids of identical shape. */
cplx inner_product(const GridFunction& F, const GridFunction& G,
                   Measure measure);

double norm_sq(const GridFunction& F, Measure measure);

}  // namespace ridgekit
