#include "ridgekit/reproduce.hpp"

#include <cmath>

#include "ridgekit/annihilator.hpp"
#include "ridgekit/projection.hpp"
#include "ridgekit/shannon.hpp"
#include "ridgekit/spectrum.hpp"

namespace ridgekit {
namespace {

CheckResult product_distance_check() {
    CheckResult r;
    r.name = "product x*y: squared distance from the axis ridge span";
    r.target = 4.0 / 9.0;
    r.tol = 1e-6;
    // The projection onto the span keeps the coefficients on the coordinate
    // lines; for x*y those all vanish, so by Pythagoras the squared distance
    // is the full squared norm minus the span energy. The grid norm carries
    // the midpoint-rule error 8/(9 n^2), so the norm uses 2048 cells per
    // axis (2.1e-7); the band-64 span energy is already converged on a
    // 256-cell grid.
    const int K = 64;
    auto xy = [](const rvec& x) { return cplx{x[0] * x[1], 0.0}; };
    GridFunction F = GridFunction::sample({2048, 2048}, xy);
    LatticeSpectrum S = analyze_grid(GridFunction::sample({256, 256}, xy), K);
    DirectionSet axes = DirectionSet::of({{1, 0}, {0, 1}});
    ProjectionSplit split = project(S, axes, Measure::lebesgue);
    double span_energy = norm_sq(split.projected, Measure::lebesgue);
    r.value = norm_sq(F, Measure::lebesgue) - span_energy;
    r.pass = std::abs(r.value - r.target) <= r.tol;
    r.detail = "band 64, norm grid 2048x2048, span energy " +
               std::to_string(span_energy);
    return r;
}

CheckResult two_ridge_projection_check() {
    CheckResult r;
    r.name = "two-ridge sum: projection keeps the axis term, distance 3";
    r.target = 3.0;
    r.tol = 0.0;
    LatticeSpectrum S(2);
    S.set({1, 0}, {2.0, 0.0});
    S.set({1, 1}, {3.0, 0.0});
    DirectionSet axes = DirectionSet::of({{1, 0}, {0, 1}});
    ProjectionSplit split = project(S, axes, Measure::normalized);
    bool kept = split.projected.c.size() == 1 &&
                split.projected.at({1, 0}) == cplx{2.0, 0.0};
    bool dropped = split.residual.c.size() == 1 &&
                   split.residual.at({1, 1}) == cplx{3.0, 0.0};
    r.value = std::sqrt(split.distance_sq);
    r.pass = kept && dropped && r.value == r.target;
    r.detail = kept && dropped ? "split is exact" : "split kept wrong terms";
    return r;
}

CheckResult orthonormality_spectral_check() {
    CheckResult r;
    r.name = "lattice exponentials: frequency-side orthonormality (exact)";
    r.target = 0.0;
    r.tol = 0.0;
    // All nonzero integer vectors with entries in [-3,3]^2.
    std::vector<ivec> ws;
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            if (a != 0 || b != 0) ws.push_back({a, b});
    double worst = 0.0;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        LatticeSpectrum Si(2);
        Si.set(ws[i], {1.0, 0.0});
        for (std::size_t j = 0; j < ws.size(); ++j) {
            LatticeSpectrum Sj(2);
            Sj.set(ws[j], {1.0, 0.0});
            cplx ip = inner_product(Si, Sj, Measure::normalized);
            double want = i == j ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(ip - cplx{want, 0.0}));
        }
    }
    r.value = worst;
    r.pass = worst == 0.0;
    r.detail = std::to_string(ws.size() * ws.size()) + " pairs";
    return r;
}

CheckResult orthonormality_grid_check() {
    CheckResult r;
    r.name = "lattice exponentials: quadrature orthonormality on a 128x128 grid";
    r.target = 0.0;
    r.tol = 1e-8;
    std::vector<ivec> ws;
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            if (a != 0 || b != 0) ws.push_back({a, b});
    const std::vector<int> shape{128, 128};
    std::vector<GridFunction> grids;
    grids.reserve(ws.size());
    for (const ivec& w : ws) {
        LatticeSpectrum S(2);
        S.set(w, {1.0, 0.0});
        grids.push_back(synthesize_grid(S, shape));
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i; j < ws.size(); ++j) {
            cplx ip = inner_product(grids[i], grids[j], Measure::normalized);
            double want = i == j ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(ip - cplx{want, 0.0}));
        }
    r.value = worst;
    r.pass = worst <= r.tol;
    r.detail = "pairs over 48 exponentials, both orders by symmetry";
    return r;
}

CheckResult hat_product_check() {
    CheckResult r;
    r.name = "two-bump hat: factor product matches the closed form";
    r.target = 0.0;
    r.tol = 1e-12;
    // Haar bump along e2 convolved with one along e1, then the box kernel
    // scaled by 1/4: the closed form uses plain sin(x)/x per axis, which is
    // half of each box factor, hence the 0.25.
    HatFunction lib = convolve_hats(
        convolve_hats(haar_hat({0.0, 1.0}), haar_hat({1.0, 0.0})),
        weighted_sum({0.25}, {sinc_box(2)}));
    Rng rng(20240817);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        rvec xi{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        double closed = (std::cos(xi[1]) - 1.0) / xi[1] *
                        (std::sin(xi[0]) / xi[0]) *
                        (std::cos(xi[0]) - 1.0) / xi[0] *
                        (std::sin(xi[1]) / xi[1]);
        worst = std::max(worst, std::abs(lib(xi) - closed));
    }
    r.value = worst;
    r.pass = worst <= r.tol;
    r.detail = "20 random points in [-10,10]^2";
    return r;
}

}  // namespace

std::vector<CheckResult> standard_checks() {
    return {product_distance_check(), two_ridge_projection_check(),
            orthonormality_spectral_check(), orthonormality_grid_check(),
            hat_product_check()};
}

}  // namespace ridgekit
