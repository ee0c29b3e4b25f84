#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "ridgekit/spectrum.hpp"

using namespace ridgekit;

namespace {

LatticeSpectrum sawtooth_on_axis(int K, const DirectionClass& w) {
    OneDSpectrum phi;
    for (int k = -K; k <= K; ++k)
        if (k != 0) phi.set(k, oracles::sawtooth_coeff(k));
    return ridge_synthesize(phi, w);
}

LatticeSpectrum truncated_xy(int K) {
    LatticeSpectrum S(2);
    for (int k = -K; k <= K; ++k)
        for (int n = -K; n <= K; ++n)
            if (k != 0 && n != 0)
                S.set({k, n},
                      oracles::sawtooth_coeff(k) * oracles::sawtooth_coeff(n));
    return S;
}

}  // namespace

TEST_CASE("sawtooth coefficients match the independent quadrature oracle") {
    auto f = [](double x) { return cplx{x, 0.0}; };
    for (int k : {-5, -2, -1, 1, 2, 3, 8}) {
        cplx via_oracle = oracles::coeff_1d(f, k);
        cplx frozen = oracles::sawtooth_coeff(k);
        CHECK(std::abs(via_oracle - frozen) <= 1e-10);
    }
    CHECK(std::abs(oracles::coeff_1d(f, 0)) <= 1e-14);
}

TEST_CASE("spectrum storage prunes exact zeros and guards dimensions") {
    LatticeSpectrum S(2);
    S.set({1, 2}, {0.5, 0.0});
    CHECK(S.support_size() == 1);
    S.set({1, 2}, {0.0, 0.0});
    CHECK(S.support_size() == 0);
    CHECK(S.at({1, 2}) == cplx{0.0, 0.0});
    S.add({3, 3}, {1.0, 0.0});
    S.add({3, 3}, {-1.0, 0.0});
    CHECK(S.support_size() == 0);
    CHECK_THROWS_WITH_AS(S.set({1, 2, 3}, {1.0, 0.0}), "dimension mismatch",
                         std::invalid_argument);
}

TEST_CASE("ridge_synthesize places the profile along the line") {
    OneDSpectrum phi;
    phi.set(1, {1.0, 0.0});
    LatticeSpectrum S = ridge_synthesize(phi, DirectionClass::canonical({1, 2}));
    CHECK(S.support_size() == 1);
    CHECK(S.at({1, 2}) == cplx{1.0, 0.0});

    OneDSpectrum c;
    c.set(0, {0.25, -1.0});
    LatticeSpectrum Sc =
        ridge_synthesize(c, DirectionClass::canonical({1, 0, 0}));
    CHECK(Sc.support_size() == 1);
    CHECK(Sc.at({0, 0, 0}) == cplx{0.25, -1.0});
}

TEST_CASE("ridge_synthesize support stays inside the line") {
    Rng rng(11);
    DirectionClass w = DirectionClass::canonical({2, -3});
    OneDSpectrum phi;
    for (int k = -6; k <= 6; ++k) phi.set(k, rng.uniform_cplx(-1.0, 1.0));
    LatticeSpectrum S = ridge_synthesize(phi, w);
    for (const auto& [k, v] : S.c) {
        CHECK(on_line(k, w));
    }
    CHECK(S.support_size() == 13);
}

TEST_CASE("synthesized sawtooth ridge matches x away from the wrap seam") {
    LatticeSpectrum S = sawtooth_on_axis(64, DirectionClass::canonical({1, 0}));
    GridFunction G = synthesize_grid(S, {64, 8});
    for (int i = 0; i < 64; ++i) {
        double x = G.coord(0, i);
        if (std::abs(x) > 0.5) continue;
        cplx v = G.values[static_cast<std::size_t>(i) * 8 + 3];
        CHECK(std::abs(v - cplx{x, 0.0}) <= 0.02);
    }
}

TEST_CASE("analyze_grid recovers an exact harmonic") {
    GridFunction G = GridFunction::sample({16, 16}, [](const rvec& x) {
        double t = pi * (x[0] + x[1]);
        return cplx{std::cos(t), std::sin(t)};
    });
    LatticeSpectrum S = analyze_grid(G, 2);
    CHECK(std::abs(S.at({1, 1}) - cplx{1.0, 0.0}) <= 1e-10);
    for (const auto& [k, v] : S.c)
        if (k != ivec{1, 1}) CHECK(std::abs(v) <= 1e-10);
}

TEST_CASE("analyze_grid of the constant function is the zero harmonic") {
    GridFunction G = GridFunction::sample(
        {8, 8, 8}, [](const rvec&) { return cplx{1.0, 0.0}; });
    LatticeSpectrum S = analyze_grid(G, 1);
    CHECK(std::abs(S.at({0, 0, 0}) - cplx{1.0, 0.0}) <= 1e-12);
    for (const auto& [k, v] : S.c)
        if (k != ivec{0, 0, 0}) CHECK(std::abs(v) <= 1e-14);
}

TEST_CASE("analyze_grid of xy matches the closed-form products") {
    GridFunction G = GridFunction::sample(
        {256, 256}, [](const rvec& x) { return cplx{x[0] * x[1], 0.0}; });
    LatticeSpectrum S = analyze_grid(G, 3);
    for (int k = -3; k <= 3; ++k) {
        for (int n = -3; n <= 3; ++n) {
            cplx got = S.at({k, n});
            if (k == 0 || n == 0) {
                // Odd symmetry across the antisymmetric midpoint nodes
                // cancels the axis quadratures down to rounding noise.
                CHECK(std::abs(got) <= 1e-15);
            } else {
                double sign = (k + n) % 2 == 0 ? 1.0 : -1.0;
                cplx want{-sign / (pi * pi * k * n), 0.0};
                CHECK(std::abs(got - want) <= 2e-5);
            }
        }
    }
}

TEST_CASE("analyze_grid rejects grids too coarse for the band") {
    GridFunction G = GridFunction::zeros({8, 8});
    CHECK_THROWS_WITH_AS(analyze_grid(G, 4), "aliasing",
                         std::invalid_argument);
    CHECK_NOTHROW(analyze_grid(G, 3));
}

TEST_CASE("synthesize constant and node evaluation") {
    LatticeSpectrum S(2);
    S.set({0, 0}, {3.0, 0.0});
    GridFunction G = synthesize_grid(S, {4, 4});
    for (const cplx& v : G.values) CHECK(v == cplx{3.0, 0.0});

    LatticeSpectrum T(2);
    T.set({1, 0}, {1.0, 0.0});
    T.set({0, 1}, {1.0, 0.0});
    GridFunction H = synthesize_grid(T, {3, 3});
    CHECK(H.coord(0, 1) == 0.0);
    CHECK(std::abs(H.values[4] - cplx{2.0, 0.0}) <= 1e-14);
}

TEST_CASE("analyze inverts synthesize for in-band spectra") {
    Rng rng(42);
    struct Case {
        int m;
        int K;
        std::vector<int> shape;
    };
    std::vector<Case> cases = {{1, 6, {14}},
                               {2, 4, {12, 16}},
                               {2, 6, {15, 17}},
                               {3, 2, {6, 8, 7}}};
    for (const Case& c : cases) {
        LatticeSpectrum S = oracles::random_spectrum(rng, c.m, c.K, 9);
        GridFunction G = synthesize_grid(S, c.shape);
        LatticeSpectrum R = analyze_grid(G, c.K);
        double worst = 0.0;
        for (const auto& [k, v] : S.c)
            worst = std::max(worst, std::abs(R.at(k) - v));
        for (const auto& [k, v] : R.c)
            worst = std::max(worst, std::abs(S.at(k) - v));
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("analyze and synthesize are linear") {
    Rng rng(7);
    LatticeSpectrum S1 = oracles::random_spectrum(rng, 2, 3, 6);
    LatticeSpectrum S2 = oracles::random_spectrum(rng, 2, 3, 6);
    cplx a{0.7, -0.3};
    cplx b{-1.2, 0.4};

    GridFunction G1 = synthesize_grid(S1, {10, 10});
    GridFunction G2 = synthesize_grid(S2, {10, 10});
    LatticeSpectrum mix(2);
    for (const auto& [k, v] : S1.c) mix.add(k, a * v);
    for (const auto& [k, v] : S2.c) mix.add(k, b * v);
    GridFunction Gmix = synthesize_grid(mix, {10, 10});
    for (std::size_t i = 0; i < Gmix.values.size(); ++i)
        CHECK(std::abs(Gmix.values[i] - (a * G1.values[i] + b * G2.values[i])) <=
              1e-12);

    GridFunction Gsum = GridFunction::zeros({10, 10});
    for (std::size_t i = 0; i < Gsum.values.size(); ++i)
        Gsum.values[i] = a * G1.values[i] + b * G2.values[i];
    LatticeSpectrum A = analyze_grid(Gsum, 3);
    for (const auto& [k, v] : A.c)
        CHECK(std::abs(v - (a * S1.at(k) + b * S2.at(k))) <= 1e-12);
}

TEST_CASE("lattice exponentials are orthonormal both ways") {
    LatticeSpectrum e1(2), e2(2);
    e1.set({2, -1}, {1.0, 0.0});
    e2.set({1, 1}, {1.0, 0.0});
    CHECK(inner_product(e1, e2, Measure::normalized) == cplx{0.0, 0.0});
    CHECK(inner_product(e1, e1, Measure::normalized) == cplx{1.0, 0.0});
    CHECK(inner_product(e1, e1, Measure::lebesgue) == cplx{4.0, 0.0});

    GridFunction G1 = synthesize_grid(e1, {64, 64});
    GridFunction G2 = synthesize_grid(e2, {64, 64});
    CHECK(std::abs(inner_product(G1, G2, Measure::normalized)) <= 1e-10);
    CHECK(std::abs(inner_product(G1, G1, Measure::normalized) -
                   cplx{1.0, 0.0}) <= 1e-10);
}

TEST_CASE("inequivalent mean-zero ridges are orthogonal exactly") {
    Rng rng(99);
    DirectionClass w1 = DirectionClass::canonical({1, 2});
    DirectionClass w2 = DirectionClass::canonical({2, 1});
    OneDSpectrum phi, psi;
    for (int k = -8; k <= 8; ++k) {
        if (k == 0) continue;
        phi.set(k, rng.uniform_cplx(-1.0, 1.0));
        psi.set(k, rng.uniform_cplx(-1.0, 1.0));
    }
    LatticeSpectrum F = ridge_synthesize(phi, w1);
    LatticeSpectrum G = ridge_synthesize(psi, w2);
    CHECK(inner_product(F, G, Measure::normalized) == cplx{0.0, 0.0});
    CHECK(inner_product(F, G, Measure::lebesgue) == cplx{0.0, 0.0});
}

TEST_CASE("norm identities for the truncated product spectrum") {
    // norm_sq of sum_{k,n != 0} a_k a_n e^{i pi(kx+ny)} under dx has the
    // closed form 4 (2 sum_{k=1}^K (pi k)^-2)^2; as K grows it climbs to
    // the full product norm 4/9.
    for (int K : {10, 100}) {
        LatticeSpectrum S = truncated_xy(K);
        double tail = 0.0;
        for (int k = 1; k <= K; ++k) tail += 1.0 / (pi * pi * k * k);
        double closed = 4.0 * (2.0 * tail) * (2.0 * tail);
        CHECK(std::abs(norm_sq(S, Measure::lebesgue) - closed) <= 1e-12);
        CHECK(std::abs(norm_sq(S, Measure::normalized) - closed / 4.0) <=
              1e-12);
    }
    LatticeSpectrum big = truncated_xy(1000);
    double gap = 4.0 / 9.0 - norm_sq(big, Measure::lebesgue);
    CHECK(gap > 0.0);
    CHECK(gap <= 6e-4);
}

TEST_CASE("Parseval holds on the grid for in-band content") {
    Rng rng(5);
    LatticeSpectrum S = oracles::random_spectrum(rng, 2, 5, 12);
    GridFunction G = synthesize_grid(S, {32, 32});
    double spectral = norm_sq(S, Measure::normalized);
    double quad = norm_sq(G, Measure::normalized);
    CHECK(std::abs(spectral - quad) <= 1e-8);

    GridFunction P = GridFunction::sample(
        {64, 64}, [](const rvec& x) { return cplx{x[0] * x[1], 0.0}; });
    LatticeSpectrum A = analyze_grid(P, 31);
    CHECK(norm_sq(A, Measure::normalized) <=
          norm_sq(P, Measure::normalized) + 1e-12);
}

TEST_CASE("grid plumbing validates shapes and exposes exact nodes") {
    CHECK_THROWS_AS(GridFunction({4, 4}, std::vector<cplx>(15)),
                    std::invalid_argument);
    CHECK_THROWS_AS(GridFunction::zeros({4, 1}), std::invalid_argument);
    GridFunction G = GridFunction::zeros({6, 4});
    CHECK(G.cell_count() == 24);
    CHECK(G.cell_volume() == doctest::Approx(4.0 / 24.0));
    for (int i = 0; i < 6; ++i) CHECK(G.coord(0, i) + G.coord(0, 5 - i) == 0.0);
    CHECK(inner_product(G, G, Measure::normalized) == cplx{0.0, 0.0});
    GridFunction H = GridFunction::zeros({8, 8});
    CHECK_THROWS_WITH_AS(inner_product(G, H, Measure::normalized),
                         "shape mismatch", std::invalid_argument);
}
