#include "ridgekit/shannon.hpp"

#include <cmath>

namespace ridgekit {

HatSamples hat_samples(const LatticeSpectrum& S, int K) {
    if (K < 0) throw std::invalid_argument("band limit must be nonnegative");
    HatSamples H;
    H.m = S.m;
    H.K = K;
    double scale = std::ldexp(1.0, S.m);
    for (const auto& [k, c] : S.c) {
        bool inside = true;
        for (int kj : k)
            if (kj < -K || kj > K) inside = false;
        if (inside) H.H.emplace(k, scale * c);
    }
    return H;
}

double kernel(const rvec& xi) {
    if (xi.empty()) throw std::invalid_argument("dimension must be positive");
    double p = 1.0;
    for (double x : xi) p *= 2.0 * sincpi(snap_integer(x / pi));
    return p;
}

cplx interpolate(const HatSamples& H, const rvec& xi) {
    if (static_cast<int>(xi.size()) != H.m)
        throw std::invalid_argument("dimension mismatch");
    // Per-axis kernel factors 2 sincpi(xi_j/pi - n) for n = -K..K. Snapping
    // xi_j/pi onto integers makes every factor an exact 0.0 or 2.0 at
    // lattice points, so lattice evaluation reproduces the stored sample
    // bitwise (the final 2^-m scaling is a power of two).
    std::size_t B = 2 * static_cast<std::size_t>(H.K) + 1;
    std::vector<double> fact(xi.size() * B);
    for (std::size_t j = 0; j < xi.size(); ++j) {
        double u = snap_integer(xi[j] / pi);
        for (std::size_t q = 0; q < B; ++q) {
            int n = static_cast<int>(q) - H.K;
            fact[j * B + q] = 2.0 * sincpi(u - n);
        }
    }
    double scale = std::ldexp(1.0, -H.m);
    cplx acc{0.0, 0.0};
    for (const auto& [n, h] : H.H) {
        double p = 1.0;
        for (std::size_t j = 0; j < xi.size(); ++j)
            p *= fact[j * B + static_cast<std::size_t>(n[j] + H.K)];
        acc += h * (p * scale);
    }
    return acc;
}

cplx hat_direct(const GridFunction& G, const rvec& xi) {
    if (static_cast<int>(xi.size()) != G.m)
        throw std::invalid_argument("dimension mismatch");
    // Quadrature weights along each axis: w[i] integrates node i's cardinal
    // trigonometric interpolant against exp(-i xi x). Contracting the last
    // axis repeatedly keeps the pass cache-friendly and O(total cells).
    std::vector<std::vector<cplx>> wt(static_cast<std::size_t>(G.m));
    for (int j = 0; j < G.m; ++j) {
        int n = G.shape[static_cast<std::size_t>(j)];
        int Kj = (n - 1) / 2;
        double u = snap_integer(xi[static_cast<std::size_t>(j)] / pi);
        std::vector<double> s(static_cast<std::size_t>(2 * Kj + 1));
        for (int k = -Kj; k <= Kj; ++k)
            s[static_cast<std::size_t>(k + Kj)] = 2.0 * sincpi(u - k);
        auto& w = wt[static_cast<std::size_t>(j)];
        w.assign(static_cast<std::size_t>(n), cplx{0.0, 0.0});
        for (int i = 0; i < n; ++i) {
            double x = (2.0 * i + 1.0 - n) / n;
            cplx acc{0.0, 0.0};
            for (int k = -Kj; k <= Kj; ++k) {
                double t = pi * k * x;
                acc += cplx{std::cos(t), -std::sin(t)} *
                       s[static_cast<std::size_t>(k + Kj)];
            }
            w[static_cast<std::size_t>(i)] = acc / static_cast<double>(n);
        }
    }
    std::vector<cplx> cur = G.values;
    for (int j = G.m - 1; j >= 0; --j) {
        const auto& w = wt[static_cast<std::size_t>(j)];
        std::size_t n = w.size();
        std::size_t blocks = cur.size() / n;
        std::vector<cplx> next(blocks);
        for (std::size_t b = 0; b < blocks; ++b) {
            const cplx* row = cur.data() + b * n;
            cplx acc{0.0, 0.0};
            for (std::size_t i = 0; i < n; ++i) acc += row[i] * w[i];
            next[b] = acc;
        }
        cur = std::move(next);
    }
    return cur.front();
}

cplx hat_direct_midpoint(const GridFunction& G, const rvec& xi) {
    if (static_cast<int>(xi.size()) != G.m)
        throw std::invalid_argument("dimension mismatch");
    std::vector<std::vector<cplx>> ph(static_cast<std::size_t>(G.m));
    for (int j = 0; j < G.m; ++j) {
        int n = G.shape[static_cast<std::size_t>(j)];
        auto& p = ph[static_cast<std::size_t>(j)];
        p.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            double t = xi[static_cast<std::size_t>(j)] * ((2.0 * i + 1.0 - n) / n);
            p[static_cast<std::size_t>(i)] = {std::cos(t), -std::sin(t)};
        }
    }
    std::vector<cplx> cur = G.values;
    for (int j = G.m - 1; j >= 0; --j) {
        const auto& p = ph[static_cast<std::size_t>(j)];
        std::size_t n = p.size();
        std::size_t blocks = cur.size() / n;
        std::vector<cplx> next(blocks);
        for (std::size_t b = 0; b < blocks; ++b) {
            const cplx* row = cur.data() + b * n;
            cplx acc{0.0, 0.0};
            for (std::size_t i = 0; i < n; ++i) acc += row[i] * p[i];
            next[b] = acc;
        }
        cur = std::move(next);
    }
    return cur.front() * G.cell_volume();
}

LineRestriction line_restriction(const HatSamples& H, const rvec& w,
                                 const rvec& ts) {
    if (static_cast<int>(w.size()) != H.m)
        throw std::invalid_argument("dimension mismatch");
    LineRestriction L;
    L.ts = ts;
    L.values.reserve(ts.size());
    rvec xi(w.size());
    for (double t : ts) {
        for (std::size_t j = 0; j < w.size(); ++j) xi[j] = t * w[j];
        cplx v = interpolate(H, xi);
        L.values.push_back(v);
        L.max_abs = std::max(L.max_abs, std::abs(v));
    }
    return L;
}

LineRestriction line_restriction(const HatSamples& H, const DirectionClass& w,
                                 const rvec& ts) {
    rvec d(w.coords().size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = w.coords()[j];
    return line_restriction(H, d, ts);
}

}  // namespace ridgekit
