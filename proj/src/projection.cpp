#include "ridgekit/projection.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace ridgekit {
namespace {

bool on_some_line(const ivec& k, const DirectionSet& W) {
    bool zero = std::all_of(k.begin(), k.end(), [](int x) { return x == 0; });
    if (zero) return true;
    return std::any_of(W.begin(), W.end(),
                       [&](const DirectionClass& w) { return on_line(k, w); });
}

}  // namespace

std::vector<ivec> line_support(const DirectionSet& W, int K) {
    if (K < 0) throw std::invalid_argument("band limit must be nonnegative");
    std::set<ivec> pts;
    pts.insert(ivec(static_cast<std::size_t>(W.dim()), 0));
    for (const DirectionClass& w : W) {
        int wmax = 0;
        for (int x : w.coords()) wmax = std::max(wmax, std::abs(x));
        int tmax = K / wmax;
        for (int t = -tmax; t <= tmax; ++t) {
            if (t == 0) continue;
            ivec k(w.coords().size());
            for (std::size_t j = 0; j < k.size(); ++j)
                k[j] = t * w.coords()[j];
            pts.insert(std::move(k));
        }
    }
    return {pts.begin(), pts.end()};
}

ProjectionSplit project(const LatticeSpectrum& S, const DirectionSet& W,
                        Measure measure) {
    if (S.m != W.dim()) throw std::invalid_argument("dimension mismatch");
    ProjectionSplit split{LatticeSpectrum(S.m), LatticeSpectrum(S.m), 0.0};
    for (const auto& [k, v] : S.c) {
        if (on_some_line(k, W))
            split.projected.c.emplace(k, v);
        else
            split.residual.c.emplace(k, v);
    }
    split.distance_sq = norm_sq(split.residual, measure);
    return split;
}

bool annihilates(const LatticeSpectrum& S, const DirectionSet& W) {
    if (S.m != W.dim()) throw std::invalid_argument("dimension mismatch");
    for (const auto& [k, v] : S.c)
        if (on_some_line(k, W)) return false;
    return true;
}

LatticeSpectrum convolve(const LatticeSpectrum& S1, const LatticeSpectrum& S2) {
    if (S1.m != S2.m) throw std::invalid_argument("dimension mismatch");
    const auto& small = S1.c.size() <= S2.c.size() ? S1 : S2;
    const auto& large = S1.c.size() <= S2.c.size() ? S2 : S1;
    LatticeSpectrum out(S1.m);
    for (const auto& [k, v] : small.c) {
        cplx w = large.at(k);
        cplx prod = v * w;
        if (prod != cplx{0.0, 0.0}) out.c.emplace(k, prod);
    }
    return out;
}

}  // namespace ridgekit
