#include "ridgekit/radon.hpp"

#include <algorithm>
#include <cmath>

namespace ridgekit {

RadonProfile radon_profile(const GridFunction& G, const rvec& w, int nbins) {
    if (static_cast<int>(w.size()) != G.m)
        throw std::invalid_argument("dimension mismatch");
    double norm2 = 0.0;
    for (double x : w) norm2 += x * x;
    if (norm2 == 0.0) throw std::invalid_argument("not a direction");
    if (nbins < 4) throw std::invalid_argument("nbins must be at least 4");

    RadonProfile P;
    P.w.resize(w.size());
    double len = std::sqrt(norm2);
    for (std::size_t j = 0; j < w.size(); ++j) P.w[j] = w[j] / len;

    double R = 0.0;
    for (double x : P.w) R += std::abs(x);
    P.bin_width = 2.0 * R / nbins;

    double footprint = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j)
        footprint += 2.0 * std::abs(P.w[j]) / G.shape[j];
    if (P.bin_width < footprint) throw std::invalid_argument("undersampled");

    P.ts.resize(static_cast<std::size_t>(nbins));
    for (int b = 0; b < nbins; ++b)
        P.ts[static_cast<std::size_t>(b)] = -R + (b + 0.5) * P.bin_width;
    P.values.assign(static_cast<std::size_t>(nbins), cplx{0.0, 0.0});

    double vol = G.cell_volume();
    std::vector<int> idx(w.size(), 0);
    for (std::size_t c = 0; c < G.values.size(); ++c) {
        double s = 0.0;
        for (std::size_t j = 0; j < w.size(); ++j)
            s += P.w[j] * G.coord(static_cast<int>(j), idx[j]);
        int b = static_cast<int>(std::floor((s + R) / P.bin_width));
        b = std::clamp(b, 0, nbins - 1);
        P.values[static_cast<std::size_t>(b)] += G.values[c] * vol;
        for (int j = static_cast<int>(w.size()) - 1; j >= 0; --j) {
            if (++idx[static_cast<std::size_t>(j)] <
                G.shape[static_cast<std::size_t>(j)])
                break;
            idx[static_cast<std::size_t>(j)] = 0;
        }
    }
    for (cplx& v : P.values) v /= P.bin_width;
    return P;
}

RadonZeroReport radon_zero(const GridFunction& G,
                           const std::vector<rvec>& directions, int nbins,
                           double tol) {
    RadonZeroReport report;
    for (const rvec& w : directions) {
        RadonProfile P = radon_profile(G, w, nbins);
        for (const cplx& v : P.values)
            report.max_abs = std::max(report.max_abs, std::abs(v));
    }
    report.zero = report.max_abs <= tol;
    return report;
}

RadonZeroReport radon_zero(const GridFunction& G, const DirectionSet& W,
                           int nbins, double tol) {
    std::vector<rvec> dirs;
    dirs.reserve(W.size());
    for (const DirectionClass& w : W) {
        rvec d(w.coords().size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = w.coords()[j];
        dirs.push_back(std::move(d));
    }
    return radon_zero(G, dirs, nbins, tol);
}

}  // namespace ridgekit
