#include "ridgekit/annihilator.hpp"

#include <algorithm>
#include <cmath>

namespace ridgekit {
namespace {

double eval_factor(const HatFunction::Factor& f, const rvec& xi) {
    if (const auto* h = std::get_if<HatFunction::Haar>(&f)) {
        double u = 0.0;
        for (std::size_t j = 0; j < xi.size(); ++j) u += h->z[j] * xi[j];
        return haar_profile(u);
    }
    if (std::get_if<HatFunction::SincBox>(&f)) {
        double p = 1.0;
        for (double x : xi) p *= 2.0 * sincpi(x / pi);
        return p;
    }
    const auto& w = std::get<HatFunction::Weighted>(f);
    double acc = 0.0;
    for (std::size_t i = 0; i < w.atoms.size(); ++i)
        acc += w.weights[i] * w.atoms[i](xi);
    return acc;
}

}  // namespace

double haar_profile(double u) {
    if (u == 0.0) return 0.0;
    if (std::abs(u) < 1e-4) return -u / 2.0 + u * u * u / 24.0;
    double s = std::sin(u / 2.0);
    return -2.0 * s * s / u;
}

double HatFunction::operator()(const rvec& xi) const {
    if (static_cast<int>(xi.size()) != m_)
        throw std::invalid_argument("dimension mismatch");
    double p = 1.0;
    for (const Factor& f : factors_) p *= eval_factor(f, xi);
    return p;
}

HatFunction haar_hat(const rvec& z) {
    if (z.empty() ||
        std::all_of(z.begin(), z.end(), [](double x) { return x == 0.0; }))
        throw std::invalid_argument("not a direction");
    int m = static_cast<int>(z.size());
    return HatFunction(m, {HatFunction::Haar{z}});
}

HatFunction sinc_box(int m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    return HatFunction(m, {HatFunction::SincBox{m}});
}

HatFunction convolve_hats(const HatFunction& a, const HatFunction& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
    std::vector<HatFunction::Factor> factors = a.factors_;
    factors.insert(factors.end(), b.factors_.begin(), b.factors_.end());
    return HatFunction(a.dim(), std::move(factors));
}

HatFunction convolve_hats(const std::vector<HatFunction>& hats) {
    if (hats.empty()) throw std::invalid_argument("no hats");
    HatFunction out = hats.front();
    for (std::size_t i = 1; i < hats.size(); ++i)
        out = convolve_hats(out, hats[i]);
    return out;
}

HatFunction weighted_sum(const rvec& weights, std::vector<HatFunction> atoms) {
    if (atoms.empty()) throw std::invalid_argument("no atoms");
    if (atoms.size() != weights.size())
        throw std::invalid_argument("weights and atoms differ in length");
    if (std::all_of(weights.begin(), weights.end(),
                    [](double w) { return w == 0.0; }))
        throw std::invalid_argument("weights are all zero");
    int m = atoms.front().dim();
    for (const HatFunction& a : atoms)
        if (a.dim() != m) throw std::invalid_argument("dimension mismatch");
    return HatFunction(m, {HatFunction::Weighted{weights, std::move(atoms)}});
}

HatFunction averaged_hat(const std::vector<rvec>& zs, const rvec& weights) {
    if (zs.empty()) throw std::invalid_argument("no displacements");
    if (zs.size() != weights.size())
        throw std::invalid_argument("weights and displacements differ in length");
    std::vector<HatFunction> atoms;
    atoms.reserve(zs.size());
    for (const rvec& z : zs) atoms.push_back(haar_hat(z));
    return weighted_sum(weights, std::move(atoms));
}

rvec chebyshev_samples(int count) {
    if (count < 16)
        throw std::invalid_argument("t_samples must be at least 16");
    rvec ts(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        ts[static_cast<std::size_t>(i)] =
            8.0 * pi * std::cos(pi * (2.0 * i + 1.0) / (2.0 * count));
    return ts;
}

AnnihilationReport verify_annihilation(const HatFunction& hat,
                                       const std::vector<rvec>& W, double tol,
                                       int t_samples) {
    if (W.empty()) throw std::invalid_argument("direction set is empty");
    for (const rvec& w : W)
        if (static_cast<int>(w.size()) != hat.dim())
            throw std::invalid_argument("dimension mismatch");
    rvec ts = chebyshev_samples(t_samples);
    AnnihilationReport report;
    rvec xi(static_cast<std::size_t>(hat.dim()));
    for (const rvec& w : W) {
        for (double t : ts) {
            for (std::size_t j = 0; j < xi.size(); ++j) xi[j] = t * w[j];
            report.max_abs = std::max(report.max_abs, std::abs(hat(xi)));
        }
    }
    report.pass = report.max_abs <= tol;
    return report;
}

AnnihilationReport verify_annihilation(const HatFunction& hat,
                                       const DirectionSet& W, double tol,
                                       int t_samples) {
    std::vector<rvec> dirs;
    dirs.reserve(W.size());
    for (const DirectionClass& w : W) {
        rvec d(w.coords().size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = w.coords()[j];
        dirs.push_back(std::move(d));
    }
    return verify_annihilation(hat, dirs, tol, t_samples);
}

LatticeSpectrum odd_product_spectrum(const std::vector<OneDSpectrum>& phis) {
    if (phis.empty()) throw std::invalid_argument("no profiles");
    for (const OneDSpectrum& phi : phis) {
        if (phi.at(0) != cplx{0.0, 0.0})
            throw std::invalid_argument("not odd");
        for (const auto& [k, a] : phi.a)
            if (phi.at(-k) != -a) throw std::invalid_argument("not odd");
    }
    int m = static_cast<int>(phis.size());
    LatticeSpectrum S(m);
    ivec k(static_cast<std::size_t>(m));
    std::vector<std::map<int, cplx>::const_iterator> its;
    // Cartesian product over the supports, odometer style.
    for (const OneDSpectrum& phi : phis) {
        if (phi.a.empty()) return S;
        its.push_back(phi.a.begin());
    }
    while (true) {
        cplx prod{1.0, 0.0};
        for (int j = 0; j < m; ++j) {
            k[static_cast<std::size_t>(j)] = its[static_cast<std::size_t>(j)]->first;
            prod *= its[static_cast<std::size_t>(j)]->second;
        }
        if (prod != cplx{0.0, 0.0}) S.c.emplace(k, prod);
        int j = m - 1;
        for (; j >= 0; --j) {
            auto& it = its[static_cast<std::size_t>(j)];
            if (++it != phis[static_cast<std::size_t>(j)].a.end()) break;
            it = phis[static_cast<std::size_t>(j)].a.begin();
        }
        if (j < 0) break;
    }
    return S;
}

}  // namespace ridgekit
