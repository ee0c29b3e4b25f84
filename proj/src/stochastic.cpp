#include "ridgekit/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ridgekit {
namespace {

void check_sample(const EmpiricalSample& S) {
    if (S.xs.empty()) throw std::invalid_argument("sample is empty");
    if (S.xs.size() != S.fs.size())
        throw std::invalid_argument("xs and fs differ in length");
}

BinnedConditional bin_means(const EmpiricalSample& S, rvec edges) {
    std::size_t nbins = edges.size() - 1;
    BinnedConditional C;
    C.edges = std::move(edges);
    C.counts.assign(nbins, 0);
    double nan = std::numeric_limits<double>::quiet_NaN();
    C.means.assign(nbins, cplx{nan, nan});

    std::vector<std::size_t> first(nbins, 0);
    std::vector<int> bins(S.n());
    for (std::size_t i = 0; i < S.n(); ++i) {
        int b = bin_of(C, S.xs[i]);
        bins[i] = b;
        if (C.counts[static_cast<std::size_t>(b)]++ == 0)
            first[static_cast<std::size_t>(b)] = i;
    }
    // Shifted accumulation: mean = f_first + avg(f_i - f_first). A bin of
    // equal values sums exact zeros, making repeated conditioning a bitwise
    // fixed point.
    std::vector<cplx> acc(nbins, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < S.n(); ++i) {
        auto b = static_cast<std::size_t>(bins[i]);
        acc[b] += S.fs[i] - S.fs[first[b]];
    }
    for (std::size_t b = 0; b < nbins; ++b)
        if (C.counts[b] > 0)
            C.means[b] =
                S.fs[first[b]] + acc[b] / static_cast<double>(C.counts[b]);
    return C;
}

}  // namespace

EmpiricalSample compose(const std::function<cplx(double)>& phi,
                        const EmpiricalSample& base) {
    if (base.xs.empty()) throw std::invalid_argument("sample is empty");
    EmpiricalSample out;
    out.xs = base.xs;
    out.fs.reserve(base.xs.size());
    for (double x : base.xs) out.fs.push_back(phi(x));
    return out;
}

double sample_norm_sq(const EmpiricalSample& S) {
    check_sample(S);
    double acc = 0.0;
    for (const cplx& f : S.fs) acc += std::norm(f);
    return acc / static_cast<double>(S.n());
}

BinnedConditional conditional_expectation(const EmpiricalSample& S,
                                          int nbins) {
    check_sample(S);
    if (nbins < 1) throw std::invalid_argument("nbins must be positive");
    auto [lo_it, hi_it] = std::minmax_element(S.xs.begin(), S.xs.end());
    double lo = *lo_it, hi = *hi_it;
    rvec edges(static_cast<std::size_t>(nbins) + 1);
    for (int b = 0; b <= nbins; ++b)
        edges[static_cast<std::size_t>(b)] =
            lo + (hi - lo) * (static_cast<double>(b) / nbins);
    edges.front() = lo;
    edges.back() = hi;
    return bin_means(S, std::move(edges));
}

BinnedConditional conditional_expectation(const EmpiricalSample& S,
                                          const rvec& edges) {
    check_sample(S);
    if (edges.size() < 2) throw std::invalid_argument("need at least 2 edges");
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (!(edges[i - 1] < edges[i]))
            throw std::invalid_argument("edges must be strictly increasing");
    return bin_means(S, edges);
}

rvec quantile_edges(rvec xs, int nbins) {
    if (xs.empty()) throw std::invalid_argument("sample is empty");
    if (nbins < 1) throw std::invalid_argument("nbins must be positive");
    std::sort(xs.begin(), xs.end());
    rvec edges;
    edges.reserve(static_cast<std::size_t>(nbins) + 1);
    for (int b = 0; b <= nbins; ++b) {
        double q = static_cast<double>(b) / nbins;
        auto pos = static_cast<std::size_t>(
            std::min<double>(q * (static_cast<double>(xs.size()) - 1.0),
                             static_cast<double>(xs.size()) - 1.0));
        double e = xs[pos];
        if (edges.empty() || e > edges.back()) edges.push_back(e);
    }
    if (edges.size() < 2) edges.push_back(edges.back() + 1.0);
    return edges;
}

int bin_of(const BinnedConditional& C, double x) {
    // Degenerate range: a single non-spanning edge set sends all to bin 0.
    if (C.edges.front() == C.edges.back()) return 0;
    auto it = std::upper_bound(C.edges.begin(), C.edges.end(), x);
    auto idx = static_cast<long>(it - C.edges.begin()) - 1;
    idx = std::clamp<long>(idx, 0, static_cast<long>(C.counts.size()) - 1);
    return static_cast<int>(idx);
}

EmpiricalSample apply_conditional(const BinnedConditional& C,
                                  const EmpiricalSample& S) {
    check_sample(S);
    EmpiricalSample out;
    out.xs = S.xs;
    out.fs.reserve(S.n());
    for (double x : S.xs)
        out.fs.push_back(C.means[static_cast<std::size_t>(bin_of(C, x))]);
    return out;
}

double adjointness_residual(const EmpiricalSample& S,
                            const std::function<cplx(double)>& psi,
                            const BinnedConditional& C) {
    check_sample(S);
    cplx lhs{0.0, 0.0};
    cplx rhs{0.0, 0.0};
    for (std::size_t i = 0; i < S.n(); ++i) {
        cplx p = psi(S.xs[i]);
        lhs += p * C.means[static_cast<std::size_t>(bin_of(C, S.xs[i]))];
        rhs += p * S.fs[i];
    }
    double n = static_cast<double>(S.n());
    return std::abs(lhs / n - rhs / n);
}

double adjointness_residual(const EmpiricalSample& S,
                            const std::function<cplx(double)>& psi,
                            int nbins) {
    return adjointness_residual(S, psi, conditional_expectation(S, nbins));
}

double projection_identity_check(const EmpiricalSample& S, int nbins) {
    check_sample(S);
    BinnedConditional C1 = conditional_expectation(S, nbins);
    EmpiricalSample once = apply_conditional(C1, S);
    BinnedConditional C2 = conditional_expectation(once, nbins);
    EmpiricalSample twice = apply_conditional(C2, once);
    double worst = 0.0;
    for (std::size_t i = 0; i < S.n(); ++i)
        worst = std::max(worst, std::abs(twice.fs[i] - once.fs[i]));
    return worst;
}

}  // namespace ridgekit
