#include "ridgekit/spectrum.hpp"

#include <cmath>
#include <numeric>

namespace ridgekit {
namespace {

std::size_t checked_cell_count(const std::vector<int>& shape) {
    if (shape.empty())
        throw std::invalid_argument("grid needs at least one axis");
    std::size_t total = 1;
    for (int n : shape) {
        if (n < 2)
            throw std::invalid_argument("grid needs at least 2 cells per axis");
        total *= static_cast<std::size_t>(n);
    }
    return total;
}

/** exp(i pi k x_i) for all nodes of one axis. */
std::vector<cplx> phase_table(int k, int n) {
    std::vector<cplx> E(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = (2.0 * i + 1.0 - n) / n;
        double t = pi * k * x;
        E[static_cast<std::size_t>(i)] = {std::cos(t), std::sin(t)};
    }
    return E;
}

/** values += c * outer(E_0, ..., E_{m-1}), tight loop on the last axis. */
void accumulate_rank_one(cplx* values, const std::vector<std::vector<cplx>>& E,
                         std::size_t axis, cplx prefix) {
    if (axis + 1 == E.size()) {
        const auto& last = E[axis];
        for (std::size_t i = 0; i < last.size(); ++i) values[i] += prefix * last[i];
        return;
    }
    std::size_t stride = 1;
    for (std::size_t a = axis + 1; a < E.size(); ++a) stride *= E[a].size();
    for (std::size_t i = 0; i < E[axis].size(); ++i)
        accumulate_rank_one(values + i * stride, E, axis + 1,
                            prefix * E[axis][i]);
}

}  // namespace

GridFunction::GridFunction(std::vector<int> shape_in,
                           std::vector<cplx> values_in) {
    std::size_t total = checked_cell_count(shape_in);
    if (values_in.size() != total)
        throw std::invalid_argument("value count does not match shape");
    m = static_cast<int>(shape_in.size());
    shape = std::move(shape_in);
    values = std::move(values_in);
}

GridFunction GridFunction::zeros(const std::vector<int>& shape) {
    std::size_t total = checked_cell_count(shape);
    GridFunction G;
    G.m = static_cast<int>(shape.size());
    G.shape = shape;
    G.values.assign(total, cplx{0.0, 0.0});
    return G;
}

GridFunction GridFunction::sample(const std::vector<int>& shape,
                                  const std::function<cplx(const rvec&)>& f) {
    GridFunction G = zeros(shape);
    rvec x(shape.size());
    std::vector<int> idx(shape.size(), 0);
    for (std::size_t c = 0; c < G.values.size(); ++c) {
        for (std::size_t j = 0; j < shape.size(); ++j)
            x[j] = G.coord(static_cast<int>(j), idx[j]);
        G.values[c] = f(x);
        for (int j = static_cast<int>(shape.size()) - 1; j >= 0; --j) {
            if (++idx[static_cast<std::size_t>(j)] <
                shape[static_cast<std::size_t>(j)])
                break;
            idx[static_cast<std::size_t>(j)] = 0;
        }
    }
    return G;
}

double GridFunction::cell_volume() const {
    double v = 1.0;
    for (int n : shape) v *= 2.0 / n;
    return v;
}

LatticeSpectrum ridge_synthesize(const OneDSpectrum& phi,
                                 const DirectionClass& w) {
    LatticeSpectrum S(w.dim());
    const ivec& d = w.coords();
    for (const auto& [k, a] : phi.a) {
        if (a == cplx{0.0, 0.0}) continue;
        ivec key(d.size());
        for (std::size_t j = 0; j < d.size(); ++j) key[j] = k * d[j];
        S.set(key, a);
    }
    return S;
}

GridFunction synthesize_grid(const LatticeSpectrum& S,
                             const std::vector<int>& shape) {
    if (static_cast<int>(shape.size()) != S.m)
        throw std::invalid_argument("dimension mismatch");
    GridFunction G = GridFunction::zeros(shape);
    std::vector<std::vector<cplx>> E(shape.size());
    for (const auto& [k, c] : S.c) {
        for (std::size_t j = 0; j < shape.size(); ++j)
            E[j] = phase_table(k[j], shape[j]);
        accumulate_rank_one(G.values.data(), E, 0, c);
    }
    return G;
}

LatticeSpectrum analyze_grid(const GridFunction& G, int K) {
    if (K < 0) throw std::invalid_argument("band limit must be nonnegative");
    for (int n : G.shape)
        if (n < 2 * K + 2) throw std::invalid_argument("aliasing");

    // Contract one axis at a time, last axis first: the running tensor stays
    // row-major with the contracted axis replaced by the 2K+1 frequencies.
    int B = 2 * K + 1;
    std::vector<cplx> cur = G.values;
    std::vector<std::size_t> dims(G.shape.begin(), G.shape.end());
    for (int axis = G.m - 1; axis >= 0; --axis) {
        int n = G.shape[static_cast<std::size_t>(axis)];
        // Twiddles: conj(exp(i pi k x_i)) / n for k = -K..K.
        std::vector<std::vector<cplx>> T(static_cast<std::size_t>(B));
        for (int q = 0; q < B; ++q) {
            T[static_cast<std::size_t>(q)] = phase_table(-(q - K), n);
            for (cplx& t : T[static_cast<std::size_t>(q)]) t /= n;
        }
        std::size_t inner = 1;
        for (std::size_t a = static_cast<std::size_t>(axis) + 1;
             a < dims.size(); ++a)
            inner *= dims[a];
        std::size_t outer = 1;
        for (std::size_t a = 0; a < static_cast<std::size_t>(axis); ++a)
            outer *= dims[a];
        std::vector<cplx> next(outer * static_cast<std::size_t>(B) * inner);
        for (std::size_t o = 0; o < outer; ++o) {
            const cplx* src =
                cur.data() + o * static_cast<std::size_t>(n) * inner;
            cplx* dst = next.data() + o * static_cast<std::size_t>(B) * inner;
            for (int q = 0; q < B; ++q) {
                const cplx* tw = T[static_cast<std::size_t>(q)].data();
                cplx* row = dst + static_cast<std::size_t>(q) * inner;
                for (int i = 0; i < n; ++i) {
                    const cplx* block = src + static_cast<std::size_t>(i) * inner;
                    cplx t = tw[i];
                    for (std::size_t r = 0; r < inner; ++r) row[r] += t * block[r];
                }
            }
        }
        cur = std::move(next);
        dims[static_cast<std::size_t>(axis)] = static_cast<std::size_t>(B);
    }

    LatticeSpectrum S(G.m);
    ivec k(static_cast<std::size_t>(G.m), -K);
    for (std::size_t flat = 0; flat < cur.size(); ++flat) {
        if (cur[flat] != cplx{0.0, 0.0}) S.c.emplace(k, cur[flat]);
        for (int j = G.m - 1; j >= 0; --j) {
            if (k[static_cast<std::size_t>(j)] < K) {
                ++k[static_cast<std::size_t>(j)];
                std::fill(k.begin() + j + 1, k.end(), -K);
                break;
            }
        }
    }
    return S;
}

cplx inner_product(const LatticeSpectrum& S1, const LatticeSpectrum& S2,
                   Measure measure) {
    if (S1.m != S2.m) throw std::invalid_argument("dimension mismatch");
    const auto& small = S1.c.size() <= S2.c.size() ? S1 : S2;
    const auto& large = S1.c.size() <= S2.c.size() ? S2 : S1;
    bool swapped = &small == &S2;
    cplx acc{0.0, 0.0};
    for (const auto& [k, v] : small.c) {
        cplx w = large.at(k);
        if (w == cplx{0.0, 0.0}) continue;
        acc += swapped ? w * std::conj(v) : v * std::conj(w);
    }
    return acc * measure_scale(measure, S1.m);
}

double norm_sq(const LatticeSpectrum& S, Measure measure) {
    double acc = 0.0;
    for (const auto& [k, v] : S.c) acc += std::norm(v);
    return acc * measure_scale(measure, S.m);
}

cplx inner_product(const GridFunction& F, const GridFunction& G,
                   Measure measure) {
    if (F.shape != G.shape) throw std::invalid_argument("shape mismatch");
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < F.values.size(); ++i)
        acc += F.values[i] * std::conj(G.values[i]);
    double scale = F.cell_volume() * measure_scale(measure, F.m) /
                   std::ldexp(1.0, F.m);
    return acc * scale;
}

double norm_sq(const GridFunction& F, Measure measure) {
    double acc = 0.0;
    for (const cplx& v : F.values) acc += std::norm(v);
    double scale = F.cell_volume() * measure_scale(measure, F.m) /
                   std::ldexp(1.0, F.m);
    return acc * scale;
}

}  // namespace ridgekit
