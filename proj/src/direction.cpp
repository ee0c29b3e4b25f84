#include "ridgekit/direction.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ridgekit {
namespace {

bool is_zero(const ivec& w) {
    return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

int gcd_all(const ivec& w) {
    int g = 0;
    for (int x : w) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

/** Walk the multi-index over [-N,N]^m in lexicographic order. */
bool advance(ivec& k, int N) {
    for (int j = static_cast<int>(k.size()) - 1; j >= 0; --j) {
        if (k[j] < N) {
            ++k[j];
            std::fill(k.begin() + j + 1, k.end(), -N);
            return true;
        }
    }
    return false;
}

}  // namespace

DirectionClass DirectionClass::canonical(const ivec& w) {
    if (w.empty() || is_zero(w))
        throw std::invalid_argument("not a direction");
    ivec c = w;
    int g = gcd_all(c);
    for (int& x : c) x /= g;
    auto first = std::find_if(c.begin(), c.end(), [](int x) { return x != 0; });
    if (*first < 0)
        for (int& x : c) x = -x;
    return DirectionClass(std::move(c));
}

bool equivalent(const ivec& a, const ivec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dimension mismatch");
    return DirectionClass::canonical(a) == DirectionClass::canonical(b);
}

bool on_line(const ivec& k, const DirectionClass& w) {
    const ivec& d = w.coords();
    if (k.size() != d.size())
        throw std::invalid_argument("dimension mismatch");
    if (is_zero(k)) return true;
    // k == t*d requires t = k_j / d_j at the first nonzero coordinate of d,
    // then exact agreement everywhere.
    std::size_t j0 = 0;
    while (d[j0] == 0) {
        if (k[j0] != 0) return false;
        ++j0;
    }
    if (k[j0] % d[j0] != 0) return false;
    long long t = k[j0] / d[j0];
    if (t == 0) return false;
    for (std::size_t j = 0; j < d.size(); ++j)
        if (static_cast<long long>(k[j]) != t * d[j]) return false;
    return true;
}

DirectionSet DirectionSet::of(const std::vector<ivec>& raw) {
    std::vector<DirectionClass> classes;
    classes.reserve(raw.size());
    for (const ivec& w : raw) classes.push_back(DirectionClass::canonical(w));
    return of_classes(std::move(classes));
}

DirectionSet DirectionSet::of_classes(std::vector<DirectionClass> classes) {
    if (classes.empty())
        throw std::invalid_argument("direction set is empty");
    int m = classes.front().dim();
    for (const auto& w : classes)
        if (w.dim() != m) throw std::invalid_argument("dimension mismatch");
    std::set<DirectionClass> seen;
    for (const auto& w : classes)
        if (!seen.insert(w).second)
            throw std::invalid_argument("duplicate direction class");
    return DirectionSet(std::move(classes));
}

bool DirectionSet::contains(const DirectionClass& w) const {
    return std::find(classes_.begin(), classes_.end(), w) != classes_.end();
}

std::vector<DirectionClass> enumerate_primitive(int m, int N) {
    if (m < 1 || N < 1)
        throw std::invalid_argument("m and N must be positive");
    // A class meets the box exactly when its canonical representative does
    // (any other representative is a |t| >= 1 multiple), so scanning
    // canonical vectors directly yields each class once, already sorted.
    std::vector<DirectionClass> out;
    ivec k(static_cast<std::size_t>(m), -N);
    do {
        if (is_zero(k)) continue;
        if (gcd_all(k) != 1) continue;
        auto first =
            std::find_if(k.begin(), k.end(), [](int x) { return x != 0; });
        if (*first < 0) continue;
        out.push_back(DirectionClass::canonical(k));
    } while (advance(k, N));
    return out;
}

CompletenessReport is_complete(const std::vector<DirectionClass>& W, int m,
                               int N) {
    if (m < 1 || N < 1)
        throw std::invalid_argument("m and N must be positive");
    for (const auto& w : W)
        if (w.dim() != m) throw std::invalid_argument("dimension mismatch");
    CompletenessReport report;
    report.box_radius = N;
    ivec k(static_cast<std::size_t>(m), -N);
    do {
        if (is_zero(k)) continue;
        bool covered = std::any_of(W.begin(), W.end(), [&](const auto& w) {
            return on_line(k, w);
        });
        if (!covered) report.uncovered.push_back(k);
    } while (advance(k, N));
    for (std::size_t i = 0; i < W.size(); ++i)
        for (std::size_t j = i + 1; j < W.size(); ++j)
            if (W[i] == W[j])
                report.overlaps.push_back({W[i].coords(), i, j});
    report.complete_on_box =
        report.uncovered.empty() && report.overlaps.empty();
    return report;
}

DirectionSet generate_complete(int m, int N) {
    return DirectionSet::of_classes(enumerate_primitive(m, N));
}

}  // namespace ridgekit
