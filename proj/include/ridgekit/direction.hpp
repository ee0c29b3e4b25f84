#pragma once

#include <utility>
#include <vector>

#include "ridgekit/common.hpp"

namespace ridgekit {

/** A rational direction through the origin, stored by its canonical
 * representative: entries share no common factor and the first nonzero entry
 * is positive. Two integer vectors describe the same class exactly when one
 * is a nonzero integer multiple of the other.
 */
class DirectionClass {
public:
    /** Canonicalize an integer vector.
     *
     * Throws std::invalid_argument("not a direction") for the zero vector or
     * an empty vector.
     */
    static DirectionClass canonical(const ivec& w);

    const ivec& coords() const { return w_; }
    int dim() const { return static_cast<int>(w_.size()); }

    bool operator==(const DirectionClass& o) const { return w_ == o.w_; }
    bool operator!=(const DirectionClass& o) const { return w_ != o.w_; }
    bool operator<(const DirectionClass& o) const { return w_ < o.w_; }

private:
    explicit DirectionClass(ivec w) : w_(std::move(w)) {}
    ivec w_;
};

/** True when a and b generate the same line (one is a nonzero integer or
 * rational multiple of the other). Throws std::invalid_argument on dimension
 * mismatch or when either vector is zero.
 */
bool equivalent(const ivec& a, const ivec& b);

/** True when k lies on the integer line Z*w of the class (k == 0 counts). */
bool on_line(const ivec& k, const DirectionClass& w);

/** A finite set of pairwise distinct direction classes in one dimension m. */
class DirectionSet {
public:
    /** Canonicalize every entry; throws std::invalid_argument on an empty
     * list, mixed dimensions, or duplicate classes.
     */
    static DirectionSet of(const std::vector<ivec>& raw);
    static DirectionSet of_classes(std::vector<DirectionClass> classes);

    int dim() const { return classes_.front().dim(); }
    std::size_t size() const { return classes_.size(); }
    const DirectionClass& operator[](std::size_t i) const { return classes_[i]; }
    auto begin() const { return classes_.begin(); }
    auto end() const { return classes_.end(); }
    bool contains(const DirectionClass& w) const;

private:
    explicit DirectionSet(std::vector<DirectionClass> classes)
        : classes_(std::move(classes)) {}
    std::vector<DirectionClass> classes_;
};

/** All direction classes with a representative in [-N,N]^m \ {0}, in
 * lexicographic order of their canonical coordinates.
 */
std::vector<DirectionClass> enumerate_primitive(int m, int N);

/** Two entries of the checked list whose lines share the nonzero lattice
 * point `point`. Canonical classes never overlap unless they are equal, so
 * this only fires on caller-constructed duplicates.
 */
struct LineOverlap {
    ivec point;
    std::size_t first = 0;
    std::size_t second = 0;
};

/** Outcome of the box-restricted completeness check. */
struct CompletenessReport {
    /** True exactly when both uncovered and overlaps are empty. */
    bool complete_on_box = false;
    /** Lattice points of [-N,N]^m \ {0} on no line of the set, in scan order. */
    std::vector<ivec> uncovered;
    std::vector<LineOverlap> overlaps;
    int box_radius = 0;
};

/** Check whether the classes cover every nonzero lattice point of the box
 * [-N,N]^m, and whether any two of them overlap. Works on an arbitrary list
 * so duplicate entries are reportable.
 */
CompletenessReport is_complete(const std::vector<DirectionClass>& W, int m,
                               int N = 8);

inline CompletenessReport is_complete(const DirectionSet& W, int N = 8) {
    return is_complete(std::vector<DirectionClass>(W.begin(), W.end()),
                       W.dim(), N);
}

/** The set of all classes meeting the box: complete on [-N,N]^m by
 * construction, with pairwise disjoint lines.
 */
DirectionSet generate_complete(int m, int N);

}  // namespace ridgekit
