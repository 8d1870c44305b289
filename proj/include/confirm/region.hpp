#pragma once

// One-dimensional parameter-space subsets with exact topological operations.
//
// A RegionSet is either a canonical finite union of intervals over the
// extended reals, or the symbolic DenseCodense set (a set that meets every
// nonempty open subset of the ambient space, as does its complement).
// Hypotheses, confidence regions and the ambient space Theta are all
// RegionSets; the test verdicts reduce to contains/intersects on them.
//
// Endpoints are compared with exact float equality after canonicalization.
// There is no epsilon here: set laws must hold exactly, and statistical
// tolerance belongs to the layers above.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

namespace confirm {

// An extended-real interval endpoint. Infinite endpoints are always open.
struct Endpoint {
    double value = 0.0;
    bool closed = false;

    static Endpoint open(double v);
    static Endpoint closed_at(double v);
    static Endpoint neg_inf();
    static Endpoint pos_inf();

    bool is_infinite() const;
    friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

// Validates the endpoint invariants: finite value or open infinity, no NaN.
// -0.0 is normalized to +0.0 so exact comparison is unambiguous.
Endpoint make_endpoint(double value, bool closed);

// A nonempty interval: lo <= hi, and a degenerate [v, v] must be closed on
// both sides (a single point). Anything else is rejected at construction.
class Interval {
public:
    Interval(Endpoint lo, Endpoint hi);

    static Interval real_line();
    static Interval closed(double lo, double hi);
    static Interval open(double lo, double hi);
    static Interval point(double v);

    const Endpoint& lo() const { return lo_; }
    const Endpoint& hi() const { return hi_; }
    bool is_point() const { return lo_.value == hi_.value; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    Endpoint lo_;
    Endpoint hi_;
};

std::optional<Interval> intersect(const Interval& a, const Interval& b);
bool interval_contains_point(const Interval& iv, double x);

enum class RegionKind { IntervalUnion, DenseCodense };

// A subset of the ambient interval. Interval unions are kept canonical:
// parts sorted, pairwise disjoint, non-adjacent (no two parts whose union is
// a single interval), each clipped to the ambient. Values are immutable
// after construction and safe to share across threads.
class RegionSet {
public:
    // Canonicalizes; parts lying outside the ambient are clipped to it.
    static RegionSet intervals(Interval ambient, std::vector<Interval> parts);
    static RegionSet empty(Interval ambient);
    static RegionSet all(Interval ambient);
    static RegionSet point(Interval ambient, double v);
    static RegionSet dense_codense(Interval ambient);

    RegionKind kind() const { return kind_; }
    const Interval& ambient() const { return ambient_; }
    const std::vector<Interval>& parts() const { return parts_; }

    bool is_empty() const;
    bool is_all() const;

    friend bool operator==(const RegionSet&, const RegionSet&) = default;

private:
    RegionSet(Interval ambient, RegionKind kind, std::vector<Interval> parts);

    Interval ambient_;
    RegionKind kind_;
    std::vector<Interval> parts_;  // empty for DenseCodense
};

// Set algebra, always relative to the region's ambient space.
// Binary operations require both operands to share the same ambient and
// throw std::invalid_argument otherwise.

RegionSet complement(const RegionSet& r);
bool intersects(const RegionSet& a, const RegionSet& b);
bool contains(const RegionSet& a, const RegionSet& b);  // b subset of a

// Topological interior relative to the ambient (subspace topology: a closed
// ambient keeps its own boundary points). DenseCodense has empty interior.
RegionSet interior(const RegionSet& r);
bool has_nonempty_interior(const RegionSet& r);

// A hypothesis is statistically confirmable iff its interior is nonempty.
// Exact when the ambient is connected (a single interval, which it is here
// by construction); the same criterion is applied verbatim to any region.
bool is_confirmable(const RegionSet& h);

// Point membership. Throws for DenseCodense, where membership of specific
// points is undecidable in this symbolic model.
bool contains_point(const RegionSet& r, double x);

std::ostream& operator<<(std::ostream& os, const Endpoint& e);
std::ostream& operator<<(std::ostream& os, const Interval& iv);
std::ostream& operator<<(std::ostream& os, const RegionSet& r);

}  // namespace confirm
