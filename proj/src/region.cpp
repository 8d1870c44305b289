#include "confirm/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace confirm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Endpoint order helpers. At equal values a closed lower endpoint starts
// earlier than an open one, and a closed upper endpoint ends later.
bool lo_before(const Endpoint& a, const Endpoint& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.closed && !b.closed;
}

Endpoint max_hi(const Endpoint& a, const Endpoint& b) {
    if (a.value != b.value) return a.value > b.value ? a : b;
    return Endpoint{a.value, a.closed || b.closed};
}

bool valid_interval(const Endpoint& lo, const Endpoint& hi) {
    if (lo.value < hi.value) return true;
    return lo.value == hi.value && lo.closed && hi.closed;
}

}  // namespace

Endpoint make_endpoint(double value, bool closed) {
    if (std::isnan(value)) throw std::invalid_argument("endpoint value is NaN");
    if (std::isinf(value) && closed)
        throw std::invalid_argument("infinite endpoint cannot be closed");
    if (value == 0.0) value = 0.0;  // normalize -0.0
    return Endpoint{value, closed};
}

Endpoint Endpoint::open(double v) { return make_endpoint(v, false); }
Endpoint Endpoint::closed_at(double v) { return make_endpoint(v, true); }
Endpoint Endpoint::neg_inf() { return Endpoint{-kInf, false}; }
Endpoint Endpoint::pos_inf() { return Endpoint{kInf, false}; }
bool Endpoint::is_infinite() const { return std::isinf(value); }

Interval::Interval(Endpoint lo, Endpoint hi) : lo_(lo), hi_(hi) {
    lo_ = make_endpoint(lo.value, lo.closed);
    hi_ = make_endpoint(hi.value, hi.closed);
    if (!valid_interval(lo_, hi_))
        throw std::invalid_argument("empty or inverted interval");
}

Interval Interval::real_line() { return Interval(Endpoint::neg_inf(), Endpoint::pos_inf()); }
Interval Interval::closed(double lo, double hi) {
    return Interval(Endpoint::closed_at(lo), Endpoint::closed_at(hi));
}
Interval Interval::open(double lo, double hi) {
    return Interval(Endpoint::open(lo), Endpoint::open(hi));
}
Interval Interval::point(double v) { return closed(v, v); }

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    Endpoint lo = a.lo();
    if (b.lo().value > lo.value || (b.lo().value == lo.value && !b.lo().closed))
        lo = Endpoint{b.lo().value, lo.value == b.lo().value ? (lo.closed && b.lo().closed)
                                                             : b.lo().closed};
    Endpoint hi = a.hi();
    if (b.hi().value < hi.value || (b.hi().value == hi.value && !b.hi().closed))
        hi = Endpoint{b.hi().value, hi.value == b.hi().value ? (hi.closed && b.hi().closed)
                                                             : b.hi().closed};
    if (!valid_interval(lo, hi)) return std::nullopt;
    return Interval(lo, hi);
}

bool interval_contains_point(const Interval& iv, double x) {
    const bool above_lo = x > iv.lo().value || (iv.lo().closed && x == iv.lo().value);
    const bool below_hi = x < iv.hi().value || (iv.hi().closed && x == iv.hi().value);
    return above_lo && below_hi;
}

RegionSet::RegionSet(Interval ambient, RegionKind kind, std::vector<Interval> parts)
    : ambient_(ambient), kind_(kind), parts_(std::move(parts)) {}

RegionSet RegionSet::intervals(Interval ambient, std::vector<Interval> parts) {
    std::vector<Interval> clipped;
    clipped.reserve(parts.size());
    for (const Interval& p : parts)
        if (auto c = intersect(p, ambient)) clipped.push_back(*c);

    std::sort(clipped.begin(), clipped.end(), [](const Interval& a, const Interval& b) {
        if (a.lo() != b.lo()) return lo_before(a.lo(), b.lo());
        return lo_before(b.hi(), a.hi());  // longer first among equal starts
    });

    std::vector<Interval> merged;
    for (const Interval& p : clipped) {
        if (!merged.empty()) {
            const Interval& cur = merged.back();
            const bool touches =
                p.lo().value < cur.hi().value ||
                (p.lo().value == cur.hi().value && (p.lo().closed || cur.hi().closed));
            if (touches) {
                merged.back() = Interval(cur.lo(), max_hi(cur.hi(), p.hi()));
                continue;
            }
        }
        merged.push_back(p);
    }
    return RegionSet(ambient, RegionKind::IntervalUnion, std::move(merged));
}

RegionSet RegionSet::empty(Interval ambient) {
    return RegionSet(ambient, RegionKind::IntervalUnion, {});
}

RegionSet RegionSet::all(Interval ambient) {
    return RegionSet(ambient, RegionKind::IntervalUnion, {ambient});
}

RegionSet RegionSet::point(Interval ambient, double v) {
    return intervals(ambient, {Interval::point(v)});
}

RegionSet RegionSet::dense_codense(Interval ambient) {
    return RegionSet(ambient, RegionKind::DenseCodense, {});
}

bool RegionSet::is_empty() const {
    return kind_ == RegionKind::IntervalUnion && parts_.empty();
}

bool RegionSet::is_all() const {
    return kind_ == RegionKind::IntervalUnion && parts_.size() == 1 && parts_[0] == ambient_;
}

namespace {

void require_same_ambient(const RegionSet& a, const RegionSet& b) {
    if (!(a.ambient() == b.ambient()))
        throw std::invalid_argument("regions have different ambient spaces");
}

bool parts_intersect(const Interval& a, const Interval& b) {
    const bool a_starts_ok =
        a.lo().value < b.hi().value ||
        (a.lo().value == b.hi().value && a.lo().closed && b.hi().closed);
    const bool b_starts_ok =
        b.lo().value < a.hi().value ||
        (b.lo().value == a.hi().value && b.lo().closed && a.hi().closed);
    return a_starts_ok && b_starts_ok;
}

bool part_covers(const Interval& outer, const Interval& inner) {
    const bool lo_ok = outer.lo().value < inner.lo().value ||
                       (outer.lo().value == inner.lo().value &&
                        (outer.lo().closed || !inner.lo().closed));
    const bool hi_ok = outer.hi().value > inner.hi().value ||
                       (outer.hi().value == inner.hi().value &&
                        (outer.hi().closed || !inner.hi().closed));
    return lo_ok && hi_ok;
}

}  // namespace

RegionSet complement(const RegionSet& r) {
    if (r.kind() == RegionKind::DenseCodense)
        return RegionSet::dense_codense(r.ambient());

    // Walk the gaps between consecutive parts, plus the two ambient ends.
    std::vector<Interval> gaps;
    double cur_v = r.ambient().lo().value;
    bool cur_c = r.ambient().lo().closed;
    for (const Interval& p : r.parts()) {
        const double gap_hi_v = p.lo().value;
        const bool gap_hi_c = !p.lo().closed;
        if (cur_v < gap_hi_v || (cur_v == gap_hi_v && cur_c && gap_hi_c))
            gaps.push_back(Interval(Endpoint{cur_v, cur_c}, Endpoint{gap_hi_v, gap_hi_c}));
        cur_v = p.hi().value;
        cur_c = !p.hi().closed;
    }
    const double end_v = r.ambient().hi().value;
    const bool end_c = r.ambient().hi().closed;
    if (cur_v < end_v || (cur_v == end_v && cur_c && end_c))
        gaps.push_back(Interval(Endpoint{cur_v, cur_c}, Endpoint{end_v, end_c}));
    return RegionSet::intervals(r.ambient(), std::move(gaps));
}

bool intersects(const RegionSet& a, const RegionSet& b) {
    require_same_ambient(a, b);
    // The symbolic dense set meets every nonempty region; pointwise
    // membership is undecidable, so containment below stays conservative.
    if (a.kind() == RegionKind::DenseCodense) return !b.is_empty();
    if (b.kind() == RegionKind::DenseCodense) return !a.is_empty();

    auto ia = a.parts().begin();
    auto ib = b.parts().begin();
    while (ia != a.parts().end() && ib != b.parts().end()) {
        if (parts_intersect(*ia, *ib)) return true;
        if (ia->hi().value < ib->hi().value ||
            (ia->hi().value == ib->hi().value && !ia->hi().closed))
            ++ia;
        else
            ++ib;
    }
    return false;
}

bool contains(const RegionSet& a, const RegionSet& b) {
    require_same_ambient(a, b);
    if (b.is_empty()) return true;
    // Only the empty set is provably inside the symbolic dense set, and the
    // dense set is provably inside only the full ambient.
    if (a.kind() == RegionKind::DenseCodense) return false;
    if (b.kind() == RegionKind::DenseCodense) return a.is_all();

    // Canonical parts are separated, so each part of b must sit inside a
    // single part of a.
    auto ia = a.parts().begin();
    for (const Interval& pb : b.parts()) {
        while (ia != a.parts().end() &&
               (ia->hi().value < pb.lo().value ||
                (ia->hi().value == pb.lo().value && !(ia->hi().closed && pb.lo().closed))))
            ++ia;
        if (ia == a.parts().end() || !part_covers(*ia, pb)) return false;
    }
    return true;
}

RegionSet interior(const RegionSet& r) {
    if (r.kind() == RegionKind::DenseCodense) return RegionSet::empty(r.ambient());

    const Interval& amb = r.ambient();
    std::vector<Interval> out;
    for (const Interval& p : r.parts()) {
        if (p.is_point()) {
            // A singleton is open only in a degenerate one-point ambient.
            if (amb.is_point()) out.push_back(p);
            continue;
        }
        // Subspace topology: an endpoint survives only where the part reaches
        // a closed ambient boundary it actually contains.
        const bool lo_c = p.lo().closed && p.lo().value == amb.lo().value && amb.lo().closed;
        const bool hi_c = p.hi().closed && p.hi().value == amb.hi().value && amb.hi().closed;
        out.push_back(Interval(Endpoint{p.lo().value, lo_c}, Endpoint{p.hi().value, hi_c}));
    }
    return RegionSet::intervals(amb, std::move(out));
}

bool has_nonempty_interior(const RegionSet& r) { return !interior(r).is_empty(); }

bool is_confirmable(const RegionSet& h) { return has_nonempty_interior(h); }

bool contains_point(const RegionSet& r, double x) {
    if (r.kind() == RegionKind::DenseCodense)
        throw std::invalid_argument("point membership in a dense-codense set is undecidable");
    for (const Interval& p : r.parts()) {
        if (x < p.lo().value) return false;
        if (interval_contains_point(p, x)) return true;
    }
    return false;
}

std::ostream& operator<<(std::ostream& os, const Endpoint& e) {
    return os << e.value << (e.closed ? "]" : ")");
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
    os << (iv.lo().closed ? '[' : '(') << iv.lo().value << ", " << iv.hi().value
       << (iv.hi().closed ? ']' : ')');
    return os;
}

std::ostream& operator<<(std::ostream& os, const RegionSet& r) {
    if (r.kind() == RegionKind::DenseCodense) return os << "dense-codense";
    if (r.parts().empty()) return os << "{}";
    bool first = true;
    for (const Interval& p : r.parts()) {
        if (!first) os << " u ";
        os << p;
        first = false;
    }
    return os;
}

}  // namespace confirm
