#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace lipone {

/// One closed interval [lo, hi] with lo <= hi. Degenerate intervals
/// (lo == hi) represent isolated points and carry measure zero.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    bool is_point() const { return lo == hi; }
    bool contains(double x) const { return lo <= x && x <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of disjoint closed intervals, sorted by left endpoint.
/// Construction normalizes: intervals are sorted and overlapping or
/// touching intervals are merged, so adjacent members satisfy
/// hi_i < lo_{i+1}.
class IntervalSet {
public:
    IntervalSet() = default;

    /// Builds a normalized set from arbitrary (lo, hi) pairs.
    /// Throws std::invalid_argument if some pair has lo > hi or a
    /// non-finite endpoint.
    static IntervalSet from_pairs(const std::vector<std::pair<double, double>>& raw);

    /// Same, from already-constructed intervals.
    static IntervalSet from_intervals(std::vector<Interval> raw);

    const std::vector<Interval>& intervals() const { return intervals_; }
    std::size_t size() const { return intervals_.size(); }
    bool empty() const { return intervals_.empty(); }

    /// Total length, additive over the disjoint members.
    double measure() const;

    bool contains(double x) const;

    /// Distance from x to the set (0 if x is a member, +inf for the
    /// empty set).
    double distance(double x) const;

    /// True if every interval of other is covered by a single interval
    /// of this set.
    bool covers(const IntervalSet& other) const;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<Interval> intervals_;
};

/// Exact intersection of two interval sets.
IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);

/// Measure of the intersection without materializing it.
double intersection_measure(const IntervalSet& a, double lo, double hi);

}  // namespace lipone
