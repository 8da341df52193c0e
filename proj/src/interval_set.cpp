#include "lipone/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lipone {

IntervalSet IntervalSet::from_pairs(const std::vector<std::pair<double, double>>& raw) {
    std::vector<Interval> iv;
    iv.reserve(raw.size());
    for (const auto& [lo, hi] : raw) iv.push_back(Interval{lo, hi});
    return from_intervals(std::move(iv));
}

IntervalSet IntervalSet::from_intervals(std::vector<Interval> raw) {
    for (const Interval& iv : raw) {
        if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi))
            throw std::invalid_argument("IntervalSet: non-finite endpoint");
        if (iv.lo > iv.hi)
            throw std::invalid_argument("IntervalSet: lo > hi");
    }
    std::sort(raw.begin(), raw.end(),
              [](const Interval& a, const Interval& b) {
                  return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
              });

    IntervalSet out;
    for (const Interval& iv : raw) {
        if (!out.intervals_.empty() && iv.lo <= out.intervals_.back().hi) {
            // overlapping or touching: merge
            out.intervals_.back().hi = std::max(out.intervals_.back().hi, iv.hi);
        } else {
            out.intervals_.push_back(iv);
        }
    }
    return out;
}

double IntervalSet::measure() const {
    double total = 0.0;
    for (const Interval& iv : intervals_) total += iv.length();
    return total;
}

bool IntervalSet::contains(double x) const {
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                               [](double v, const Interval& iv) { return v < iv.lo; });
    if (it == intervals_.begin()) return false;
    return std::prev(it)->contains(x);
}

double IntervalSet::distance(double x) const {
    if (intervals_.empty()) return std::numeric_limits<double>::infinity();
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                               [](double v, const Interval& iv) { return v < iv.lo; });
    double best = std::numeric_limits<double>::infinity();
    if (it != intervals_.end()) best = std::min(best, it->lo - x);
    if (it != intervals_.begin()) {
        const Interval& left = *std::prev(it);
        best = std::min(best, left.hi >= x ? 0.0 : x - left.hi);
    }
    return best;
}

bool IntervalSet::covers(const IntervalSet& other) const {
    std::size_t i = 0;
    for (const Interval& b : other.intervals_) {
        while (i < intervals_.size() && intervals_[i].hi < b.lo) ++i;
        if (i == intervals_.size()) return false;
        if (!(intervals_[i].lo <= b.lo && b.hi <= intervals_[i].hi)) return false;
    }
    return true;
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    const auto& av = a.intervals();
    const auto& bv = b.intervals();
    while (i < av.size() && j < bv.size()) {
        const double lo = std::max(av[i].lo, bv[j].lo);
        const double hi = std::min(av[i].hi, bv[j].hi);
        if (lo <= hi) out.push_back(Interval{lo, hi});
        // advance whichever interval ends first
        if (av[i].hi < bv[j].hi)
            ++i;
        else
            ++j;
    }
    // pieces come out sorted and separated by gaps of the operands
    return IntervalSet::from_intervals(std::move(out));
}

double intersection_measure(const IntervalSet& a, double lo, double hi) {
    double total = 0.0;
    for (const Interval& iv : a.intervals()) {
        if (iv.lo > hi) break;
        const double l = std::max(iv.lo, lo);
        const double h = std::min(iv.hi, hi);
        if (l < h) total += h - l;
    }
    return total;
}

}  // namespace lipone
