#include "lipone/measure_primitive.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lipone {

namespace {

double tail_after_stage(const CantorSet& c, int stage) {
    auto total = c.rule().weighted_total();
    if (!total || !std::isfinite(*total))
        throw std::domain_error("MeasurePrimitive: Cantor rule needs a summable tail");
    // mass removed after stage s = total - partial_s = stage measure - full measure
    return c.stage_measure(stage) - (1.0 - *total);
}

}  // namespace

MeasurePrimitive::MeasurePrimitive(const IntervalSet& set, double base)
    : set_(set), base_(base), error_bound_(0.0) {
    if (!std::isfinite(base)) throw std::invalid_argument("MeasurePrimitive: non-finite base");
    cum_.resize(set_.size() + 1, 0.0);
    for (std::size_t i = 0; i < set_.size(); ++i)
        cum_[i + 1] = cum_[i] + set_.intervals()[i].length();
    base_cum_ = cumulative(base_);
}

MeasurePrimitive::MeasurePrimitive(const CantorSet& set, int stage, double base)
    : MeasurePrimitive(set.stage(stage), base) {
    error_bound_ = tail_after_stage(set, stage);
}

double MeasurePrimitive::cumulative(double x) const {
    const auto& iv = set_.intervals();
    // first interval with hi >= x
    auto it = std::lower_bound(iv.begin(), iv.end(), x,
                               [](const Interval& a, double v) { return a.hi < v; });
    const std::size_t i = std::size_t(it - iv.begin());
    if (i == iv.size()) return cum_.back();
    return cum_[i] + std::max(0.0, x - iv[i].lo);
}

double MeasurePrimitive::eval(double x) const {
    if (!std::isfinite(x)) throw std::invalid_argument("MeasurePrimitive: non-finite argument");
    return cumulative(x) - base_cum_;
}

}  // namespace lipone
