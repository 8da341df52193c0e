#pragma once

#include <vector>

#include "lipone/cantor_set.hpp"
#include "lipone/interval_set.hpp"

namespace lipone {

/// The monotone 1-Lipschitz antiderivative of a closed set F:
/// f(x) = measure([a, x] ∩ F) for x >= a, and -measure([x, a] ∩ F)
/// for x < a, so f stays monotone on all of the line.
///
/// For an IntervalSet the evaluation is exact. For a CantorSet the set
/// is frozen at an evaluation stage s: values are the exact interval
/// measure against the stage-s approximation C_s, and error_bound()
/// gives the uniform one-sided gap to the infinite-stage set,
/// f_true(x) in [f(x) - error_bound, f(x)].
class MeasurePrimitive {
public:
    MeasurePrimitive(const IntervalSet& set, double base);
    MeasurePrimitive(const CantorSet& set, int stage, double base);

    double base() const { return base_; }
    double error_bound() const { return error_bound_; }
    const IntervalSet& set_at_stage() const { return set_; }

    double eval(double x) const;
    double operator()(double x) const { return eval(x); }

private:
    double cumulative(double x) const;  // measure((-inf, x] ∩ F)

    IntervalSet set_;
    double base_ = 0.0;
    double base_cum_ = 0.0;
    double error_bound_ = 0.0;
    std::vector<double> cum_;  // cum_[i] = measure of intervals 0..i-1
};

}  // namespace lipone
