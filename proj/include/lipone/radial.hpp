#pragma once

#include "lipone/measure_primitive.hpp"
#include "lipone/tent.hpp"

namespace lipone {

/// f(a) = g(||a||) on the plane for a 1D profile g. Inherits the
/// profile's Lipschitz constant (the norm map is 1-Lipschitz) and its
/// error bracket, and is exactly rotation invariant: the value depends
/// on a only through ||a||.
class RadialComposition {
public:
    explicit RadialComposition(MeasurePrimitive profile) : profile_(std::move(profile)) {}

    const MeasurePrimitive& profile() const { return profile_; }
    double error_bound() const { return profile_.error_bound(); }

    double eval(Vec2 a) const { return profile_.eval(a.norm()); }
    double operator()(Vec2 a) const { return eval(a); }

private:
    MeasurePrimitive profile_;
};

}  // namespace lipone
