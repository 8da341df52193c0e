#pragma once

#include <functional>
#include <string>

#include "lipone/tent.hpp"

namespace lipone {

/// A regular closed region given as an oracle pair: an interior
/// membership test and a lower bound on the distance from a point to
/// the complement (exact for the stock regions below).
struct RegionOracle {
    std::function<bool(Vec2)> interior_contains;
    std::function<double(Vec2)> dist_to_complement;
    Vec2 box_lo, box_hi;  // bounding box enclosing the region
};

RegionOracle rect_region(Vec2 lo, Vec2 hi);
RegionOracle disk_region(Vec2 center, double radius);
RegionOracle annulus_region(Vec2 center, double r_inner, double r_outer);
/// Degenerate control case: a segment has empty interior.
RegionOracle segment_region(Vec2 a, Vec2 b);

/// Basis of candidate balls B(a, 1/k): radii 1/k for k = k_min..k_max,
/// enumerated by decreasing radius; centers for radius 1/k walk a dyadic
/// grid of spacing about 1/(4k) across the bounding box in row-major
/// order.
struct BallBasisSpec {
    int k_min = 1;
    int k_max = 256;
};

struct PackResult {
    BallFamily family;
    bool empty_interior = false;  // nothing fit anywhere in the basis
    std::string diagnostic;
    double deficit = 0.0;         // uncovered region measure, reference grid
    int deficit_resolution = 0;
};

/// Greedy selection: a basis ball is accepted iff it lies inside the
/// interior of the region and is disjoint from everything accepted
/// before it; stops once `budget` balls are accepted (or the basis is
/// exhausted). The result carries the grid-estimated measure of the
/// uncovered remainder.
PackResult pack_regular_closed(const RegionOracle& region, const BallBasisSpec& basis, int budget,
                               int deficit_resolution = 1024);

/// Grid-estimated measure of (region minus the union of the family),
/// sampled at resolution^2 pixel centers across the bounding box.
double coverage_deficit(const RegionOracle& region, const BallFamily& family, int resolution);

}  // namespace lipone
