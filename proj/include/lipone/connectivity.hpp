#pragma once

#include <string>

#include <json.hpp>

#include "lipone/interval_set.hpp"
#include "lipone/tent.hpp"

namespace lipone {

struct ConnectivityReport {
    int resolution = 0;       // pixels across the base box (margin excluded)
    int components = 0;       // 4-connected complement components, outside included
    int components_doubled = 0;
    bool stable = false;      // verdict unchanged when the resolution doubles
    std::string verdict;      // "connected" / "disconnected" / "unstable"
    std::string note;
};

/// Rasterizes the product set A x A over its bounding box plus a margin
/// and flood-fills the complement pixels (pixel-center membership,
/// 4-connectivity). The verdict of the base run must survive one
/// resolution doubling, otherwise it is reported unstable. Finite-stage
/// raster evidence, not a proof. The resolution must be a multiple of
/// the number of intervals in A.
ConnectivityReport complement_connected_product(const IntervalSet& a, int resolution);

/// Control case with a disconnected complement (inside plus outside).
ConnectivityReport complement_connected_annulus(Vec2 center, double r_inner, double r_outer,
                                                int resolution);

nlohmann::ordered_json to_json(const ConnectivityReport& r);

}  // namespace lipone
