#include "lipone/packing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lipone {

RegionOracle rect_region(Vec2 lo, Vec2 hi) {
    if (!(lo.x < hi.x && lo.y < hi.y)) throw std::invalid_argument("rect_region: degenerate box");
    return RegionOracle{
        [=](Vec2 p) { return lo.x < p.x && p.x < hi.x && lo.y < p.y && p.y < hi.y; },
        [=](Vec2 p) {
            return std::min(std::min(p.x - lo.x, hi.x - p.x), std::min(p.y - lo.y, hi.y - p.y));
        },
        lo, hi};
}

RegionOracle disk_region(Vec2 center, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("disk_region: radius must be positive");
    return RegionOracle{
        [=](Vec2 p) { return dist(p, center) < radius; },
        [=](Vec2 p) { return radius - dist(p, center); },
        Vec2{center.x - radius, center.y - radius}, Vec2{center.x + radius, center.y + radius}};
}

RegionOracle annulus_region(Vec2 center, double r_inner, double r_outer) {
    if (!(0.0 < r_inner && r_inner < r_outer))
        throw std::invalid_argument("annulus_region: need 0 < r_inner < r_outer");
    return RegionOracle{
        [=](Vec2 p) {
            const double d = dist(p, center);
            return r_inner < d && d < r_outer;
        },
        [=](Vec2 p) {
            const double d = dist(p, center);
            return std::min(d - r_inner, r_outer - d);
        },
        Vec2{center.x - r_outer, center.y - r_outer}, Vec2{center.x + r_outer, center.y + r_outer}};
}

RegionOracle segment_region(Vec2 a, Vec2 b) {
    return RegionOracle{
        [](Vec2) { return false; },
        [](Vec2) { return 0.0; },
        Vec2{std::min(a.x, b.x), std::min(a.y, b.y)}, Vec2{std::max(a.x, b.x), std::max(a.y, b.y)}};
}

namespace {

// Dyadic center-grid spacing for radius 1/k: the largest power of two
// not exceeding 1/(4k).
double center_spacing(int k) {
    double s = 1.0;
    while (s > 1.0 / (4.0 * k)) s /= 2.0;
    return s;
}

}  // namespace

PackResult pack_regular_closed(const RegionOracle& region, const BallBasisSpec& basis, int budget,
                               int deficit_resolution) {
    if (budget < 1) throw std::invalid_argument("pack: budget must be >= 1");
    if (basis.k_min < 1 || basis.k_max < basis.k_min)
        throw std::invalid_argument("pack: malformed basis spec");

    PackResult out;
    for (int k = basis.k_min; k <= basis.k_max && int(out.family.size()) < budget; ++k) {
        const double r = 1.0 / k;
        const double s = center_spacing(k);
        // lexicographic (x, y) walk of the dyadic center grid
        const std::int64_t ix_lo = std::int64_t(std::ceil(region.box_lo.x / s));
        const std::int64_t ix_hi = std::int64_t(std::floor(region.box_hi.x / s));
        const std::int64_t iy_lo = std::int64_t(std::ceil(region.box_lo.y / s));
        const std::int64_t iy_hi = std::int64_t(std::floor(region.box_hi.y / s));
        for (std::int64_t ix = ix_lo; ix <= ix_hi && int(out.family.size()) < budget; ++ix)
            for (std::int64_t iy = iy_lo; iy <= iy_hi && int(out.family.size()) < budget; ++iy) {
                const Vec2 c{ix * s, iy * s};
                if (!(region.dist_to_complement(c) >= r)) continue;
                if (out.family.find_open(c) >= 0) continue;  // cheap reject
                if (!out.family.disjoint_from_all(c, r)) continue;
                out.family.push(Ball{c, r});
            }
    }
    if (out.family.empty()) {
        out.empty_interior = true;
        out.diagnostic =
            "no basis ball fits inside the region interior; the region is not "
            "regular closed in any nondegenerate sense";
    }
    out.deficit_resolution = deficit_resolution;
    out.deficit = coverage_deficit(region, out.family, deficit_resolution);
    return out;
}

double coverage_deficit(const RegionOracle& region, const BallFamily& family, int resolution) {
    if (resolution < 2) throw std::invalid_argument("coverage_deficit: resolution too small");
    const double wx = region.box_hi.x - region.box_lo.x;
    const double wy = region.box_hi.y - region.box_lo.y;
    const double px = wx / resolution, py = wy / resolution;
    std::int64_t uncovered = 0;
    for (int j = 0; j < resolution; ++j)
        for (int i = 0; i < resolution; ++i) {
            const Vec2 p{region.box_lo.x + (i + 0.5) * px, region.box_lo.y + (j + 0.5) * py};
            if (!region.interior_contains(p)) continue;
            if (family.find_open(p) < 0) ++uncovered;
        }
    return double(uncovered) * px * py;
}

}  // namespace lipone
