#include "lipone/connectivity.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace lipone {

namespace {

// Counts 4-connected components among the "true" cells of an nx x ny mask.
int count_components(const std::vector<char>& mask, int nx, int ny) {
    std::vector<char> seen(mask.size(), 0);
    std::vector<int> stack;
    int components = 0;
    for (int start = 0; start < nx * ny; ++start) {
        if (!mask[start] || seen[start]) continue;
        ++components;
        stack.push_back(start);
        seen[start] = 1;
        while (!stack.empty()) {
            const int cur = stack.back();
            stack.pop_back();
            const int i = cur % nx, j = cur / nx;
            const int nbr[4] = {i > 0 ? cur - 1 : -1, i + 1 < nx ? cur + 1 : -1,
                                j > 0 ? cur - nx : -1, j + 1 < ny ? cur + nx : -1};
            for (int nb : nbr)
                if (nb >= 0 && mask[nb] && !seen[nb]) {
                    seen[nb] = 1;
                    stack.push_back(nb);
                }
        }
    }
    return components;
}

// Complement components of {(x, y) : in_x(x) and in_y(y)} over
// [lo, hi]^2 extended by margin_px pixels on every side.
int complement_components(const std::function<bool(double)>& member, double lo, double hi,
                          int resolution) {
    const double p = (hi - lo) / resolution;
    const int margin_px = std::max(1, resolution / 8);
    const int n = resolution + 2 * margin_px;
    std::vector<char> axis(n);
    for (int i = 0; i < n; ++i) {
        const double c = lo + (i - margin_px + 0.5) * p;
        axis[i] = member(c) ? 1 : 0;
    }
    std::vector<char> complement(std::size_t(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) complement[std::size_t(j) * n + i] = !(axis[i] && axis[j]);
    return count_components(complement, n, n);
}

int annulus_complement_components(Vec2 center, double r_inner, double r_outer, int resolution) {
    const double lo_x = center.x - r_outer, lo_y = center.y - r_outer;
    const double p = (2.0 * r_outer) / resolution;
    const int margin_px = std::max(1, resolution / 8);
    const int n = resolution + 2 * margin_px;
    std::vector<char> complement(std::size_t(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const Vec2 q{lo_x + (i - margin_px + 0.5) * p, lo_y + (j - margin_px + 0.5) * p};
            const double d = dist(q, center);
            complement[std::size_t(j) * n + i] = !(r_inner <= d && d <= r_outer);
        }
    return count_components(complement, n, n);
}

ConnectivityReport finish(int resolution, int base, int doubled) {
    ConnectivityReport rep;
    rep.resolution = resolution;
    rep.components = base;
    rep.components_doubled = doubled;
    rep.stable = base == doubled;
    if (!rep.stable)
        rep.verdict = "unstable";
    else
        rep.verdict = base == 1 ? "connected" : "disconnected";
    rep.note = "raster flood-fill evidence at finite resolution, not a proof";
    return rep;
}

}  // namespace

ConnectivityReport complement_connected_product(const IntervalSet& a, int resolution) {
    if (a.empty()) throw std::invalid_argument("connectivity: empty set");
    if (resolution < 2) throw std::invalid_argument("connectivity: resolution too small");
    if (resolution % int(a.size()) != 0)
        throw std::invalid_argument(
            "connectivity: resolution must be a multiple of the stage grid");
    const double lo = a.intervals().front().lo;
    const double hi = a.intervals().back().hi;
    if (!(lo < hi)) throw std::invalid_argument("connectivity: degenerate set");
    auto member = [&](double x) { return a.contains(x); };
    const int base = complement_components(member, lo, hi, resolution);
    const int doubled = complement_components(member, lo, hi, 2 * resolution);
    return finish(resolution, base, doubled);
}

ConnectivityReport complement_connected_annulus(Vec2 center, double r_inner, double r_outer,
                                                int resolution) {
    if (!(0.0 < r_inner && r_inner < r_outer))
        throw std::invalid_argument("connectivity: need 0 < r_inner < r_outer");
    if (resolution < 2) throw std::invalid_argument("connectivity: resolution too small");
    const int base = annulus_complement_components(center, r_inner, r_outer, resolution);
    const int doubled = annulus_complement_components(center, r_inner, r_outer, 2 * resolution);
    return finish(resolution, base, doubled);
}

nlohmann::ordered_json to_json(const ConnectivityReport& r) {
    nlohmann::ordered_json j;
    j["resolution"] = r.resolution;
    j["components"] = r.components;
    j["components_doubled"] = r.components_doubled;
    j["stable"] = r.stable;
    j["verdict"] = r.verdict;
    j["note"] = r.note;
    return j;
}

}  // namespace lipone
