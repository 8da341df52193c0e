#include "lipone/tent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lipone {

double tent_eval(Vec2 center, double radius, Vec2 x) {
    if (!(radius > 0.0)) throw std::invalid_argument("tent: radius must be positive");
    return std::max(0.0, radius - dist(x, center));
}

double tent_eval(double center, double radius, double x) {
    if (!(radius > 0.0)) throw std::invalid_argument("tent: radius must be positive");
    return std::max(0.0, radius - std::abs(x - center));
}

namespace {

std::uint64_t cell_key(std::int64_t cx, std::int64_t cy) {
    return (std::uint64_t(cx) << 32) ^ std::uint64_t(std::uint32_t(cy));
}

int octave_of(double radius) {
    int e = 0;
    std::frexp(radius, &e);  // radius = m * 2^e with m in [0.5, 1)
    return e;
}

}  // namespace

BallFamily::BallFamily(const std::vector<Ball>& balls) {
    for (const Ball& b : balls) push(b);
}

void BallFamily::push(Ball b) {
    if (!(b.radius > 0.0) || !std::isfinite(b.radius) || !std::isfinite(b.center.x) ||
        !std::isfinite(b.center.y))
        throw std::invalid_argument("BallFamily: malformed ball");
    if (!disjoint_from_all(b.center, b.radius))
        throw std::invalid_argument("BallFamily: open balls overlap");
    balls_.push_back(b);
    index_ball(int(balls_.size()) - 1);
}

void BallFamily::index_ball(int id) {
    const Ball& b = balls_[id];
    const int oct = octave_of(b.radius);
    auto it = std::find_if(levels_.begin(), levels_.end(),
                           [&](const Level& l) { return l.octave == oct; });
    if (it == levels_.end()) {
        levels_.push_back(Level{oct, std::ldexp(1.0, oct), {}});
        it = std::prev(levels_.end());
    }
    const double cell = it->cell;
    const std::int64_t xlo = std::int64_t(std::floor((b.center.x - b.radius) / cell));
    const std::int64_t xhi = std::int64_t(std::floor((b.center.x + b.radius) / cell));
    const std::int64_t ylo = std::int64_t(std::floor((b.center.y - b.radius) / cell));
    const std::int64_t yhi = std::int64_t(std::floor((b.center.y + b.radius) / cell));
    for (std::int64_t cx = xlo; cx <= xhi; ++cx)
        for (std::int64_t cy = ylo; cy <= yhi; ++cy)
            it->cells[cell_key(cx, cy)].push_back(id);
}

int BallFamily::find_open(Vec2 x) const {
    for (const Level& level : levels_) {
        const double cell = level.cell;
        const std::int64_t cx = std::int64_t(std::floor(x.x / cell));
        const std::int64_t cy = std::int64_t(std::floor(x.y / cell));
        auto it = level.cells.find(cell_key(cx, cy));
        if (it == level.cells.end()) continue;
        for (int id : it->second) {
            const Ball& b = balls_[id];
            if (dist(x, b.center) < b.radius) return id;
        }
    }
    return -1;
}

double BallFamily::distance(Vec2 x) const {
    double best = std::numeric_limits<double>::infinity();
    // containment goes through the hash grid; a distance query has to
    // look at every member, which stays cheap at packing-budget sizes
    for (const Ball& b : balls_) best = std::min(best, std::max(0.0, dist(x, b.center) - b.radius));
    return best;
}

bool BallFamily::disjoint_from_all(Vec2 center, double radius) const {
    for (const Level& level : levels_) {
        // members of this level have radius < cell, so any overlapping
        // member center lies within radius + cell of the query center
        const double pad = radius + level.cell;
        const double cell = level.cell;
        const std::int64_t xlo = std::int64_t(std::floor((center.x - pad) / cell));
        const std::int64_t xhi = std::int64_t(std::floor((center.x + pad) / cell));
        const std::int64_t ylo = std::int64_t(std::floor((center.y - pad) / cell));
        const std::int64_t yhi = std::int64_t(std::floor((center.y + pad) / cell));
        for (std::int64_t cx = xlo; cx <= xhi; ++cx)
            for (std::int64_t cy = ylo; cy <= yhi; ++cy) {
                auto it = level.cells.find(cell_key(cx, cy));
                if (it == level.cells.end()) continue;
                for (int id : it->second) {
                    const Ball& b = balls_[id];
                    if (dist(center, b.center) < radius + b.radius) return false;
                }
            }
    }
    return true;
}

nlohmann::ordered_json BallFamily::to_json() const {
    nlohmann::ordered_json j;
    auto& arr = j["balls"] = nlohmann::ordered_json::array();
    for (const Ball& b : balls_) {
        nlohmann::ordered_json e;
        e["c"] = {b.center.x, b.center.y};
        e["r"] = b.radius;
        arr.push_back(e);
    }
    return j;
}

BallFamily BallFamily::from_json(const nlohmann::json& j) {
    std::vector<Ball> balls;
    for (const auto& e : j.at("balls")) {
        const auto c = e.at("c").get<std::vector<double>>();
        if (c.size() != 2) throw std::invalid_argument("BallFamily: center must be [x, y]");
        balls.push_back(Ball{Vec2{c[0], c[1]}, e.at("r").get<double>()});
    }
    return BallFamily(balls);
}

}  // namespace lipone
