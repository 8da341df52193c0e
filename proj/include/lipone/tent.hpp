#pragma once

#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace lipone {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    double norm() const { return std::hypot(x, y); }
};

inline double dist(Vec2 a, Vec2 b) { return (a - b).norm(); }

struct Ball {
    Vec2 center;
    double radius = 0.0;
};

/// max{0, radius - ||x - center||}: 1-Lipschitz, vanishing outside the
/// open ball, slope one along rays inside it.
double tent_eval(Vec2 center, double radius, Vec2 x);
double tent_eval(double center, double radius, double x);  // 1D

/// Finite list of pairwise disjoint open balls:
/// dist(c_i, c_j) >= r_i + r_j for i != j. Disjointness is validated at
/// construction. Lookup of the ball containing a point goes through a
/// per-radius-octave hash grid, so families of thousands of balls are
/// queried in O(#octaves).
class BallFamily {
public:
    BallFamily() = default;
    explicit BallFamily(const std::vector<Ball>& balls);

    /// Appends one ball after checking disjointness against the current
    /// members; throws std::invalid_argument on overlap.
    void push(Ball b);

    const std::vector<Ball>& balls() const { return balls_; }
    std::size_t size() const { return balls_.size(); }
    bool empty() const { return balls_.empty(); }

    /// Index of the open ball containing x, or -1.
    int find_open(Vec2 x) const;

    /// Distance to the union of closed balls (0 inside).
    double distance(Vec2 x) const;

    /// True iff the candidate open ball is disjoint from every member.
    bool disjoint_from_all(Vec2 center, double radius) const;

    nlohmann::ordered_json to_json() const;
    static BallFamily from_json(const nlohmann::json& j);

private:
    struct Level {
        int octave = 0;     // balls with radius in [cell/2, cell)
        double cell = 0.0;  // hash cell size
        std::unordered_map<std::uint64_t, std::vector<int>> cells;
    };
    void index_ball(int id);

    std::vector<Ball> balls_;
    std::vector<Level> levels_;
};

/// Sum of the tents over a disjoint ball family. At any point at most
/// one term is active, so evaluation reduces to locating that ball.
class TentSum {
public:
    explicit TentSum(BallFamily family) : family_(std::move(family)) {}

    const BallFamily& family() const { return family_; }

    double eval(Vec2 x) const {
        const int id = family_.find_open(x);
        if (id < 0) return 0.0;
        const Ball& b = family_.balls()[id];
        return tent_eval(b.center, b.radius, x);
    }
    double operator()(Vec2 x) const { return eval(x); }

private:
    BallFamily family_;
};

}  // namespace lipone
