#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lipone/estimators.hpp"
#include "lipone/measure_primitive.hpp"
#include "lipone/packing.hpp"
#include "lipone/radial.hpp"
#include "lipone/rng.hpp"
#include "lipone/tent.hpp"

using namespace lipone;

namespace {

CantorSet canonical(int max_stage = 14) {
    return CantorSet(AlphaRule::geometric(0.25, 0.25), max_stage);
}

}  // namespace

TEST_CASE("clamp primitive of the unit interval") {
    const MeasurePrimitive f(IntervalSet::from_pairs({{0, 1}}), 0.0);
    CHECK(f(0.5) == 0.5);
    CHECK(f(2.0) == 1.0);
    CHECK(f(-1.0) == 0.0);
    CHECK(f.error_bound() == 0.0);
}

TEST_CASE("signed evaluation keeps the primitive monotone") {
    const MeasurePrimitive f(IntervalSet::from_pairs({{-1, -0.5}, {0.5, 1}}), 0.0);
    CHECK(f(-2.0) == -0.5);
    CHECK(f(-0.75) == -0.25);
    CHECK(f(0.0) == 0.0);
    CHECK(f(2.0) == 0.5);
    double prev = f(-3.0);
    for (double t = -3.0; t <= 3.0; t += 0.0625) {
        CHECK(f(t) >= prev);
        prev = f(t);
    }
}

TEST_CASE("difference identity against intersect+measure") {
    const auto set = IntervalSet::from_pairs({{0, 0.25}, {0.375, 0.5}, {0.75, 1}});
    const MeasurePrimitive f(set, 0.25);
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        // dyadic probe points keep both routes exact
        double u = std::floor(rng.uniform(-0.5, 1.5) * 1024.0) / 1024.0;
        double v = std::floor(rng.uniform(-0.5, 1.5) * 1024.0) / 1024.0;
        if (u > v) std::swap(u, v);
        const double via_measure = intersect(set, IntervalSet::from_pairs({{u, v}})).measure();
        CHECK(std::abs(f(v) - f(u)) == via_measure);
        CHECK(std::abs(f(v) - f(u)) <= v - u + 1e-15);
    }
}

TEST_CASE("cantor primitive values sit inside the stage bracket") {
    const CantorSet c = canonical();
    const MeasurePrimitive f(c, 14, 0.0);
    CHECK(f.error_bound() == std::ldexp(1.0, -15));
    // value is the exact stage-14 window measure; the true value is 0.5
    CHECK(f(1.0) == c.stage_measure(14));
    CHECK(f(1.0) - f.error_bound() == 0.5);
    CHECK(std::abs(f(1.0) - 0.5) <= f.error_bound());
    CHECK(std::abs(f(0.375) - 0.25) <= f.error_bound());
    CHECK(f(0.0) == 0.0);
}

TEST_CASE("cantor primitive needs a summable rule") {
    const CantorSet c(AlphaRule::prefix({0.25, 0.0625}), 2);
    CHECK_THROWS_AS(MeasurePrimitive(c, 2, 0.0), std::domain_error);
}

TEST_CASE("tent evaluations") {
    CHECK(tent_eval(Vec2{0, 0}, 1.0, Vec2{0, 0}) == 1.0);
    CHECK(tent_eval(Vec2{0, 0}, 1.0, Vec2{1, 0}) == 0.0);
    CHECK(tent_eval(Vec2{0, 0}, 1.0, Vec2{0.6, 0.8}) == 0.0);  // distance exactly 1
    CHECK(tent_eval(Vec2{0, 0}, 1.0, Vec2{2, 2}) == 0.0);
    CHECK(tent_eval(0.5, 0.25, 0.5) == 0.25);
    CHECK(tent_eval(0.5, 0.25, 0.375) == 0.125);
    CHECK_THROWS_AS(tent_eval(0.0, -1.0, 0.0), std::invalid_argument);
}

TEST_CASE("ball family invariants") {
    CHECK_THROWS_AS(BallFamily({Ball{{0, 0}, 1.0}, Ball{{1.5, 0}, 1.0}}), std::invalid_argument);
    // touching is allowed: dist == r1 + r2
    const BallFamily touching({Ball{{0, 0}, 1.0}, Ball{{2, 0}, 1.0}});
    CHECK(touching.size() == 2);
    CHECK(touching.find_open(Vec2{0.5, 0}) == 0);
    CHECK(touching.find_open(Vec2{1.0, 0}) == -1);  // boundary of both, inside neither
    CHECK(touching.distance(Vec2{0, 3}) == 2.0);
}

TEST_CASE("ball family JSON round trip") {
    const BallFamily fam({Ball{{0.25, 0.5}, 0.125}, Ball{{0.75, 0.5}, 0.125}});
    const auto j = fam.to_json();
    const BallFamily back = BallFamily::from_json(nlohmann::json::parse(j.dump()));
    REQUIRE(back.size() == fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i) {
        CHECK(back.balls()[i].center.x == fam.balls()[i].center.x);
        CHECK(back.balls()[i].radius == fam.balls()[i].radius);
    }
}

TEST_CASE("tent sum: gap points, centers, and single-ball agreement") {
    const BallFamily fam({Ball{{0, 0}, 1.0}, Ball{{3, 0}, 1.0}});
    const TentSum f(fam);
    CHECK(f(Vec2{1.5, 0}) == 0.0);  // between the balls
    CHECK(f(Vec2{0, 0}) == 1.0);
    CHECK(f(Vec2{3, 0}) == 1.0);
    CHECK(f(Vec2{10, 10}) == 0.0);

    const TentSum single(BallFamily({Ball{{0.5, -0.25}, 0.75}}));
    Rng rng(3);
    for (int t = 0; t < 500; ++t) {
        const Vec2 p{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        CHECK(single(p) == tent_eval(Vec2{0.5, -0.25}, 0.75, p));
    }
}

TEST_CASE("tent sum over many balls is 1-Lipschitz on random pairs") {
    // a simple disjoint lattice family exercises the spatial index
    std::vector<Ball> balls;
    for (int i = 0; i < 40; ++i)
        for (int j = 0; j < 40; ++j)
            balls.push_back(Ball{{i * 0.025, j * 0.025}, 0.0125 * (1.0 - 1e-9)});
    const TentSum f{BallFamily(balls)};
    REQUIRE(f.family().size() == 1600);
    Rng rng(17);
    for (int t = 0; t < 2000; ++t) {
        const Vec2 p{rng.uniform(-0.1, 1.1), rng.uniform(-0.1, 1.1)};
        const Vec2 q{rng.uniform(-0.1, 1.1), rng.uniform(-0.1, 1.1)};
        CHECK(std::abs(f(p) - f(q)) <= dist(p, q) + 1e-12);
    }
}

TEST_CASE("2D llip field of a two-ball tent sum matches the indicator") {
    const BallFamily fam({Ball{{0.25, 0.25}, 0.25}, Ball{{0.75, 0.75}, 0.25}});
    const TentSum tent(fam);
    const auto f = GridFunction::sample_2d({-0.5, -0.5}, {1.5, 1.5}, 0.03125,
                                           [&](double x, double y) { return tent(Vec2{x, y}); });
    const std::vector<double> radii{0.125, 0.0625};
    const auto field = lip_field(f, radii);
    std::int64_t deep = 0, far = 0;
    for (std::int64_t idx = 0; idx < f.num_points(); ++idx) {
        const Vec2 p{f.x(int(idx % f.shape()[0])), f.y(int(idx / f.shape()[0]))};
        const int id = fam.find_open(p);
        if (id >= 0 && fam.balls()[id].radius - dist(p, fam.balls()[id].center) > radii.front()) {
            ++deep;
            CHECK(field.llip_final[idx] >= 0.9);
        } else if (fam.distance(p) > radii.front()) {
            ++far;
            CHECK(field.llip_final[idx] == 0.0);
        }
    }
    CHECK(deep > 0);
    CHECK(far > 0);
}

TEST_CASE("packing the unit disk with a single ball") {
    const auto region = disk_region(Vec2{0, 0}, 1.0);
    const auto res = pack_regular_closed(region, BallBasisSpec{1, 64}, 1);
    REQUIRE(res.family.size() == 1);
    CHECK(!res.empty_interior);
    const double deficit = coverage_deficit(region, res.family, 256);
    const double area = M_PI;
    CHECK(deficit < area);
    CHECK(deficit >= 0.0);
}

TEST_CASE("packing the unit square: deficits shrink, invariants hold") {
    const auto region = rect_region(Vec2{0, 0}, Vec2{1, 1});
    const auto packed = pack_regular_closed(region, BallBasisSpec{1, 128}, 60);
    REQUIRE(packed.family.size() == 60);
    for (const Ball& b : packed.family.balls())
        CHECK(region.dist_to_complement(b.center) >= b.radius);

    auto prefix = [&](int n) {
        BallFamily fam;
        for (int i = 0; i < n; ++i) fam.push(packed.family.balls()[i]);
        return fam;
    };
    const double d5 = coverage_deficit(region, prefix(5), 512);
    const double d25 = coverage_deficit(region, prefix(25), 512);
    const double d60 = coverage_deficit(region, packed.family, 512);
    CHECK(d5 > d25);
    CHECK(d25 > d60);
    CHECK(d60 > 0.0);
}

TEST_CASE("packing a segment reports the empty interior") {
    const auto res = pack_regular_closed(segment_region(Vec2{0, 0}, Vec2{1, 1}),
                                         BallBasisSpec{1, 16}, 4);
    CHECK(res.family.empty());
    CHECK(res.empty_interior);
    CHECK(!res.diagnostic.empty());
}

TEST_CASE("radial composition of the cantor primitive") {
    const CantorSet c = canonical();
    const RadialComposition f{MeasurePrimitive(c, 14, 0.0)};
    CHECK(f(Vec2{0, 0}) == 0.0);
    CHECK(std::abs(f(Vec2{1, 0}) - 0.5) <= f.error_bound());
    // exact rotational invariance on a Pythagorean pair
    CHECK(f(Vec2{0.6, 0.8}) == f(Vec2{1, 0}));
    CHECK(f(Vec2{-0.6, 0.8}) == f(Vec2{0, 1}));
    Rng rng(23);
    for (int t = 0; t < 200; ++t) {
        const Vec2 p{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        CHECK(f(p) == f(Vec2{-p.y, p.x}));  // quarter turn preserves the norm exactly
        CHECK(f(p) == f(Vec2{p.y, p.x}));
    }
}
