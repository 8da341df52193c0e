#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lipone/cantor_set.hpp"
#include "lipone/rng.hpp"

using namespace lipone;

namespace {

// alpha_n = 4^-n
CantorSet canonical(int max_stage = 20) {
    return CantorSet(AlphaRule::geometric(0.25, 0.25), max_stage);
}

}  // namespace

TEST_CASE("alpha rule validation") {
    CHECK_THROWS_AS(AlphaRule::geometric(0.0, 0.25), std::invalid_argument);
    CHECK_THROWS_AS(AlphaRule::geometric(0.25, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(AlphaRule::prefix({}), std::invalid_argument);
    CHECK_THROWS_AS(AlphaRule::prefix({0.25, 0.0}), std::invalid_argument);
    // summability violated: sum 2^(n-1) alpha_n = c / (1 - 2q) = 1.2
    CHECK_THROWS_AS(CantorSet(AlphaRule::geometric(0.6, 0.25), 4), std::invalid_argument);
    // q >= 1/2 diverges
    CHECK_THROWS_AS(CantorSet(AlphaRule::geometric(0.01, 0.5), 4), std::invalid_argument);
    // alpha_2 = 0.3 cannot be removed from a stage-1 interval of length 0.25
    CHECK_THROWS_AS(CantorSet(AlphaRule::prefix({0.5, 0.3}), 2), std::invalid_argument);
}

TEST_CASE("stages of the canonical set") {
    const CantorSet c = canonical();
    CHECK(c.stage(0) == IntervalSet::from_pairs({{0, 1}}));
    CHECK(c.stage(1) == IntervalSet::from_pairs({{0, 0.375}, {0.625, 1}}));

    const IntervalSet s2 = c.stage(2);
    REQUIRE(s2.size() == 4);
    for (const Interval& iv : s2.intervals()) CHECK(iv.length() == 0.15625);

    CHECK(c.stage_measure(2) == doctest::Approx(0.625).epsilon(1e-14));
}

TEST_CASE("monotone stages with exact per-stage measure") {
    const CantorSet c = canonical();
    IntervalSet prev = c.stage(0);
    double w = 1.0, partial = 0.0;
    for (int n = 1; n <= 12; ++n, w *= 2.0) {
        const IntervalSet cur = c.stage(n);
        CHECK(prev.covers(cur));
        partial += w * std::ldexp(0.25, -2 * (n - 1));  // 2^(n-1) * 4^-n
        CHECK(std::abs(cur.measure() - (1.0 - partial)) <= 1e-12);
        CHECK(cur.measure() == c.stage_measure(n));
        prev = cur;
    }
}

TEST_CASE("non-dyadic rule keeps the measure identity to tolerance") {
    const CantorSet c(AlphaRule::geometric(1.0 / 6.0, 1.0 / 6.0), 12);
    for (int n = 1; n <= 10; ++n)
        CHECK(std::abs(c.stage(n).measure() - c.stage_measure(n)) <= 1e-12);
}

TEST_CASE("cantor_measure closed forms") {
    SUBCASE("alpha_n = 4^-n gives exactly one half") {
        const auto [value, err] = canonical().measure();
        CHECK(value == 0.5);
        CHECK(err <= 1e-12);
    }
    SUBCASE("alpha_n = 6^-n gives three quarters") {
        const CantorSet c(AlphaRule::geometric(1.0 / 6.0, 1.0 / 6.0), 10);
        const auto [value, err] = c.measure();
        CHECK(value == doctest::Approx(0.75).epsilon(1e-14));
        CHECK(err <= 1e-12);
    }
    SUBCASE("cross-check against deep stage interval sums") {
        const CantorSet c = canonical();
        CHECK(c.stage(20).measure() == 0.5 + std::ldexp(1.0, -21));
    }
    SUBCASE("tail-less prefix refuses") {
        const CantorSet c(AlphaRule::prefix({0.25, 0.0625}), 2);
        CHECK_THROWS_AS(c.measure(), std::domain_error);
    }
    SUBCASE("prefix with geometric tail matches the pure rule") {
        const CantorSet pure = canonical(8);
        const CantorSet mixed(AlphaRule::prefix({0.25, 0.0625}, std::make_pair(0.015625, 0.25)), 8);
        CHECK(mixed.measure().first == pure.measure().first);
        CHECK(mixed.stage(5) == pure.stage(5));
    }
}

TEST_CASE("window measure: spec cases") {
    const CantorSet c = canonical();
    SUBCASE("whole unit interval") {
        for (int s : {0, 4, 10}) {
            const auto [lo, hi] = c.window_measure(0.0, 1.0, s);
            CHECK(lo == 0.5);
            CHECK(hi == 0.5);
        }
    }
    SUBCASE("left stage-1 interval carries half the measure") {
        for (int s : {1, 2, 5, 12}) {
            const auto [lo, hi] = c.window_measure(0.0, 0.375, s);
            CHECK(lo == 0.25);
            CHECK(hi == 0.25);
        }
    }
    SUBCASE("u > v rejected") { CHECK_THROWS_AS(c.window_measure(0.5, 0.4, 3), std::invalid_argument); }
}

TEST_CASE("window measure: self-similarity across every stage interval") {
    const CantorSet c = canonical(12);
    for (int n = 1; n <= 8; ++n) {
        const double want = std::ldexp(0.5, -n);
        const IntervalSet sn = c.stage(n);
        for (const Interval& iv : sn.intervals()) {
            const auto [lo, hi] = c.window_measure(iv.lo, iv.hi, n);
            CHECK(lo == hi);
            CHECK(std::abs(lo - want) <= 1e-12);
        }
    }
}

TEST_CASE("window measure: bracket soundness under stage refinement") {
    const CantorSet c = canonical(16);
    Rng rng(99);
    for (int t = 0; t < 200; ++t) {
        double u = rng.uniform(-0.2, 1.2);
        double v = rng.uniform(-0.2, 1.2);
        if (u > v) std::swap(u, v);
        double prev_lo = 0.0, prev_hi = 1.0;
        for (int s = 2; s <= 16; s += 2) {
            const auto [lo, hi] = c.window_measure(u, v, s);
            CHECK(lo >= prev_lo);
            CHECK(hi <= prev_hi + 1e-15);
            CHECK(lo <= hi);
            prev_lo = lo;
            prev_hi = hi;
        }
    }
}

TEST_CASE("thin near-critical rule keeps brackets sound") {
    // total weighted gap mass 0.98, so the set retains measure 0.02
    const CantorSet c(AlphaRule::geometric(0.49, 0.25), 14);
    CHECK(c.measure().first == doctest::Approx(0.02).epsilon(1e-12));
    Rng rng(404);
    for (int t = 0; t < 100; ++t) {
        double u = rng.uniform(-0.1, 1.1);
        double v = rng.uniform(-0.1, 1.1);
        if (u > v) std::swap(u, v);
        double prev_lo = 0.0, prev_hi = 1.0;
        for (int s = 1; s <= 14; ++s) {
            const auto [lo, hi] = c.window_measure(u, v, s);
            CHECK(lo >= prev_lo);
            CHECK(hi <= prev_hi + 1e-15);
            prev_lo = lo;
            prev_hi = hi;
        }
    }
    // endpoints still carry local mass
    const auto [lo, hi] = c.window_measure(-0.01, 0.01, 14);
    CHECK(lo > 0.0);
}

TEST_CASE("membership tri-state") {
    const CantorSet c = canonical();
    CHECK(c.contains(0.0, 6) == Membership::In);
    CHECK(c.contains(1.0, 6) == Membership::In);
    CHECK(c.contains(0.375, 6) == Membership::In);
    CHECK(c.contains(0.5, 1) == Membership::Out);
    CHECK(c.contains(0.5, 8) == Membership::Out);
    CHECK(c.contains(-0.1, 3) == Membership::Out);
    CHECK(c.contains(0.2, 1) == Membership::UndecidedAtStage);
    // 0.2 falls into a gap eventually
    CHECK(c.contains(0.2, 12) == Membership::Out);
}

TEST_CASE("stage guards") {
    const CantorSet c = canonical(6);
    CHECK_THROWS_AS(c.stage(7), std::out_of_range);
    CHECK_THROWS_AS(c.window_measure(0, 1, 7), std::out_of_range);
    CHECK_THROWS_AS(c.contains(0.5, -1), std::out_of_range);
}
