#include <doctest.h>

#include <stdexcept>

#include "lipone/cantor_set.hpp"
#include "lipone/connectivity.hpp"

using namespace lipone;

TEST_CASE("complement of a cantor-square stage is one piece") {
    const CantorSet c(AlphaRule::geometric(0.25, 0.25), 8);
    SUBCASE("stage 1 at a 64-pixel raster") {
        const auto rep = complement_connected_product(c.stage(1), 64);
        CHECK(rep.components == 1);
        CHECK(rep.stable);
        CHECK(rep.verdict == "connected");
    }
    SUBCASE("deeper stages stay connected") {
        for (int n = 2; n <= 5; ++n) {
            const auto rep = complement_connected_product(c.stage(n), 1 << (n + 3));
            CHECK(rep.components == 1);
            CHECK(rep.stable);
        }
    }
}

TEST_CASE("annulus control case has two complement pieces") {
    const auto rep = complement_connected_annulus(Vec2{0.5, 0.5}, 0.2, 0.45, 64);
    CHECK(rep.components == 2);
    CHECK(rep.stable);
    CHECK(rep.verdict == "disconnected");
}

TEST_CASE("resolution must respect the stage grid") {
    const CantorSet c(AlphaRule::geometric(0.25, 0.25), 4);
    CHECK_THROWS_AS(complement_connected_product(c.stage(3), 20), std::invalid_argument);
    CHECK_NOTHROW(complement_connected_product(c.stage(3), 24));
}

TEST_CASE("full square has a connected complement (the outside ring)") {
    const auto rep = complement_connected_product(IntervalSet::from_pairs({{0, 1}}), 16);
    CHECK(rep.components == 1);
}

TEST_CASE("a raster-sensitive feature never gets a verdict") {
    // shrink the annulus hole until some resolution misses it at the
    // base raster but not at the doubled one: the report must then say
    // unstable rather than pick a side
    bool saw_unstable = false;
    for (double r_in : {0.01, 0.02, 0.03, 0.04, 0.06}) {
        const auto rep = complement_connected_annulus(Vec2{0.5, 0.5}, r_in, 0.45, 16);
        CHECK(rep.stable == (rep.components == rep.components_doubled));
        if (!rep.stable) {
            CHECK(rep.verdict == "unstable");
            saw_unstable = true;
        } else {
            CHECK((rep.verdict == "connected" || rep.verdict == "disconnected"));
        }
    }
    CHECK(saw_unstable);
}
