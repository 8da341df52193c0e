#include <doctest.h>

#include <stdexcept>

#include "lipone/suites.hpp"

using namespace lipone;

TEST_CASE("unknown suite names are rejected") {
    suites::SuiteConfig cfg;
    CHECK_THROWS_AS(suites::run_suite("nope", cfg), std::invalid_argument);
}

TEST_CASE("suite catalogue") {
    const std::vector<std::string> want{"thm4.1",         "thm4.2-counterexample",
                                        "prop3.3-cantor", "sec5-cantor-square",
                                        "thm6.1-tent",    "final-example"};
    CHECK(suites::suite_names() == want);
}

TEST_CASE("counterexample suite reports the exact witness") {
    suites::SuiteConfig cfg;
    const auto res = suites::run_suite("thm4.2-counterexample", cfg);
    CHECK(res.pass);
    CHECK(res.ordering_violations == 0);
    bool saw_witness = false;
    for (const auto& c : res.report.at("criteria")) {
        if (c.at("name") == "quasi-density-refuted") {
            saw_witness = true;
            CHECK(c.at("details").at("witness").at("x") == 0.0);
            CHECK(c.at("details").at("witness").at("r") == 0.5);
        }
    }
    CHECK(saw_witness);
}

TEST_CASE("counterexample suite rejects cantor overrides") {
    suites::SuiteConfig cfg;
    cfg.set = SetSpec{CantorSet(AlphaRule::geometric(0.25, 0.25), 4)};
    CHECK_THROWS_AS(suites::run_suite("thm4.2-counterexample", cfg), std::invalid_argument);
}

TEST_CASE("thm4.1 accepts an interval-set override") {
    suites::SuiteConfig cfg;
    cfg.set = SetSpec{IntervalSet::from_pairs({{0, 1}})};
    cfg.grid_h = 0.001953125;  // 2^-9
    cfg.radii_R = 0.25;
    cfg.radii_K = 5;
    const auto res = suites::run_suite("thm4.1", cfg);
    CHECK(res.pass);
}
