// Acceptance gate: runs every acceptance criterion at its pinned
// tolerance and runtime budget, printing one pass/fail line per
// criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "lipone/cantor_set.hpp"
#include "lipone/density.hpp"
#include "lipone/estimators.hpp"
#include "lipone/rng.hpp"
#include "lipone/suites.hpp"
#include "oracle_helpers.hpp"

using namespace lipone;

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

struct Gate {
    int failures = 0;

    void report(int num, const std::string& name, bool pass, double seconds, double budget,
                const std::string& detail = "") {
        const bool ok = pass && (budget <= 0.0 || seconds < budget);
        if (budget > 0.0)
            std::printf("%s %2d %-34s (%6.2fs, budget %3.0fs)%s%s\n", ok ? "PASS" : "FAIL", num,
                        name.c_str(), seconds, budget, detail.empty() ? "" : "  ",
                        detail.c_str());
        else
            std::printf("%s %2d %-34s%s%s\n", ok ? "PASS" : "FAIL", num, name.c_str(),
                        detail.empty() ? "" : "  ", detail.c_str());
        if (!ok) ++failures;
    }
};

CantorSet canonical(int max_stage) { return CantorSet(AlphaRule::geometric(0.25, 0.25), max_stage); }

bool criterion_cantor_measure(std::string& detail) {
    const CantorSet c = canonical(20);
    const auto [value, err] = c.measure();
    const double stage20 = c.stage(20).measure();
    const double want20 = 0.5 + std::ldexp(1.0, -21);
    detail = "measure=" + std::to_string(value) + " stage20-gap=" +
             std::to_string(std::abs(stage20 - want20));
    return value == 0.5 && err <= 1e-12 && std::abs(stage20 - want20) <= 1e-12;
}

bool criterion_self_similarity(std::string& detail) {
    const CantorSet c = canonical(14);
    double worst = 0.0;
    bool zero_width = true;
    for (int n = 1; n <= 10; ++n) {
        const double want = std::ldexp(0.5, -n);
        const IntervalSet sn = c.stage(n);
        for (const Interval& iv : sn.intervals()) {
            for (int query_stage : {n, std::min(n + 3, 14)}) {
                const auto [lo, hi] = c.window_measure(iv.lo, iv.hi, query_stage);
                zero_width = zero_width && lo == hi;
                worst = std::max(worst, std::abs(lo - want));
            }
        }
    }
    detail = "worst-gap=" + std::to_string(worst);
    return zero_width && worst <= 1e-12;
}

bool criterion_oracle_equivalence(std::string& detail) {
    Rng rng(20260809);
    const std::vector<double> radii{0.5, 0.25};
    int mismatches = 0;
    for (int t = 0; t < 5; ++t) {
        const GridFunction f = GridFunction::sample_1d(
            -1.0, 2.0, 0.125, [&](double) { return rng.uniform(-1, 1); });  // 25 points
        const GridIndex x{int(rng.below(25)), 0};
        const LipEstimate e = lip_estimate(f, x, radii);
        for (std::size_t k = 0; k < radii.size(); ++k)
            if (e.llip_at_r[k] != oracle::naive_llip(f, x, radii[k])) ++mismatches;
    }
    for (int t = 0; t < 5; ++t) {
        const GridFunction f = GridFunction::sample_2d(
            {0, 0}, {0.5, 0.5}, 0.125, [&](double, double) { return rng.uniform(-1, 1); });  // 5x5
        const GridIndex x{int(rng.below(5)), int(rng.below(5))};
        const LipEstimate e = lip_estimate(f, x, radii);
        for (std::size_t k = 0; k < radii.size(); ++k)
            if (e.llip_at_r[k] != oracle::naive_llip(f, x, radii[k])) ++mismatches;
    }
    detail = "mismatches=" + std::to_string(mismatches);
    return mismatches == 0;
}

bool criterion_core(std::string& detail) {
    const IntervalSet a = IntervalSet::from_pairs({{0, 0}, {1, 2}, {3, 3}});
    const IntervalSet core = quasi_dense_core(a);
    const bool shape = core == IntervalSet::from_pairs({{1, 2}});
    const bool measure = core.measure() == a.measure();
    const bool idempotent = quasi_dense_core(core) == core;
    detail = std::string("shape=") + (shape ? "ok" : "bad");
    return shape && measure && idempotent;
}

}  // namespace

int main() {
    Gate gate;
    suites::SuiteConfig cfg;  // defaults; no artifacts

    struct SuiteRun {
        suites::SuiteResult result;
        double seconds = 0.0;
    };
    auto run = [&](const char* name) {
        Stopwatch sw;
        SuiteRun r{suites::run_suite(name, cfg), 0.0};
        r.seconds = sw.seconds();
        return r;
    };

    std::string detail;

    Stopwatch sw1;
    const bool c1 = criterion_cantor_measure(detail);
    gate.report(1, "cantor-measure-exactness", c1, sw1.seconds(), 1, detail);

    Stopwatch sw2;
    const bool c2 = criterion_self_similarity(detail);
    gate.report(2, "window-self-similarity", c2, sw2.seconds(), 5, detail);

    const SuiteRun thm41 = run("thm4.1");
    gate.report(3, "measure-primitive-field (thm4.1)", thm41.result.pass, thm41.seconds, 60);

    const SuiteRun thm42 = run("thm4.2-counterexample");
    gate.report(4, "isolated-point-counterexample", thm42.result.pass, thm42.seconds, 1);

    const SuiteRun tent = run("thm6.1-tent");
    const SuiteRun fin = run("final-example");
    const SuiteRun sec5 = run("sec5-cantor-square");

    const std::int64_t ordering = thm41.result.ordering_violations +
                                  thm42.result.ordering_violations +
                                  tent.result.ordering_violations +
                                  fin.result.ordering_violations;
    gate.report(5, "estimator-ordering-everywhere", ordering == 0, 0.0, 0.0,
                "violations=" + std::to_string(ordering));

    Stopwatch sw6;
    const bool c6 = criterion_oracle_equivalence(detail);
    gate.report(6, "brute-force-oracle-equivalence", c6, sw6.seconds(), 1, detail);

    gate.report(7, "ball-packing-and-tent-sum (thm6.1)", tent.result.pass, tent.seconds, 120);
    gate.report(8, "radial-composition (final example)", fin.result.pass, fin.seconds, 180);
    gate.report(9, "cantor-square-connectivity (sec5)", sec5.result.pass, sec5.seconds, 30);

    Stopwatch sw10;
    const bool c10 = criterion_core(detail);
    gate.report(10, "quasi-dense-core (prop3.5)", c10, sw10.seconds(), 1, detail);

    std::printf("acceptance: %d/10 criteria passed\n", 10 - gate.failures);
    return gate.failures == 0 ? 0 : 1;
}
