#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lipone/set_json.hpp"

namespace lipone::suites {

/// Shared knobs for the named verification suites. Unset fields fall
/// back to each suite's pinned defaults.
struct SuiteConfig {
    std::string out_dir;  // artifacts are written only when non-empty
    std::uint64_t seed = 20260809;
    int threads = 0;
    std::optional<SetSpec> set;
    std::optional<int> stage;
    std::optional<double> grid_h;
    std::optional<double> radii_R;
    std::optional<int> radii_K;
    std::optional<double> tol;
    std::optional<int> budget;
    std::optional<int> resolution;
};

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::int64_t ordering_violations = 0;  // little <= big <= llip breaches
    nlohmann::ordered_json report;
};

const std::vector<std::string>& suite_names();

/// Runs one of: thm4.1, thm4.2-counterexample, prop3.3-cantor,
/// sec5-cantor-square, thm6.1-tent, final-example.
/// Throws std::invalid_argument for unknown names or bad configs.
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace lipone::suites
