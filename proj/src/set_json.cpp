#include "lipone/set_json.hpp"

#include <stdexcept>

namespace lipone {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

AlphaRule parse_alpha(const json& j) {
    const std::string rule = j.at("rule").get<std::string>();
    if (rule == "geometric") {
        return AlphaRule::geometric(j.at("c").get<double>(), j.at("q").get<double>());
    }
    if (rule == "prefix") {
        auto values = j.at("values").get<std::vector<double>>();
        std::optional<std::pair<double, double>> tail;
        if (j.contains("tail")) {
            const auto& t = j.at("tail");
            tail = std::make_pair(t.at("c").get<double>(), t.at("q").get<double>());
        }
        return AlphaRule::prefix(std::move(values), tail);
    }
    throw std::invalid_argument("set spec: unknown alpha rule '" + rule + "'");
}

}  // namespace

SetSpec parse_set_spec(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("set spec: expected an object with a \"kind\" field");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "intervals") {
        std::vector<std::pair<double, double>> pairs;
        for (const auto& e : j.at("data")) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("set spec: interval entries must be [lo, hi]");
            pairs.emplace_back(e[0].get<double>(), e[1].get<double>());
        }
        return IntervalSet::from_pairs(pairs);
    }
    if (kind == "cantor") {
        return CantorSet(parse_alpha(j.at("alpha")), j.at("max_stage").get<int>());
    }
    throw std::invalid_argument("set spec: unknown kind '" + kind + "'");
}

ordered_json to_json(const IntervalSet& s) {
    ordered_json j;
    j["kind"] = "intervals";
    auto& data = j["data"] = ordered_json::array();
    for (const Interval& iv : s.intervals()) data.push_back({iv.lo, iv.hi});
    return j;
}

ordered_json to_json(const CantorSet& c) {
    ordered_json j;
    j["kind"] = "cantor";
    ordered_json alpha;
    const AlphaRule& r = c.rule();
    if (r.is_geometric()) {
        alpha["rule"] = "geometric";
        alpha["c"] = r.tail()->first;
        alpha["q"] = r.tail()->second;
    } else {
        alpha["rule"] = "prefix";
        alpha["values"] = r.prefix_values();
        if (r.tail()) {
            alpha["tail"] = {{"c", r.tail()->first}, {"q", r.tail()->second}};
        }
    }
    j["alpha"] = alpha;
    j["max_stage"] = c.max_stage();
    return j;
}

}  // namespace lipone
