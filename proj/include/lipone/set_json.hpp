#pragma once

#include <variant>

#include <json.hpp>

#include "lipone/cantor_set.hpp"
#include "lipone/interval_set.hpp"

namespace lipone {

using SetSpec = std::variant<IntervalSet, CantorSet>;

/// Parses a set description of one of the two supported shapes:
///   {"kind":"intervals","data":[[lo,hi],...]}
///   {"kind":"cantor","alpha":{"rule":"geometric","c":...,"q":...},"max_stage":n}
/// The cantor alpha may also be {"rule":"prefix","values":[...]} with an
/// optional "tail":{"c":...,"q":...}.
/// Throws std::invalid_argument on malformed input.
SetSpec parse_set_spec(const nlohmann::json& j);

nlohmann::ordered_json to_json(const IntervalSet& s);
nlohmann::ordered_json to_json(const CantorSet& c);

}  // namespace lipone
