#pragma once

// JSON wire formats shared by the C API and the CLI. Rationals always travel
// as strings ("p" or "p/q"); object keys come out sorted.

#include "stab/acceptance.hpp"
#include "stab/cohsys.hpp"
#include "stab/gale.hpp"
#include "stab/gitstab.hpp"
#include "stab/modhyp.hpp"

#include <json.hpp>

#include <string>

namespace stab::json {

using nlohmann::json;

/// {"ambient_rank": r, "points": [["1","0","0"], ["1/2", 3, "-1"], …]}.
/// Throws Parse for malformed JSON and Schema for a wrong shape.
PointConfiguration parse_config(const std::string& text);
PointConfiguration config_from_json(const json& j);
json to_json(const PointConfiguration& config);

json to_json(const Scalar& q);
json to_json(const SystemType& t);
json to_json(const StabilityVerdict& v, const Scalar& margin);
json to_json(const CriticalValueSet& cv);
json to_json(const AlphaVerdict& v, const Scalar& g, const Scalar& alpha);
json to_json(const EquivalenceReport& rep);
json to_json(const GaleData& gale, std::optional<bool> self_associated);
json to_json(const AmbientPoint& p);
json to_json(const SegreReport& rep);
json to_json(const IgusaReport& rep);
json to_json(const DualityReport& rep);
json incidence_report();
json to_json(const acceptance::Report& rep);

std::string dump(const json& j);

}  // namespace stab::json
