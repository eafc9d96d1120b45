#include "stab/json_io.hpp"

namespace stab::json {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::Schema, what); }

Scalar scalar_from_json(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_scalar(j.get<std::string>());
    } catch (const Error& e) {
      schema_error(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Scalar(Integer(std::to_string(j.get<std::uint64_t>())))
                                  : Scalar(Integer(std::to_string(j.get<std::int64_t>())));
  }
  schema_error(where + ": expected a rational string \"p/q\" or an integer");
}

json coords_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(format_scalar(x));
  return a;
}

json coords_json(const Coords6& v) { return coords_json(Vector(v.begin(), v.end())); }

}  // namespace

PointConfiguration config_from_json(const json& j) {
  if (!j.is_object()) schema_error("configuration must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "ambient_rank" && key != "points") schema_error("unknown configuration key '" + key + "'");
  if (!j.contains("ambient_rank") || !j["ambient_rank"].is_number_integer())
    schema_error("'ambient_rank' must be an integer");
  const auto r = j["ambient_rank"].get<std::int64_t>();
  if (r < 1) schema_error("'ambient_rank' must be positive");
  if (!j.contains("points") || !j["points"].is_array()) schema_error("'points' must be an array");
  std::vector<ProjectivePoint> points;
  const auto& arr = j["points"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& p = arr[i];
    const std::string where = "points[" + std::to_string(i) + "]";
    if (!p.is_array() || static_cast<std::int64_t>(p.size()) != r)
      schema_error(where + " must be an array of " + std::to_string(r) + " coordinates");
    Vector v;
    for (std::size_t k = 0; k < p.size(); ++k) v.push_back(scalar_from_json(p[k], where));
    if (is_zero(v)) schema_error(where + " has all coordinates zero");
    points.emplace_back(v);
  }
  return PointConfiguration(static_cast<std::size_t>(r), std::move(points));
}

PointConfiguration parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
  return config_from_json(j);
}

json to_json(const PointConfiguration& config) {
  json pts = json::array();
  for (const auto& p : config.points()) pts.push_back(coords_json(p.coords()));
  return json{{"ambient_rank", config.ambient_rank()}, {"points", pts}};
}

json to_json(const Scalar& q) { return format_scalar(q); }

json to_json(const SystemType& t) { return json{{"r", t.r}, {"d", t.d}, {"k", t.k}}; }

json to_json(const StabilityVerdict& v, const Scalar& margin) {
  json w = nullptr;
  if (v.witness) w = json{{"indices", v.witness->indices}, {"span_dim", v.witness->span_dim}, {"size", v.witness->size}};
  return json{{"class", to_string(v.cls)}, {"witness", w}, {"margin", format_scalar(margin)}};
}

json to_json(const CriticalValueSet& cv) {
  json values = json::array();
  for (const auto& v : cv.values) values.push_back(format_scalar(v));
  return json{{"values", values}};
}

json to_json(const AlphaVerdict& v, const Scalar& g, const Scalar& alpha) {
  json types = json::array();
  for (const auto& t : v.subsystems) types.push_back(to_json(t));
  return json{{"g", format_scalar(g)},
              {"alpha", format_scalar(alpha)},
              {"semistable", v.semistable},
              {"stable", v.stable},
              {"subsystems", types}};
}

json to_json(const EquivalenceReport& rep) {
  return json{{"git_class", to_string(rep.git.cls)},
              {"git_semistable", rep.git.cls != StabilityClass::Unstable},
              {"git_stable", rep.git.cls == StabilityClass::Stable},
              {"alpha", format_scalar(rep.alpha)},
              {"alpha_semistable", rep.alpha_semistable},
              {"alpha_stable", rep.alpha_stable},
              {"agree", rep.agree}};
}

json to_json(const GaleData& gale, std::optional<bool> self_associated) {
  json diag = json::array();
  for (const auto& d : gale.diag) diag.push_back(format_scalar(d));
  json sa = nullptr;
  if (self_associated) sa = *self_associated;
  return json{{"source", to_json(gale.source)}, {"target", to_json(gale.target)}, {"diag", diag}, {"self_associated", sa}};
}

json to_json(const AmbientPoint& p) { return coords_json(p.coords()); }

json to_json(const SegreReport& rep) {
  json nodes = json::array();
  for (const auto& n : rep.nodes)
    nodes.push_back(json{{"split", n.node.split.label()},
                         {"point", to_json(n.node.point)},
                         {"singular", n.singular},
                         {"hessian_rank", n.hessian_rank}});
  json unexpected = json::array();
  for (const auto& p : rep.search.unexpected) unexpected.push_back(to_json(p));
  return json{{"model", "segre"},
              {"equation", "p3 = 0 on p1 = 0"},
              {"symmetric", rep.symmetric},
              {"nodes", nodes},
              {"node_count", rep.nodes.size()},
              {"nodes_distinct", rep.nodes_distinct},
              {"split_bijection", rep.split_bijection},
              {"search",
               json{{"searched", rep.search.searched},
                    {"on_hypersurface", rep.search.on_hypersurface},
                    {"singular_found", rep.search.singular_found},
                    {"unexpected", unexpected}}},
              {"passed", rep.passed()}};
}

json to_json(const IgusaReport& rep) {
  return json{{"model", "igusa"},
              {"equation", "a*p2^2 + b*p4 = 0 on p1 = 0"},
              {"coefficients", json{{"a", format_scalar(rep.coefficient_a)}, {"b", format_scalar(rep.coefficient_b)}}},
              {"symmetric", rep.symmetric},
              {"pencil_search_agrees", rep.pencil_search_agrees},
              {"singular_lines", rep.singular_lines},
              {"singular_points", rep.singular_points},
              {"abstract_is_15_3", rep.abstract_is_15_3},
              {"incidence_match", rep.incidence_match},
              {"flags", rep.flags},
              {"passed", rep.passed()}};
}

json to_json(const DualityReport& rep) {
  json fwd = json::array(), rev = json::array();
  for (const auto& p : rep.forward_failures) fwd.push_back(to_json(p));
  for (const auto& p : rep.reverse_failures) rev.push_back(to_json(p));
  return json{{"samples", rep.samples},
              {"forward_ok", rep.forward_ok},
              {"reverse_ok", rep.reverse_ok},
              {"round_trip_ok", rep.round_trip_ok},
              {"counterexamples", json{{"forward", fwd}, {"reverse", rev}}},
              {"passed", rep.passed()}};
}

json incidence_report() {
  const auto abstract = incidence_15_3();
  const auto geometric = geometric_incidence();
  auto flags_json = [](const IncidenceStructure& s) {
    json a = json::array();
    for (const auto& [p, l] : s.flags) a.push_back(json::array({s.points[p], s.lines[l]}));
    return a;
  };
  json pts = json::array(), lines = json::array();
  for (const auto& p : igusa_points()) pts.push_back(json{{"label", edge_label(p.edge)}, {"coords", to_json(p.point)}});
  for (const auto& l : igusa_lines())
    lines.push_back(json{{"label", l.matching.label()},
                         {"direction_t", coords_json(l.direction_t)},
                         {"direction_u", coords_json(l.direction_u)}});
  return json{{"points", abstract.points},
              {"lines", abstract.lines},
              {"abstract_flags", flags_json(abstract)},
              {"geometric_flags", flags_json(geometric)},
              {"is_15_3", abstract.is_configuration_15_3()},
              {"match", abstract.flags == geometric.flags},
              {"realization", json{{"points", pts}, {"lines", lines}}}};
}

json to_json(const acceptance::Report& rep) {
  json criteria = json::array();
  for (const auto& c : rep.criteria)
    criteria.push_back(json{{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}, {"detail", c.detail}});
  return json{{"criteria", criteria}, {"passed", rep.passed()}};
}

std::string dump(const json& j) { return j.dump(2); }

}  // namespace stab::json
