#include "stab/cohsys.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace stab {

void SystemType::validate() const {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "system rank must be >= 1");
  if (d < 0 || k < 0) throw Error(ErrorCode::InvalidArgument, "degree and section count must be >= 0");
}

Scalar alpha_slope(const SystemType& t, const Scalar& alpha) {
  t.validate();
  if (sgn(alpha) < 0) throw Error(ErrorCode::InvalidArgument, "alpha must be nonnegative");
  return make_ratio(t.d, t.r) + alpha * make_ratio(t.k, t.r);
}

std::vector<CriticalWitness> critical_value_witnesses(const SystemType& t, const CriticalValueOptions& opts) {
  t.validate();
  const std::int64_t max_d = opts.max_degree.value_or(t.d);
  const std::int64_t max_k = opts.max_sections.value_or(t.k);
  const Scalar full_d = make_ratio(t.d, t.r);
  const Scalar full_k = make_ratio(t.k, t.r);
  std::vector<CriticalWitness> out;
  for (std::int64_t s = 1; s <= t.r - 1; ++s) {
    for (std::int64_t kp = 0; kp <= max_k; ++kp) {
      const Scalar sub_k = make_ratio(kp, s);
      if (sub_k == full_k) continue;
      for (std::int64_t dp = 0; dp <= max_d; ++dp) {
        // d'/s + α k'/s = d/r + α k/r
        Scalar alpha = (full_d - make_ratio(dp, s)) / (sub_k - full_k);
        if (sgn(alpha) > 0) out.push_back({SystemType{s, dp, kp}, std::move(alpha)});
      }
    }
  }
  return out;
}

CriticalValueSet critical_values(const SystemType& t, const CriticalValueOptions& opts) {
  std::set<Scalar> unique;
  for (auto& w : critical_value_witnesses(t, opts)) unique.insert(w.alpha);
  return CriticalValueSet{std::vector<Scalar>(unique.begin(), unique.end()), t};
}

std::int64_t stabilization_threshold(std::int64_t r, std::int64_t g) {
  if (r < 1 || g < 1) throw Error(ErrorCode::InvalidArgument, "rank and genus must be positive");
  return g * (r - 1);
}

std::vector<SystemType> subsystem_types_from_config(const PointConfiguration& config) {
  if (config.empty()) throw Error(ErrorCode::InvalidArgument, "empty configuration");
  const auto r = static_cast<std::int64_t>(config.ambient_rank());
  std::vector<std::int64_t> d_max(static_cast<std::size_t>(std::max<std::int64_t>(r, 1)), 0);
  for (const auto& flat : proper_flats(config)) {
    auto& slot = d_max[flat.dim];
    slot = std::max(slot, static_cast<std::int64_t>(flat.indices.size()));
  }
  std::vector<SystemType> types;
  std::int64_t running = 0;
  for (std::int64_t s = 1; s < r; ++s) {
    running = std::max(running, d_max[static_cast<std::size_t>(s)]);
    types.push_back(SystemType{s, running, s});
  }
  return types;
}

namespace {

std::int64_t integral_genus(const PointConfiguration& config, const Scalar& g) {
  if (sgn(g) <= 0) throw Error(ErrorCode::InvalidArgument, "g must be positive");
  const Scalar n(static_cast<unsigned long>(config.size()));
  if (g.get_den() != 1 || n != g * static_cast<unsigned long>(config.ambient_rank()))
    throw Error(ErrorCode::SizeMismatch, "configuration has " + std::to_string(config.size()) +
                                             " points, expected r·g = " + std::to_string(config.ambient_rank()) +
                                             "·" + format_scalar(g));
  return g.get_num().get_si();
}

}  // namespace

AlphaVerdict alpha_check(const PointConfiguration& config, const Scalar& g, const Scalar& alpha) {
  const std::int64_t genus = integral_genus(config, g);
  if (sgn(alpha) <= 0) throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
  const auto r = static_cast<std::int64_t>(config.ambient_rank());
  const SystemType full{r, r * genus, r};
  const Scalar full_slope = alpha_slope(full, alpha);
  AlphaVerdict v{true, true, subsystem_types_from_config(config)};
  for (const auto& sub : v.subsystems) {
    const Scalar slope = alpha_slope(sub, alpha);
    if (slope > full_slope) v.semistable = false;
    if (slope >= full_slope) v.stable = false;
  }
  return v;
}

bool alpha_semistable_config(const PointConfiguration& config, const Scalar& g, const Scalar& alpha) {
  return alpha_check(config, g, alpha).semistable;
}

bool alpha_stable_config(const PointConfiguration& config, const Scalar& g, const Scalar& alpha) {
  return alpha_check(config, g, alpha).stable;
}

EquivalenceReport equivalence_check(const PointConfiguration& config, std::int64_t g) {
  if (g < 1) throw Error(ErrorCode::InvalidArgument, "g must be a positive integer");
  const Scalar gq(g);
  const auto r = static_cast<std::int64_t>(config.ambient_rank());
  EquivalenceReport rep;
  rep.alpha = Scalar(stabilization_threshold(r, g) + 1);
  const AlphaVerdict a = alpha_check(config, gq, rep.alpha);
  rep.git = classify(config, gq);
  rep.alpha_semistable = a.semistable;
  rep.alpha_stable = a.stable;
  const bool git_semistable = rep.git.cls != StabilityClass::Unstable;
  const bool git_stable = rep.git.cls == StabilityClass::Stable;
  rep.agree = git_semistable == a.semistable && git_stable == a.stable;
  return rep;
}

bool subsystem_violates(const SystemType& full, const SystemType& sub, const Scalar& alpha) {
  if (full == sub) throw Error(ErrorCode::InvalidArgument, "a system is not a proper subsystem of itself");
  return alpha_slope(sub, alpha) > alpha_slope(full, alpha);
}

PointConfiguration destable_example(std::int64_t genus, const std::vector<Scalar>& lambdas) {
  if (genus < 1) throw Error(ErrorCode::InvalidArgument, "genus must be >= 1");
  std::vector<Scalar> ls = lambdas;
  if (ls.empty())
    for (std::int64_t i = 1; i <= genus + 1; ++i) ls.emplace_back(i);
  if (static_cast<std::int64_t>(ls.size()) != genus + 1)
    throw Error(ErrorCode::InvalidArgument, "need exactly g+1 = " + std::to_string(genus + 1) + " lambdas");
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (sgn(ls[i]) == 0) throw Error(ErrorCode::InvalidArgument, "lambdas must be nonzero");
    for (std::size_t j = 0; j < i; ++j)
      if (ls[i] == ls[j]) throw Error(ErrorCode::InvalidArgument, "lambdas must be pairwise distinct");
  }
  std::vector<Vector> coords;
  for (std::int64_t i = 0; i < genus - 1; ++i) coords.push_back({Scalar(1), Scalar(0)});
  for (const auto& l : ls) coords.push_back({l, Scalar(1)});
  return PointConfiguration(2, coords);
}

}  // namespace stab
