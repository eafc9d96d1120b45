#include "stab/acceptance.hpp"

#include "stab/cohsys.hpp"
#include "stab/gale.hpp"
#include "stab/gitstab.hpp"
#include "stab/modhyp.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace stab::acceptance {

bool Report::passed() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.passed; });
}

namespace {

Vector random_vector(std::mt19937_64& rng, std::size_t r, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  Vector v(r);
  do {
    for (auto& x : v) x = entry(rng);
  } while (is_zero(v));
  return v;
}

std::string counts(const std::map<std::string, std::size_t>& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, n] : m) {
    os << (first ? "" : ", ") << k << "=" << n;
    first = false;
  }
  return os.str();
}

}  // namespace

PointConfiguration random_configuration(std::mt19937_64& rng, std::size_t ambient_rank, std::size_t n) {
  std::uniform_int_distribution<int> mode(0, 9);
  const Vector line_a = random_vector(rng, ambient_rank, 3);
  const Vector line_b = random_vector(rng, ambient_rank, 3);
  std::uniform_int_distribution<long> coef(-2, 2);
  std::vector<Vector> pts;
  while (pts.size() < n) {
    const int m = mode(rng);
    if (m < 3 && !pts.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
      Vector dup = pts[pick(rng)];
      for (auto& x : dup) x *= 3;  // same projective point, different representative
      pts.push_back(dup);
    } else if (m < 5) {
      Vector v(ambient_rank);
      const long a = coef(rng), b = coef(rng);
      for (std::size_t i = 0; i < ambient_rank; ++i) v[i] = a * line_a[i] + b * line_b[i];
      if (!is_zero(v)) pts.push_back(v);
    } else {
      pts.push_back(random_vector(rng, ambient_rank, 2));
    }
  }
  std::shuffle(pts.begin(), pts.end(), rng);
  return PointConfiguration(ambient_rank, pts);
}

CriterionResult git_oracle_equivalence(std::uint64_t seed, std::size_t cases) {
  CriterionResult res{1, "GIT oracle equivalence", true, false, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(4, 9);
  const std::vector<Scalar> weights{make_ratio(1, 1), make_ratio(3, 2), make_ratio(2, 1), make_ratio(5, 2),
                                    make_ratio(3, 1), make_ratio(4, 1)};
  std::uniform_int_distribution<std::size_t> pick(0, weights.size());
  std::map<std::string, std::size_t> classes;
  std::size_t agree = 0;
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t r = 2 + c % 2;
    const std::size_t n = size(rng);
    const auto config = random_configuration(rng, r, n);
    const std::size_t w = pick(rng);
    const Scalar g = w == weights.size() ? make_ratio(static_cast<long>(n), static_cast<long>(r)) : weights[w];
    const auto fast = classify(config, g);
    const auto slow = oracle_classify(config, g);
    ++classes[to_string(fast.cls)];
    if (fast.cls == slow.cls && fast.witness == slow.witness) {
      ++agree;
    } else if (res.passed) {
      res.passed = false;
      res.detail = "first mismatch at case " + std::to_string(c) + "; ";
    }
  }
  res.detail += std::to_string(agree) + "/" + std::to_string(cases) + " agree (" + counts(classes) + ")";
  return res;
}

CriterionResult git_alpha_dictionary(std::uint64_t seed, std::size_t cases) {
  CriterionResult res{2, "GIT / alpha-stability dictionary", true, false, {}};
  std::mt19937_64 rng(seed ^ 0x2222);
  std::map<std::string, std::size_t> classes;
  std::size_t agree = 0;
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t r = 2 + c % 2;
    const std::int64_t g = 2 + static_cast<std::int64_t>((c / 2) % 3);
    const auto config = random_configuration(rng, r, r * static_cast<std::size_t>(g));
    const auto rep = equivalence_check(config, g);
    ++classes[to_string(rep.git.cls)];
    if (rep.agree && rep.alpha == Scalar(g * static_cast<std::int64_t>(r - 1) + 1)) {
      ++agree;
    } else if (res.passed) {
      res.passed = false;
      res.detail = "first disagreement at case " + std::to_string(c) + "; ";
    }
  }
  res.detail += std::to_string(agree) + "/" + std::to_string(cases) + " agree (" + counts(classes) + ")";
  return res;
}

CriterionResult destabilized_example() {
  CriterionResult res{3, "destabilized (2,2g,2) example", true, false, {}};
  std::ostringstream detail;
  for (std::int64_t g = 4; g <= 8; ++g) {
    const auto config = destable_example(g);
    const bool stable = classify(config, Scalar(g)).cls == StabilityClass::Stable;
    const auto cv = critical_values(SystemType{2, 2 * g, 2});
    const bool has_one = std::find(cv.values.begin(), cv.values.end(), Scalar(1)) != cv.values.end();
    const SystemType full{2, 2 * g, 2};
    const SystemType sub{1, g + 1, 0};
    const std::vector<Scalar> alphas{make_ratio(1, 100), make_ratio(1, 4), make_ratio(1, 2), make_ratio(3, 4),
                                     make_ratio(99, 100), make_ratio(1, 1), make_ratio(101, 100), make_ratio(5, 4),
                                     make_ratio(2, 1), make_ratio(3, 1), Scalar(stabilization_threshold(2, g) + 1)};
    bool exact_below_one = true;
    for (const auto& a : alphas) exact_below_one = exact_below_one && subsystem_violates(full, sub, a) == (a < 1);
    const bool ok = stable && has_one && exact_below_one;
    res.passed = res.passed && ok;
    detail << "g=" << g << (ok ? " ok" : " FAIL") << (g < 8 ? "; " : "");
  }
  res.detail = detail.str();
  return res;
}

CriterionResult thresholds() {
  CriterionResult res{4, "stabilization threshold and critical-value bound", true, false, {}};
  bool table_ok = true;
  for (std::int64_t r = 1; r <= 6; ++r)
    for (std::int64_t g = 1; g <= 6; ++g) table_ok = table_ok && stabilization_threshold(r, g) == g * (r - 1);

  // Strict bound as required: every critical value of (r, rg, r) coming from
  // a subtype with k' < s lies strictly below g(r−1). Also tracked: the
  // per-subtype bound α <= g(r−s)/(s−k') <= g(r−1).
  std::size_t checked = 0, strict_violations = 0, weak_violations = 0;
  std::string first_strict;
  for (std::int64_t r = 2; r <= 6; ++r)
    for (std::int64_t g = 1; g <= 6; ++g) {
      const Scalar cap(g * (r - 1));
      for (const auto& w : critical_value_witnesses(SystemType{r, r * g, r})) {
        if (w.subtype.k >= w.subtype.r) continue;
        ++checked;
        const Scalar per_subtype = make_ratio(g * (r - w.subtype.r), w.subtype.r - w.subtype.k);
        if (w.alpha > per_subtype || per_subtype > cap) ++weak_violations;
        if (!(w.alpha < cap)) {
          if (strict_violations++ == 0)
            first_strict = "(r,g)=(" + std::to_string(r) + "," + std::to_string(g) + ") subtype (" +
                           std::to_string(w.subtype.r) + "," + std::to_string(w.subtype.d) + "," +
                           std::to_string(w.subtype.k) + ") gives alpha=" + format_scalar(w.alpha) +
                           ", not below g(r-1)=" + format_scalar(cap);
        }
      }
    }
  res.passed = table_ok && strict_violations == 0;
  res.detail = std::string("threshold table ") + (table_ok ? "ok" : "FAIL") + "; " + std::to_string(checked) +
               " k'<s critical values checked; strict bound alpha < g(r-1) violated " +
               std::to_string(strict_violations) + " times" +
               (first_strict.empty() ? "" : " (first: " + first_strict + ")") +
               "; non-strict bound alpha <= g(r-s)/(s-k') <= g(r-1) violated " + std::to_string(weak_violations) +
               " times";
  return res;
}

namespace {

bool frame_in_general_position(const PointConfiguration& c) {
  const std::size_t r = c.ambient_rank();
  if (c.size() < r + 1) return false;
  // Every r of the first r+1 points independent.
  for (std::size_t skip = 0; skip <= r; ++skip) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i <= r; ++i)
      if (i != skip) rows.push_back(c[i].coords());
    if (rank(rows) != r) return false;
  }
  return true;
}

}  // namespace

CriterionResult gale_suite(std::uint64_t seed, std::size_t involution_cases, std::size_t conic_cases,
                           std::size_t generic_cases) {
  CriterionResult res{5, "Gale transform", true, false, {}};
  std::mt19937_64 rng(seed ^ 0x5555);
  std::size_t involution_ok = 0, condition_ok = 0, transforms = 0;
  std::size_t done = 0;
  while (done < involution_cases) {
    std::vector<Vector> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(random_vector(rng, 3, 3));
    const PointConfiguration c(3, pts);
    if (!frame_in_general_position(c) || rank(c.coordinate_matrix()) != 3) continue;
    std::optional<GaleData> first;
    try {
      first = gale_transform(c);
    } catch (const Error&) {
      continue;
    }
    if (!frame_in_general_position(first->target)) continue;
    const GaleData second = gale_transform(first->target);
    transforms += 2;
    condition_ok += gale_condition_holds(*first) + gale_condition_holds(second);
    if (projectively_equivalent(c, second.target)) ++involution_ok;
    ++done;
  }

  std::size_t conic_self = 0, conic_detected = 0;
  for (std::size_t i = 0; i < conic_cases;) {
    std::set<long> params;
    std::uniform_int_distribution<long> t(-6, 6);
    while (params.size() < 6) params.insert(t(rng));
    std::vector<Vector> pts;
    for (long p : params) pts.push_back({Scalar(p), Scalar(p * p), Scalar(1)});
    std::shuffle(pts.begin(), pts.end(), rng);
    Matrix a(3, 3);
    do {
      for (std::size_t r = 0; r < 3; ++r) {
        const Vector row = random_vector(rng, 3, 3);
        for (std::size_t col = 0; col < 3; ++col) a(r, col) = row[col];
      }
    } while (sgn(determinant(a)) == 0);
    const PointConfiguration c = ProjectiveTransform(a).apply(PointConfiguration(3, pts));
    if (!frame_in_general_position(c)) continue;
    const GaleData gd = gale_transform(c);
    ++transforms;
    condition_ok += gale_condition_holds(gd);
    conic_detected += on_smooth_conic(c);
    conic_self += is_self_associated(c);
    ++i;
  }

  std::size_t generic_rejected = 0, generic_off_conic = 0;
  for (std::size_t i = 0; i < generic_cases;) {
    std::vector<Vector> pts;
    for (int k = 0; k < 6; ++k) pts.push_back(random_vector(rng, 3, 4));
    const PointConfiguration c(3, pts);
    if (!frame_in_general_position(c) || on_smooth_conic(c)) continue;
    std::optional<GaleData> gd;
    try {
      gd = gale_transform(c);
    } catch (const Error&) {
      continue;
    }
    if (!frame_in_general_position(gd->target)) continue;
    ++transforms;
    condition_ok += gale_condition_holds(*gd);
    ++generic_off_conic;
    generic_rejected += !is_self_associated(c);
    ++i;
  }

  res.passed = involution_ok == involution_cases && conic_self == conic_cases && conic_detected == conic_cases &&
               generic_rejected == generic_cases && generic_off_conic == generic_cases && condition_ok == transforms;
  res.detail = "involution " + std::to_string(involution_ok) + "/" + std::to_string(involution_cases) +
               "; conic self-associated " + std::to_string(conic_self) + "/" + std::to_string(conic_cases) +
               "; generic not self-associated " + std::to_string(generic_rejected) + "/" +
               std::to_string(generic_cases) + "; G^T D G' = 0 in " + std::to_string(condition_ok) + "/" +
               std::to_string(transforms) + " transforms";
  return res;
}

CriterionResult segre_suite(std::uint64_t seed, std::size_t search) {
  CriterionResult res{6, "Segre cubic nodes", false, false, {}};
  const SegreReport rep = verify_segre(search, seed);
  const auto ranks_ok = std::count_if(rep.nodes.begin(), rep.nodes.end(),
                                      [](const SegreNodeCheck& n) { return n.singular && n.hessian_rank == 4; });
  res.passed = rep.passed();
  res.detail = std::to_string(rep.nodes.size()) + " nodes, " + std::to_string(ranks_ok) +
               " singular with restricted Hessian rank 4; split bijection " + (rep.split_bijection ? "ok" : "FAIL") +
               "; search of " + std::to_string(rep.search.searched) + " points (" +
               std::to_string(rep.search.on_hypersurface) + " on the cubic) found " +
               std::to_string(rep.search.unexpected.size()) + " further singular points";
  return res;
}

CriterionResult igusa_suite() {
  CriterionResult res{7, "Igusa quartic singular lines and 15_3", false, false, {}};
  const IgusaReport rep = verify_igusa();
  res.passed = rep.passed();
  res.detail = "model " + format_scalar(rep.coefficient_a) + "*p2^2 + " + format_scalar(rep.coefficient_b) +
               "*p4; " + std::to_string(rep.singular_lines) + "/15 lines singular; " +
               std::to_string(rep.singular_points) + "/15 points singular; " + std::to_string(rep.flags) +
               " geometric flags " + (rep.incidence_match ? "match" : "DIFFER FROM") + " the abstract 15_3";
  return res;
}

CriterionResult duality_suite(std::size_t samples, std::uint64_t seed) {
  CriterionResult res{8, "Segre/Igusa polar duality", false, false, {}};
  if (samples == 0) {
    res.passed = true;
    res.skipped = true;
    res.detail = "skipped (0 samples)";
    return res;
  }
  const DualityReport rep = duality_check(samples, seed);
  res.passed = rep.passed();
  res.detail = "forward " + std::to_string(rep.forward_ok) + "/" + std::to_string(rep.samples) + "; reverse " +
               std::to_string(rep.reverse_ok) + "/" + std::to_string(rep.samples) + "; round trip " +
               std::to_string(rep.round_trip_ok) + "/" + std::to_string(rep.samples);
  return res;
}

CriterionResult combinatorics() {
  CriterionResult res{9, "matching and split combinatorics", false, false, {}};
  const auto matchings = perfect_matchings();
  const auto splits = splits_3_3();
  const auto edges = edges_of_k6();
  std::set<std::string> distinct_m, distinct_s;
  bool sizes_ok = true;
  for (const auto& m : matchings) {
    distinct_m.insert(m.label());
    std::set<int> covered;
    for (const auto& [a, b] : m.pairs) {
      covered.insert(a);
      covered.insert(b);
    }
    sizes_ok = sizes_ok && covered.size() == 6;
  }
  for (const auto& s : splits) distinct_s.insert(s.label());
  bool degree_ok = true;
  for (const auto& e : edges) {
    const auto deg = std::count_if(matchings.begin(), matchings.end(), [&](const Matching& m) { return m.contains(e); });
    degree_ok = degree_ok && deg == 3;
  }
  // 5·3·1 matchings and C(6,3)/2 splits.
  res.passed = matchings.size() == 15 && distinct_m.size() == 15 && splits.size() == 10 && distinct_s.size() == 10 &&
               edges.size() == 15 && degree_ok && sizes_ok;
  res.detail = std::to_string(distinct_m.size()) + " matchings, " + std::to_string(distinct_s.size()) +
               " splits, edge degree 3: " + (degree_ok ? "yes" : "no") + ", matching size 3: " +
               (sizes_ok ? "yes" : "no");
  return res;
}

Report verify_all(const Options& opts) {
  Report rep;
  rep.criteria.push_back(git_oracle_equivalence(opts.seed));
  rep.criteria.push_back(git_alpha_dictionary(opts.seed));
  rep.criteria.push_back(destabilized_example());
  rep.criteria.push_back(thresholds());
  rep.criteria.push_back(gale_suite(opts.seed));
  rep.criteria.push_back(segre_suite(opts.seed));
  rep.criteria.push_back(igusa_suite());
  rep.criteria.push_back(duality_suite(opts.samples, opts.seed));
  rep.criteria.push_back(combinatorics());
  return rep;
}

}  // namespace stab::acceptance
