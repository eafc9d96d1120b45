#pragma once

// The end-to-end acceptance checks, shared by `stab verify-all` and the
// acceptance test binary. Each check is deterministic for a fixed seed.

#include "stab/exactgeom.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace stab::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

struct Report {
  std::vector<CriterionResult> criteria;
  bool passed() const;
};

struct Options {
  std::size_t samples = 200;  // duality samples; 0 skips the sampled check
  std::uint64_t seed = 7;
};

/// Random configuration mixing generic points, repeated points and points
/// forced onto a common line, so that all three verdict classes occur.
PointConfiguration random_configuration(std::mt19937_64& rng, std::size_t ambient_rank, std::size_t n);

CriterionResult git_oracle_equivalence(std::uint64_t seed, std::size_t cases = 1000);
CriterionResult git_alpha_dictionary(std::uint64_t seed, std::size_t cases = 1000);
CriterionResult destabilized_example();
CriterionResult thresholds();
CriterionResult gale_suite(std::uint64_t seed, std::size_t involution_cases = 100, std::size_t conic_cases = 10,
                           std::size_t generic_cases = 10);
CriterionResult segre_suite(std::uint64_t seed, std::size_t search = 10000);
CriterionResult igusa_suite();
CriterionResult duality_suite(std::size_t samples, std::uint64_t seed);
CriterionResult combinatorics();

Report verify_all(const Options& opts);

}  // namespace stab::acceptance
