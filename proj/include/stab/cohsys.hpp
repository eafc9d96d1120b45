#pragma once

// Numerical side of coherent systems of type (r, d, k): α-slopes, virtual
// critical values, the stabilization threshold for type (r, rg, r), and the
// dictionary between point configurations and the (s, d, s) subsystems they
// induce.

#include "stab/exactgeom.hpp"
#include "stab/gitstab.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace stab {

struct SystemType {
  std::int64_t r = 1;  // rank, >= 1
  std::int64_t d = 0;  // degree, >= 0
  std::int64_t k = 0;  // number of sections, >= 0

  void validate() const;
  friend bool operator==(const SystemType&, const SystemType&) = default;
  friend auto operator<=>(const SystemType&, const SystemType&) = default;
};

/// μ_α = d/r + α·k/r.
Scalar alpha_slope(const SystemType& t, const Scalar& alpha);

/// Enumeration bounds for subtypes (s, d', k'): 1 <= s <= r-1,
/// 0 <= d' <= max_degree, 0 <= k' <= max_sections. Unset bounds default to
/// the generating type's d and k.
struct CriticalValueOptions {
  std::optional<std::int64_t> max_degree;
  std::optional<std::int64_t> max_sections;
};

/// A subtype together with the α at which its slope ties the full system.
struct CriticalWitness {
  SystemType subtype;
  Scalar alpha;
};

struct CriticalValueSet {
  std::vector<Scalar> values;  // strictly increasing, all > 0
  SystemType generating_type;
};

/// Every (subtype, α > 0) pair with k'/s != k/r and equal α-slopes.
std::vector<CriticalWitness> critical_value_witnesses(const SystemType& t, const CriticalValueOptions& opts = {});

CriticalValueSet critical_values(const SystemType& t, const CriticalValueOptions& opts = {});

/// g(r-1): beyond it the moduli of type (r, rg, r) no longer change.
std::int64_t stabilization_threshold(std::int64_t r, std::int64_t g);

/// For each s in 1..r-1 the maximal type (s, d_max(s), s), where d_max(s) is
/// the largest number of points whose span has linear dimension <= s.
std::vector<SystemType> subsystem_types_from_config(const PointConfiguration& config);

struct AlphaVerdict {
  bool semistable = false;
  bool stable = false;
  std::vector<SystemType> subsystems;
};

/// Compares every span-induced subsystem against the full system (r, rg, r).
/// Requires |points| = r·g for an integer g (SizeMismatch otherwise).
AlphaVerdict alpha_check(const PointConfiguration& config, const Scalar& g, const Scalar& alpha);
bool alpha_semistable_config(const PointConfiguration& config, const Scalar& g, const Scalar& alpha);
bool alpha_stable_config(const PointConfiguration& config, const Scalar& g, const Scalar& alpha);

struct EquivalenceReport {
  StabilityVerdict git;
  Scalar alpha;  // g(r-1) + 1
  bool alpha_semistable = false;
  bool alpha_stable = false;
  bool agree = false;
};

EquivalenceReport equivalence_check(const PointConfiguration& config, std::int64_t g);

/// True iff μ_α(sub) > μ_α(full).
bool subsystem_violates(const SystemType& full, const SystemType& sub, const Scalar& alpha);

/// The rank-2 configuration of 2g points attached to the destabilized
/// coherent system of type (2, 2g, 2): g-1 copies of [1:0] followed by
/// [λ_i : 1] for g+1 distinct nonzero λ_i. Without λs, uses 1, …, g+1.
PointConfiguration destable_example(std::int64_t genus, const std::vector<Scalar>& lambdas = {});

}  // namespace stab
