#pragma once

// GIT stability of ordered point configurations under the diagonal PGL(r)
// action, via the numerical span criterion: a configuration is semistable
// (stable) when every subset spanning a proper linear subspace of dimension s
// has at most (fewer than) g·s points.

#include "stab/exactgeom.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace stab {

enum class StabilityClass { Stable, StrictlySemistable, Unstable };

const char* to_string(StabilityClass c);

struct StabilityWitness {
  std::vector<std::size_t> indices;  // sorted, 0-based
  std::size_t span_dim = 0;          // s
  std::size_t size = 0;              // k

  friend bool operator==(const StabilityWitness&, const StabilityWitness&) = default;
};

struct StabilityVerdict {
  StabilityClass cls = StabilityClass::Stable;
  std::optional<StabilityWitness> witness;  // absent iff Stable
  Scalar weight_g;
};

/// A subset closed under taking every point lying in its span.
struct Flat {
  std::vector<std::size_t> indices;  // sorted
  std::size_t dim = 0;               // linear dimension of the span
};

/// All flats spanned by configuration points whose span is a proper,
/// nonzero subspace, in increasing (dim, indices) order.
std::vector<Flat> proper_flats(const PointConfiguration& config);

/// Pruned classification: only flats are inspected, since any violating
/// subset can be enlarged to the flat it spans. Requires ambient rank >= 2.
StabilityVerdict classify(const PointConfiguration& config, const Scalar& g);

struct WorstSubspace {
  LinearSubspace subspace;
  std::vector<std::size_t> indices;  // points lying in the subspace
  Scalar margin;                     // #points - g·dim, maximised
};

WorstSubspace worst_subspace(const PointConfiguration& config, const Scalar& g);

inline constexpr std::size_t kDefaultOracleCap = 12;

/// Exhaustive check of every nonempty subset. Exponential; refuses
/// configurations with more than `cap` points (TooLarge).
StabilityVerdict oracle_classify(const PointConfiguration& config, const Scalar& g,
                                 std::size_t cap = kDefaultOracleCap);

}  // namespace stab
