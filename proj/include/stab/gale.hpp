#pragma once

// Gale transform (association) of point configurations.
//
// γ points of P^{R-1} with coordinate matrix G (γ × R) are sent to γ points
// of P^{γ-R-1} whose coordinate matrix G' satisfies Gᵀ·D·G' = 0 for a
// nonsingular diagonal D. The result is defined up to projective equivalence.

#include "stab/exactgeom.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace stab {

struct GaleData {
  PointConfiguration source;
  PointConfiguration target;
  std::vector<Scalar> diag;  // nonzero; absorbs the canonical rescaling of target rows
};

struct GaleOptions {
  /// When set, the kernel basis is recombined by a seeded random invertible
  /// matrix. The result is projectively equivalent either way.
  std::optional<std::uint64_t> seed;
};

/// Throws Degenerate when the points do not span the ambient space or there
/// are too few of them, and RowElimination when some target row is forced to
/// vanish (a point outside the span of all the others).
GaleData gale_transform(const PointConfiguration& config, const GaleOptions& opts = {});

/// Gᵀ·D·G' == 0, evaluated exactly.
bool gale_condition_holds(const GaleData& data);

/// Projective equivalence (ordered) of a configuration with its Gale
/// transform. False when the transform lives in a different rank.
bool is_self_associated(const PointConfiguration& config);

/// Six points of P^2 lying on a unique conic that is nonsingular.
bool on_smooth_conic(const PointConfiguration& config);

}  // namespace stab
