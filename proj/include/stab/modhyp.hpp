#pragma once

// Σ6-symmetric models of the Segre cubic and the Igusa quartic inside the
// hyperplane x1 + … + x6 = 0 of P^5, their singular loci, the 15_3
// edge/matching incidence, and the polar (gradient) maps between them.
//
// Labels for the underlying 6-element set are 1-based; everything else
// (vector positions, list indices) is 0-based.

#include "stab/exactgeom.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace stab {

inline constexpr std::size_t kCoords = 6;
using Coords6 = std::array<Scalar, kCoords>;
using Exponent = std::array<std::uint8_t, kCoords>;
using Permutation6 = std::array<std::size_t, kCoords>;

/// Polynomial in six variables with exact coefficients; zero terms never stored.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(const Scalar& c);
  static Polynomial variable(std::size_t i);
  /// x1^k + … + x6^k.
  static Polynomial power_sum(unsigned k);

  const std::map<Exponent, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::optional<unsigned> homogeneous_degree() const;

  Scalar evaluate(const Coords6& x) const;
  Polynomial derivative(std::size_t i) const;
  /// Substitutes x_i ↦ x_{perm[i]}.
  Polynomial permuted(const Permutation6& perm) const;

  Polynomial& operator+=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(const Exponent& e, const Scalar& c);
  std::map<Exponent, Scalar> terms_;
};

/// Nonzero point of the hyperplane Σx_i = 0, primitive integer coordinates
/// with positive leading entry.
class AmbientPoint {
 public:
  explicit AmbientPoint(const Coords6& coords);
  const Coords6& coords() const noexcept { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  friend bool operator==(const AmbientPoint&, const AmbientPoint&) = default;
  friend auto operator<=>(const AmbientPoint& a, const AmbientPoint& b) { return a.coords_ <=> b.coords_; }

 private:
  Coords6 coords_;
};

class SymmetricHypersurfaceModel {
 public:
  SymmetricHypersurfaceModel(std::string name, Polynomial equation);

  const std::string& name() const noexcept { return name_; }
  unsigned degree() const noexcept { return degree_; }
  const Polynomial& equation() const noexcept { return equation_; }

  Scalar evaluate(const Coords6& x) const { return equation_.evaluate(x); }
  Coords6 gradient(const Coords6& x) const;
  Matrix hessian(const Coords6& x) const;

  /// Invariance under all 720 coordinate permutations.
  bool is_symmetric() const;

 private:
  std::string name_;
  Polynomial equation_;
  unsigned degree_ = 0;
  std::array<Polynomial, kCoords> gradient_;
  std::array<std::array<Polynomial, kCoords>, kCoords> hessian_;
};

/// Σx³ on Σx = 0.
SymmetricHypersurfaceModel segre_cubic();

/// a·(Σx²)² + b·Σx⁴ on Σx = 0.
SymmetricHypersurfaceModel quartic_pencil_member(const Scalar& a, const Scalar& b);

/// Solves for the pencil member singular along all 15 matching-lines;
/// returns [a : b] scaled so that the first nonzero entry is 1.
std::optional<std::pair<Scalar, Scalar>> igusa_pencil_search();

/// (Σx²)² − 4Σx⁴, checked against its singular lines at construction;
/// falls back to the pencil search, and throws PencilSearchFailed if that
/// fails too.
SymmetricHypersurfaceModel igusa_quartic();

/// F(p) = 0 and ∇F(p) is a multiple of (1,…,1) (zero included).
bool verify_singular_point(const SymmetricHypersurfaceModel& model, const AmbientPoint& p);

/// Rank of the Hessian restricted to the hyperplane Σx = 0 (a 5×5 form).
std::size_t restricted_hessian_rank(const SymmetricHypersurfaceModel& model, const AmbientPoint& p);

// --- combinatorics of {1,…,6} ----------------------------------------------

/// Unordered partition into two triples; `first` holds the triple containing 1.
struct Split {
  std::array<int, 3> first;
  std::array<int, 3> second;
  std::string label() const;  // e.g. "123|456"
  friend bool operator==(const Split&, const Split&) = default;
};

/// Perfect matching: three pairs, each sorted, pairs ordered by first element.
struct Matching {
  std::array<std::pair<int, int>, 3> pairs;
  bool contains(std::pair<int, int> edge) const;
  std::string label() const;  // e.g. "12|34|56"
  friend bool operator==(const Matching&, const Matching&) = default;
};

std::vector<Split> splits_3_3();
std::vector<Matching> perfect_matchings();
/// The 15 edges {i<j} in lexicographic order.
std::vector<std::pair<int, int>> edges_of_k6();
std::string edge_label(std::pair<int, int> edge);

/// Normalizes a split given in either order, e.g. 456|123 → 123|456.
Split make_split(std::array<int, 3> a, std::array<int, 3> b);

// --- singular loci ----------------------------------------------------------

struct SegreNode {
  Split split;
  AmbientPoint point;  // +1 on split.first, −1 on split.second
};

/// The 10 nodes, one per 3+3 split, each checked singular.
std::vector<SegreNode> segre_nodes();

struct IgusaLine {
  Matching matching;
  Coords6 direction_t;  // first pair ↦ 1, third pair ↦ −1
  Coords6 direction_u;  // second pair ↦ 1, third pair ↦ −1
  Coords6 at(const Scalar& t, const Scalar& u) const;
  LinearSubspace as_subspace() const;
};

/// True iff F vanishes on the line and ∇F is proportional to (1,…,1) along it,
/// checked as polynomial identities in the line parameters.
bool line_is_singular(const SymmetricHypersurfaceModel& model, const IgusaLine& line);

/// One line per perfect matching, each verified singular on igusa_quartic().
std::vector<IgusaLine> igusa_lines();

struct IgusaPoint {
  std::pair<int, int> edge;  // positions holding −2
  AmbientPoint point;
};

/// Orbit of (1,1,1,1,−2,−2), indexed like edges_of_k6(), each verified singular.
std::vector<IgusaPoint> igusa_points();

struct IncidenceStructure {
  std::vector<std::string> points;
  std::vector<std::string> lines;
  std::set<std::pair<std::size_t, std::size_t>> flags;  // (point, line)

  /// 15 points, 15 lines, three points per line, three lines per point.
  bool is_configuration_15_3() const;
};

/// Edges of K6 as points, perfect matchings as lines, membership as incidence.
IncidenceStructure incidence_15_3();

/// Same labels as incidence_15_3(), flags computed from coordinates: the
/// Igusa point lies in the linear span of the Igusa line.
IncidenceStructure geometric_incidence();

// --- polar maps and duality -------------------------------------------------

/// Gradient at p minus its coordinate mean, in canonical form. Requires
/// F(p) = 0 (NotOnHypersurface) and a nonsingular p (SingularPoint).
AmbientPoint polar_map(const SymmetricHypersurfaceModel& model, const AmbientPoint& p);

/// Rational points of the Segre cubic: the third intersection of a random
/// line through a node, avoiding the 15 planes. Reproducible for a fixed seed.
std::vector<AmbientPoint> sample_segre_points(std::size_t count, std::uint64_t seed);

struct DualityReport {
  std::size_t samples = 0;
  std::size_t forward_ok = 0;    // igusa(polar_segre(x)) == 0
  std::size_t reverse_ok = 0;    // segre(polar_igusa(y)) == 0
  std::size_t round_trip_ok = 0; // polar_igusa(polar_segre(x)) == x
  std::vector<AmbientPoint> forward_failures;
  std::vector<AmbientPoint> reverse_failures;
  bool passed() const { return forward_ok == samples && reverse_ok == samples; }
};

DualityReport duality_check(std::size_t samples, std::uint64_t seed);

struct SingularSearchReport {
  std::size_t searched = 0;
  std::size_t on_hypersurface = 0;
  std::size_t singular_found = 0;
  std::vector<AmbientPoint> unexpected;  // singular but not a known node
};

/// Random singular-point search on the Segre cubic: half the draws are
/// integer points of the hyperplane, half are sampled on the cubic.
SingularSearchReport segre_singular_search(std::size_t count, std::uint64_t seed);

struct SegreNodeCheck {
  SegreNode node;
  bool singular = false;
  std::size_t hessian_rank = 0;
};

struct SegreReport {
  bool symmetric = false;
  std::vector<SegreNodeCheck> nodes;
  bool nodes_distinct = false;
  bool split_bijection = false;
  SingularSearchReport search;
  bool passed() const;
};

SegreReport verify_segre(std::size_t search_count, std::uint64_t seed);

struct IgusaReport {
  bool symmetric = false;
  Scalar coefficient_a;  // of (Σx²)²
  Scalar coefficient_b;  // of Σx⁴
  bool pencil_search_agrees = false;
  std::size_t singular_lines = 0;
  std::size_t singular_points = 0;
  bool abstract_is_15_3 = false;
  bool incidence_match = false;
  std::size_t flags = 0;
  bool passed() const;
};

IgusaReport verify_igusa();

}  // namespace stab
