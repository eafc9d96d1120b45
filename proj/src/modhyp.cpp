#include "stab/modhyp.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace stab {

// ---------------------------------------------------------------------------
// Polynomial

void Polynomial::add_term(const Exponent& e, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::constant(const Scalar& c) {
  Polynomial p;
  p.add_term(Exponent{}, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t i) {
  Exponent e{};
  e.at(i) = 1;
  Polynomial p;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::power_sum(unsigned k) {
  Polynomial p;
  for (std::size_t i = 0; i < kCoords; ++i) {
    Exponent e{};
    e[i] = static_cast<std::uint8_t>(k);
    p.add_term(e, 1);
  }
  return p;
}

std::optional<unsigned> Polynomial::homogeneous_degree() const {
  std::optional<unsigned> deg;
  for (const auto& [e, c] : terms_) {
    const unsigned d = std::accumulate(e.begin(), e.end(), 0U);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

Scalar Polynomial::evaluate(const Coords6& x) const {
  Scalar total = 0;
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < kCoords; ++i)
      for (std::uint8_t k = 0; k < e[i]; ++k) term *= x[i];
    total += term;
  }
  return total;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  Polynomial d;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    --f[i];
    d.add_term(f, c * static_cast<unsigned long>(e[i]));
  }
  return d;
}

Polynomial Polynomial::permuted(const Permutation6& perm) const {
  Polynomial p;
  for (const auto& [e, c] : terms_) {
    Exponent f{};
    for (std::size_t i = 0; i < kCoords; ++i) f[perm[i]] = e[i];
    p.add_term(f, c);
  }
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Scalar(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e{};
      for (std::size_t i = 0; i < kCoords; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      p.add_term(e, ca * cb);
    }
  return p;
}

Polynomial operator*(const Scalar& c, const Polynomial& q) {
  Polynomial p;
  for (const auto& [e, x] : q.terms_) p.add_term(e, c * x);
  return p;
}

// ---------------------------------------------------------------------------
// Points and models

namespace {

Vector to_vector(const Coords6& c) { return Vector(c.begin(), c.end()); }

Coords6 to_coords(const Vector& v) {
  Coords6 c;
  std::copy(v.begin(), v.end(), c.begin());
  return c;
}

bool all_equal(const Coords6& v) {
  return std::all_of(v.begin(), v.end(), [&](const Scalar& x) { return x == v[0]; });
}

}  // namespace

AmbientPoint::AmbientPoint(const Coords6& coords) {
  Scalar sum = 0;
  for (const auto& x : coords) sum += x;
  if (sgn(sum) != 0) throw Error(ErrorCode::InvalidArgument, "point does not lie on the hyperplane sum(x) = 0");
  coords_ = to_coords(canonical_projective(to_vector(coords)));
}

SymmetricHypersurfaceModel::SymmetricHypersurfaceModel(std::string name, Polynomial equation)
    : name_(std::move(name)), equation_(std::move(equation)) {
  const auto deg = equation_.homogeneous_degree();
  if (!deg || *deg == 0) throw Error(ErrorCode::InvalidArgument, "defining polynomial must be homogeneous of positive degree");
  degree_ = *deg;
  for (std::size_t i = 0; i < kCoords; ++i) gradient_[i] = equation_.derivative(i);
  for (std::size_t i = 0; i < kCoords; ++i)
    for (std::size_t j = 0; j < kCoords; ++j) hessian_[i][j] = gradient_[i].derivative(j);
}

Coords6 SymmetricHypersurfaceModel::gradient(const Coords6& x) const {
  Coords6 g;
  for (std::size_t i = 0; i < kCoords; ++i) g[i] = gradient_[i].evaluate(x);
  return g;
}

Matrix SymmetricHypersurfaceModel::hessian(const Coords6& x) const {
  Matrix h(kCoords, kCoords);
  for (std::size_t i = 0; i < kCoords; ++i)
    for (std::size_t j = 0; j < kCoords; ++j) h(i, j) = hessian_[i][j].evaluate(x);
  return h;
}

bool SymmetricHypersurfaceModel::is_symmetric() const {
  Permutation6 perm;
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    if (equation_.permuted(perm) != equation_) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

SymmetricHypersurfaceModel segre_cubic() { return SymmetricHypersurfaceModel("segre", Polynomial::power_sum(3)); }

SymmetricHypersurfaceModel quartic_pencil_member(const Scalar& a, const Scalar& b) {
  const Polynomial p2 = Polynomial::power_sum(2);
  return SymmetricHypersurfaceModel("igusa", a * (p2 * p2) + b * Polynomial::power_sum(4));
}

bool verify_singular_point(const SymmetricHypersurfaceModel& model, const AmbientPoint& p) {
  return sgn(model.evaluate(p.coords())) == 0 && all_equal(model.gradient(p.coords()));
}

std::size_t restricted_hessian_rank(const SymmetricHypersurfaceModel& model, const AmbientPoint& p) {
  // Basis e_i − e_6 (i = 1..5) of the hyperplane.
  Matrix basis(kCoords, kCoords - 1);
  for (std::size_t i = 0; i + 1 < kCoords; ++i) {
    basis(i, i) = 1;
    basis(kCoords - 1, i) = -1;
  }
  return rank(basis.transpose() * model.hessian(p.coords()) * basis);
}

// ---------------------------------------------------------------------------
// Combinatorics

std::string Split::label() const {
  std::string s;
  for (int x : first) s += std::to_string(x);
  s += '|';
  for (int x : second) s += std::to_string(x);
  return s;
}

Split make_split(std::array<int, 3> a, std::array<int, 3> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a[0] != 1) std::swap(a, b);
  return Split{a, b};
}

bool Matching::contains(std::pair<int, int> edge) const {
  if (edge.first > edge.second) std::swap(edge.first, edge.second);
  return std::find(pairs.begin(), pairs.end(), edge) != pairs.end();
}

std::string Matching::label() const {
  std::string s;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) s += '|';
    s += std::to_string(pairs[i].first) + std::to_string(pairs[i].second);
  }
  return s;
}

std::string edge_label(std::pair<int, int> edge) { return std::to_string(edge.first) + std::to_string(edge.second); }

std::vector<Split> splits_3_3() {
  std::vector<Split> out;
  // Triples containing 1 pick out each unordered split exactly once.
  for (int b = 2; b <= 6; ++b)
    for (int c = b + 1; c <= 6; ++c) {
      std::array<int, 3> rest{};
      std::size_t n = 0;
      for (int x = 2; x <= 6; ++x)
        if (x != b && x != c) rest[n++] = x;
      out.push_back(make_split({1, b, c}, rest));
    }
  return out;
}

namespace {

void extend_matchings(std::vector<int> remaining, std::vector<std::pair<int, int>>& partial,
                      std::vector<Matching>& out) {
  if (remaining.empty()) {
    Matching m;
    std::copy(partial.begin(), partial.end(), m.pairs.begin());
    out.push_back(m);
    return;
  }
  const int head = remaining.front();
  for (std::size_t i = 1; i < remaining.size(); ++i) {
    std::vector<int> rest;
    for (std::size_t j = 1; j < remaining.size(); ++j)
      if (j != i) rest.push_back(remaining[j]);
    partial.emplace_back(head, remaining[i]);
    extend_matchings(rest, partial, out);
    partial.pop_back();
  }
}

}  // namespace

std::vector<Matching> perfect_matchings() {
  std::vector<Matching> out;
  std::vector<std::pair<int, int>> partial;
  extend_matchings({1, 2, 3, 4, 5, 6}, partial, out);
  return out;
}

std::vector<std::pair<int, int>> edges_of_k6() {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) out.emplace_back(i, j);
  return out;
}

// ---------------------------------------------------------------------------
// Singular loci

std::vector<SegreNode> segre_nodes() {
  const auto model = segre_cubic();
  std::vector<SegreNode> nodes;
  for (const auto& split : splits_3_3()) {
    Coords6 c;
    for (int i : split.first) c[static_cast<std::size_t>(i - 1)] = 1;
    for (int i : split.second) c[static_cast<std::size_t>(i - 1)] = -1;
    AmbientPoint p(c);
    if (!verify_singular_point(model, p))
      throw Error(ErrorCode::InvalidArgument, "Segre node " + split.label() + " failed the singularity check");
    nodes.push_back(SegreNode{split, p});
  }
  return nodes;
}

Coords6 IgusaLine::at(const Scalar& t, const Scalar& u) const {
  Coords6 c;
  for (std::size_t i = 0; i < kCoords; ++i) c[i] = t * direction_t[i] + u * direction_u[i];
  return c;
}

LinearSubspace IgusaLine::as_subspace() const {
  return LinearSubspace::span_of({to_vector(direction_t), to_vector(direction_u)}, kCoords);
}

namespace {

IgusaLine line_for(const Matching& m) {
  IgusaLine line{m, {}, {}};
  auto set = [](Coords6& c, std::pair<int, int> e, long v) {
    c[static_cast<std::size_t>(e.first - 1)] = v;
    c[static_cast<std::size_t>(e.second - 1)] = v;
  };
  set(line.direction_t, m.pairs[0], 1);
  set(line.direction_t, m.pairs[1], 0);
  set(line.direction_t, m.pairs[2], -1);
  set(line.direction_u, m.pairs[0], 0);
  set(line.direction_u, m.pairs[1], 1);
  set(line.direction_u, m.pairs[2], -1);
  return line;
}

// deg+1 pairwise non-proportional parameters: a binary form of degree <= deg
// vanishing at all of them is identically zero.
std::vector<std::pair<Scalar, Scalar>> line_parameters(unsigned deg) {
  std::vector<std::pair<Scalar, Scalar>> params{{1, 0}, {0, 1}};
  for (long k = 1; params.size() < deg + 1; ++k) params.emplace_back(1, k);
  return params;
}

}  // namespace

bool line_is_singular(const SymmetricHypersurfaceModel& model, const IgusaLine& line) {
  for (const auto& [t, u] : line_parameters(model.degree())) {
    const Coords6 x = line.at(t, u);
    if (sgn(model.evaluate(x)) != 0 || !all_equal(model.gradient(x))) return false;
  }
  return true;
}

std::optional<std::pair<Scalar, Scalar>> igusa_pencil_search() {
  // Conditions linear in (a, b) for F = a·p2² + b·p4 along every matching-line:
  // F = 0 and ∂_i F − ∂_0 F = 0.
  const Polynomial p2 = Polynomial::power_sum(2);
  const Polynomial p2sq = p2 * p2;
  const Polynomial p4 = Polynomial::power_sum(4);
  std::vector<Vector> rows;
  for (const auto& m : perfect_matchings()) {
    const IgusaLine line = line_for(m);
    for (const auto& [t, u] : line_parameters(4)) {
      const Coords6 x = line.at(t, u);
      rows.push_back({p2sq.evaluate(x), p4.evaluate(x)});
      for (std::size_t i = 1; i < kCoords; ++i)
        rows.push_back({p2sq.derivative(i).evaluate(x) - p2sq.derivative(0).evaluate(x),
                        p4.derivative(i).evaluate(x) - p4.derivative(0).evaluate(x)});
    }
  }
  const auto kernel = kernel_basis(Matrix::from_rows(rows));
  if (kernel.size() != 1) return std::nullopt;
  Vector ab = kernel.front();
  const Scalar lead = sgn(ab[0]) != 0 ? ab[0] : ab[1];
  return std::pair<Scalar, Scalar>{ab[0] / lead, ab[1] / lead};
}

SymmetricHypersurfaceModel igusa_quartic() {
  auto candidate = quartic_pencil_member(1, -4);
  const auto matchings = perfect_matchings();
  const bool ok = std::all_of(matchings.begin(), matchings.end(),
                              [&](const Matching& m) { return line_is_singular(candidate, line_for(m)); });
  if (ok) return candidate;
  const auto ab = igusa_pencil_search();
  if (!ab) throw Error(ErrorCode::PencilSearchFailed, "no quartic in the pencil is singular along the 15 lines");
  return quartic_pencil_member(ab->first, ab->second);
}

std::vector<IgusaLine> igusa_lines() {
  const auto model = igusa_quartic();
  std::vector<IgusaLine> lines;
  for (const auto& m : perfect_matchings()) {
    IgusaLine line = line_for(m);
    if (!line_is_singular(model, line))
      throw Error(ErrorCode::InvalidArgument, "Igusa line " + m.label() + " is not singular");
    lines.push_back(std::move(line));
  }
  return lines;
}

std::vector<IgusaPoint> igusa_points() {
  const auto model = igusa_quartic();
  std::vector<IgusaPoint> points;
  for (const auto& e : edges_of_k6()) {
    Coords6 c;
    c.fill(1);
    c[static_cast<std::size_t>(e.first - 1)] = -2;
    c[static_cast<std::size_t>(e.second - 1)] = -2;
    AmbientPoint p(c);
    if (!verify_singular_point(model, p))
      throw Error(ErrorCode::InvalidArgument, "Igusa point " + edge_label(e) + " is not singular");
    points.push_back(IgusaPoint{e, p});
  }
  return points;
}

bool IncidenceStructure::is_configuration_15_3() const {
  if (points.size() != 15 || lines.size() != 15) return false;
  std::vector<int> per_point(points.size(), 0), per_line(lines.size(), 0);
  for (const auto& [p, l] : flags) {
    if (p >= points.size() || l >= lines.size()) return false;
    ++per_point[p];
    ++per_line[l];
  }
  auto three = [](int n) { return n == 3; };
  return std::all_of(per_point.begin(), per_point.end(), three) && std::all_of(per_line.begin(), per_line.end(), three);
}

namespace {

IncidenceStructure labelled_structure() {
  IncidenceStructure s;
  for (const auto& e : edges_of_k6()) s.points.push_back(edge_label(e));
  for (const auto& m : perfect_matchings()) s.lines.push_back(m.label());
  return s;
}

}  // namespace

IncidenceStructure incidence_15_3() {
  IncidenceStructure s = labelled_structure();
  const auto edges = edges_of_k6();
  const auto matchings = perfect_matchings();
  for (std::size_t p = 0; p < edges.size(); ++p)
    for (std::size_t l = 0; l < matchings.size(); ++l)
      if (matchings[l].contains(edges[p])) s.flags.emplace(p, l);
  if (!s.is_configuration_15_3()) throw Error(ErrorCode::InvalidArgument, "edge/matching incidence is not a 15_3");
  return s;
}

IncidenceStructure geometric_incidence() {
  IncidenceStructure s = labelled_structure();
  const auto points = igusa_points();
  const auto lines = igusa_lines();
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const LinearSubspace plane = lines[l].as_subspace();
    for (std::size_t p = 0; p < points.size(); ++p)
      if (plane.contains(to_vector(points[p].point.coords()))) s.flags.emplace(p, l);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Polar maps

AmbientPoint polar_map(const SymmetricHypersurfaceModel& model, const AmbientPoint& p) {
  if (sgn(model.evaluate(p.coords())) != 0)
    throw Error(ErrorCode::NotOnHypersurface, "point is not on the " + model.name() + " hypersurface");
  Coords6 g = model.gradient(p.coords());
  Scalar mean = 0;
  for (const auto& x : g) mean += x;
  mean /= static_cast<unsigned long>(kCoords);
  for (auto& x : g) x -= mean;
  if (std::all_of(g.begin(), g.end(), [](const Scalar& x) { return sgn(x) == 0; }))
    throw Error(ErrorCode::SingularPoint, "polar map undefined at a singular point of " + model.name());
  return AmbientPoint(g);
}

namespace {

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

std::vector<AmbientPoint> sample_segre_points(std::size_t count, std::uint64_t seed) {
  const auto nodes = segre_nodes();
  const auto planes = perfect_matchings();
  // The polar map contracts each plane x_a+x_b = x_c+x_d = x_e+x_f = 0 onto a
  // singular line of the quartic, so those points are resampled.
  auto on_plane = [&](const Coords6& x) {
    return std::any_of(planes.begin(), planes.end(), [&](const Matching& m) {
      return std::all_of(m.pairs.begin(), m.pairs.end(),
                         [&](const auto& e) { return sgn(x[e.first - 1] + x[e.second - 1]) == 0; });
    });
  };
  std::vector<AmbientPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto rng = sample_rng(seed, i);
    std::uniform_int_distribution<std::size_t> pick(0, nodes.size() - 1);
    std::uniform_int_distribution<long> entry(-50, 50);
    bool done = false;
    for (int attempt = 0; attempt < 1000 && !done; ++attempt) {
      const Coords6& node = nodes[pick(rng)].point.coords();
      Coords6 w;
      Scalar sum = 0;
      for (std::size_t j = 0; j + 1 < kCoords; ++j) {
        w[j] = entry(rng);
        sum += w[j];
      }
      w[kCoords - 1] = -sum;
      // F(ν + λw) = λ²(a2 + a3 λ) since F(ν) = 0 and ∇F(ν)·w = 0.
      Scalar a2 = 0, a3 = 0;
      for (std::size_t j = 0; j < kCoords; ++j) {
        a2 += 3 * node[j] * w[j] * w[j];
        a3 += w[j] * w[j] * w[j];
      }
      if (sgn(a3) == 0 || sgn(a2) == 0) continue;
      const Scalar lambda = -a2 / a3;
      Coords6 x;
      for (std::size_t j = 0; j < kCoords; ++j) x[j] = node[j] + lambda * w[j];
      if (on_plane(x)) continue;
      out.emplace_back(x);
      done = true;
    }
    if (!done) throw Error(ErrorCode::InvalidArgument, "could not draw a nondegenerate line through a node");
  }
  return out;
}

DualityReport duality_check(std::size_t samples, std::uint64_t seed) {
  const auto segre = segre_cubic();
  const auto igusa = igusa_quartic();
  DualityReport rep;
  rep.samples = samples;
  for (const auto& x : sample_segre_points(samples, seed)) {
    const AmbientPoint y = polar_map(segre, x);
    if (sgn(igusa.evaluate(y.coords())) == 0) {
      ++rep.forward_ok;
    } else {
      rep.forward_failures.push_back(x);
      rep.reverse_failures.push_back(y);
      continue;
    }
    try {
      const AmbientPoint z = polar_map(igusa, y);
      if (sgn(segre.evaluate(z.coords())) == 0) ++rep.reverse_ok;
      else rep.reverse_failures.push_back(y);
      if (z == x) ++rep.round_trip_ok;
    } catch (const Error&) {
      rep.reverse_failures.push_back(y);
    }
  }
  return rep;
}

SingularSearchReport segre_singular_search(std::size_t count, std::uint64_t seed) {
  const auto model = segre_cubic();
  const auto nodes = segre_nodes();
  SingularSearchReport rep;
  auto inspect = [&](const AmbientPoint& p) {
    ++rep.searched;
    if (sgn(model.evaluate(p.coords())) != 0) return;
    ++rep.on_hypersurface;
    if (!verify_singular_point(model, p)) return;
    ++rep.singular_found;
    const bool known = std::any_of(nodes.begin(), nodes.end(), [&](const SegreNode& n) { return n.point == p; });
    if (!known) rep.unexpected.push_back(p);
  };
  const std::size_t on_cubic = count / 2;
  auto rng = sample_rng(seed, ~std::uint64_t{0});
  std::uniform_int_distribution<long> entry(-3, 3);
  while (rep.searched < count - on_cubic) {
    Coords6 c;
    Scalar sum = 0;
    for (std::size_t j = 0; j + 1 < kCoords; ++j) {
      c[j] = entry(rng);
      sum += c[j];
    }
    c[kCoords - 1] = -sum;
    if (std::all_of(c.begin(), c.end(), [](const Scalar& x) { return sgn(x) == 0; })) continue;
    inspect(AmbientPoint(c));
  }
  for (const auto& p : sample_segre_points(on_cubic, seed ^ 0x5eed5eed5eed5eedULL)) inspect(p);
  return rep;
}

bool SegreReport::passed() const {
  const bool nodes_ok = nodes.size() == 10 && std::all_of(nodes.begin(), nodes.end(), [](const SegreNodeCheck& n) {
                          return n.singular && n.hessian_rank == 4;
                        });
  return symmetric && nodes_ok && nodes_distinct && split_bijection && search.unexpected.empty();
}

SegreReport verify_segre(std::size_t search_count, std::uint64_t seed) {
  const auto model = segre_cubic();
  SegreReport rep;
  rep.symmetric = model.is_symmetric();
  std::set<AmbientPoint> distinct;
  for (const auto& node : segre_nodes()) {
    rep.nodes.push_back(
        SegreNodeCheck{node, verify_singular_point(model, node.point), restricted_hessian_rank(model, node.point)});
    distinct.insert(node.point);
  }
  rep.nodes_distinct = distinct.size() == rep.nodes.size();

  // Each split determines its sign pattern; read the split back off the node.
  const auto splits = splits_3_3();
  std::set<std::string> recovered;
  bool consistent = rep.nodes.size() == splits.size();
  for (const auto& check : rep.nodes) {
    std::array<int, 3> plus{}, minus{};
    std::size_t np = 0, nm = 0;
    const auto& c = check.node.point.coords();
    for (std::size_t i = 0; i < kCoords; ++i) {
      const int label = static_cast<int>(i) + 1;
      if (c[i] == c[0] && np < 3) plus[np++] = label;
      else if (c[i] == -c[0] && nm < 3) minus[nm++] = label;
      else consistent = false;
    }
    if (np != 3 || nm != 3) consistent = false;
    const Split s = make_split(plus, minus);
    consistent = consistent && s == check.node.split;
    recovered.insert(s.label());
  }
  for (const auto& s : splits) consistent = consistent && recovered.count(s.label()) == 1;
  rep.split_bijection = consistent && recovered.size() == splits.size();
  rep.search = segre_singular_search(search_count, seed);
  return rep;
}

bool IgusaReport::passed() const {
  return symmetric && pencil_search_agrees && singular_lines == 15 && singular_points == 15 && abstract_is_15_3 &&
         incidence_match && flags == 45;
}

IgusaReport verify_igusa() {
  const auto model = igusa_quartic();
  IgusaReport rep;
  rep.symmetric = model.is_symmetric();
  // (Σx²)² contributes 2a to x1²x2² and a to x1⁴; Σx⁴ contributes b to x1⁴.
  const auto& terms = model.equation().terms();
  const auto mixed = terms.find(Exponent{2, 2, 0, 0, 0, 0});
  const auto pure = terms.find(Exponent{4, 0, 0, 0, 0, 0});
  rep.coefficient_a = mixed == terms.end() ? Scalar(0) : Scalar(mixed->second / 2);
  rep.coefficient_b = (pure == terms.end() ? Scalar(0) : pure->second) - rep.coefficient_a;
  if (const auto ab = igusa_pencil_search()) {
    rep.pencil_search_agrees = rep.coefficient_a * ab->second == rep.coefficient_b * ab->first;
  }
  for (const auto& m : perfect_matchings())
    if (line_is_singular(model, line_for(m))) ++rep.singular_lines;
  for (const auto& p : igusa_points())
    if (verify_singular_point(model, p.point)) ++rep.singular_points;
  const auto abstract = incidence_15_3();
  const auto geometric = geometric_incidence();
  rep.abstract_is_15_3 = abstract.is_configuration_15_3();
  rep.incidence_match = abstract.flags == geometric.flags && abstract.points == geometric.points &&
                        abstract.lines == geometric.lines;
  rep.flags = geometric.flags.size();
  return rep;
}

}  // namespace stab
