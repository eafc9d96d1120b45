#include "stab/gitstab.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace stab {

const char* to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::Stable: return "Stable";
    case StabilityClass::StrictlySemistable: return "StrictlySemistable";
    case StabilityClass::Unstable: return "Unstable";
  }
  return "Unknown";
}

namespace {

void require_positive(const Scalar& g) {
  if (sgn(g) <= 0) throw Error(ErrorCode::InvalidArgument, "weight g must be positive");
}

// Advances `idx` to the next k-combination of {0..n-1}; false when exhausted.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct Candidate {
  Scalar value;  // s·g − k
  StabilityWitness witness;
};

// Smaller value wins; ties go to the smaller subset, then lexicographic order.
bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.witness.size != b.witness.size) return a.witness.size < b.witness.size;
  return a.witness.indices < b.witness.indices;
}

StabilityVerdict verdict_from(const std::optional<Candidate>& best, const Scalar& g) {
  StabilityVerdict v{StabilityClass::Stable, std::nullopt, g};
  if (!best || sgn(best->value) > 0) return v;
  v.cls = sgn(best->value) < 0 ? StabilityClass::Unstable : StabilityClass::StrictlySemistable;
  v.witness = best->witness;
  return v;
}

}  // namespace

std::vector<Flat> proper_flats(const PointConfiguration& config) {
  const std::size_t n = config.size();
  const std::size_t r = config.ambient_rank();
  std::set<std::pair<std::size_t, std::vector<std::size_t>>> seen;
  for (std::size_t s = 1; s < r && s <= n; ++s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      std::vector<Vector> basis;
      for (auto i : idx) basis.push_back(config[i].coords());
      if (rank(basis) != s) continue;
      std::vector<std::size_t> members;
      for (std::size_t j = 0; j < n; ++j) {
        auto rows = basis;
        rows.push_back(config[j].coords());
        if (rank(rows) == s) members.push_back(j);
      }
      seen.emplace(s, std::move(members));
    } while (next_combination(idx, n));
  }
  std::vector<Flat> flats;
  flats.reserve(seen.size());
  for (auto& [dim, members] : seen) flats.push_back(Flat{members, dim});
  return flats;
}

StabilityVerdict classify(const PointConfiguration& config, const Scalar& g) {
  require_positive(g);
  if (config.empty()) throw Error(ErrorCode::InvalidArgument, "empty configuration");
  std::optional<Candidate> best;
  for (const auto& flat : proper_flats(config)) {
    Candidate c{Scalar(g * static_cast<unsigned long>(flat.dim)) - static_cast<unsigned long>(flat.indices.size()),
                StabilityWitness{flat.indices, flat.dim, flat.indices.size()}};
    if (!best || better(c, *best)) best = std::move(c);
  }
  return verdict_from(best, g);
}

WorstSubspace worst_subspace(const PointConfiguration& config, const Scalar& g) {
  require_positive(g);
  if (config.empty()) throw Error(ErrorCode::InvalidArgument, "empty configuration");
  const auto flats = proper_flats(config);
  if (flats.empty()) throw Error(ErrorCode::InvalidArgument, "no proper subspace in ambient rank 1");
  const Flat* worst = nullptr;
  Scalar worst_margin;
  for (const auto& f : flats) {
    Scalar m = Scalar(static_cast<unsigned long>(f.indices.size())) - g * static_cast<unsigned long>(f.dim);
    if (!worst || m > worst_margin || (m == worst_margin && (f.indices.size() < worst->indices.size() ||
                                                             (f.indices.size() == worst->indices.size() &&
                                                              f.indices < worst->indices)))) {
      worst = &f;
      worst_margin = m;
    }
  }
  return WorstSubspace{span(config, worst->indices), worst->indices, worst_margin};
}

StabilityVerdict oracle_classify(const PointConfiguration& config, const Scalar& g, std::size_t cap) {
  require_positive(g);
  if (config.empty()) throw Error(ErrorCode::InvalidArgument, "empty configuration");
  const std::size_t n = config.size();
  if (n > cap || n >= 63)
    throw Error(ErrorCode::TooLarge, "oracle enumeration capped at " + std::to_string(cap) + " points");
  const std::size_t r = config.ambient_rank();
  std::optional<Candidate> best;
  for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ULL << i)) subset.push_back(i);
    const std::size_t s = span_dim(config, subset);
    if (s >= r) continue;
    const std::size_t k = subset.size();
    Candidate c{Scalar(g * static_cast<unsigned long>(s)) - static_cast<unsigned long>(k),
                StabilityWitness{subset, s, k}};
    if (!best || c.value < best->value ||
        (c.value == best->value && (k < best->witness.size ||
                                    (k == best->witness.size && subset < best->witness.indices))))
      best = std::move(c);
  }
  return verdict_from(best, g);
}

}  // namespace stab
