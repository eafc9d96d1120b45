#include "stab/gitstab.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace stab;
using stab::test::config;

namespace {

// Minimum of s·g − k over subsets whose span is proper, by bitmask
// enumeration and the test-side rank. Empty when no proper span exists.
std::optional<Scalar> brute_min(const PointConfiguration& c, const Scalar& g) {
  std::optional<Scalar> best;
  const std::size_t n = c.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) rows.push_back(c[i].coords());
    const std::size_t s = stab::test::oracle_rank(rows);
    if (s >= c.ambient_rank()) continue;
    const Scalar v = g * static_cast<unsigned long>(s) - static_cast<unsigned long>(rows.size());
    if (!best || v < *best) best = v;
  }
  return best;
}

StabilityClass brute_class(const PointConfiguration& c, const Scalar& g) {
  const auto m = brute_min(c, g);
  if (!m || sgn(*m) > 0) return StabilityClass::Stable;
  return sgn(*m) < 0 ? StabilityClass::Unstable : StabilityClass::StrictlySemistable;
}

const PointConfiguration kStableSix = config(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}, {1, 4, 9}});
const PointConfiguration kTriple = config(3, {{1, 0, 0}, {1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {1, 2, 3}});
const PointConfiguration kPair = config(3, {{1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}});
const PointConfiguration kFiveOnLine =
    config(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0}, {0, 0, 1}});

PointConfiguration example_7_1() {
  return config(2, {{1, 0}, {1, 0}, {1, 0}, {1, 1}, {2, 1}, {3, 1}, {-1, 1}, {5, 1}});
}

void expect_witness_consistent(const PointConfiguration& c, const StabilityVerdict& v) {
  if (v.cls == StabilityClass::Stable) {
    EXPECT_FALSE(v.witness.has_value());
    return;
  }
  ASSERT_TRUE(v.witness.has_value());
  const auto& w = *v.witness;
  EXPECT_TRUE(std::is_sorted(w.indices.begin(), w.indices.end()));
  EXPECT_EQ(w.size, w.indices.size());
  EXPECT_EQ(span_dim(c, w.indices), w.span_dim);
  EXPECT_LT(w.span_dim, c.ambient_rank());
  const Scalar value = v.weight_g * static_cast<unsigned long>(w.span_dim) - static_cast<unsigned long>(w.size);
  EXPECT_EQ(value, *brute_min(c, v.weight_g));
  if (v.cls == StabilityClass::Unstable) EXPECT_LT(sgn(value), 0);
  else EXPECT_EQ(sgn(value), 0);
}

}  // namespace

TEST(Classify, GenericSixPointsStable) {
  const auto v = classify(kStableSix, 2);
  EXPECT_EQ(v.cls, StabilityClass::Stable);
  EXPECT_FALSE(v.witness);
  EXPECT_EQ(oracle_classify(kStableSix, 2).cls, StabilityClass::Stable);
}

TEST(Classify, TriplePointUnstable) {
  const auto v = classify(kTriple, 2);
  ASSERT_EQ(v.cls, StabilityClass::Unstable);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->indices, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(v.witness->span_dim, 1u);
  EXPECT_EQ(v.witness->size, 3u);
  EXPECT_EQ(oracle_classify(kTriple, 2).witness, v.witness);
}

TEST(Classify, DestabilizedExampleStable) {
  EXPECT_EQ(classify(example_7_1(), 4).cls, StabilityClass::Stable);
  EXPECT_EQ(oracle_classify(example_7_1(), 4).cls, StabilityClass::Stable);
}

TEST(Classify, CoincidentPairStrictlySemistable) {
  const auto v = classify(kPair, 2);
  ASSERT_EQ(v.cls, StabilityClass::StrictlySemistable);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->indices, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(v.witness->span_dim, 1u);
  EXPECT_EQ(v.witness->size, 2u);
  EXPECT_EQ(oracle_classify(kPair, 2).witness, v.witness);
}

TEST(Classify, FiveCollinearUnstable) {
  const auto v = oracle_classify(kFiveOnLine, 2);
  ASSERT_EQ(v.cls, StabilityClass::Unstable);
  EXPECT_EQ(v.witness->indices, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
  EXPECT_EQ(v.witness->span_dim, 2u);
  EXPECT_EQ(classify(kFiveOnLine, 2).witness, v.witness);
}

TEST(Classify, RejectsBadInput) {
  EXPECT_THROW(classify(kStableSix, 0), Error);
  EXPECT_THROW(classify(kStableSix, -1), Error);
  EXPECT_THROW(oracle_classify(kStableSix, 0), Error);
}

TEST(Classify, RankOneIsStable) {
  const auto c = config(1, {{1}, {2}, {-3}});
  EXPECT_EQ(classify(c, 1).cls, StabilityClass::Stable);
  EXPECT_EQ(oracle_classify(c, 1).cls, StabilityClass::Stable);
}

TEST(WorstSubspace, Examples) {
  const auto w = worst_subspace(kTriple, 2);
  EXPECT_EQ(w.margin, 1);
  EXPECT_EQ(w.subspace.dim(), 1u);
  EXPECT_TRUE(w.subspace.contains(stab::test::vec({1, 0, 0})));
  EXPECT_EQ(w.indices, (std::vector<std::size_t>{0, 1, 2}));

  EXPECT_LT(sgn(worst_subspace(kStableSix, 2).margin), 0);
  EXPECT_EQ(worst_subspace(kPair, 2).margin, 0);

  const auto same = config(3, {{1, 2, 3}, {2, 4, 6}, {-1, -2, -3}, {1, 2, 3}, {3, 6, 9}});
  const auto ws = worst_subspace(same, make_ratio(3, 2));
  EXPECT_EQ(ws.subspace.dim(), 1u);
  EXPECT_EQ(ws.margin, 5 - make_ratio(3, 2));
}

TEST(WorstSubspace, SignMatchesClass) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = stab::test::random_points(rng, 3, 6, 1);
    const Scalar g = make_ratio(1 + trial % 4, 1 + trial % 2);
    const auto cls = classify(c, g).cls;
    const int sign = sgn(worst_subspace(c, g).margin);
    EXPECT_EQ(sign > 0, cls == StabilityClass::Unstable);
    EXPECT_EQ(sign == 0, cls == StabilityClass::StrictlySemistable);
  }
}

TEST(Oracle, Cap) {
  std::vector<Vector> pts(13, stab::test::vec({1, 0}));
  const PointConfiguration big(2, pts);
  try {
    oracle_classify(big, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
  EXPECT_EQ(oracle_classify(big, 2, 13).cls, StabilityClass::Unstable);
  EXPECT_EQ(classify(big, 2).cls, StabilityClass::Unstable);
}

TEST(Classify, AgreesWithBruteForce) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t r = 2 + trial % 2;
    const std::size_t n = 3 + trial % 6;
    const auto c = stab::test::random_points(rng, r, n, 1);
    const Scalar g = make_ratio(1 + trial % 5, 1 + trial % 3);
    const auto v = classify(c, g);
    EXPECT_EQ(v.cls, brute_class(c, g));
    expect_witness_consistent(c, v);
    const auto o = oracle_classify(c, g);
    EXPECT_EQ(o.cls, v.cls);
    EXPECT_EQ(o.witness, v.witness);
  }
}

TEST(Classify, InvariantUnderSymmetries) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 2 + trial % 2;
    const auto c = stab::test::random_points(rng, r, 2 * r, 1);
    const Scalar g = 2;
    const auto cls = classify(c, g).cls;

    auto pts = c.points();
    std::shuffle(pts.begin(), pts.end(), rng);
    EXPECT_EQ(classify(PointConfiguration(r, pts), g).cls, cls);

    std::vector<Vector> scaled;
    for (const auto& p : c.points()) {
      Vector v = p.coords();
      static const long factors[] = {-3, -2, -1, 1, 2, 3};
      const Scalar s = make_ratio(factors[rng() % 6], 1 + static_cast<long>(rng() % 3));
      for (auto& x : v) x *= s;
      scaled.push_back(v);
    }
    EXPECT_EQ(classify(PointConfiguration(r, scaled), g).cls, cls);

    const ProjectiveTransform a(stab::test::random_invertible(rng, r));
    EXPECT_EQ(classify(a.apply(c), g).cls, cls);
  }
}

TEST(Classify, DegenerateSpanIsUnstable) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    // Six points in the plane z = 0 of rank 3, g = 2.
    std::vector<Vector> pts;
    for (int i = 0; i < 6; ++i) {
      Vector v = stab::test::random_vector(rng, 2, 3);
      v.push_back(0);
      pts.push_back(v);
    }
    EXPECT_EQ(classify(PointConfiguration(3, pts), 2).cls, StabilityClass::Unstable);
  }
}

TEST(Classify, DuplicatingNeverImproves) {
  std::mt19937_64 rng(45);
  auto order = [](StabilityClass c) {
    return c == StabilityClass::Stable ? 0 : c == StabilityClass::StrictlySemistable ? 1 : 2;
  };
  for (int trial = 0; trial < 150; ++trial) {
    const auto c = stab::test::random_points(rng, 3, 5, 2);
    const Scalar g = make_ratio(5, 3);
    auto pts = c.points();
    pts.push_back(pts[rng() % pts.size()]);
    EXPECT_GE(order(classify(PointConfiguration(3, pts), g).cls), order(classify(c, g).cls));
  }
}

TEST(ProperFlats, ClosedAndProper) {
  const auto flats = proper_flats(kFiveOnLine);
  for (const auto& f : flats) {
    EXPECT_LT(f.dim, 3u);
    EXPECT_EQ(span_dim(kFiveOnLine, f.indices), f.dim);
    for (std::size_t i = 0; i < kFiveOnLine.size(); ++i) {
      if (std::binary_search(f.indices.begin(), f.indices.end(), i)) continue;
      auto more = f.indices;
      more.push_back(i);
      std::sort(more.begin(), more.end());
      EXPECT_GT(span_dim(kFiveOnLine, more), f.dim);
    }
  }
  EXPECT_TRUE(std::any_of(flats.begin(), flats.end(), [](const Flat& f) {
    return f.indices == std::vector<std::size_t>{0, 1, 2, 3, 4};
  }));
}
