#pragma once

// Shared helpers for the test suites. The oracles here deliberately avoid
// the library's own elimination and enumeration code.

#include "stab/exactgeom.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace stab::test {

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline PointConfiguration config(std::size_t r, std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<Vector> rows;
  for (auto p : pts) rows.push_back(vec(p));
  return PointConfiguration(r, rows);
}

// Plain Gauss-Jordan over the rationals, column by column.
inline std::size_t oracle_rank(std::vector<Vector> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const Scalar f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline Vector random_vector(std::mt19937_64& rng, std::size_t n, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  Vector v(n);
  do {
    for (auto& x : v) x = d(rng);
  } while (is_zero(v));
  return v;
}

inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n, long bound = 4) {
  Matrix a(n, n);
  do {
    for (std::size_t i = 0; i < n; ++i) {
      const Vector row = random_vector(rng, n, bound);
      for (std::size_t j = 0; j < n; ++j) a(i, j) = row[j];
    }
  } while (oracle_rank([&] {
             std::vector<Vector> rows;
             for (std::size_t i = 0; i < n; ++i) rows.push_back(a.row(i));
             return rows;
           }()) != n);
  return a;
}

// Every r of the first r+1 points independent.
inline bool leading_frame_general(const PointConfiguration& c) {
  const std::size_t r = c.ambient_rank();
  if (c.size() < r + 1) return false;
  for (std::size_t skip = 0; skip <= r; ++skip) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i <= r; ++i)
      if (i != skip) rows.push_back(c[i].coords());
    if (oracle_rank(rows) != r) return false;
  }
  return true;
}

inline PointConfiguration random_points(std::mt19937_64& rng, std::size_t r, std::size_t n, long bound) {
  std::vector<Vector> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(random_vector(rng, r, bound));
  return PointConfiguration(r, pts);
}

}  // namespace stab::test
