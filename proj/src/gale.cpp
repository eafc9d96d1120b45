#include "stab/gale.hpp"

#include <random>

namespace stab {

namespace {

Matrix random_invertible(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-5, 5);
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    if (sgn(determinant(m)) != 0) return m;
  }
}

}  // namespace

GaleData gale_transform(const PointConfiguration& config, const GaleOptions& opts) {
  const std::size_t ambient = config.ambient_rank();
  const std::size_t gamma = config.size();
  if (gamma < ambient + 2)
    throw Error(ErrorCode::Degenerate, "Gale transform needs at least r+2 points in rank r");
  const Matrix g = config.coordinate_matrix();
  if (rank(g) != ambient) throw Error(ErrorCode::Degenerate, "configuration does not span its ambient space");

  const auto kernel = kernel_basis(g.transpose());  // γ − R vectors of length γ
  const std::size_t target_rank = kernel.size();
  Matrix gp(gamma, target_rank);
  for (std::size_t j = 0; j < target_rank; ++j)
    for (std::size_t i = 0; i < gamma; ++i) gp(i, j) = kernel[j][i];
  if (opts.seed) gp = gp * random_invertible(target_rank, *opts.seed);

  // A zero row stays zero under any change of kernel basis, so no
  // recombination can repair it.
  std::vector<ProjectivePoint> target;
  std::vector<Scalar> diag;
  target.reserve(gamma);
  for (std::size_t i = 0; i < gamma; ++i) {
    const Vector row = gp.row(i);
    if (is_zero(row))
      throw Error(ErrorCode::RowElimination,
                  "point " + std::to_string(i) + " lies outside the span of the others; its Gale image is undefined");
    ProjectivePoint p(row);
    // row = c·p for a nonzero c; then Gᵀ·diag(c)·P' = Gᵀ·G' = 0.
    std::size_t lead = 0;
    while (sgn(row[lead]) == 0) ++lead;
    diag.push_back(row[lead] / p[lead]);
    target.push_back(std::move(p));
  }
  return GaleData{config, PointConfiguration(target_rank, std::move(target)), std::move(diag)};
}

bool gale_condition_holds(const GaleData& data) {
  const Matrix g = data.source.coordinate_matrix();
  Matrix dgp = data.target.coordinate_matrix();
  if (g.rows() != dgp.rows() || data.diag.size() != g.rows()) return false;
  for (std::size_t i = 0; i < dgp.rows(); ++i) {
    if (sgn(data.diag[i]) == 0) return false;
    for (std::size_t j = 0; j < dgp.cols(); ++j) dgp(i, j) *= data.diag[i];
  }
  return (g.transpose() * dgp).is_zero();
}

bool is_self_associated(const PointConfiguration& config) {
  const GaleData gale = gale_transform(config);
  if (gale.target.ambient_rank() != config.ambient_rank()) return false;
  return projectively_equivalent(config, gale.target).has_value();
}

bool on_smooth_conic(const PointConfiguration& config) {
  if (config.ambient_rank() != 3 || config.size() != 6)
    throw Error(ErrorCode::InvalidArgument, "conic test expects 6 points in P^2");
  Matrix monomials(6, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& x = config[i][0];
    const auto& y = config[i][1];
    const auto& z = config[i][2];
    monomials(i, 0) = x * x;
    monomials(i, 1) = y * y;
    monomials(i, 2) = z * z;
    monomials(i, 3) = x * y;
    monomials(i, 4) = x * z;
    monomials(i, 5) = y * z;
  }
  const auto conics = kernel_basis(monomials);
  if (conics.size() != 1) return false;
  const Vector& c = conics.front();
  // a x² + b y² + c z² + d xy + e xz + f yz as a symmetric matrix.
  const Scalar half = make_ratio(1, 2);
  Matrix q(3, 3);
  q(0, 0) = c[0];
  q(1, 1) = c[1];
  q(2, 2) = c[2];
  q(0, 1) = q(1, 0) = c[3] * half;
  q(0, 2) = q(2, 0) = c[4] * half;
  q(1, 2) = q(2, 1) = c[5] * half;
  return sgn(determinant(q)) != 0;
}

}  // namespace stab
