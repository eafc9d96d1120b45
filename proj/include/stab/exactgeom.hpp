#pragma once

// Exact rational arithmetic and projective linear algebra.
//
// Every value in this header is an immutable value type; all free functions
// are pure. Scalars are GMP rationals, so every comparison is exact.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stab {

using Scalar = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Scalar>;

enum class ErrorCode {
  InvalidArgument,
  Parse,
  Schema,
  IndexOutOfRange,
  SizeMismatch,
  TooLarge,
  Degenerate,
  FrameDegenerate,
  RowElimination,
  SingularPoint,
  NotOnHypersurface,
  PencilSearchFailed,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parses "p/q", "-p/q" or a bare integer. Rejects zero denominators and
/// anything that is not a plain decimal rational.
Scalar parse_scalar(std::string_view text);

/// n/d in lowest terms; d != 0.
Scalar make_ratio(long n, long d);

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string format_scalar(const Scalar& value);

/// Dense row-major matrix of Scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix transpose() const;
  bool is_zero() const;

  Vector operator*(const Vector& v) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination over the integers.
std::size_t rank(const Matrix& m);
std::size_t rank(const std::vector<Vector>& rows);

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};
RowEchelon rref(const Matrix& m);

Scalar determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column of the echelon form.
std::vector<Vector> kernel_basis(const Matrix& m);

Scalar dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);

/// True iff a and b are nonzero and span the same line.
bool proportional(const Vector& a, const Vector& b);

/// Rescales v to a primitive integer vector with positive leading entry.
Vector canonical_projective(const Vector& v);

/// A point of P^{r-1} given by r homogeneous coordinates, kept in canonical
/// form so that equality is syntactic.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(const Vector& coords);

  const Vector& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  Vector coords_;
};

/// Ordered points of P^{r-1}. Repeated points are allowed and meaningful.
class PointConfiguration {
 public:
  PointConfiguration(std::size_t ambient_rank, std::vector<ProjectivePoint> points);
  PointConfiguration(std::size_t ambient_rank, const std::vector<Vector>& coords);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const ProjectivePoint& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<ProjectivePoint>& points() const noexcept { return points_; }

  /// n x r matrix, one row per point.
  Matrix coordinate_matrix() const;

  friend bool operator==(const PointConfiguration&, const PointConfiguration&) = default;

 private:
  std::size_t ambient_rank_;
  std::vector<ProjectivePoint> points_;
};

struct LinearSubspace {
  std::vector<Vector> basis;  // linearly independent
  std::size_t ambient = 0;

  std::size_t dim() const noexcept { return basis.size(); }
  bool contains(const Vector& v) const;

  /// Span of arbitrary generators; dependent ones are dropped.
  static LinearSubspace span_of(const std::vector<Vector>& generators, std::size_t ambient);
};

class ProjectiveTransform {
 public:
  explicit ProjectiveTransform(Matrix matrix);
  static ProjectiveTransform identity(std::size_t r);

  const Matrix& matrix() const noexcept { return matrix_; }
  std::size_t rank() const noexcept { return matrix_.rows(); }

  ProjectivePoint apply(const ProjectivePoint& p) const;
  PointConfiguration apply(const PointConfiguration& c) const;
  ProjectiveTransform inverse() const;
  ProjectiveTransform then(const ProjectiveTransform& next) const;  // next ∘ this

  /// Equality as projective maps (matrices proportional).
  bool same_as(const ProjectiveTransform& other) const;

 private:
  Matrix matrix_;
};

std::size_t span_dim(const PointConfiguration& config, std::span<const std::size_t> subset);
LinearSubspace span(const PointConfiguration& config, std::span<const std::size_t> subset);

/// Looks for A with A·c1[i] ∼ c2[i] for every i by sending the leading
/// projective frame of each configuration to the standard one.
/// Throws FrameDegenerate when a leading frame is not in general position.
std::optional<ProjectiveTransform> projectively_equivalent(const PointConfiguration& c1,
                                                           const PointConfiguration& c2);

}  // namespace stab
