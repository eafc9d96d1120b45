#include "stab/exactgeom.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace stab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Schema: return "Schema";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::FrameDegenerate: return "FrameDegenerate";
    case ErrorCode::RowElimination: return "RowElimination";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::NotOnHypersurface: return "NotOnHypersurface";
    case ErrorCode::PencilSearchFailed: return "PencilSearchFailed";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw Error(ErrorCode::Parse, "not a rational number: '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d = den.empty() ? Integer(1) : Integer(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::Parse, "zero denominator: '" + std::string(text) + "'");
  if (text.front() == '-') n = -n;
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

Scalar make_ratio(long n, long d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Scalar q{Integer(n), Integer(d)};
  q.canonicalize();
  return q;
}

std::string format_scalar(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::InvalidArgument, "matrix-vector size mismatch");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix product size mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

// Each row multiplied by the lcm of its denominators.
std::vector<std::vector<Integer>> integer_rows(const Matrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return out;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  auto a = integer_rows(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer t = a[r][col] * a[i][j] - a[i][col] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

std::size_t rank(const std::vector<Vector>& rows) { return rank(Matrix::from_rows(rows)); }

RowEchelon rref(const Matrix& m) {
  RowEchelon out{m, {}};
  Matrix& a = out.reduced;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, col)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Scalar pivot = a(r, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(r, j) /= pivot;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, col)) == 0) continue;
      const Scalar f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(col);
    ++r;
  }
  return out;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(a(p, col)) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(a(i, col)) == 0) continue;
      const Scalar f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "dot product size mismatch");
  Scalar acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

bool proportional(const Vector& a, const Vector& b) {
  if (a.size() != b.size() || is_zero(a) || is_zero(b)) return false;
  // 2x2 minors against the first nonzero entry of a.
  std::size_t lead = 0;
  while (sgn(a[lead]) == 0) ++lead;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[lead] * b[j] != a[j] * b[lead]) return false;
  return true;
}

Vector canonical_projective(const Vector& v) {
  if (is_zero(v)) throw Error(ErrorCode::InvalidArgument, "projective point with all coordinates zero");
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> ints(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  const auto lead = std::find_if(ints.begin(), ints.end(), [](const Integer& x) { return x != 0; });
  if (*lead < 0) g = -g;
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Scalar(Integer(ints[i] / g));
  return out;
}

// ---------------------------------------------------------------------------
// Points and configurations

ProjectivePoint::ProjectivePoint(const Vector& coords) : coords_(canonical_projective(coords)) {}

PointConfiguration::PointConfiguration(std::size_t ambient_rank, std::vector<ProjectivePoint> points)
    : ambient_rank_(ambient_rank), points_(std::move(points)) {
  if (ambient_rank_ == 0) throw Error(ErrorCode::InvalidArgument, "ambient rank must be positive");
  for (const auto& p : points_)
    if (p.size() != ambient_rank_)
      throw Error(ErrorCode::InvalidArgument, "point length differs from the ambient rank");
}

namespace {
std::vector<ProjectivePoint> to_points(const std::vector<Vector>& coords) {
  std::vector<ProjectivePoint> pts;
  pts.reserve(coords.size());
  for (const auto& c : coords) pts.emplace_back(c);
  return pts;
}
}  // namespace

PointConfiguration::PointConfiguration(std::size_t ambient_rank, const std::vector<Vector>& coords)
    : PointConfiguration(ambient_rank, to_points(coords)) {}

Matrix PointConfiguration::coordinate_matrix() const {
  Matrix m(points_.size(), ambient_rank_);
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = 0; j < ambient_rank_; ++j) m(i, j) = points_[i][j];
  return m;
}

bool LinearSubspace::contains(const Vector& v) const {
  if (v.size() != ambient) return false;
  if (is_zero(v)) return true;
  auto rows = basis;
  rows.push_back(v);
  return rank(rows) == basis.size();
}

LinearSubspace LinearSubspace::span_of(const std::vector<Vector>& generators, std::size_t ambient) {
  LinearSubspace s{{}, ambient};
  for (const auto& g : generators) {
    if (g.size() != ambient) throw Error(ErrorCode::InvalidArgument, "generator length differs from ambient");
    auto rows = s.basis;
    rows.push_back(g);
    if (rank(rows) > s.basis.size()) s.basis.push_back(g);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Transforms

ProjectiveTransform::ProjectiveTransform(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0)
    throw Error(ErrorCode::InvalidArgument, "projective transform needs a square matrix");
  if (sgn(determinant(matrix_)) == 0) throw Error(ErrorCode::InvalidArgument, "projective transform is singular");
}

ProjectiveTransform ProjectiveTransform::identity(std::size_t r) { return ProjectiveTransform(Matrix::identity(r)); }

ProjectivePoint ProjectiveTransform::apply(const ProjectivePoint& p) const { return ProjectivePoint(matrix_ * p.coords()); }

PointConfiguration ProjectiveTransform::apply(const PointConfiguration& c) const {
  if (c.ambient_rank() != rank()) throw Error(ErrorCode::InvalidArgument, "transform rank differs from configuration");
  std::vector<ProjectivePoint> pts;
  pts.reserve(c.size());
  for (const auto& p : c.points()) pts.push_back(apply(p));
  return PointConfiguration(c.ambient_rank(), std::move(pts));
}

ProjectiveTransform ProjectiveTransform::inverse() const { return ProjectiveTransform(*stab::inverse(matrix_)); }

ProjectiveTransform ProjectiveTransform::then(const ProjectiveTransform& next) const {
  return ProjectiveTransform(next.matrix_ * matrix_);
}

bool ProjectiveTransform::same_as(const ProjectiveTransform& other) const {
  if (other.rank() != rank()) return false;
  Vector a, b;
  for (std::size_t i = 0; i < rank(); ++i) {
    auto ra = matrix_.row(i), rb = other.matrix_.row(i);
    a.insert(a.end(), ra.begin(), ra.end());
    b.insert(b.end(), rb.begin(), rb.end());
  }
  return proportional(a, b);
}

// ---------------------------------------------------------------------------
// Spans

namespace {
std::vector<Vector> selected_rows(const PointConfiguration& config, std::span<const std::size_t> subset) {
  std::vector<Vector> rows;
  rows.reserve(subset.size());
  for (auto i : subset) {
    if (i >= config.size()) throw Error(ErrorCode::IndexOutOfRange, "point index " + std::to_string(i) + " out of range");
    rows.push_back(config[i].coords());
  }
  return rows;
}
}  // namespace

std::size_t span_dim(const PointConfiguration& config, std::span<const std::size_t> subset) {
  const auto rows = selected_rows(config, subset);
  return rows.empty() ? 0 : rank(rows);
}

LinearSubspace span(const PointConfiguration& config, std::span<const std::size_t> subset) {
  return LinearSubspace::span_of(selected_rows(config, subset), config.ambient_rank());
}

// ---------------------------------------------------------------------------
// Projective equivalence

namespace {

// Columns λ_i p_i with Σ λ_i p_i = p_{r+1}: sends e_i ↦ p_i, (1,…,1) ↦ p_{r+1}.
Matrix frame_matrix(const PointConfiguration& c) {
  const std::size_t r = c.ambient_rank();
  Matrix p(r, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) p(i, j) = c[j][i];
  const auto pinv = inverse(p);
  if (!pinv) throw Error(ErrorCode::FrameDegenerate, "leading frame points are linearly dependent");
  const Vector lambda = *pinv * c[r].coords();
  for (const auto& l : lambda)
    if (sgn(l) == 0) throw Error(ErrorCode::FrameDegenerate, "leading frame points are not in general position");
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) p(i, j) *= lambda[j];
  return p;
}

}  // namespace

std::optional<ProjectiveTransform> projectively_equivalent(const PointConfiguration& c1,
                                                           const PointConfiguration& c2) {
  const std::size_t r = c1.ambient_rank();
  if (c2.ambient_rank() != r || c1.size() != c2.size())
    throw Error(ErrorCode::InvalidArgument, "configurations differ in rank or size");
  if (c1.size() < r + 1)
    throw Error(ErrorCode::InvalidArgument, "projective equivalence needs at least r+1 points for a frame");
  const Matrix t1 = frame_matrix(c1);
  const Matrix t2 = frame_matrix(c2);
  Matrix a = t2 * *inverse(t1);
  for (std::size_t i = 0; i < c1.size(); ++i)
    if (!proportional(a * c1[i].coords(), c2[i].coords())) return std::nullopt;
  // Fix the scale: first nonzero entry becomes 1.
  Scalar lead = 0;
  for (std::size_t i = 0; i < r && sgn(lead) == 0; ++i)
    for (std::size_t j = 0; j < r && sgn(lead) == 0; ++j) lead = a(i, j);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) a(i, j) /= lead;
  return ProjectiveTransform(std::move(a));
}

}  // namespace stab
