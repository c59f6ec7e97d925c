#include "breadthlab/matrix.hpp"

#include <utility>

#include "breadthlab/subspace.hpp"

namespace breadthlab {

namespace {

void need_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorKind::DimensionMismatch, "matrix shapes differ");
  if (a.field() != b.field()) fail(ErrorKind::FieldMismatch, "matrices over different fields");
}

// In-place elimination on a row-major buffer. Returns pivot columns.
std::vector<std::size_t> eliminate(std::vector<FieldElem>& a, std::size_t rows, std::size_t cols, bool reduced) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!a[i * cols + c].is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[sel * cols + j], a[r * cols + j]);
    const FieldElem inv = a[r * cols + c].inv();
    if (reduced) {
      for (std::size_t j = c; j < cols; ++j) a[r * cols + j] *= inv;
    }
    for (std::size_t i = reduced ? 0 : r + 1; i < rows; ++i) {
      if (i == r) continue;
      const FieldElem& lead = a[i * cols + c];
      if (lead.is_zero()) continue;
      const FieldElem factor = reduced ? lead : lead * inv;
      for (std::size_t j = c; j < cols; ++j) a[i * cols + j] -= factor * a[r * cols + j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols) : f_(f), r_(rows), c_(cols), a_(rows * cols, f.zero()) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Matrix Matrix::from_ints(Field f, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  Matrix m(f, rows.size(), cols);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) fail(ErrorKind::DimensionMismatch, "ragged matrix literal");
    std::size_t j = 0;
    for (std::int64_t v : row) m(i, j++) = f.from_int(v);
    ++i;
  }
  return m;
}

bool Matrix::is_zero() const { return is_zero_vector(a_); }

FieldElem& Matrix::at(std::size_t i, std::size_t j) {
  if (i >= r_ || j >= c_) fail(ErrorKind::DimensionMismatch, "matrix index out of range");
  return (*this)(i, j);
}

const FieldElem& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= r_ || j >= c_) fail(ErrorKind::DimensionMismatch, "matrix index out of range");
  return (*this)(i, j);
}

Vector Matrix::row(std::size_t i) const {
  return Vector(a_.begin() + static_cast<std::ptrdiff_t>(i * c_),
                a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * c_));
}

Vector Matrix::col(std::size_t j) const {
  Vector v;
  v.reserve(r_);
  for (std::size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
  return v;
}

void Matrix::set_row(std::size_t i, const Vector& v) {
  if (v.size() != c_ || i >= r_) fail(ErrorKind::DimensionMismatch, "row length mismatch");
  for (std::size_t j = 0; j < c_; ++j) (*this)(i, j) = v[j];
}

void Matrix::set_col(std::size_t j, const Vector& v) {
  if (v.size() != r_ || j >= c_) fail(ErrorKind::DimensionMismatch, "column length mismatch");
  for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(f_, c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != c_) fail(ErrorKind::DimensionMismatch, "vector length does not match column count");
  Vector out(r_, f_.zero());
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if (!v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  need_same_shape(a, b);
  Matrix out = a;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += b.a_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  need_same_shape(a, b);
  Matrix out = a;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= b.a_[i];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.c_ != b.r_) fail(ErrorKind::DimensionMismatch, "inner dimensions differ");
  if (a.f_ != b.f_) fail(ErrorKind::FieldMismatch, "matrices over different fields");
  Matrix out(a.f_, a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      const FieldElem& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

Matrix operator*(const FieldElem& s, const Matrix& m) {
  Matrix out = m;
  for (auto& x : out.a_) x = s * x;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.f_ == b.f_ && a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
}

RrefResult rref(const Matrix& m) {
  RrefResult out{m, {}};
  out.pivots = eliminate(out.reduced.entries(), m.rows(), m.cols(), true);
  return out;
}

std::size_t rank(const Matrix& m) {
  std::vector<FieldElem> a = m.entries();
  return eliminate(a, m.rows(), m.cols(), false).size();
}

Subspace kernel(const Matrix& m) {
  const RrefResult r = rref(m);
  const Field f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vector v = unit_vector(f, m.cols(), c);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, c);
    basis.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), basis);
}

FieldElem det(const Matrix& m) {
  if (!m.is_square()) fail(ErrorKind::NonSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const Field f = m.field();
  std::vector<FieldElem> a = m.entries();
  FieldElem d = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = n;
    for (std::size_t i = c; i < n; ++i)
      if (!a[i * n + c].is_zero()) {
        sel = i;
        break;
      }
    if (sel == n) return f.zero();
    if (sel != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a[sel * n + j], a[c * n + j]);
      d = -d;
    }
    const FieldElem piv = a[c * n + c];
    d *= piv;
    const FieldElem inv = piv.inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i * n + c].is_zero()) continue;
      const FieldElem factor = a[i * n + c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i * n + j] -= factor * a[c * n + j];
    }
  }
  return d;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) fail(ErrorKind::NonSquare, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const Field f = m.field();
  Matrix aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  const RrefResult r = rref(aug);
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) fail(ErrorKind::DivisionByZero, "matrix is singular");
  Matrix out(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r.reduced(i, n + j);
  return out;
}

bool is_skew(const Matrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  }
  return true;
}

FieldElem pfaffian(const Matrix& m) {
  if (!is_skew(m)) fail(ErrorKind::NotSkewSymmetric, "pfaffian needs a skew-symmetric matrix with zero diagonal");
  const std::size_t n = m.rows();
  const Field f = m.field();
  if (n % 2 != 0) fail(ErrorKind::OddDimension, "pfaffian of an odd-dimensional matrix");
  if (n == 0) return f.one();
  if (n == 2) return m(0, 1);
  if (n == 4) return m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2);

  // Congruence M -> E M E^T with det E = +-1, two rows/columns at a time.
  Matrix a = m;
  FieldElem pf = f.one();
  auto swap_index = [&](std::size_t x, std::size_t y) {
    for (std::size_t j = 0; j < n; ++j) std::swap(a(x, j), a(y, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, x), a(i, y));
  };
  auto add_multiple = [&](std::size_t target, std::size_t src, const FieldElem& c) {
    for (std::size_t j = 0; j < n; ++j) a(target, j) += c * a(src, j);
    for (std::size_t i = 0; i < n; ++i) a(i, target) += c * a(i, src);
  };
  for (std::size_t k = 0; k < n; k += 2) {
    std::size_t sel = n;
    for (std::size_t j = k + 1; j < n; ++j)
      if (!a(k, j).is_zero()) {
        sel = j;
        break;
      }
    if (sel == n) return f.zero();
    if (sel != k + 1) {
      swap_index(k + 1, sel);
      pf = -pf;
    }
    const FieldElem piv = a(k, k + 1);
    pf *= piv;
    const FieldElem inv = piv.inv();
    for (std::size_t i = k + 2; i < n; ++i) {
      if (!a(k, i).is_zero()) add_multiple(i, k + 1, -(a(k, i) * inv));
      if (!a(k + 1, i).is_zero()) add_multiple(i, k, a(k + 1, i) * inv);
    }
  }
  return pf;
}

}  // namespace breadthlab
