#include "breadthlab/subspace.hpp"

#include <algorithm>

namespace breadthlab {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

Subspace::Subspace(Field f, std::size_t ambient) : f_(f), n_(ambient) {}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vector>& vectors) {
  Subspace s(f, ambient);
  if (vectors.empty()) return s;
  Matrix m = Matrix::from_rows(f, vectors, ambient);
  const RrefResult r = rref(m);
  s.piv_ = r.pivots;
  s.rows_.reserve(r.pivots.size());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) s.rows_.push_back(r.reduced.row(i));
  return s;
}

Subspace Subspace::full(Field f, std::size_t ambient) {
  Subspace s(f, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.rows_.push_back(unit_vector(f, ambient, i));
    s.piv_.push_back(i);
  }
  return s;
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < n_; ++c) {
    if (k < piv_.size() && piv_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(f_, rows_, n_); }

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != n_) fail(ErrorKind::DimensionMismatch, "vector length does not match ambient dimension");
  Vector out = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const FieldElem c = out[piv_[r]];
    if (c.is_zero()) continue;
    for (std::size_t j = piv_[r]; j < n_; ++j) out[j] -= c * rows_[r][j];
  }
  return out;
}

Vector Subspace::combination(const Vector& coeffs) const {
  if (coeffs.size() != rows_.size()) fail(ErrorKind::DimensionMismatch, "coefficient count does not match dimension");
  Vector out = zero_vector(f_, n_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (coeffs[r].is_zero()) continue;
    for (std::size_t j = piv_[r]; j < n_; ++j) out[j] += coeffs[r] * rows_[r][j];
  }
  return out;
}

bool Subspace::contains(const Vector& v) const { return is_zero_vector(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.n_ != n_) fail(ErrorKind::DimensionMismatch, "ambient dimensions differ");
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vector& v) { return contains(v); });
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.f_ == b.f_ && a.n_ == b.n_ && a.piv_ == b.piv_ && a.rows_ == b.rows_;
}

bool member(const Subspace& s, const Vector& v) { return s.contains(v); }

Subspace sum(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim()) fail(ErrorKind::DimensionMismatch, "ambient dimensions differ");
  if (s.field() != t.field()) fail(ErrorKind::FieldMismatch, "subspaces over different fields");
  std::vector<Vector> all = s.basis();
  all.insert(all.end(), t.basis().begin(), t.basis().end());
  return Subspace::span(s.field(), s.ambient_dim(), all);
}

Subspace annihilator(const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(s.field(), s.ambient_dim());
  return kernel(s.basis_matrix());
}

Subspace intersect(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim()) fail(ErrorKind::DimensionMismatch, "ambient dimensions differ");
  return annihilator(sum(annihilator(s), annihilator(t)));
}

std::uint64_t gaussian_binomial(std::size_t n, std::size_t d, std::uint64_t q) {
  if (d > n) return 0;
  // Product formula with exact division at each step.
  u128 num = 1, den = 1;
  for (std::size_t i = 0; i < d; ++i) {
    u128 a = 1, b = 1;
    for (std::size_t k = 0; k < n - i; ++k) a *= q;
    for (std::size_t k = 0; k < i + 1; ++k) b *= q;
    num *= (a - 1);
    den *= (b - 1);
  }
  return static_cast<std::uint64_t>(num / den);
}

SubspaceEnumerator::SubspaceEnumerator(Field f, std::size_t ambient, std::size_t d) : f_(f), n_(ambient), d_(d) {
  if (!f.valid() || !f.is_finite()) fail(ErrorKind::Unsupported, "subspace enumeration needs a finite field");
  if (d > ambient) done_ = true;
}

void SubspaceEnumerator::reset_free() {
  free_.clear();
  for (std::size_t r = 0; r < d_; ++r)
    for (std::size_t c = piv_[r] + 1; c < n_; ++c)
      if (std::find(piv_.begin(), piv_.end(), c) == piv_.end()) free_.emplace_back(r, c);
  digits_.assign(free_.size(), 0);
}

bool SubspaceEnumerator::advance_pattern() {
  // Next d-combination of {0..n-1} in lexicographic order.
  std::size_t i = d_;
  while (i > 0) {
    --i;
    if (piv_[i] < n_ - d_ + i) {
      ++piv_[i];
      for (std::size_t j = i + 1; j < d_; ++j) piv_[j] = piv_[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool SubspaceEnumerator::next(Subspace& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    piv_.resize(d_);
    for (std::size_t i = 0; i < d_; ++i) piv_[i] = i;
    reset_free();
  } else {
    const std::uint32_t q = f_.size();
    std::size_t k = digits_.size();
    bool carried_out = true;
    while (k > 0) {
      --k;
      if (++digits_[k] < q) {
        carried_out = false;
        break;
      }
      digits_[k] = 0;
    }
    if (carried_out) {
      if (d_ == 0 || !advance_pattern()) {
        done_ = true;
        return false;
      }
      reset_free();
    }
  }
  Subspace s(f_, n_);
  s.piv_ = piv_;
  s.rows_.assign(d_, zero_vector(f_, n_));
  for (std::size_t r = 0; r < d_; ++r) s.rows_[r][piv_[r]] = f_.one();
  for (std::size_t k = 0; k < free_.size(); ++k) s.rows_[free_[k].first][free_[k].second] = f_.element(digits_[k]);
  out = std::move(s);
  ++produced_;
  return true;
}

void for_each_vector(Field f, std::size_t d, const std::function<bool(const Vector&)>& visit) {
  if (!f.is_finite()) fail(ErrorKind::Unsupported, "element enumeration needs a finite field");
  const std::uint32_t q = f.size();
  std::vector<std::uint32_t> digits(d, 0);
  Vector v = zero_vector(f, d);
  while (true) {
    if (!visit(v)) return;
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (++digits[k] < q) {
        v[k] = f.element(digits[k]);
        break;
      }
      digits[k] = 0;
      v[k] = f.zero();
      if (k == 0) return;
    }
    if (d == 0) return;
  }
}

void for_each_projective(Field f, std::size_t d, const std::function<bool(const Vector&)>& visit) {
  if (!f.is_finite()) fail(ErrorKind::Unsupported, "element enumeration needs a finite field");
  const std::uint32_t q = f.size();
  for (std::size_t lead = 0; lead < d; ++lead) {
    Vector v = zero_vector(f, d);
    v[lead] = f.one();
    std::vector<std::uint32_t> digits(d, 0);
    while (true) {
      if (!visit(v)) return;
      std::size_t k = d;
      bool wrapped = true;
      while (k > lead + 1) {
        --k;
        if (++digits[k] < q) {
          v[k] = f.element(digits[k]);
          wrapped = false;
          break;
        }
        digits[k] = 0;
        v[k] = f.zero();
      }
      if (wrapped) break;
    }
  }
}

void for_each_projective_element(const Subspace& s, const std::function<bool(const Vector&, const Vector&)>& visit) {
  for_each_projective(s.field(), s.dim(), [&](const Vector& c) { return visit(c, s.combination(c)); });
}

}  // namespace breadthlab
