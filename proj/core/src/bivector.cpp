#include "breadthlab/bivector.hpp"

#include <cstdlib>

#include "breadthlab/constructions.hpp"
#include "breadthlab/quadratic_form.hpp"

namespace breadthlab {

namespace {

FieldElem pf4(const Vector& w) { return w[0] * w[5] - w[1] * w[4] + w[2] * w[3]; }

bool decomposable_fast(const Vector& w, std::size_t g) {
  if (g <= 3) return true;
  if (g == 4) return pf4(w).is_zero();
  return skew_rank(w, g) <= 2;
}

// Integer vectors with entries in [-bound, bound], first nonzero entry positive.
bool search_isotropic(const Subspace& ideal, std::size_t g, std::int64_t bound, Vector& coeffs, Vector& element) {
  const Field f = ideal.field();
  const std::size_t d = ideal.dim();
  std::vector<std::int64_t> c(d, -bound);
  while (true) {
    std::size_t first = d;
    for (std::size_t i = 0; i < d; ++i)
      if (c[i] != 0) {
        first = i;
        break;
      }
    if (first < d && c[first] > 0) {
      Vector cv(d, f.zero());
      for (std::size_t i = 0; i < d; ++i) cv[i] = f.from_int(c[i]);
      Vector w = ideal.combination(cv);
      if (decomposable_fast(w, g)) {
        coeffs = std::move(cv);
        element = std::move(w);
        return true;
      }
    }
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (++c[k] <= bound) break;
      c[k] = -bound;
      if (k == 0) return false;
    }
  }
}

void attach_witness(BracketFreeResult& r, Vector coeffs, Vector w, std::size_t g) {
  r.bracket_free = false;
  r.factors = factor_decomposable(w, g);
  r.witness_coeffs = std::move(coeffs);
  r.witness = std::move(w);
}

}  // namespace

Matrix to_skew(const Vector& b, std::size_t g) {
  if (b.size() != bivector_count(g))
    fail(ErrorKind::DimensionMismatch, "bivector length does not match generator count");
  if (b.empty()) return Matrix(Field(), g, g);
  const Field f = b[0].field();
  Matrix m(f, g, g);
  std::size_t k = 0;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j, ++k) {
      m(i, j) = b[k];
      m(j, i) = -b[k];
    }
  return m;
}

Vector from_skew(const Matrix& m) {
  if (!is_skew(m)) fail(ErrorKind::NotSkewSymmetric, "matrix is not skew-symmetric with zero diagonal");
  Vector out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

Vector wedge(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "wedge of vectors of different length");
  Vector out;
  out.reserve(bivector_count(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) out.push_back(a[i] * b[j] - a[j] * b[i]);
  return out;
}

std::size_t skew_rank(const Vector& b, std::size_t g) {
  if (is_zero_vector(b)) return 0;
  return rank(to_skew(b, g));
}

bool is_decomposable(const Vector& b, std::size_t g) { return skew_rank(b, g) <= 2; }

std::optional<Factorization> factor_decomposable(const Vector& w, std::size_t g) {
  if (is_zero_vector(w)) return std::nullopt;
  const RrefResult r = rref(to_skew(w, g));
  if (r.pivots.size() != 2) return std::nullopt;
  Factorization fz{r.reduced.row(0), r.reduced.row(1)};
  const Vector u = wedge(fz.a, fz.b);
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k].is_zero()) continue;
    const FieldElem lambda = w[k] / u[k];
    for (auto& x : fz.b) x = lambda * x;
    break;
  }
  if (wedge(fz.a, fz.b) != w)
    fail(ErrorKind::VerificationFailed, "bivector factorisation does not reproduce the input");
  return fz;
}

BracketFreeResult bracket_free(const Subspace& ideal, std::size_t g) {
  if (ideal.ambient_dim() != bivector_count(g))
    fail(ErrorKind::DimensionMismatch, "ideal does not match generator count");
  const Field f = ideal.field();
  BracketFreeResult r;
  if (ideal.dim() == 0) {
    r.method = "empty";
    return r;
  }
  if (ideal.dim() == 1) {
    r.method = "rank";
    r.scanned = 1;
    const Vector& w = ideal.basis_vector(0);
    if (skew_rank(w, g) <= 2) attach_witness(r, Vector{f.one()}, w, g);
    return r;
  }
  if (f.is_finite()) {
    r.method = "exhaustive";
    for_each_projective_element(ideal, [&](const Vector& c, const Vector& w) {
      ++r.scanned;
      if (decomposable_fast(w, g)) {
        attach_witness(r, c, w, g);
        return false;
      }
      return true;
    });
    return r;
  }
  // Q
  if (g == 4) {
    const Matrix gram = restrict_form(pfaffian_form4(f), ideal.basis_matrix());
    const Definiteness d = sylvester(gram);
    if (d == Definiteness::PositiveDefinite || d == Definiteness::NegativeDefinite) {
      r.method = "definite";
      return r;
    }
    if (d == Definiteness::Degenerate) {
      r.method = "degenerate";
      const Subspace k = kernel(gram);
      const Vector& c = k.basis_vector(0);
      attach_witness(r, c, ideal.combination(c), g);
      return r;
    }
  }
  Vector c, w;
  if (search_isotropic(ideal, g, 3, c, w)) {
    r.method = "isotropic-search";
    attach_witness(r, std::move(c), std::move(w), g);
    return r;
  }
  fail(ErrorKind::Undetermined, "bracket-freeness over Q is undecided for this ideal");
}

BreadthType breadth_type_of_quotient(const Subspace& ideal, std::size_t g, const BreadthOptions& opts) {
  const Field f = ideal.field();
  if (!f.is_finite()) fail(ErrorKind::Unsupported, "exact quotient breadth type needs a finite field");
  const BreadthType t = breadth_type(free_quotient(ideal, g), opts);
  const bool top = t.exact && t.breadths == std::vector<std::size_t>{0, g - 1};
  if (top != bracket_free(ideal, g).bracket_free)
    fail(ErrorKind::VerificationFailed, "quotient breadth type " + to_string(t) + " disagrees with bracket-freeness");
  return t;
}

}  // namespace breadthlab
