#include "breadthlab/quadratic_form.hpp"

namespace breadthlab {

const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite:
      return "positive-definite";
    case Definiteness::NegativeDefinite:
      return "negative-definite";
    case Definiteness::Indefinite:
      return "indefinite";
    case Definiteness::Degenerate:
      return "degenerate";
  }
  return "?";
}

Definiteness sylvester(const Matrix& gram) {
  const Field f = gram.field();
  if (!f.is_rational()) fail(ErrorKind::Unsupported, "definiteness needs an ordered field");
  if (!gram.is_square()) fail(ErrorKind::NonSquare, "gram matrix must be square");
  const std::size_t n = gram.rows();
  if (n == 0) return Definiteness::PositiveDefinite;
  if (det(gram).is_zero()) return Definiteness::Degenerate;
  bool pos = true, neg = true;
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix lead(f, k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = gram(i, j);
    const std::int64_t s = det(lead).num();
    if (s <= 0) pos = false;
    if ((k % 2 == 1 && s >= 0) || (k % 2 == 0 && s <= 0)) neg = false;
  }
  if (pos) return Definiteness::PositiveDefinite;
  if (neg) return Definiteness::NegativeDefinite;
  return Definiteness::Indefinite;
}

Matrix pfaffian_form4(Field f) {
  if (f.is_finite() && f.characteristic() == 2)
    fail(ErrorKind::CharacteristicTwo, "polar form undefined in characteristic 2");
  Matrix s(f, 6, 6);
  const FieldElem half = f.one() / f.from_int(2);
  // pf = w12 w34 - w13 w24 + w14 w23 with coordinates e12 e13 e14 e23 e24 e34.
  s(0, 5) = s(5, 0) = half;
  s(1, 4) = s(4, 1) = -half;
  s(2, 3) = s(3, 2) = half;
  return s;
}

Matrix restrict_form(const Matrix& s, const Matrix& rows) { return rows * s * rows.transpose(); }

FieldElem evaluate_form(const Matrix& s, const Vector& w) {
  const Vector sw = s.apply(w);
  FieldElem acc = s.field().zero();
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * sw[i];
  return acc;
}

}  // namespace breadthlab
