#pragma once

#include "breadthlab/matrix.hpp"

namespace breadthlab {

enum class Definiteness { PositiveDefinite, NegativeDefinite, Indefinite, Degenerate };

const char* to_string(Definiteness d);

/// Sylvester's leading-minor test on a symmetric matrix over Q.
Definiteness sylvester(const Matrix& gram);

/// Symmetric matrix S with pf(to_skew(w)) = w^T S w on the six bivector
/// coordinates of four generators (characteristic not 2).
Matrix pfaffian_form4(Field f);

/// U S U^T for the rows of U.
Matrix restrict_form(const Matrix& s, const Matrix& rows);

/// w^T S w.
FieldElem evaluate_form(const Matrix& s, const Vector& w);

}  // namespace breadthlab
