#pragma once

#include <optional>
#include <string>

#include "breadthlab/liealg.hpp"

namespace breadthlab {

/// Bivectors on g generators are vectors of length g(g-1)/2 in the e_ij order
/// of bivector_index. Central ideals are subspaces of that coordinate space.

/// Skew matrix with (i,j) = b_ij and (j,i) = -b_ij.
Matrix to_skew(const Vector& b, std::size_t g);
Vector from_skew(const Matrix& m);
/// a wedge b.
Vector wedge(const Vector& a, const Vector& b);
std::size_t skew_rank(const Vector& b, std::size_t g);
bool is_decomposable(const Vector& b, std::size_t g);

struct Factorization {
  Vector a;
  Vector b;
};

/// a, b with a wedge b = w, for decomposable nonzero w.
std::optional<Factorization> factor_decomposable(const Vector& w, std::size_t g);

struct BracketFreeResult {
  bool bracket_free = true;
  std::optional<Vector> witness;         // decomposable nonzero element of the ideal
  std::optional<Vector> witness_coeffs;  // its coordinates on the ideal basis
  std::optional<Factorization> factors;
  std::string method;  // "exhaustive", "rank", "definite", "degenerate", "isotropic-search"
  std::uint64_t scanned = 0;
};

/// Whether the ideal contains no nonzero decomposable bivector. Over Q this
/// throws Undetermined when neither the rank test (dimension 1), the
/// definiteness test (four generators) nor a bounded witness search decides.
BracketFreeResult bracket_free(const Subspace& ideal, std::size_t g);

/// Breadth type of the free class-2 algebra on g generators modulo the ideal,
/// checked against bracket_free (VerificationFailed on disagreement).
BreadthType breadth_type_of_quotient(const Subspace& ideal, std::size_t g, const BreadthOptions& opts = {});

}  // namespace breadthlab
