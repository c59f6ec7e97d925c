#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "breadthlab/matrix.hpp"

namespace breadthlab {

/// A linear subspace of k^n stored by its reduced row echelon basis, so two
/// subspaces are equal exactly when their representations are.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of k^n.
  Subspace(Field f, std::size_t ambient);

  static Subspace span(Field f, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace full(Field f, std::size_t ambient);

  Field field() const { return f_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& basis() const { return rows_; }
  const Vector& basis_vector(std::size_t i) const { return rows_.at(i); }
  const std::vector<std::size_t>& pivots() const { return piv_; }
  /// Coordinates that are not pivots, ascending.
  std::vector<std::size_t> non_pivots() const;
  Matrix basis_matrix() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// v minus its component along the basis rows at the pivot coordinates.
  Vector reduce(const Vector& v) const;
  /// Sum of coeffs[i] * basis[i].
  Vector combination(const Vector& coeffs) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  friend class SubspaceEnumerator;
  Field f_;
  std::size_t n_ = 0;
  std::vector<Vector> rows_;
  std::vector<std::size_t> piv_;
};

bool member(const Subspace& s, const Vector& v);
Subspace sum(const Subspace& s, const Subspace& t);
/// Orthogonal complement for the standard dot product.
Subspace annihilator(const Subspace& s);
Subspace intersect(const Subspace& s, const Subspace& t);

/// Number of d-dimensional subspaces of GF(q)^n.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t d, std::uint64_t q);

/// Streams every d-dimensional subspace of GF(q)^n once: pivot patterns in
/// lexicographic order, then free RREF entries as an odometer whose first free
/// position (row-major) is the most significant digit.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(Field f, std::size_t ambient, std::size_t d);
  bool next(Subspace& out);
  std::uint64_t produced() const { return produced_; }

 private:
  bool advance_pattern();
  void reset_free();

  Field f_;
  std::size_t n_;
  std::size_t d_;
  std::vector<std::size_t> piv_;
  std::vector<std::pair<std::size_t, std::size_t>> free_;
  std::vector<std::uint32_t> digits_;
  bool started_ = false;
  bool done_ = false;
  std::uint64_t produced_ = 0;
};

/// Visits one coefficient vector per line of GF(q)^d: the first nonzero
/// coefficient is 1, lines ordered by the position of that coefficient, then
/// lexicographically on the remaining ones. Returning false stops the scan.
void for_each_projective(Field f, std::size_t d, const std::function<bool(const Vector&)>& visit);
/// Every vector of GF(q)^d in lexicographic order.
void for_each_vector(Field f, std::size_t d, const std::function<bool(const Vector&)>& visit);
/// Projective scan of the nonzero elements of S, passing (coefficients, element).
void for_each_projective_element(const Subspace& s, const std::function<bool(const Vector&, const Vector&)>& visit);

}  // namespace breadthlab
