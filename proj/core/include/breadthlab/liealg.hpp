#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "breadthlab/subspace.hpp"

namespace breadthlab {

/// [e_i, e_j] = sum of coeff * e_k over `terms`.
struct BracketSpec {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<std::pair<std::size_t, FieldElem>> terms;
};

/// Finite-dimensional algebra given by structure constants c_ij^k on a fixed
/// basis. Construction does not check the Lie axioms; see validate().
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Abelian algebra of dimension n.
  LieAlgebra(Field f, std::size_t n);

  /// Entries are read as i < j and mirrored with the opposite sign.
  static LieAlgebra from_brackets(Field f, std::size_t n, const std::vector<BracketSpec>& brackets);
  /// Raw table indexed (i*n + j)*n + k, stored as given.
  static LieAlgebra from_table(Field f, std::size_t n, std::vector<FieldElem> sc);

  Field field() const { return f_; }
  std::size_t dim() const { return n_; }
  const FieldElem& sc(std::size_t i, std::size_t j, std::size_t k) const { return sc_[(i * n_ + j) * n_ + k]; }
  const std::vector<FieldElem>& table() const { return sc_; }
  Vector basis_bracket(std::size_t i, std::size_t j) const;
  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const Vector& v);

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(std::size_t i) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.f_ == b.f_ && a.n_ == b.n_ && a.sc_ == b.sc_;
  }

 private:
  Field f_;
  std::size_t n_ = 0;
  std::vector<FieldElem> sc_;
  std::vector<std::string> labels_;
};

struct ValidationReport {
  bool ok = true;
  std::string violation;  // "antisymmetry", "alternating" or "jacobi"
  std::size_t i = 0, j = 0, k = 0;
  std::string message;
};

ValidationReport validate(const LieAlgebra& l);

Vector bracket(const LieAlgebra& l, const Vector& x, const Vector& y);
/// Column j is [x, e_j].
Matrix ad_matrix(const LieAlgebra& l, const Vector& x);
Subspace center(const LieAlgebra& l);
Subspace derived(const LieAlgebra& l);
/// [L, S] for a subspace S.
Subspace bracket_subspace(const LieAlgebra& l, const Subspace& s);
/// gamma_1 = L, gamma_2, ..., ending with the first zero term.
std::vector<Subspace> lower_central_series(const LieAlgebra& l);
/// 0 for the zero algebra, 1 for abelian. Throws NotNilpotent.
std::size_t nilpotency_class(const LieAlgebra& l);
bool is_nilpotent(const LieAlgebra& l);
bool is_stem(const LieAlgebra& l);
std::size_t breadth(const LieAlgebra& l, const Vector& x);
Subspace centralizer(const LieAlgebra& l, const Vector& x);

struct BreadthType {
  std::vector<std::size_t> breadths;
  bool exact = true;
  /// min(dim L', dim L/Z(L)).
  std::size_t upper_bound = 0;
  std::uint64_t evaluated = 0;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const BreadthType& a, const BreadthType& b) {
    return a.breadths == b.breadths && a.exact == b.exact;
  }
};

struct BreadthOptions {
  /// Largest q^dim(L/Z) scanned exhaustively.
  std::uint64_t budget = std::uint64_t{1} << 24;
  bool allow_sampling = true;
  bool force_sampling = false;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 20240601;
  std::int64_t rational_bound = 4;
};

BreadthType breadth_type(const LieAlgebra& l, const BreadthOptions& opts = {});
std::string to_string(const BreadthType& t);

/// L plus d central basis vectors appended at the end.
LieAlgebra direct_sum_abelian(const LieAlgebra& l, std::size_t d);

}  // namespace breadthlab
