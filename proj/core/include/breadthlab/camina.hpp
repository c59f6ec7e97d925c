#pragma once

#include <optional>
#include <string>

#include "breadthlab/liealg.hpp"

namespace breadthlab {

struct CaminaResult {
  bool camina = true;
  std::optional<Vector> witness;  // x outside L' with [x, L] a proper subspace of L'
  std::uint64_t scanned = 0;
};

/// [x, L] = L' for every x outside L', by enumeration over a finite field.
CaminaResult is_camina(const LieAlgebra& l, std::uint64_t budget = std::uint64_t{1} << 24);

/// X_r[i][j] = coefficient of the r-th basis vector of L' in [x_i, x_j], where
/// x_i are the non-pivot coordinate vectors of L' and the basis of L' is its
/// reduced echelon basis. Requires class 2 and Z(L) = L'.
struct StructureMatrices {
  std::vector<Matrix> x;
  std::vector<std::size_t> generators;
  std::size_t derived_dim = 0;
};

StructureMatrices structure_matrices(const LieAlgebra& l);

struct StructureCaminaResult {
  bool camina = true;
  std::optional<Vector> singular_combination;
  std::string method;  // "exhaustive", "definite", "degenerate", "isotropic-search", "determinant"
  std::uint64_t scanned = 0;
};

/// Every nonzero combination of the structure matrices is nonsingular.
/// `declared_generators`, when given, must equal dim L/L'.
StructureCaminaResult camina_via_structure_matrices(const LieAlgebra& l,
                                                    std::optional<std::size_t> declared_generators = std::nullopt);

struct RankSubspaceCertificate {
  std::size_t n = 0;
  Field field;
  std::vector<Matrix> basis;
  bool skew = true;
  bool lower_bound = false;
};

/// Re-checks every nonzero combination (finite fields) or the Clifford-type
/// criterion below (Q). Returns false on failure.
bool verify_certificate(const RankSubspaceCertificate& cert);

/// Over Q: X_1 invertible and Y_i = X_1^{-1} X_i (i >= 2) pairwise
/// anticommuting with Y_i^2 = -d_i I, d_i > 0. This forces every nonzero
/// combination to be invertible.
bool clifford_criterion(const std::vector<Matrix>& basis);

struct SksOptions {
  std::uint64_t budget = 200'000'000;  // nonsingularity tests
  bool fix_first = false;              // assume the standard form J lies in the subspace
};

struct SksSearchResult {
  std::size_t k_sks = 0;
  RankSubspaceCertificate certificate;
  bool exhaustive = true;
  std::uint64_t nodes = 0;
  std::uint64_t tests = 0;
};

/// Largest dimension of a subspace of n x n skew matrices over a finite field
/// all of whose nonzero elements are invertible. Throws BudgetExceeded when the
/// budget runs out; `best_so_far` then receives the partial result.
SksSearchResult max_sks_rank_subspace(std::size_t n, Field f, const SksOptions& opts = {},
                                      SksSearchResult* best_so_far = nullptr);

/// Y_i = [[0, -X_i^T], [X_i, 0]].
RankSubspaceCertificate double_to_skew(const RankSubspaceCertificate& in);

/// Three anticommuting 4x4 skew matrices over Q with X_i^2 = -I.
RankSubspaceCertificate rational_quaternion_family();

struct QuaternionCheck {
  bool squares = true;
  bool anticommute = true;
  bool determinant_identity = true;
  std::uint64_t points = 0;
};

/// Checks X_i^2 = -I, anticommutation and det(aX1+bX2+cX3) = (a^2+b^2+c^2)^2 on
/// the grid [-radius, radius]^3 plus `random_points` seeded integer triples.
QuaternionCheck check_quaternion_family(const RankSubspaceCertificate& cert, std::int64_t radius = 2,
                                        std::uint64_t random_points = 100, std::uint64_t seed = 7);

}  // namespace breadthlab
