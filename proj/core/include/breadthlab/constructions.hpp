#pragma once

#include <string>
#include <vector>

#include "breadthlab/liealg.hpp"

namespace breadthlab {

/// Number of bivector coordinates e_ij (i < j) on g generators.
std::size_t bivector_count(std::size_t g);
/// Position of e_ij, 0-based i < j < g, in the order e_01 < e_02 < ... < e_{g-2,g-1}.
std::size_t bivector_index(std::size_t i, std::size_t j, std::size_t g);
/// Inverse of bivector_index.
std::pair<std::size_t, std::size_t> bivector_pair(std::size_t index, std::size_t g);

/// Free class-2 nilpotent algebra on m+1 generators: basis x_1..x_{m+1} then
/// e_ij in lexicographic order, with [x_i, x_j] = e_ij.
LieAlgebra free_two_step(std::size_t m, Field f);
/// Basis x_1, y_1, ..., x_m, y_m, z with [x_i, y_i] = z.
LieAlgebra heisenberg(std::size_t m, Field f);
/// Heisenberg algebra over K = k[y]/(f) viewed over k: basis a_0..a_{m-1},
/// b_0..b_{m-1}, c_0..c_{m-1} with [a_i, b_j] = y^(i+j) mod f in the c basis.
/// `modulus` is monic, lowest degree first; empty selects the least monic
/// irreducible of degree m over a finite field. Over Q a modulus with integer
/// coefficients is required.
LieAlgebra heisenberg_degree(std::size_t m, Field f, const std::vector<FieldElem>& modulus = {});
/// Least monic irreducible polynomial of degree m over a finite field.
std::vector<FieldElem> least_irreducible(std::size_t m, Field f);
/// Basis e, h, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra sl2(Field f);
/// Basis x1, x2, y, z1, z2 with [x1,x2] = y, [x1,y] = z1, [x2,y] = z2.
LieAlgebra five_dim_three_step(Field f);
/// Two-dimensional algebra [x, y] = x.
LieAlgebra two_dim_nonabelian(Field f);

/// L / I for a subspace I of the center. The quotient basis is the set of
/// non-pivot coordinates of I.
LieAlgebra quotient_by_central_ideal(const LieAlgebra& l, const Subspace& i);
/// Embed a subspace of bivector coordinates into the free algebra on g generators.
Subspace bivector_ideal_in_free(const Subspace& ideal, std::size_t g);
/// free_two_step(g-1) modulo an ideal given in bivector coordinates.
LieAlgebra free_quotient(const Subspace& ideal, std::size_t g);

struct Family {
  std::string tag;   // "(i)", "(ii)", ...
  std::string name;  // e.g. "L3/<e12+e34>"
  LieAlgebra algebra;
  bool is_free_quotient = false;
  Subspace ideal;  // bivector coordinates when is_free_quotient
  bool camina = false;
  std::vector<std::size_t> claimed_type;
};

/// Stem families with breadth type (0,3) for the class of the given field.
std::vector<Family> theorem_families(Field f);

}  // namespace breadthlab
