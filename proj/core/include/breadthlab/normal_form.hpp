#pragma once

#include <optional>
#include <string>

#include "breadthlab/bivector.hpp"

namespace breadthlab {

/// An endomorphism of the free class-2 algebra on g generators given on the
/// generators: x_j -> sum_i linear(i, j) x_i + central[j].
struct GeneratorMap {
  Matrix linear;
  std::vector<Vector> central;

  static GeneratorMap identity(Field f, std::size_t g);
  static GeneratorMap from_linear(Matrix linear);
  std::size_t generators() const { return linear.rows(); }
};

/// Matrix of the induced map on bivector coordinates.
Matrix exterior_square(const Matrix& a);
Vector apply_generator_map(const GeneratorMap& phi, const Vector& b);
Subspace push_ideal(const GeneratorMap& phi, const Subspace& ideal);
/// phi after psi.
GeneratorMap compose(const GeneratorMap& phi, const GeneratorMap& psi);

enum class NormalFormTag { Zero, DimOne, DimTwoOdd, DimTwoEven, NotBreadthType };

const char* to_string(NormalFormTag t);

struct NormalFormResult {
  Subspace input;
  Subspace canonical;
  GeneratorMap applied;
  NormalFormTag tag = NormalFormTag::NotBreadthType;
  std::size_t r = 0;                     // DimOne: number of hyperbolic pairs
  std::optional<FieldElem> parameter;    // DimTwoOdd: t, DimTwoEven: z
  std::optional<Factorization> witness;  // NotBreadthType: a, b with a wedge b in the input
  std::string stage;                     // step at which the reduction stopped
};

/// Dimension-one ideal of the free algebra on g generators; any field.
NormalFormResult reduce_dim1(const Subspace& ideal, std::size_t g);
/// Dimension-two ideal on four generators; odd characteristic or Q.
NormalFormResult reduce_dim2_odd(const Subspace& ideal);
/// Dimension-two ideal on four generators; characteristic 2.
NormalFormResult reduce_dim2_even(const Subspace& ideal);
/// Dispatches on the characteristic.
NormalFormResult reduce_dim2(const Subspace& ideal);

/// Squarefree integer in the square class of a nonzero rational.
std::int64_t squarefree_kernel(const FieldElem& x);

struct Classification {
  std::string family;  // "(i)".."(iv)" or "none"
  std::string kind;    // "camina", "free", "dim-one", "dim-two", "not-breadth-type"
  std::size_t abelian_stripped = 0;
  Subspace ideal;  // I with L = L3/I + abelian, in bivector coordinates
  std::optional<NormalFormResult> normal_form;
  std::string detail;
};

/// Recognise a class-2 algebra with four generators (modulo abelian summands)
/// among the breadth type (0,3) families.
Classification classify_4gen_2step(const LieAlgebra& l);

}  // namespace breadthlab
