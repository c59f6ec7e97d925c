#include <gtest/gtest.h>

#include "breadthlab/constructions.hpp"

using namespace breadthlab;

TEST(Constructions, BivectorIndex) {
  EXPECT_EQ(bivector_count(4), 6u);
  EXPECT_EQ(bivector_index(0, 1, 4), 0u);
  EXPECT_EQ(bivector_index(0, 3, 4), 2u);
  EXPECT_EQ(bivector_index(1, 2, 4), 3u);
  EXPECT_EQ(bivector_index(2, 3, 4), 5u);
  std::size_t k = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j, ++k) {
      EXPECT_EQ(bivector_index(i, j, 6), k);
      EXPECT_EQ(bivector_pair(k, 6), std::make_pair(i, j));
    }
}

TEST(Constructions, FreeTwoStep) {
  const Field f = Field::gf(3);
  const LieAlgebra l = free_two_step(3, f);
  EXPECT_EQ(l.dim(), 10u);
  EXPECT_TRUE(validate(l).ok);
  EXPECT_EQ(nilpotency_class(l), 2u);
  EXPECT_EQ(center(l).dim(), 6u);
  EXPECT_EQ(derived(l), center(l));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      EXPECT_EQ(l.basis_bracket(i, j), unit_vector(f, 10, 4 + bivector_index(i, j, 4)));
}

TEST(Constructions, FamiliesSatisfyJacobi) {
  for (const Field f : {Field::gf(2), Field::gf(3), Field::gf(2, 2), Field::gf(5), Field::rational()}) {
    for (const auto& l : {heisenberg(2, f), sl2(f), five_dim_three_step(f), two_dim_nonabelian(f), free_two_step(3, f)})
      EXPECT_TRUE(validate(l).ok) << f.name();
    for (const auto& fam : theorem_families(f)) EXPECT_TRUE(validate(fam.algebra).ok) << fam.name;
  }
}

TEST(Constructions, HeisenbergDegree) {
  const Field f = Field::gf(3);
  const auto mod = least_irreducible(3, f);
  ASSERT_EQ(mod.size(), 4u);
  EXPECT_TRUE(mod.back().is_one());
  for (std::uint32_t t = 0; t < 3; ++t) {
    FieldElem v = f.zero();
    for (std::size_t i = mod.size(); i > 0; --i) v = v * f.element(t) + mod[i - 1];
    EXPECT_FALSE(v.is_zero());
  }
  const LieAlgebra h = heisenberg_degree(3, f);
  EXPECT_EQ(h.dim(), 9u);
  EXPECT_TRUE(validate(h).ok);
  EXPECT_EQ(center(h).dim(), 3u);
  EXPECT_EQ(derived(h).dim(), 3u);
  const Field q = Field::rational();
  const LieAlgebra hq = heisenberg_degree(2, q, {q.one(), q.zero(), q.one()});
  EXPECT_TRUE(validate(hq).ok);
  EXPECT_THROW(heisenberg_degree(2, q), Error);
}

TEST(Constructions, QuotientByCentralIdeal) {
  const Field f = Field::gf(3);
  const LieAlgebra l = free_two_step(3, f);
  Vector j(6, f.zero());
  j[0] = f.one();
  j[5] = f.one();
  const LieAlgebra q = free_quotient(Subspace::span(f, 6, {j}), 4);
  EXPECT_EQ(q.dim(), 9u);
  EXPECT_TRUE(validate(q).ok);
  EXPECT_EQ(center(q).dim(), 5u);
  EXPECT_THROW(quotient_by_central_ideal(l, Subspace::span(f, 10, {unit_vector(f, 10, 0)})), Error);
}

TEST(Constructions, FamilyTags) {
  EXPECT_EQ(theorem_families(Field::gf(3)).size(), 4u);
  EXPECT_EQ(theorem_families(Field::gf(2)).size(), 3u);
  EXPECT_EQ(theorem_families(Field::rational()).size(), 4u);
  for (const Field f : {Field::gf(3), Field::gf(2)})
    for (const auto& fam : theorem_families(f)) {
      EXPECT_EQ(to_string(breadth_type(fam.algebra)), "(0,3)") << fam.name;
      EXPECT_TRUE(is_stem(fam.algebra));
    }
}
