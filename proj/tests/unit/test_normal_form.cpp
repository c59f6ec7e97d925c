#include <gtest/gtest.h>

#include <random>

#include "breadthlab/constructions.hpp"
#include "breadthlab/normal_form.hpp"

using namespace breadthlab;

namespace {

Matrix random_invertible(Field f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Matrix m(f, n, n);
    for (auto& x : m.entries()) x = f.random(rng);
    if (!det(m).is_zero()) return m;
  }
}

Vector random_vector(Field f, std::size_t n, std::mt19937_64& rng) {
  Vector v(n, f.zero());
  for (auto& x : v) x = f.random(rng);
  return v;
}

Subspace random_ideal(Field f, std::size_t d, std::mt19937_64& rng) {
  Subspace s(f, 6);
  while (s.dim() < d) {
    std::vector<Vector> rows = s.basis();
    rows.push_back(random_vector(f, 6, rng));
    s = Subspace::span(f, 6, rows);
  }
  return s;
}

Vector biv(Field f, std::initializer_list<std::pair<std::size_t, FieldElem>> e) {
  Vector v(6, f.zero());
  for (const auto& [i, c] : e) v[i] = c;
  return v;
}

}  // namespace

TEST(NormalForm, ExteriorSquareIsFunctorial) {
  std::mt19937_64 rng(31);
  for (const Field f : {Field::gf(3), Field::gf(2, 2), Field::rational()})
    for (int t = 0; t < 20; ++t) {
      const Matrix a = random_invertible(f, 4, rng), b = random_invertible(f, 4, rng);
      EXPECT_EQ(exterior_square(a * b), exterior_square(a) * exterior_square(b));
      const Vector x = random_vector(f, 4, rng), y = random_vector(f, 4, rng);
      EXPECT_EQ(exterior_square(a).apply(wedge(x, y)), wedge(a.apply(x), a.apply(y)));
    }
}

TEST(NormalForm, SkewRankIsInvariant) {
  std::mt19937_64 rng(32);
  const Field f = Field::gf(5);
  for (int t = 0; t < 50; ++t) {
    const GeneratorMap phi = GeneratorMap::from_linear(random_invertible(f, 5, rng));
    const Vector b = random_vector(f, 10, rng);
    EXPECT_EQ(skew_rank(apply_generator_map(phi, b), 5), skew_rank(b, 5));
  }
}

TEST(NormalForm, ComposeMatchesSequentialApplication) {
  std::mt19937_64 rng(33);
  const Field f = Field::gf(3);
  const GeneratorMap a = GeneratorMap::from_linear(random_invertible(f, 4, rng));
  const GeneratorMap b = GeneratorMap::from_linear(random_invertible(f, 4, rng));
  const Vector w = random_vector(f, 6, rng);
  EXPECT_EQ(apply_generator_map(compose(a, b), w), apply_generator_map(a, apply_generator_map(b, w)));
}

TEST(NormalForm, DimOneIsSound) {
  std::mt19937_64 rng(34);
  for (const Field f : {Field::gf(2), Field::gf(3), Field::rational()})
    for (std::size_t g : {4u, 5u, 6u})
      for (int t = 0; t < 20; ++t) {
        const Vector b = random_vector(f, bivector_count(g), rng);
        if (is_zero_vector(b)) continue;
        const Subspace s = Subspace::span(f, bivector_count(g), {b});
        const NormalFormResult r = reduce_dim1(s, g);
        EXPECT_EQ(2 * r.r, skew_rank(b, g));
        EXPECT_EQ(push_ideal(r.applied, s), r.canonical);
        Vector w(bivector_count(g), f.zero());
        for (std::size_t k = 0; k < r.r; ++k) w[bivector_index(2 * k, 2 * k + 1, g)] = f.one();
        EXPECT_EQ(r.canonical, Subspace::span(f, bivector_count(g), {w}));
      }
}

TEST(NormalForm, DimTwoIsSound) {
  std::mt19937_64 rng(35);
  for (const Field f : {Field::gf(3), Field::gf(5), Field::gf(2), Field::gf(2, 2)}) {
    const bool even = f.characteristic() == 2;
    const Vector j1 = biv(f, {{0, f.one()}, {5, f.one()}});
    const Subspace target =
        even ? Subspace::span(f, 6, {j1, biv(f, {{1, f.least_trace_one()}, {4, f.one()}, {5, f.one()}})})
             : Subspace::span(f, 6, {j1, biv(f, {{1, f.one()}, {4, f.find_nonsquare()}})});
    int canonical = 0;
    for (int t = 0; t < 200; ++t) {
      const Subspace s = random_ideal(f, 2, rng);
      const NormalFormResult r = reduce_dim2(s);
      const bool free = bracket_free(s, 4).bracket_free;
      if (r.tag == NormalFormTag::NotBreadthType) {
        EXPECT_FALSE(free);
        ASSERT_TRUE(r.witness.has_value());
        EXPECT_TRUE(s.contains(wedge(r.witness->a, r.witness->b)));
      } else {
        ++canonical;
        EXPECT_TRUE(free);
        EXPECT_EQ(r.canonical, target);
        EXPECT_EQ(push_ideal(r.applied, s), r.canonical);
      }
    }
    EXPECT_GT(canonical, 0) << f.name();
  }
}

TEST(NormalForm, RationalDimTwo) {
  const Field q = Field::rational();
  const Subspace s =
      Subspace::span(q, 6, {biv(q, {{0, q.one()}, {5, q.one()}}), biv(q, {{1, q.one()}, {4, q.from_int(-12)}})});
  const NormalFormResult r = reduce_dim2(s);
  ASSERT_EQ(r.tag, NormalFormTag::DimTwoOdd);
  ASSERT_TRUE(r.parameter.has_value());
  EXPECT_EQ(*r.parameter, q.from_int(-3));
  EXPECT_EQ(push_ideal(r.applied, s), r.canonical);
}

TEST(NormalForm, WrongArguments) {
  std::mt19937_64 rng(36);
  const Field f = Field::gf(3), f2 = Field::gf(2);
  EXPECT_THROW(reduce_dim2(Subspace::span(f, 6, {biv(f, {{0, f.one()}})})), Error);
  EXPECT_THROW(reduce_dim2_even(random_ideal(f, 2, rng)), Error);
  EXPECT_THROW(reduce_dim2_odd(random_ideal(f2, 2, rng)), Error);
}

TEST(NormalForm, SquarefreeKernel) {
  const Field q = Field::rational();
  EXPECT_EQ(squarefree_kernel(q.from_int(12)), 3);
  EXPECT_EQ(squarefree_kernel(q.from_int(-8)), -2);
  EXPECT_EQ(squarefree_kernel(q.ratio(9, 4)), 1);
  EXPECT_EQ(squarefree_kernel(q.ratio(2, 9)), 2);
  EXPECT_EQ(squarefree_kernel(q.ratio(3, 2)), 6);
  EXPECT_THROW(squarefree_kernel(q.zero()), Error);
}

TEST(NormalForm, ClassifyFamilies) {
  const Field f = Field::gf(3);
  const Vector j1 = biv(f, {{0, f.one()}, {5, f.one()}});
  const Classification c = classify_4gen_2step(direct_sum_abelian(free_quotient(Subspace::span(f, 6, {j1}), 4), 2));
  EXPECT_EQ(c.family, "(iii)");
  EXPECT_EQ(c.abelian_stripped, 2u);
  EXPECT_EQ(classify_4gen_2step(free_two_step(3, f)).family, "(ii)");
  EXPECT_EQ(classify_4gen_2step(free_two_step(3, Field::gf(2))).family, "(i)");
  for (const Field fld : {Field::gf(3), Field::gf(5), Field::gf(2), Field::gf(2, 2), Field::rational()})
    for (const auto& fam : theorem_families(fld))
      if (fam.is_free_quotient) {
        EXPECT_EQ(classify_4gen_2step(fam.algebra).family, fam.tag) << fam.name;
      }
  const Classification none = classify_4gen_2step(free_quotient(Subspace::span(f, 6, {biv(f, {{0, f.one()}})}), 4));
  EXPECT_EQ(none.family, "none");
}
