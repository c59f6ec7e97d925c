#include <gtest/gtest.h>

#include <random>

#include "breadthlab/bivector.hpp"
#include "breadthlab/constructions.hpp"

using namespace breadthlab;

namespace {

// Plücker relations: all 4x4 sub-Pfaffians vanish.
bool decomposable_oracle(const Vector& b, std::size_t g) {
  auto c = [&](std::size_t i, std::size_t j) { return b[bivector_index(i, j, g)]; };
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j)
      for (std::size_t k = j + 1; k < g; ++k)
        for (std::size_t l = k + 1; l < g; ++l)
          if (!(c(i, j) * c(k, l) - c(i, k) * c(j, l) + c(i, l) * c(j, k)).is_zero()) return false;
  return true;
}

bool bracket_free_oracle(const Subspace& s, std::size_t g) {
  bool free = true;
  for_each_projective_element(s, [&](const Vector&, const Vector& v) {
    free = !decomposable_oracle(v, g);
    return free;
  });
  return free;
}

Subspace random_ideal(Field f, std::size_t g, std::size_t d, std::mt19937_64& rng) {
  const std::size_t b = bivector_count(g);
  Subspace s(f, b);
  while (s.dim() < d) {
    Vector v(b, f.zero());
    for (auto& x : v) x = f.random(rng);
    std::vector<Vector> rows = s.basis();
    rows.push_back(v);
    s = Subspace::span(f, b, rows);
  }
  return s;
}

Vector coords(Field f, std::initializer_list<std::pair<std::size_t, std::int64_t>> e) {
  Vector v(6, f.zero());
  for (auto [i, c] : e) v[i] = f.from_int(c);
  return v;
}

}  // namespace

TEST(Bivector, SkewRoundTrip) {
  const Field f = Field::gf(5);
  const Vector b = {f.from_int(1), f.from_int(2), f.from_int(3), f.from_int(4), f.zero(), f.from_int(1)};
  const Matrix m = to_skew(b, 4);
  EXPECT_TRUE(is_skew(m));
  EXPECT_EQ(m(1, 0), f.from_int(-1));
  EXPECT_EQ(from_skew(m), b);
}

TEST(Bivector, WedgeCoordinates) {
  std::mt19937_64 rng(9);
  const Field f = Field::gf(7);
  for (int t = 0; t < 20; ++t) {
    Vector a(5, f.zero()), b(5, f.zero());
    for (auto& x : a) x = f.random(rng);
    for (auto& x : b) x = f.random(rng);
    const Vector w = wedge(a, b);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j) EXPECT_EQ(w[bivector_index(i, j, 5)], a[i] * b[j] - a[j] * b[i]);
    EXPECT_TRUE(is_decomposable(w, 5));
    const auto fac = factor_decomposable(w, 5);
    if (is_zero_vector(w)) {
      EXPECT_FALSE(fac.has_value());
    } else {
      ASSERT_TRUE(fac.has_value());
      EXPECT_EQ(wedge(fac->a, fac->b), w);
    }
  }
}

TEST(Bivector, KleinQuadricCounts) {
  for (auto [f, expected] :
       std::vector<std::pair<Field, std::uint64_t>>{{Field::gf(2), 35}, {Field::gf(3), 260}, {Field::gf(2, 2), 1071}}) {
    std::uint64_t count = 0, oracle = 0;
    for_each_vector(f, 6, [&](const Vector& v) {
      if (is_zero_vector(v)) return true;
      count += is_decomposable(v, 4);
      oracle += decomposable_oracle(v, 4);
      EXPECT_EQ(skew_rank(v, 4), decomposable_oracle(v, 4) ? 2u : 4u);
      return true;
    });
    EXPECT_EQ(count, expected) << f.name();
    EXPECT_EQ(oracle, expected) << f.name();
  }
}

TEST(Bivector, BracketFreeMatchesOracle) {
  std::mt19937_64 rng(11);
  for (const Field f : {Field::gf(2), Field::gf(3), Field::gf(5)})
    for (std::size_t g : {4u, 5u})
      for (std::size_t d = 1; d <= 3; ++d)
        for (int t = 0; t < 15; ++t) {
          const Subspace s = random_ideal(f, g, d, rng);
          const BracketFreeResult r = bracket_free(s, g);
          EXPECT_EQ(r.bracket_free, bracket_free_oracle(s, g));
          if (!r.bracket_free) {
            ASSERT_TRUE(r.witness && r.factors);
            EXPECT_TRUE(s.contains(*r.witness));
            EXPECT_EQ(wedge(r.factors->a, r.factors->b), *r.witness);
          }
        }
}

TEST(Bivector, QuotientTypeFollowsBracketFree) {
  const Field f = Field::gf(3);
  const Subspace j = Subspace::span(f, 6, {coords(f, {{0, 1}, {5, 1}})});
  EXPECT_EQ(to_string(breadth_type_of_quotient(j, 4)), "(0,3)");
  const Subspace e12 = Subspace::span(f, 6, {coords(f, {{0, 1}})});
  EXPECT_NE(to_string(breadth_type_of_quotient(e12, 4)), "(0,3)");
  EXPECT_EQ(to_string(breadth_type_of_quotient(Subspace(f, 6), 4)), "(0,3)");
  EXPECT_EQ(to_string(breadth_type_of_quotient(Subspace(f, 3), 3)), "(0,2)");
}

TEST(Bivector, RationalMethods) {
  const Field q = Field::rational();
  const Subspace j = Subspace::span(q, 6, {coords(q, {{0, 1}, {5, 1}})});
  EXPECT_TRUE(bracket_free(j, 4).bracket_free);
  EXPECT_EQ(bracket_free(j, 4).method, "rank");
  const Subspace camina =
      Subspace::span(q, 6, {coords(q, {{0, 1}, {5, 1}}), coords(q, {{1, 1}, {4, -1}}), coords(q, {{2, 1}, {3, 1}})});
  const BracketFreeResult c = bracket_free(camina, 4);
  EXPECT_TRUE(c.bracket_free);
  EXPECT_EQ(c.method, "definite");
  const Subspace split = Subspace::span(q, 6, {coords(q, {{0, 1}, {5, 1}}), coords(q, {{0, 1}, {5, -1}})});
  const BracketFreeResult s = bracket_free(split, 4);
  EXPECT_FALSE(s.bracket_free);
  ASSERT_TRUE(s.witness.has_value());
  EXPECT_TRUE(is_decomposable(*s.witness, 4));
}
