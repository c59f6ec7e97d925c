#include <gtest/gtest.h>

#include <random>
#include <set>

#include "breadthlab/subspace.hpp"

using namespace breadthlab;

namespace {

std::vector<std::uint32_t> key(const Subspace& s) {
  std::vector<std::uint32_t> k;
  for (const auto& v : s.basis())
    for (const auto& x : v) k.push_back(x.index());
  return k;
}

}  // namespace

TEST(Subspace, SpanIsCanonical) {
  const Field f = Field::gf(3);
  const Vector a = {f.one(), f.from_int(2), f.zero()};
  const Vector b = {f.zero(), f.one(), f.one()};
  const Subspace s = Subspace::span(f, 3, {a, b});
  const Vector c = {f.one(), f.zero(), f.one()};
  const Subspace t = Subspace::span(f, 3, {a, c});
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(s.contains(c));
  EXPECT_EQ(Subspace::span(f, 3, {b, c}), s);
  EXPECT_EQ(t, s);
}

TEST(Subspace, GaussianBinomial) {
  EXPECT_EQ(gaussian_binomial(6, 1, 3), 364u);
  EXPECT_EQ(gaussian_binomial(6, 2, 3), 11011u);
  EXPECT_EQ(gaussian_binomial(6, 3, 3), 33880u);
  EXPECT_EQ(gaussian_binomial(6, 2, 2), 651u);
  EXPECT_EQ(gaussian_binomial(6, 3, 4), 376805u);
  EXPECT_EQ(gaussian_binomial(3, 1, 3), 13u);
  EXPECT_EQ(gaussian_binomial(3, 4, 3), 0u);
  EXPECT_EQ(gaussian_binomial(5, 0, 7), 1u);
}

TEST(Subspace, EnumeratorMatchesBruteForce) {
  for (const Field f : {Field::gf(2), Field::gf(3)}) {
    const std::size_t n = f.size() == 2 ? 4 : 3;
    // Oracle: spans of all tuples of vectors, deduplicated.
    std::vector<Vector> all;
    for_each_vector(f, n, [&](const Vector& v) {
      all.push_back(v);
      return true;
    });
    for (std::size_t d = 0; d <= n; ++d) {
      std::set<std::vector<std::uint32_t>> oracle;
      std::vector<std::size_t> idx(d, 0);
      while (true) {
        std::vector<Vector> rows;
        for (auto i : idx) rows.push_back(all[i]);
        const Subspace s = Subspace::span(f, n, rows);
        if (s.dim() == d) oracle.insert(key(s));
        std::size_t k = d;
        while (k > 0 && ++idx[k - 1] == all.size()) idx[--k] = 0;
        if (k == 0) break;
      }
      std::set<std::vector<std::uint32_t>> seen;
      SubspaceEnumerator en(f, n, d);
      Subspace s;
      while (en.next(s)) {
        EXPECT_EQ(s.dim(), d);
        EXPECT_TRUE(seen.insert(key(s)).second);
      }
      EXPECT_EQ(seen, oracle);
      EXPECT_EQ(seen.size(), gaussian_binomial(n, d, f.size()));
    }
  }
}

TEST(Subspace, ProjectiveScan) {
  const Field f = Field::gf(2, 2);
  std::set<std::vector<std::uint32_t>> lines;
  std::uint64_t count = 0;
  for_each_projective(f, 3, [&](const Vector& v) {
    ++count;
    lines.insert(key(Subspace::span(f, 3, {v})));
    return true;
  });
  EXPECT_EQ(count, 21u);
  EXPECT_EQ(lines.size(), 21u);
}

TEST(Subspace, IntersectionAndAnnihilator) {
  std::mt19937_64 rng(5);
  const Field f = Field::gf(5);
  for (int t = 0; t < 30; ++t) {
    auto rnd = [&](std::size_t d) {
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < d; ++i) {
        Vector v(5, f.zero());
        for (auto& x : v) x = f.random(rng);
        rows.push_back(v);
      }
      return Subspace::span(f, 5, rows);
    };
    const Subspace a = rnd(rng() % 5), b = rnd(rng() % 5);
    const Subspace i = intersect(a, b);
    EXPECT_EQ(a.dim() + b.dim(), sum(a, b).dim() + i.dim());
    EXPECT_TRUE(a.contains(i));
    EXPECT_TRUE(b.contains(i));
    EXPECT_EQ(annihilator(annihilator(a)), a);
    EXPECT_EQ(annihilator(a).dim() + a.dim(), 5u);
  }
}

TEST(Subspace, ReduceAndCombination) {
  const Field f = Field::gf(7);
  const Subspace s = Subspace::span(f, 3, {{f.one(), f.from_int(2), f.zero()}});
  const Vector v = {f.from_int(3), f.from_int(6), f.zero()};
  EXPECT_TRUE(is_zero_vector(s.reduce(v)));
  EXPECT_EQ(s.combination({f.from_int(3)}), v);
  EXPECT_EQ(s.non_pivots(), (std::vector<std::size_t>{1, 2}));
  EXPECT_THROW(s.contains(Vector{f.one()}), Error);
}
