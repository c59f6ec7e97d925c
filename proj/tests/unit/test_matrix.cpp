#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "breadthlab/subspace.hpp"

using namespace breadthlab;

namespace {

Matrix random_matrix(Field f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(f, r, c);
  for (auto& x : m.entries()) x = f.random(rng);
  return m;
}

Matrix random_skew(Field f, std::size_t n, std::mt19937_64& rng) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = f.random(rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

// Leibniz expansion.
FieldElem leibniz(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  FieldElem acc = m.field().zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    FieldElem term = m.field().one();
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    acc += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// Sum over perfect matchings.
FieldElem pfaffian_matchings(const Matrix& m, std::vector<std::size_t> left) {
  if (left.empty()) return m.field().one();
  FieldElem acc = m.field().zero();
  const std::size_t i = left[0];
  for (std::size_t k = 1; k < left.size(); ++k) {
    std::vector<std::size_t> rest;
    for (std::size_t t = 1; t < left.size(); ++t)
      if (t != k) rest.push_back(left[t]);
    const FieldElem term = m(i, left[k]) * pfaffian_matchings(m, rest);
    acc += (k - 1) % 2 ? -term : term;
  }
  return acc;
}

}  // namespace

TEST(Matrix, RankKernelZero) {
  const Field f = Field::gf(3);
  const Matrix z(f, 3, 3);
  EXPECT_EQ(rank(z), 0u);
  EXPECT_EQ(kernel(z).dim(), 3u);
  EXPECT_EQ(rank(Matrix::identity(f, 4)), 4u);
}

TEST(Matrix, RankPlusNullity) {
  std::mt19937_64 rng(1);
  for (const Field f : {Field::gf(2), Field::gf(3), Field::gf(2, 2), Field::rational()}) {
    for (int t = 0; t < 50; ++t) {
      const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
      const Matrix m = random_matrix(f, r, c, rng);
      const Subspace k = kernel(m);
      EXPECT_EQ(rank(m) + k.dim(), c);
      for (const auto& v : k.basis()) EXPECT_TRUE(is_zero_vector(m.apply(v)));
    }
  }
}

TEST(Matrix, RrefIsCanonical) {
  const Field f = Field::gf(5);
  const Matrix m = Matrix::from_ints(f, {{2, 4, 1}, {1, 2, 3}, {3, 1, 0}});
  const RrefResult r = rref(m);
  EXPECT_EQ(r.pivots.size(), rank(m));
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    EXPECT_TRUE(r.reduced(i, r.pivots[i]).is_one());
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
      if (k != i) {
        EXPECT_TRUE(r.reduced(k, r.pivots[i]).is_zero());
      }
  }
}

TEST(Matrix, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(2);
  for (const Field f : {Field::gf(3), Field::gf(2, 3), Field::rational()})
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 1 + rng() % 5;
      const Matrix m = random_matrix(f, n, n, rng);
      EXPECT_EQ(det(m), leibniz(m));
      if (!det(m).is_zero()) {
        EXPECT_EQ(m * inverse(m), Matrix::identity(f, n));
      }
    }
}

TEST(Matrix, Errors) {
  const Field f = Field::gf(3);
  try {
    det(Matrix(f, 2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonSquare);
  }
  EXPECT_THROW(inverse(Matrix(f, 2, 2)), Error);
  try {
    pfaffian(Matrix::from_ints(f, {{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OddDimension);
  }
  try {
    pfaffian(Matrix::from_ints(f, {{0, 1}, {1, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSkewSymmetric);
  }
  EXPECT_THROW(Matrix(f, 2, 2) * Matrix(f, 3, 3), Error);
}

TEST(Matrix, PfaffianExamples) {
  const Field q = Field::rational();
  EXPECT_EQ(pfaffian(Matrix::from_ints(q, {{0, 1}, {-1, 0}})), q.one());
  const Matrix j = Matrix::from_ints(q, {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
  EXPECT_EQ(pfaffian(j), q.one());
  EXPECT_EQ(pfaffian(Matrix(q, 0, 0)), q.one());
}

TEST(Matrix, PfaffianSquaredIsDeterminant) {
  std::mt19937_64 rng(3);
  for (const Field f : {Field::gf(3), Field::gf(2, 2), Field::gf(7), Field::rational()})
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 2 * (1 + rng() % 3);
      const Matrix m = random_skew(f, n, rng);
      const FieldElem pf = pfaffian(m);
      EXPECT_EQ(pf * pf, det(m));
      std::vector<std::size_t> all(n);
      std::iota(all.begin(), all.end(), 0);
      EXPECT_EQ(pf, pfaffian_matchings(m, all));
    }
}

TEST(Matrix, IsSkewInCharacteristicTwo) {
  const Field f = Field::gf(2);
  EXPECT_TRUE(is_skew(Matrix::from_ints(f, {{0, 1}, {1, 0}})));
  EXPECT_FALSE(is_skew(Matrix::from_ints(f, {{1, 1}, {1, 0}})));
}
