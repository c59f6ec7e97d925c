#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "breadthlab/groupcorr.hpp"

using namespace breadthlab;

namespace {

std::vector<std::uint32_t> coset_key(const GroupElement& g, const Subspace& n) {
  std::vector<std::uint32_t> k;
  for (const auto& x : g.alpha) k.push_back(x.index());
  for (const auto& x : n.reduce(g.beta)) k.push_back(x.index());
  return k;
}

// Conjugacy class sizes of G/N by conjugating every element by every element.
std::map<std::uint64_t, std::uint64_t> class_size_oracle(const ClassTwoGroup& g, const Subspace& n) {
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < g.order_exponent(); ++i) order *= g.p();
  std::set<std::vector<std::uint32_t>> cosets;
  std::map<std::uint64_t, std::uint64_t> out;
  for (std::uint64_t a = 0; a < order; ++a) {
    const GroupElement x = g.element(a);
    if (!cosets.insert(coset_key(x, n)).second) continue;
    std::set<std::vector<std::uint32_t>> cls;
    for (std::uint64_t b = 0; b < order; ++b) {
      const GroupElement h = g.element(b);
      cls.insert(coset_key(g.mul(g.mul(h, x), g.inverse(h)), n));
    }
    ++out[cls.size()];
  }
  return out;
}

}  // namespace

TEST(GroupCorr, EvenPrimeRejected) {
  try {
    ClassTwoGroup(2, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EvenPrime);
  }
}

TEST(GroupCorr, GeneratorCommutator) {
  const ClassTwoGroup g(3, 2);
  const GroupElement c = g.commutator(g.generator(0), g.generator(1));
  EXPECT_EQ(c, g.central(0, 1));
  EXPECT_TRUE(c.alpha == zero_vector(g.field(), 3));
  EXPECT_EQ(c.beta[0], g.field().one());
  EXPECT_EQ(g.commutator(g.generator(1), g.generator(0)), g.inverse(c));
}

TEST(GroupCorr, GroupAxiomsExhaustive) {
  const ClassTwoGroup g(3, 1);
  std::vector<GroupElement> all;
  for (std::uint64_t i = 0; i < 27; ++i) all.push_back(g.element(i));
  for (const auto& a : all) {
    EXPECT_EQ(g.mul(a, g.inverse(a)), g.identity());
    EXPECT_EQ(g.power(a, 3), g.identity());
    for (const auto& b : all)
      for (const auto& c : all) ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
  }
}

TEST(GroupCorr, ExponentAndClassTwo) {
  std::mt19937_64 rng(41);
  for (std::uint32_t p : {3u, 5u}) {
    const ClassTwoGroup g(p, 3);
    for (int t = 0; t < 200; ++t) {
      const GroupElement a = g.random(rng), b = g.random(rng), c = g.random(rng);
      EXPECT_EQ(g.power(a, p), g.identity());
      const GroupElement k = g.commutator(a, b);
      EXPECT_EQ(g.mul(k, c), g.mul(c, k));
      EXPECT_EQ(psi(k).size(), 4u + 6u);
    }
  }
}

TEST(GroupCorr, HomomorphismsRespectProducts) {
  std::mt19937_64 rng(42);
  const ClassTwoGroup g(5, 2);
  for (int t = 0; t < 20; ++t) {
    std::vector<GroupElement> images;
    for (std::size_t i = 0; i < 3; ++i) images.push_back(g.random(rng));
    const GroupElement a = g.random(rng), b = g.random(rng);
    EXPECT_EQ(g.apply_hom(images, g.mul(a, b)), g.mul(g.apply_hom(images, a), g.apply_hom(images, b)));
  }
}

TEST(GroupCorr, ConjugateTypeMatchesOracle) {
  const ClassTwoGroup g1(3, 1);
  const ConjugateType h = conjugate_type(g1, Subspace(g1.field(), 1));
  EXPECT_EQ(to_string(h, 3), "(1,3)");
  EXPECT_EQ(h.elements.at(0), 3u);
  EXPECT_EQ(h.elements.at(1), 24u);
  const auto o1 = class_size_oracle(g1, Subspace(g1.field(), 1));
  EXPECT_EQ(o1.at(1), 3u);
  EXPECT_EQ(o1.at(3), 24u);

  const ClassTwoGroup g(3, 2);
  const Field f = g.field();
  const std::vector<Subspace> ns = {
      Subspace(f, 3),
      Subspace::span(f, 3, {unit_vector(f, 3, 0)}),
      Subspace::span(f, 3, {{f.one(), f.one(), f.zero()}}),
      Subspace::span(f, 3, {unit_vector(f, 3, 0), unit_vector(f, 3, 2)}),
      Subspace::full(f, 3),
  };
  for (const auto& n : ns) {
    const ConjugateType t = conjugate_type(g, n);
    const auto oracle = class_size_oracle(g, n);
    std::map<std::uint64_t, std::uint64_t> got;
    for (const auto& [e, count] : t.elements) {
      std::uint64_t size = 1;
      for (std::size_t i = 0; i < e; ++i) size *= 3;
      got[size] = count;
    }
    EXPECT_EQ(got, oracle);
    EXPECT_TRUE(verify_correspondence(g, n).ok);
  }
  EXPECT_EQ(to_string(conjugate_type(g, Subspace(f, 3)), 3), "(1,3^2)");
  EXPECT_EQ(to_string(conjugate_type(g, Subspace::full(f, 3)), 3), "(1)");
}

TEST(GroupCorr, PsiIsLinearOnCentre) {
  const ClassTwoGroup g(3, 2);
  const GroupElement a = g.central(0, 1), b = g.central(1, 2);
  EXPECT_EQ(g.mul(a, b), g.mul(b, a));
  Vector sum = psi(a);
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += psi(b)[i];
  EXPECT_EQ(psi(g.mul(a, b)), sum);
  const Subspace n = Subspace::span(g.field(), 3, {unit_vector(g.field(), 3, 1)});
  EXPECT_EQ(psi_R(n), n);
}

TEST(GroupCorr, PsiHomOnGenerators) {
  std::mt19937_64 rng(43);
  const ClassTwoGroup g(3, 2);
  std::vector<GroupElement> images;
  for (std::size_t i = 0; i < 3; ++i) images.push_back(g.random(rng));
  const GeneratorMap phi = psi_hom(g, images);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(apply_to_element(phi, psi(g.generator(i))), psi(images[i]));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      const GroupElement c = g.commutator(g.generator(i), g.generator(j));
      EXPECT_EQ(apply_to_element(phi, psi(c)), psi(g.apply_hom(images, c)));
    }
}
