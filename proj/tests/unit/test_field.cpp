#include <gtest/gtest.h>

#include <thread>

#include "breadthlab/field.hpp"

using namespace breadthlab;

namespace {

// Naive GF(p)[x]/(modulus) arithmetic on coefficient vectors, independent of the tables.
struct PolyOracle {
  std::uint32_t p, n;
  std::vector<std::uint32_t> modulus;

  std::vector<std::uint32_t> unpack(std::uint32_t idx) const {
    std::vector<std::uint32_t> c(n);
    for (auto& x : c) {
      x = idx % p;
      idx /= p;
    }
    return c;
  }
  std::uint32_t pack(const std::vector<std::uint32_t>& c) const {
    std::uint32_t idx = 0;
    for (std::size_t i = n; i > 0; --i) idx = idx * p + c[i - 1];
    return idx;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const auto x = unpack(a), y = unpack(b);
    std::vector<std::uint64_t> prod(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) prod[i + j] += std::uint64_t{x[i]} * y[j];
    for (auto& v : prod) v %= p;
    for (std::size_t d = 2 * n - 1; d >= n; --d) {
      const std::uint64_t c = prod[d];
      if (c == 0) continue;
      for (std::size_t k = 0; k <= n; ++k) prod[d - n + k] = (prod[d - n + k] + (p - c) * modulus[k]) % p;
    }
    std::vector<std::uint32_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return pack(out);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = unpack(a);
    const auto y = unpack(b);
    for (std::size_t i = 0; i < n; ++i) x[i] = (x[i] + y[i]) % p;
    return pack(x);
  }
};

}  // namespace

TEST(Field, PrimeFieldArithmetic) {
  const Field f = Field::gf(3);
  EXPECT_EQ(f.from_int(2) + f.from_int(2), f.one());
  EXPECT_EQ(f.from_int(-1), f.from_int(2));
  EXPECT_EQ(f.from_int(2).inv(), f.from_int(2));
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f.characteristic(), 3u);
}

TEST(Field, Gf4DefaultModulus) {
  const Field f = Field::gf(2, 2);
  const FieldElem w = f.element(2);
  EXPECT_EQ(f.spec().modulus, (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(w * w, w + f.one());
  EXPECT_EQ(f.trace(w), f.one());
}

TEST(Field, Gf9DefaultModulus) {
  const Field f = Field::gf(3, 2);
  EXPECT_EQ(f.spec().modulus, (std::vector<std::uint32_t>{1, 0, 1}));
  const FieldElem x = f.element(3);
  EXPECT_EQ(x * x, f.from_int(-1));
}

TEST(Field, TablesMatchPolynomialOracle) {
  for (auto [p, n] :
       std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 2}, {3, 3}, {2, 6}}) {
    const Field f = Field::gf(p, n);
    const PolyOracle o{p, n, f.spec().modulus};
    for (std::uint32_t a = 0; a < f.size(); ++a)
      for (std::uint32_t b = 0; b < f.size(); ++b) {
        ASSERT_EQ((f.element(a) * f.element(b)).index(), o.mul(a, b)) << f.name() << " " << a << "*" << b;
        ASSERT_EQ((f.element(a) + f.element(b)).index(), o.add(a, b)) << f.name() << " " << a << "+" << b;
      }
  }
}

TEST(Field, CustomModulus) {
  const Field f = Field::get(FieldSpec::finite(2, 3, {1, 0, 1, 1}));
  const PolyOracle o{2, 3, {1, 0, 1, 1}};
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b) EXPECT_EQ((f.element(a) * f.element(b)).index(), o.mul(a, b));
  EXPECT_NE(f, Field::gf(2, 3));
  EXPECT_THROW(Field::get(FieldSpec::finite(2, 2, {1, 0, 1})), Error);
}

TEST(Field, InversesAndPowers) {
  for (std::uint32_t q : {7u, 16u, 25u}) {
    const Field f = q == 16 ? Field::gf(2, 4) : q == 25 ? Field::gf(5, 2) : Field::gf(7);
    for (std::uint32_t a = 1; a < f.size(); ++a) {
      const FieldElem x = f.element(a);
      EXPECT_TRUE((x * x.inv()).is_one());
      EXPECT_TRUE(x.pow(static_cast<std::int64_t>(f.size()) - 1).is_one());
      EXPECT_EQ(x.pow(-1), x.inv());
    }
  }
  EXPECT_THROW(Field::gf(5).zero().inv(), Error);
}

TEST(Field, TraceCounts) {
  const Field f = Field::gf(2, 3);
  int ones = 0;
  for (std::uint32_t a = 0; a < 8; ++a) {
    const FieldElem t = f.trace(f.element(a));
    EXPECT_TRUE(t.is_zero() || t.is_one());
    ones += t.is_one();
    for (std::uint32_t b = 0; b < 8; ++b) EXPECT_EQ(f.trace(f.element(a) + f.element(b)), t + f.trace(f.element(b)));
  }
  EXPECT_EQ(ones, 4);
  EXPECT_EQ(f.trace(f.least_trace_one()), f.one());
  EXPECT_EQ(Field::gf(2).trace(Field::gf(2).one()), Field::gf(2).one());
  EXPECT_THROW(Field::rational().trace(Field::rational().one()), Error);
}

TEST(Field, Squares) {
  const Field f5 = Field::gf(5);
  EXPECT_TRUE(f5.is_square(f5.from_int(4)));
  EXPECT_EQ(f5.find_nonsquare(), f5.from_int(2));
  EXPECT_EQ(Field::gf(3).find_nonsquare(), Field::gf(3).from_int(2));
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u, 25u, 27u, 49u}) {
    Field f;
    if (q == 9)
      f = Field::gf(3, 2);
    else if (q == 25)
      f = Field::gf(5, 2);
    else if (q == 27)
      f = Field::gf(3, 3);
    else if (q == 49)
      f = Field::gf(7, 2);
    else
      f = Field::gf(q);
    std::vector<bool> sq(q, false);
    for (std::uint32_t a = 0; a < q; ++a) sq[(f.element(a) * f.element(a)).index()] = true;
    std::uint32_t count = 0;
    for (std::uint32_t a = 1; a < q; ++a) {
      EXPECT_EQ(f.is_square(f.element(a)), sq[a]);
      count += sq[a];
      const auto r = f.sqrt(f.element(a));
      EXPECT_EQ(r.has_value(), sq[a]);
      if (r) {
        EXPECT_EQ(*r * *r, f.element(a));
      }
    }
    EXPECT_EQ(count, (q - 1) / 2);
  }
  const Field q = Field::rational();
  EXPECT_FALSE(q.is_square(q.from_int(-1)));
  EXPECT_TRUE(q.is_square(q.ratio(9, 4)));
  EXPECT_FALSE(q.is_square(q.ratio(2, 1)));
  EXPECT_EQ(*q.sqrt(q.ratio(9, 4)), q.ratio(3, 2));
  EXPECT_EQ(q.find_nonsquare(), q.from_int(-1));
  EXPECT_THROW(Field::gf(2, 2).find_nonsquare(), Error);
}

TEST(Field, QuadraticIrreducibleMatchesRootSearch) {
  for (const Field f : {Field::gf(2), Field::gf(3), Field::gf(2, 2), Field::gf(5), Field::gf(2, 3), Field::gf(3, 2)}) {
    for (std::uint32_t a = 1; a < f.size(); ++a)
      for (std::uint32_t b = 0; b < f.size(); ++b)
        for (std::uint32_t c = 0; c < f.size(); ++c) {
          bool root = false;
          for (std::uint32_t x = 0; x < f.size(); ++x) {
            const FieldElem t = f.element(x);
            root = root || (f.element(a) * t * t + f.element(b) * t + f.element(c)).is_zero();
          }
          ASSERT_EQ(quadratic_irreducible(f.element(a), f.element(b), f.element(c)), !root) << f.name();
        }
  }
  const Field f2 = Field::gf(2);
  EXPECT_TRUE(quadratic_irreducible(f2.one(), f2.one(), f2.one()));
  EXPECT_THROW(quadratic_irreducible(f2.zero(), f2.one(), f2.one()), Error);
  const Field f5 = Field::gf(5);
  EXPECT_FALSE(quadratic_irreducible(f5.one(), f5.zero(), f5.from_int(-1)));
}

TEST(Field, Rationals) {
  const Field q = Field::rational();
  const FieldElem x = q.ratio(-2, 3);
  EXPECT_EQ(x.inv(), q.ratio(-3, 2));
  EXPECT_EQ(q.ratio(2, -4), q.ratio(-1, 2));
  EXPECT_EQ(x.num(), -2);
  EXPECT_EQ(x.den(), 3);
  EXPECT_EQ(x + q.ratio(2, 3), q.zero());
  EXPECT_EQ(x.to_string(), "-2/3");
  EXPECT_THROW(q.ratio(1, 0), Error);
  const FieldElem big = q.from_int(std::int64_t{1} << 62);
  EXPECT_THROW(big * big, Error);
}

TEST(Field, Mismatch) {
  EXPECT_THROW(Field::gf(3).one() + Field::gf(5).one(), Error);
  try {
    (void)(Field::gf(3).one() * Field::rational().one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FieldMismatch);
  }
}

TEST(Field, ParseNames) {
  EXPECT_EQ(parse_field_name("gf3"), Field::gf(3));
  EXPECT_EQ(parse_field_name("gf2^3"), Field::gf(2, 3));
  EXPECT_EQ(parse_field_name("gf4"), Field::gf(2, 2));
  EXPECT_EQ(parse_field_name("gf9"), Field::gf(3, 2));
  EXPECT_EQ(parse_field_name("rational"), Field::rational());
  EXPECT_EQ(parse_field_name("Q"), Field::rational());
  EXPECT_THROW(parse_field_name("gf6"), Error);
  EXPECT_THROW(parse_field_name("real"), Error);
}

TEST(Field, ConcurrentRegistry) {
  std::vector<Field> seen(8);
  std::vector<std::thread> ts;
  for (int i = 0; i < 8; ++i) ts.emplace_back([&, i] { seen[i] = Field::gf(3, 4); });
  for (auto& t : ts) t.join();
  for (const auto& f : seen) EXPECT_EQ(f, seen[0]);
}
