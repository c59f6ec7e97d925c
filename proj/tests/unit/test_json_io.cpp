#include <gtest/gtest.h>

#include <filesystem>

#include "breadthlab/constructions.hpp"
#include "breadthlab/json_io.hpp"

using namespace breadthlab;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(JsonIo, FieldRoundTrip) {
  for (const Field f : {Field::gf(3), Field::gf(2, 2), Field::gf(3, 2), Field::rational(),
                        Field::get(FieldSpec::finite(2, 3, {1, 0, 1, 1}))})
    EXPECT_EQ(field_from_json(field_to_json(f)), f);
  EXPECT_EQ(field_from_json("gf5"), Field::gf(5));
  EXPECT_EQ(kind_of([] { field_from_json(json{{"kind", "real"}}); }), ErrorKind::Parse);
}

TEST(JsonIo, Elements) {
  const Field q = Field::rational();
  EXPECT_EQ(elem_to_json(q.ratio(-3, 4)), "-3/4");
  EXPECT_EQ(elem_to_json(q.from_int(5)), 5);
  EXPECT_EQ(elem_from_json(q, "-3/4"), q.ratio(-3, 4));
  EXPECT_EQ(elem_from_json(Field::gf(5), -1), Field::gf(5).from_int(4));
  EXPECT_EQ(kind_of([] { elem_from_json(Field::gf(5), 7); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([&] { elem_from_json(q, "x/2"); }), ErrorKind::Parse);
}

TEST(JsonIo, AlgebraRoundTrip) {
  for (const Field f : {Field::gf(3), Field::gf(2, 2), Field::rational()}) {
    for (const auto& l : {heisenberg(2, f), five_dim_three_step(f), sl2(f), free_two_step(3, f)}) {
      const LieAlgebra back = algebra_from_json(algebra_to_json(l));
      EXPECT_EQ(back, l);
    }
  }
  const json text = json::parse(R"({"field":"gf3","dim":3,"brackets":[[0,1,[[2,1]]]]})");
  EXPECT_EQ(algebra_from_json(text), heisenberg(1, Field::gf(3)));
}

TEST(JsonIo, MalformedAlgebra) {
  EXPECT_EQ(kind_of([] { algebra_from_json(json::parse(R"({"dim":3})")); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { algebra_from_json(json::parse(R"({"field":"gf3","dim":2,"brackets":[[0,5,[]]]})")); }),
            ErrorKind::Parse);
  EXPECT_EQ(kind_of([] {
              algebra_from_json(
                  json::parse(R"({"field":"gf3","dim":3,"brackets":[[0,1,[[2,1]]],[1,2,[[0,1]]],[0,2,[[0,1]]]]})"));
            }),
            ErrorKind::Parse);
}

TEST(JsonIo, IdealRoundTrip) {
  const Field f = Field::gf(3);
  Vector j(6, f.zero());
  j[0] = f.one();
  j[5] = f.one();
  const Subspace s = Subspace::span(f, 6, {j});
  std::size_t g = 0;
  EXPECT_EQ(ideal_from_json(ideal_to_json(s, 4), Field::gf(5), g), s);
  EXPECT_EQ(g, 4u);
  const Subspace fb = ideal_from_json(json::parse(R"({"m_plus_1":4,"basis":[[1,0,0,0,0,1]]})"), Field::gf(5), g);
  EXPECT_EQ(fb.field(), Field::gf(5));
  EXPECT_EQ(kind_of([&] { ideal_from_json(json::parse(R"({"m_plus_1":4,"basis":[[1,0]]})"), f, g); }),
            ErrorKind::Parse);
}

TEST(JsonIo, Certificates) {
  const RankSubspaceCertificate c = rational_quaternion_family();
  const RankSubspaceCertificate back = certificate_from_json(certificate_to_json(c));
  EXPECT_EQ(back.n, c.n);
  EXPECT_EQ(back.field, c.field);
  ASSERT_EQ(back.basis.size(), c.basis.size());
  for (std::size_t i = 0; i < c.basis.size(); ++i) EXPECT_EQ(back.basis[i], c.basis[i]);
}

TEST(JsonIo, Files) {
  const auto path = std::filesystem::temp_directory_path() / "breadthlab_json_io_test.json";
  const json j = algebra_to_json(heisenberg(1, Field::gf(7)));
  write_json_file(path.string(), j);
  EXPECT_EQ(read_json_file(path.string()), j);
  std::filesystem::remove(path);
  EXPECT_THROW(read_json_file("/nonexistent/breadthlab.json"), Error);
}

TEST(JsonIo, BreadthTypeLabel) {
  BreadthType t;
  t.breadths = {0, 2};
  EXPECT_EQ(breadth_type_to_json(t)["label"], "proven");
  t.exact = false;
  EXPECT_EQ(breadth_type_to_json(t)["label"], "observed");
}
