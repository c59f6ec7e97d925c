#include "breadthlab/json_io.hpp"

#include <fstream>

namespace breadthlab {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::Parse, what); }

const json& member_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::int64_t to_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

}  // namespace

json field_to_json(const Field& f) {
  if (f.is_rational()) return {{"kind", "rational"}};
  return {{"kind", "finite"}, {"p", f.characteristic()}, {"n", f.degree()}, {"modulus", f.spec().modulus}};
}

Field field_from_json(const json& j) {
  if (j.is_string()) return parse_field_name(j.get<std::string>());
  const std::string kind = member_of(j, "kind").get<std::string>();
  if (kind == "rational") return Field::rational();
  if (kind != "finite") bad("unknown field kind " + kind);
  const auto p = static_cast<std::uint32_t>(to_int(member_of(j, "p"), "p"));
  const auto n = j.contains("n") ? static_cast<std::uint32_t>(to_int(j.at("n"), "n")) : 1u;
  std::vector<std::uint32_t> modulus;
  if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
  return Field::get(FieldSpec::finite(p, n, modulus));
}

json elem_to_json(const FieldElem& x) {
  if (x.field().is_finite()) return x.index();
  if (x.den() == 1) return x.num();
  return std::to_string(x.num()) + "/" + std::to_string(x.den());
}

FieldElem elem_from_json(const Field& f, const json& j) {
  if (j.is_number_integer()) {
    const std::int64_t v = j.get<std::int64_t>();
    if (f.is_finite() && v >= 0) {
      if (v >= f.size()) bad("field element index out of range");
      return f.element(static_cast<std::uint32_t>(v));
    }
    return f.from_int(v);
  }
  if (j.is_string() && f.is_rational()) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return f.from_int(std::stoll(s));
      return f.ratio(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
      bad("malformed rational " + s);
    }
  }
  bad("malformed field element " + j.dump());
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(elem_to_json(x));
  return out;
}

Vector vector_from_json(const Field& f, const json& j, std::size_t expected) {
  if (!j.is_array() || j.size() != expected) bad("expected a vector of length " + std::to_string(expected));
  Vector v;
  for (const auto& x : j) v.push_back(elem_from_json(f, x));
  return v;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

Matrix matrix_from_json(const Field& f, const json& j) {
  if (!j.is_array() || j.empty()) bad("expected a non-empty matrix");
  const std::size_t cols = j[0].size();
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(f, r, cols));
  return Matrix::from_rows(f, rows, cols);
}

json algebra_to_json(const LieAlgebra& l) {
  json brackets = json::array();
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      json terms = json::array();
      for (std::size_t k = 0; k < l.dim(); ++k)
        if (!l.sc(i, j, k).is_zero()) terms.push_back({k, elem_to_json(l.sc(i, j, k))});
      if (!terms.empty()) brackets.push_back({i, j, terms});
    }
  json out = {{"field", field_to_json(l.field())}, {"dim", l.dim()}, {"brackets", brackets}};
  if (!l.labels().empty()) out["labels"] = l.labels();
  return out;
}

LieAlgebra algebra_from_json(const json& j) {
  const Field f = field_from_json(member_of(j, "field"));
  const std::int64_t n = to_int(member_of(j, "dim"), "dim");
  if (n < 0) bad("negative dimension");
  const std::size_t dim = static_cast<std::size_t>(n);
  std::vector<BracketSpec> specs;
  for (const auto& b : member_of(j, "brackets")) {
    if (!b.is_array() || b.size() != 3) bad("bracket entries are [i, j, terms]");
    BracketSpec s;
    const std::int64_t i = to_int(b[0], "i"), jj = to_int(b[1], "j");
    if (i < 0 || jj < 0 || i >= n || jj >= n || i >= jj) bad("bracket indices must satisfy 0 <= i < j < dim");
    s.i = static_cast<std::size_t>(i);
    s.j = static_cast<std::size_t>(jj);
    for (const auto& t : b[2]) {
      if (!t.is_array() || t.size() != 2) bad("bracket terms are [k, c]");
      const std::int64_t k = to_int(t[0], "k");
      if (k < 0 || k >= n) bad("bracket term index out of range");
      s.terms.emplace_back(static_cast<std::size_t>(k), elem_from_json(f, t[1]));
    }
    specs.push_back(std::move(s));
  }
  LieAlgebra l = LieAlgebra::from_brackets(f, dim, specs);
  if (j.contains("labels")) l.set_labels(j.at("labels").get<std::vector<std::string>>());
  const ValidationReport v = validate(l);
  if (!v.ok) bad("not a Lie algebra (" + v.violation + "): " + v.message);
  return l;
}

json ideal_to_json(const Subspace& s, std::size_t g) {
  json basis = json::array();
  for (const auto& v : s.basis()) basis.push_back(vector_to_json(v));
  return {{"field", field_to_json(s.field())}, {"m_plus_1", g}, {"basis", basis}};
}

Subspace ideal_from_json(const json& j, const Field& fallback, std::size_t& g) {
  const Field f = j.contains("field") ? field_from_json(j.at("field")) : fallback;
  if (!f.valid()) bad("ideal has no field");
  const std::int64_t gi = to_int(member_of(j, "m_plus_1"), "m_plus_1");
  if (gi < 2) bad("m_plus_1 must be at least 2");
  g = static_cast<std::size_t>(gi);
  const std::size_t b = g * (g - 1) / 2;
  std::vector<Vector> rows;
  for (const auto& r : member_of(j, "basis")) rows.push_back(vector_from_json(f, r, b));
  return Subspace::span(f, b, rows);
}

json certificate_to_json(const RankSubspaceCertificate& c) {
  json basis = json::array();
  for (const auto& m : c.basis) basis.push_back(matrix_to_json(m));
  return {{"n", c.n},
          {"field", field_to_json(c.field)},
          {"basis", basis},
          {"skew", c.skew},
          {"lower_bound", c.lower_bound}};
}

RankSubspaceCertificate certificate_from_json(const json& j) {
  RankSubspaceCertificate c;
  c.field = field_from_json(member_of(j, "field"));
  c.n = static_cast<std::size_t>(to_int(member_of(j, "n"), "n"));
  for (const auto& m : member_of(j, "basis")) {
    Matrix x = matrix_from_json(c.field, m);
    if (x.rows() != c.n || x.cols() != c.n) bad("certificate matrix has the wrong size");
    c.basis.push_back(std::move(x));
  }
  c.skew = j.value("skew", true);
  c.lower_bound = j.value("lower_bound", false);
  return c;
}

json breadth_type_to_json(const BreadthType& t) {
  json out = {{"type", t.breadths},
              {"exact", t.exact},
              {"label", t.exact ? "proven" : "observed"},
              {"upper_bound", t.upper_bound},
              {"evaluated", t.evaluated}};
  out["seed"] = t.seed ? json(*t.seed) : json(nullptr);
  return out;
}

json generator_map_to_json(const GeneratorMap& m) {
  json central = json::array();
  for (const auto& h : m.central) central.push_back(vector_to_json(h));
  return {{"linear", matrix_to_json(m.linear)}, {"central", central}};
}

json normal_form_to_json(const NormalFormResult& r) {
  const std::size_t g = r.applied.generators();
  json out = {{"tag", to_string(r.tag)},
              {"input", ideal_to_json(r.input, g)},
              {"canonical_ideal", ideal_to_json(r.canonical, g)},
              {"automorphism", generator_map_to_json(r.applied)},
              {"stage", r.stage}};
  if (r.tag == NormalFormTag::DimOne || r.input.dim() == 1) out["r"] = r.r;
  if (r.parameter) out["parameter"] = elem_to_json(*r.parameter);
  if (r.witness) out["witness"] = {{"a", vector_to_json(r.witness->a)}, {"b", vector_to_json(r.witness->b)}};
  return out;
}

json classification_to_json(const Classification& c) {
  json out = {{"family", c.family},
              {"kind", c.kind},
              {"abelian_stripped", c.abelian_stripped},
              {"ideal", ideal_to_json(c.ideal, 4)}};
  if (c.normal_form) {
    out["canonical_ideal"] = ideal_to_json(c.normal_form->canonical, 4);
    out["automorphism"] = generator_map_to_json(c.normal_form->applied);
    out["normal_form"] = normal_form_to_json(*c.normal_form);
  }
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

json conjugate_type_to_json(const ConjugateType& t) {
  json counts = json::object();
  for (const auto& [e, c] : t.elements) counts[std::to_string(e)] = c;
  return {{"exponents", t.exponents},
          {"elements_by_exponent", counts},
          {"order_exponent", t.order_exponent},
          {"cosets", t.cosets}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::InvalidArgument, "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace breadthlab
