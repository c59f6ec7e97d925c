#include "breadthlab/constructions.hpp"

#include <cstdlib>

namespace breadthlab {

namespace {

using Poly = std::vector<FieldElem>;  // lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// Remainder of a modulo a monic or general nonzero m.
Poly poly_rem(Poly a, const Poly& m) {
  trim(a);
  const FieldElem lead_inv = m.back().inv();
  while (a.size() >= m.size()) {
    const FieldElem c = a.back() * lead_inv;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] -= c * m[i];
    trim(a);
  }
  return a;
}

bool irreducible_finite(const Poly& f, Field k) {
  const std::size_t deg = f.size() - 1;
  const std::uint32_t q = k.size();
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, k.zero());
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = k.element(static_cast<std::uint32_t>(v % q));
        v /= q;
      }
      g[d] = k.one();
      if (poly_rem(f, g).empty()) return false;
    }
  }
  return true;
}

bool has_integer_root(const Poly& f) {
  const Field k = f[0].field();
  auto eval = [&](std::int64_t x) {
    FieldElem acc = k.zero();
    const FieldElem xv = k.from_int(x);
    for (std::size_t i = f.size(); i > 0; --i) acc = acc * xv + f[i - 1];
    return acc.is_zero();
  };
  const std::int64_t a0 = f[0].num();
  if (a0 == 0) return true;
  const std::int64_t bound = std::llabs(a0);
  for (std::int64_t d = 1; d * d <= bound; ++d) {
    if (bound % d != 0) continue;
    for (std::int64_t c : {d, bound / d})
      if (eval(c) || eval(-c)) return true;
  }
  return false;
}

Vector coords(Field f, std::size_t n, std::initializer_list<std::pair<std::size_t, std::int64_t>> entries) {
  Vector v = zero_vector(f, n);
  for (const auto& [i, c] : entries) v[i] += f.from_int(c);
  return v;
}

}  // namespace

std::size_t bivector_count(std::size_t g) { return g * (g - (g > 0 ? 1 : 0)) / 2; }

std::size_t bivector_index(std::size_t i, std::size_t j, std::size_t g) {
  if (!(i < j && j < g)) fail(ErrorKind::InvalidArgument, "bivector index needs i < j < g");
  return i * g - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> bivector_pair(std::size_t index, std::size_t g) {
  for (std::size_t i = 0; i + 1 < g; ++i) {
    const std::size_t row = g - i - 1;
    if (index < row) return {i, i + 1 + index};
    index -= row;
  }
  fail(ErrorKind::InvalidArgument, "bivector index out of range");
}

LieAlgebra free_two_step(std::size_t m, Field f) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "free_two_step needs m >= 1");
  const std::size_t g = m + 1;
  const std::size_t n = g + bivector_count(g);
  LieAlgebra l(f, n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < g; ++i) labels.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j) {
      const std::size_t k = g + bivector_index(i, j, g);
      l.set_bracket(i, j, unit_vector(f, n, k));
      labels.push_back("e" + std::to_string(i + 1) + (g > 9 ? "," : "") + std::to_string(j + 1));
    }
  l.set_labels(std::move(labels));
  return l;
}

LieAlgebra heisenberg(std::size_t m, Field f) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "heisenberg needs m >= 1");
  const std::size_t n = 2 * m + 1;
  LieAlgebra l(f, n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    l.set_bracket(2 * i, 2 * i + 1, unit_vector(f, n, n - 1));
    labels.push_back("x" + std::to_string(i + 1));
    labels.push_back("y" + std::to_string(i + 1));
  }
  labels.push_back("z");
  l.set_labels(std::move(labels));
  return l;
}

std::vector<FieldElem> least_irreducible(std::size_t m, Field f) {
  if (!f.is_finite()) fail(ErrorKind::NoExtensionTable, "no default extension modulus over Q");
  if (m < 1) fail(ErrorKind::InvalidArgument, "degree must be >= 1");
  const std::uint32_t q = f.size();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < m; ++i) {
    count *= q;
    if (count > (std::uint64_t{1} << 24)) fail(ErrorKind::NoExtensionTable, "extension search too large");
  }
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly p(m + 1, f.zero());
    std::uint64_t v = idx;
    for (std::size_t i = 0; i < m; ++i) {
      p[i] = f.element(static_cast<std::uint32_t>(v % q));
      v /= q;
    }
    p[m] = f.one();
    if (irreducible_finite(p, f)) return p;
  }
  fail(ErrorKind::NoExtensionTable, "no irreducible polynomial of the requested degree");
}

LieAlgebra heisenberg_degree(std::size_t m, Field f, const std::vector<FieldElem>& modulus) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "heisenberg_degree needs m >= 1");
  Poly mod;
  if (modulus.empty()) {
    mod = least_irreducible(m, f);
  } else {
    mod = modulus;
    if (mod.size() != m + 1 || !mod.back().is_one())
      fail(ErrorKind::InvalidArgument, "modulus must be monic of degree m");
    for (const auto& c : mod)
      if (c.field() != f) fail(ErrorKind::FieldMismatch, "modulus over a different field");
    if (f.is_finite()) {
      if (!irreducible_finite(mod, f)) fail(ErrorKind::InvalidArgument, "modulus is reducible");
    } else {
      for (const auto& c : mod)
        if (c.den() != 1) fail(ErrorKind::InvalidArgument, "rational modulus needs integer coefficients");
      if (m > 3) fail(ErrorKind::NoExtensionTable, "irreducibility over Q is only checked up to degree 3");
      if (m > 1 && has_integer_root(mod)) fail(ErrorKind::InvalidArgument, "modulus has a rational root");
    }
  }
  const std::size_t n = 3 * m;
  LieAlgebra l(f, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Poly mono(i + j + 1, f.zero());
      mono[i + j] = f.one();
      const Poly r = poly_rem(mono, mod);
      Vector v = zero_vector(f, n);
      for (std::size_t k = 0; k < r.size(); ++k) v[2 * m + k] = r[k];
      l.set_bracket(i, m + j, v);
    }
  std::vector<std::string> labels;
  for (const char* prefix : {"a", "b", "c"})
    for (std::size_t i = 0; i < m; ++i) labels.push_back(prefix + std::to_string(i));
  l.set_labels(std::move(labels));
  return l;
}

LieAlgebra sl2(Field f) {
  // e = 0, h = 1, f = 2
  LieAlgebra l(f, 3);
  l.set_bracket(1, 0, coords(f, 3, {{0, 2}}));
  l.set_bracket(1, 2, coords(f, 3, {{2, -2}}));
  l.set_bracket(0, 2, coords(f, 3, {{1, 1}}));
  l.set_labels({"e", "h", "f"});
  return l;
}

LieAlgebra five_dim_three_step(Field f) {
  LieAlgebra l(f, 5);
  l.set_bracket(0, 1, coords(f, 5, {{2, 1}}));
  l.set_bracket(0, 2, coords(f, 5, {{3, 1}}));
  l.set_bracket(1, 2, coords(f, 5, {{4, 1}}));
  l.set_labels({"x1", "x2", "y", "z1", "z2"});
  return l;
}

LieAlgebra two_dim_nonabelian(Field f) {
  LieAlgebra l(f, 2);
  l.set_bracket(0, 1, coords(f, 2, {{0, 1}}));
  l.set_labels({"x", "y"});
  return l;
}

LieAlgebra quotient_by_central_ideal(const LieAlgebra& l, const Subspace& ideal) {
  if (ideal.ambient_dim() != l.dim()) fail(ErrorKind::DimensionMismatch, "ideal does not live in the algebra");
  if (ideal.field() != l.field()) fail(ErrorKind::FieldMismatch, "ideal over a different field");
  if (!center(l).contains(ideal)) fail(ErrorKind::NotCentralIdeal, "subspace is not contained in the center");
  const std::vector<std::size_t> comp = ideal.non_pivots();
  const std::size_t d = comp.size();
  LieAlgebra out(l.field(), d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      const Vector v = ideal.reduce(l.basis_bracket(comp[a], comp[b]));
      Vector w(d, l.field().zero());
      for (std::size_t c = 0; c < d; ++c) w[c] = v[comp[c]];
      out.set_bracket(a, b, w);
    }
  if (!l.labels().empty()) {
    std::vector<std::string> labels;
    for (std::size_t c : comp) labels.push_back(l.labels()[c]);
    out.set_labels(std::move(labels));
  }
  return out;
}

Subspace bivector_ideal_in_free(const Subspace& ideal, std::size_t g) {
  const std::size_t b = bivector_count(g);
  if (ideal.ambient_dim() != b)
    fail(ErrorKind::DimensionMismatch, "ideal has the wrong number of bivector coordinates");
  std::vector<Vector> rows;
  for (const Vector& v : ideal.basis()) {
    Vector w = zero_vector(ideal.field(), g + b);
    for (std::size_t k = 0; k < b; ++k) w[g + k] = v[k];
    rows.push_back(std::move(w));
  }
  return Subspace::span(ideal.field(), g + b, rows);
}

LieAlgebra free_quotient(const Subspace& ideal, std::size_t g) {
  return quotient_by_central_ideal(free_two_step(g - 1, ideal.field()), bivector_ideal_in_free(ideal, g));
}

std::vector<Family> theorem_families(Field f) {
  if (!f.valid()) fail(ErrorKind::UnsupportedField, "no field");
  const std::size_t b = 6;
  auto ideal = [&](std::vector<Vector> rows) { return Subspace::span(f, b, rows); };
  auto biv = [&](std::initializer_list<std::pair<std::size_t, std::int64_t>> e) { return coords(f, b, e); };
  auto quotient_family = [&](std::string tag, std::string name, Subspace i, bool camina) {
    Family fam;
    fam.tag = std::move(tag);
    fam.name = std::move(name);
    fam.algebra = free_quotient(i, 4);
    fam.is_free_quotient = true;
    fam.ideal = std::move(i);
    fam.camina = camina;
    fam.claimed_type = {0, 3};
    return fam;
  };
  const Vector j1 = biv({{0, 1}, {5, 1}});  // e12 + e34
  std::vector<Family> out;
  if (f.is_finite() && f.characteristic() != 2) {
    Family h3;
    h3.tag = "(i)";
    h3.name = "h3";
    h3.algebra = heisenberg_degree(3, f);
    h3.camina = true;
    h3.claimed_type = {0, 3};
    out.push_back(std::move(h3));
    out.push_back(quotient_family("(ii)", "L3", Subspace(f, b), false));
    out.push_back(quotient_family("(iii)", "L3/<e12+e34>", ideal({j1}), false));
    const FieldElem t = f.find_nonsquare();
    Vector j2 = biv({{1, 1}});
    j2[4] = t;
    out.push_back(quotient_family("(iv)", "L3/<e12+e34, e13+" + t.to_string() + "e24>", ideal({j1, j2}), false));
  } else if (f.is_finite()) {
    out.push_back(quotient_family("(i)", "L3", Subspace(f, b), false));
    out.push_back(quotient_family("(ii)", "L3/<e12+e34>", ideal({j1}), false));
    const FieldElem z = f.least_trace_one();
    Vector j2 = biv({{4, 1}, {5, 1}});
    j2[1] = z;
    out.push_back(quotient_family("(iii)", "L3/<e12+e34, " + z.to_string() + "e13+e24+e34>", ideal({j1, j2}), false));
  } else {
    out.push_back(quotient_family("(i)", "L3/<e12+e34, e13-e24, e14+e23>",
                                  ideal({j1, biv({{1, 1}, {4, -1}}), biv({{2, 1}, {3, 1}})}), true));
    out.push_back(quotient_family("(ii)", "L3", Subspace(f, b), false));
    out.push_back(quotient_family("(iii)", "L3/<e12+e34>", ideal({j1}), false));
    out.push_back(quotient_family("(iv)", "L3/<e12+e34, e13-e24>", ideal({j1, biv({{1, 1}, {4, -1}})}), false));
  }
  return out;
}

}  // namespace breadthlab
