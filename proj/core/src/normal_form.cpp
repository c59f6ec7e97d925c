#include "breadthlab/normal_form.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>

#include "breadthlab/camina.hpp"
#include "breadthlab/constructions.hpp"

namespace breadthlab {

__extension__ typedef __int128 i128;

namespace {

// Coordinates of the six bivectors on four generators.
constexpr std::size_t E12 = 0, E13 = 1, E14 = 2, E23 = 3, E24 = 4, E34 = 5;

Matrix transposition(Field f, std::size_t g, std::size_t a, std::size_t b) {
  Matrix m = Matrix::identity(f, g);
  if (a == b) return m;
  m(a, a) = f.zero();
  m(b, b) = f.zero();
  m(b, a) = f.one();
  m(a, b) = f.one();
  return m;
}

struct Run {
  Field f;
  std::size_t g;
  GeneratorMap total;
  Subspace cur;

  void apply(const Matrix& a) {
    const GeneratorMap step = GeneratorMap::from_linear(a);
    total = compose(step, total);
    cur = push_ideal(step, cur);
  }
  // x_j -> sum over (i, c) of c x_i.
  void substitute(std::size_t j, std::initializer_list<std::pair<std::size_t, FieldElem>> image) {
    Matrix a = Matrix::identity(f, g);
    a(j, j) = f.zero();
    for (const auto& [i, c] : image) a(i, j) += c;
    apply(a);
  }
};

void expect(bool cond, const char* what) {
  if (!cond) fail(ErrorKind::VerificationFailed, std::string("normal form invariant broken: ") + what);
}

void expect_pattern(const Subspace& s, const std::vector<std::size_t>& zero_u, const std::vector<std::size_t>& zero_v) {
  expect(s.dim() == 2 && s.pivots() == std::vector<std::size_t>{E12, E13}, "pivots at e12, e13");
  for (std::size_t c : zero_u) expect(s.basis_vector(0)[c].is_zero(), "zero pattern of the first row");
  for (std::size_t c : zero_v) expect(s.basis_vector(1)[c].is_zero(), "zero pattern of the second row");
}

// Express a witness (a, b) found in the current coordinates in the input ones.
void pull_back_witness(NormalFormResult& r, const Factorization& current, std::size_t g) {
  const Matrix inv = inverse(r.applied.linear);
  Factorization w{inv.apply(current.a), inv.apply(current.b)};
  expect(r.input.contains(wedge(w.a, w.b)) && !is_zero_vector(wedge(w.a, w.b)), "witness lies in the input ideal");
  (void)g;
  r.witness = std::move(w);
}

NormalFormResult finish(Run& run, const Subspace& input, NormalFormTag tag, std::string stage) {
  NormalFormResult r;
  r.input = input;
  r.canonical = run.cur;
  r.applied = run.total;
  r.tag = tag;
  r.stage = std::move(stage);
  expect(push_ideal(r.applied, input) == r.canonical, "applied map carries the input onto the canonical ideal");
  return r;
}

void need_four(const Subspace& ideal) {
  if (ideal.ambient_dim() != 6) fail(ErrorKind::DimensionMismatch, "dimension-two reduction works on four generators");
  if (ideal.dim() != 2) fail(ErrorKind::WrongDimension, "expected a two-dimensional ideal");
}

std::optional<Factorization> decomposable_in(const Subspace& s, std::size_t g) {
  for (const auto& v : s.basis())
    if (auto fz = factor_decomposable(v, g)) return fz;
  const auto bf = bracket_free(s, g);
  if (!bf.bracket_free) return bf.factors;
  return std::nullopt;
}

// Shared steps: reach span{e12+e34, e13 + alpha e24 + beta e34} or stop.
// Returns false with run.cur at the stopping point and `stage`/`witness` set.
bool reduce_to_alpha_beta(Run& run, std::string& stage, std::optional<Factorization>& witness, FieldElem& alpha,
                          FieldElem& beta) {
  const Field f = run.f;
  // Shape gate: a generator permutation putting the pivots on e12 and e13.
  std::array<std::size_t, 4> perm{0, 1, 2, 3};
  bool found = false;
  do {
    Matrix p(f, 4, 4);
    for (std::size_t i = 0; i < 4; ++i) p(perm[i], i) = f.one();
    if (push_ideal(GeneratorMap::from_linear(p), run.cur).pivots() == std::vector<std::size_t>{E12, E13}) {
      run.apply(p);
      found = true;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!found) {
    stage = "shape";
    witness = decomposable_in(run.cur, 4);
    return false;
  }

  // phi2: clear e14.
  {
    const FieldElem i1 = run.cur.basis_vector(0)[E14];
    const FieldElem j1 = run.cur.basis_vector(1)[E14];
    Matrix a = Matrix::identity(f, 4);
    a(3, 1) = -i1;
    a(3, 2) = -j1;
    run.apply(a);
    expect_pattern(run.cur, {E13, E14}, {E12, E14});
  }
  // phi3: x1 -> x1 + i2 x3 + i3 x4 leaves e12 + i4 e34.
  {
    const Vector& u = run.cur.basis_vector(0);
    run.substitute(0, {{0, f.one()}, {2, u[E23]}, {3, u[E24]}});
    expect_pattern(run.cur, {E13, E14, E23, E24}, {E12, E14});
  }
  const FieldElem i4 = run.cur.basis_vector(0)[E34];
  if (i4.is_zero()) {
    stage = "i4";
    witness = factor_decomposable(run.cur.basis_vector(0), 4);
    return false;
  }
  // phi4: normalise to e12 + e34.
  run.substitute(3, {{3, i4.inv()}});
  expect(run.cur.basis_vector(0)[E34].is_one(), "first row is e12 + e34");
  const FieldElem j2 = run.cur.basis_vector(1)[E23];
  const FieldElem j3 = run.cur.basis_vector(1)[E24];
  if (j3.is_zero()) {
    stage = "j3";
    witness = factor_decomposable(run.cur.basis_vector(1), 4);
    return false;
  }
  // phi5: x4 -> x4 - (j2/j3) x3 removes e23.
  run.substitute(3, {{3, f.one()}, {2, -(j2 / j3)}});
  expect_pattern(run.cur, {E13, E14, E23, E24}, {E12, E14, E23});
  expect(run.cur.basis_vector(0)[E34].is_one(), "first row is e12 + e34");
  alpha = run.cur.basis_vector(1)[E24];
  beta = run.cur.basis_vector(1)[E34];
  return true;
}

Subspace span2(Field f, const Vector& u, const Vector& v) { return Subspace::span(f, 6, {u, v}); }

Vector biv(Field f, std::initializer_list<std::pair<std::size_t, FieldElem>> e) {
  Vector v = zero_vector(f, 6);
  for (const auto& [i, c] : e) v[i] += c;
  return v;
}

std::int64_t squarefree_int(std::int64_t v) {
  if (v == 0) fail(ErrorKind::InvalidArgument, "squarefree kernel of zero");
  const std::int64_t sign = v < 0 ? -1 : 1;
  std::uint64_t n = static_cast<std::uint64_t>(v < 0 ? -v : v);
  std::uint64_t out = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (p > 3'000'000) fail(ErrorKind::Undetermined, "integer too large to factor");
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2 == 1) out *= p;
  }
  out *= n;
  return sign * static_cast<std::int64_t>(out);
}

}  // namespace

GeneratorMap GeneratorMap::identity(Field f, std::size_t g) { return from_linear(Matrix::identity(f, g)); }

GeneratorMap GeneratorMap::from_linear(Matrix linear) {
  if (!linear.is_square()) fail(ErrorKind::NonSquare, "generator map must be square");
  GeneratorMap m;
  const std::size_t g = linear.rows();
  m.central.assign(g, zero_vector(linear.field(), bivector_count(g)));
  m.linear = std::move(linear);
  return m;
}

Matrix exterior_square(const Matrix& a) {
  const std::size_t g = a.rows();
  const std::size_t b = bivector_count(g);
  Matrix out(a.field(), b, b);
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t k = j + 1; k < g; ++k) {
      const std::size_t col = bivector_index(j, k, g);
      for (std::size_t i = 0; i < g; ++i)
        for (std::size_t l = i + 1; l < g; ++l)
          out(bivector_index(i, l, g), col) = a(i, j) * a(l, k) - a(l, j) * a(i, k);
    }
  return out;
}

Vector apply_generator_map(const GeneratorMap& phi, const Vector& b) {
  if (det(phi.linear).is_zero()) fail(ErrorKind::SingularLinearPart, "generator map is not invertible");
  return exterior_square(phi.linear).apply(b);
}

Subspace push_ideal(const GeneratorMap& phi, const Subspace& ideal) {
  if (det(phi.linear).is_zero()) fail(ErrorKind::SingularLinearPart, "generator map is not invertible");
  const Matrix l2 = exterior_square(phi.linear);
  std::vector<Vector> rows;
  for (const auto& v : ideal.basis()) rows.push_back(l2.apply(v));
  return Subspace::span(ideal.field(), ideal.ambient_dim(), rows);
}

GeneratorMap compose(const GeneratorMap& phi, const GeneratorMap& psi) {
  if (phi.generators() != psi.generators()) fail(ErrorKind::DimensionMismatch, "generator counts differ");
  const std::size_t g = phi.generators();
  GeneratorMap out;
  out.linear = phi.linear * psi.linear;
  const Matrix l2 = exterior_square(phi.linear);
  const Field f = phi.linear.field();
  for (std::size_t j = 0; j < g; ++j) {
    Vector h = l2.apply(psi.central[j]);
    for (std::size_t i = 0; i < g; ++i) {
      const FieldElem c = psi.linear(i, j);
      if (c.is_zero()) continue;
      for (std::size_t t = 0; t < h.size(); ++t) h[t] += c * phi.central[i][t];
    }
    out.central.push_back(std::move(h));
  }
  (void)f;
  return out;
}

const char* to_string(NormalFormTag t) {
  switch (t) {
    case NormalFormTag::Zero:
      return "Zero";
    case NormalFormTag::DimOne:
      return "DimOne";
    case NormalFormTag::DimTwoOdd:
      return "DimTwoOdd";
    case NormalFormTag::DimTwoEven:
      return "DimTwoEven";
    case NormalFormTag::NotBreadthType:
      return "NotBreadthType";
  }
  return "?";
}

NormalFormResult reduce_dim1(const Subspace& ideal, std::size_t g) {
  if (ideal.ambient_dim() != bivector_count(g))
    fail(ErrorKind::DimensionMismatch, "ideal does not match generator count");
  if (ideal.dim() != 1) fail(ErrorKind::WrongDimension, "expected a one-dimensional ideal");
  const Field f = ideal.field();
  GeneratorMap total = GeneratorMap::identity(f, g);
  Vector w = ideal.basis_vector(0);
  auto apply = [&](const Matrix& a) {
    const GeneratorMap step = GeneratorMap::from_linear(a);
    w = exterior_square(a).apply(w);
    total = compose(step, total);
  };
  auto coeff = [&](std::size_t i, std::size_t j) { return w[bivector_index(i, j, g)]; };
  std::size_t s = 0;
  for (; s + 1 < g; s += 2) {
    std::size_t bi = g, bj = g;
    for (std::size_t i = s; i < g && bi == g; ++i)
      for (std::size_t j = i + 1; j < g; ++j)
        if (!coeff(i, j).is_zero()) {
          bi = i;
          bj = j;
          break;
        }
    if (bi == g) break;
    apply(transposition(f, g, s, bi));
    apply(transposition(f, g, s + 1, bj));
    {
      Matrix a = Matrix::identity(f, g);
      a(s, s) = coeff(s, s + 1).inv();
      apply(a);
    }
    {
      // x_{s+1} -> x_{s+1} - sum_j b_{s,j} x_j
      Matrix a = Matrix::identity(f, g);
      for (std::size_t j = s + 2; j < g; ++j) a(j, s + 1) = -coeff(s, j);
      apply(a);
    }
    {
      // x_s -> x_s + sum_j b_{s+1,j} x_j
      Matrix a = Matrix::identity(f, g);
      for (std::size_t j = s + 2; j < g; ++j) a(j, s) = coeff(s + 1, j);
      apply(a);
    }
    for (std::size_t j = s + 2; j < g; ++j)
      expect(coeff(s, j).is_zero() && coeff(s + 1, j).is_zero(), "rows s and s+1 cleared");
    expect(coeff(s, s + 1).is_one(), "pivot normalised");
  }
  NormalFormResult r;
  r.input = ideal;
  r.applied = total;
  r.r = s / 2;
  Vector expected = zero_vector(f, bivector_count(g));
  for (std::size_t k = 0; k < r.r; ++k) expected[bivector_index(2 * k, 2 * k + 1, g)] = f.one();
  expect(w == expected, "dimension-one normal form");
  expect(2 * r.r == skew_rank(ideal.basis_vector(0), g), "skew rank equals 2r");
  r.canonical = Subspace::span(f, bivector_count(g), {w});
  expect(push_ideal(total, ideal) == r.canonical, "applied map carries the input onto the canonical ideal");
  if (r.r >= 2) {
    r.tag = NormalFormTag::DimOne;
    r.stage = "done";
  } else {
    r.tag = NormalFormTag::NotBreadthType;
    r.stage = "rank";
    Factorization cur{unit_vector(f, g, 0), unit_vector(f, g, 1)};
    pull_back_witness(r, cur, g);
  }
  return r;
}

std::int64_t squarefree_kernel(const FieldElem& x) {
  if (!x.field().is_rational()) fail(ErrorKind::Unsupported, "squarefree kernel is defined over Q");
  const i128 v = static_cast<i128>(x.num()) * x.den();
  if (v > INT64_MAX || v < -INT64_MAX) fail(ErrorKind::Overflow, "square class representative too large");
  return squarefree_int(static_cast<std::int64_t>(v));
}

NormalFormResult reduce_dim2_odd(const Subspace& ideal) {
  need_four(ideal);
  const Field f = ideal.field();
  if (f.is_finite() && f.characteristic() == 2)
    fail(ErrorKind::CharacteristicTwo, "use the characteristic-2 reduction");
  Run run{f, 4, GeneratorMap::identity(f, 4), ideal};
  std::string stage;
  std::optional<Factorization> witness;
  FieldElem alpha, beta;
  if (!reduce_to_alpha_beta(run, stage, witness, alpha, beta)) {
    NormalFormResult r = finish(run, ideal, NormalFormTag::NotBreadthType, stage);
    if (witness) pull_back_witness(r, *witness, 4);
    return r;
  }
  const FieldElem two = f.from_int(2), four = f.from_int(4);
  const FieldElem disc = beta * beta + four * alpha;
  if (auto s = f.sqrt(disc)) {
    // t^2 alpha - t beta - 1 = 0 has the root t; then (x1 - t alpha x4) ^ (x2 + t x3) lies in J.
    const FieldElem t = (beta + *s) / (two * alpha);
    NormalFormResult r = finish(run, ideal, NormalFormTag::NotBreadthType, "square");
    Vector a = unit_vector(f, 4, 0), b = unit_vector(f, 4, 1);
    a[3] = -(t * alpha);
    b[2] = t;
    pull_back_witness(r, {a, b}, 4);
    return r;
  }
  FieldElem rr = f.is_finite() ? f.find_nonsquare() : f.from_int(squarefree_kernel(disc));
  const auto l = f.sqrt(disc / (four * rr));
  expect(l.has_value(), "disc / 4r is a square");
  // phi6: x1 -> l x1 + (beta/2) x4, x3 -> l x3 + (beta/2) x2
  {
    Matrix a = Matrix::identity(f, 4);
    a(0, 0) = *l;
    a(3, 0) = beta / two;
    a(2, 2) = *l;
    a(1, 2) = beta / two;
    run.apply(a);
  }
  const Subspace target = span2(f, biv(f, {{E12, f.one()}, {E34, f.one()}}), biv(f, {{E13, f.one()}, {E24, rr}}));
  expect(run.cur == target, "odd dimension-two normal form");
  NormalFormResult r = finish(run, ideal, NormalFormTag::DimTwoOdd, "done");
  r.parameter = rr;
  return r;
}

NormalFormResult reduce_dim2_even(const Subspace& ideal) {
  need_four(ideal);
  const Field f = ideal.field();
  if (!f.is_finite() || f.characteristic() != 2)
    fail(ErrorKind::OddCharacteristic, "characteristic-2 reduction needs GF(2^n)");
  Run run{f, 4, GeneratorMap::identity(f, 4), ideal};
  std::string stage;
  std::optional<Factorization> witness;
  FieldElem alpha, beta;
  if (!reduce_to_alpha_beta(run, stage, witness, alpha, beta)) {
    NormalFormResult r = finish(run, ideal, NormalFormTag::NotBreadthType, stage);
    if (witness) pull_back_witness(r, *witness, 4);
    return r;
  }
  if (!quadratic_irreducible(alpha, beta, f.one())) {
    // x (e12+e34) + v is decomposable when x^2 + beta x + alpha = 0.
    NormalFormResult r = finish(run, ideal, NormalFormTag::NotBreadthType, "reducible");
    for (std::uint32_t i = 0; i < f.size(); ++i) {
      const FieldElem x = f.element(i);
      if (!(x * x + beta * x + alpha).is_zero()) continue;
      Vector w = run.cur.basis_vector(1);
      w[E12] += x;
      w[E34] += x;
      const auto fz = factor_decomposable(w, 4);
      expect(fz.has_value(), "root gives a decomposable element");
      pull_back_witness(r, *fz, 4);
      break;
    }
    expect(r.witness.has_value(), "reducible quadratic has a root");
    return r;
  }
  const FieldElem z = f.least_trace_one();
  const FieldElem rr = beta / alpha;
  const FieldElem c = f.one() + z * beta * beta / alpha;
  std::optional<FieldElem> s;
  for (std::uint32_t i = 0; i < f.size() && !s; ++i) {
    const FieldElem x = f.element(i);
    if ((alpha * x * x + beta * x + c).is_zero()) s = x;
  }
  expect(s.has_value(), "alpha s^2 + beta s + 1 + z beta^2/alpha has a root");
  {
    // x2 -> r x2 + s x3, x4 -> r x4 + s x1
    Matrix a = Matrix::identity(f, 4);
    a(1, 1) = rr;
    a(2, 1) = *s;
    a(3, 3) = rr;
    a(0, 3) = *s;
    run.apply(a);
  }
  const Subspace target =
      span2(f, biv(f, {{E12, f.one()}, {E34, f.one()}}), biv(f, {{E13, z}, {E24, f.one()}, {E34, f.one()}}));
  expect(run.cur == target, "even dimension-two normal form");
  NormalFormResult r = finish(run, ideal, NormalFormTag::DimTwoEven, "done");
  r.parameter = z;
  return r;
}

NormalFormResult reduce_dim2(const Subspace& ideal) {
  const Field f = ideal.field();
  if (f.is_finite() && f.characteristic() == 2) return reduce_dim2_even(ideal);
  return reduce_dim2_odd(ideal);
}

Classification classify_4gen_2step(const LieAlgebra& l) {
  const Field f = l.field();
  std::size_t cls = 0;
  try {
    cls = nilpotency_class(l);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotNilpotent) throw;
    fail(ErrorKind::NotClassTwo, "algebra is not nilpotent");
  }
  if (cls != 2) fail(ErrorKind::NotClassTwo, "nilpotency class is " + std::to_string(cls));

  // Strip a complement of L' in Z(L).
  const Subspace d = derived(l);
  const Subspace z = center(l);
  std::vector<Vector> extra;
  Subspace acc = d;
  for (const auto& v : z.basis()) {
    if (acc.contains(v)) continue;
    extra.push_back(v);
    acc = sum(acc, Subspace::span(f, l.dim(), {v}));
  }
  const LieAlgebra s = extra.empty() ? l : quotient_by_central_ideal(l, Subspace::span(f, l.dim(), extra));
  const Subspace sd = derived(s);
  if (s.dim() - sd.dim() != 4)
    fail(ErrorKind::NotFourGenerated, "stem has " + std::to_string(s.dim() - sd.dim()) + " generators");

  // Section x_1..x_4 and the induced map from bivectors onto S'.
  const std::vector<std::size_t> gens = sd.non_pivots();
  Matrix m(f, 6, sd.dim());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      const Vector v = s.basis_bracket(gens[i], gens[j]);
      for (std::size_t r = 0; r < sd.dim(); ++r) m(bivector_index(i, j, 4), r) = v[sd.pivots()[r]];
    }
  Classification c;
  c.abelian_stripped = extra.size();
  c.ideal = kernel(m.transpose());
  const bool even = f.is_finite() && f.characteristic() == 2;
  auto label = [&](const char* odd_label, const char* even_label) {
    return std::string(even ? even_label : odd_label);
  };
  switch (c.ideal.dim()) {
    case 0:
      c.family = label("(ii)", "(i)");
      c.kind = "free";
      break;
    case 1: {
      c.normal_form = reduce_dim1(c.ideal, 4);
      if (c.normal_form->tag == NormalFormTag::DimOne) {
        c.family = label("(iii)", "(ii)");
        c.kind = "dim-one";
      }
      break;
    }
    case 2: {
      c.normal_form = reduce_dim2(c.ideal);
      if (c.normal_form->tag != NormalFormTag::NotBreadthType) {
        c.family = label("(iv)", "(iii)");
        c.kind = "dim-two";
      }
      break;
    }
    case 3: {
      const auto sc = camina_via_structure_matrices(s, 4);
      if (sc.camina) {
        c.family = even ? "camina" : "(i)";
        c.kind = "camina";
      }
      c.detail = "structure matrices: " + sc.method;
      break;
    }
    default:
      break;
  }
  if (c.family.empty()) {
    c.family = "none";
    c.kind = "not-breadth-type";
  }
  return c;
}

}  // namespace breadthlab
