#include "breadthlab/groupcorr.hpp"

#include "breadthlab/constructions.hpp"

namespace breadthlab {

namespace {

void check_shape(const ClassTwoGroup& g, const GroupElement& a) {
  if (a.alpha.size() != g.generators() || a.beta.size() != g.center_dim())
    fail(ErrorKind::DimensionMismatch, "group element does not match the group");
}

std::uint64_t pow_u64(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > UINT64_MAX / b) fail(ErrorKind::Overflow, "group too large");
    r *= b;
  }
  return r;
}

}  // namespace

ClassTwoGroup::ClassTwoGroup(std::uint32_t p, std::size_t m) : p_(p), m_(m) {
  if (p == 2) fail(ErrorKind::EvenPrime, "the correspondence needs an odd prime");
  if (m < 1) fail(ErrorKind::InvalidArgument, "m must be at least 1");
  f_ = Field::gf(p);
}

GroupElement ClassTwoGroup::identity() const { return {zero_vector(f_, generators()), zero_vector(f_, center_dim())}; }

GroupElement ClassTwoGroup::generator(std::size_t i) const {
  GroupElement g = identity();
  g.alpha.at(i) = f_.one();
  return g;
}

GroupElement ClassTwoGroup::central(std::size_t j, std::size_t r) const {
  GroupElement g = identity();
  g.beta.at(bivector_index(j, r, generators())) = f_.one();
  return g;
}

GroupElement ClassTwoGroup::random(std::mt19937_64& rng) const {
  GroupElement g = identity();
  for (auto& a : g.alpha) a = f_.random(rng);
  for (auto& b : g.beta) b = f_.random(rng);
  return g;
}

GroupElement ClassTwoGroup::element(std::uint64_t idx) const {
  GroupElement g = identity();
  for (auto& a : g.alpha) {
    a = f_.element(static_cast<std::uint32_t>(idx % p_));
    idx /= p_;
  }
  for (auto& b : g.beta) {
    b = f_.element(static_cast<std::uint32_t>(idx % p_));
    idx /= p_;
  }
  return g;
}

// Moving g_j^{b_j} left past g_r^{a_r} (j < r) leaves [g_j, g_r]^{-a_r b_j}.
GroupElement ClassTwoGroup::mul(const GroupElement& a, const GroupElement& b) const {
  check_shape(*this, a);
  check_shape(*this, b);
  const std::size_t g = generators();
  GroupElement c = a;
  for (std::size_t i = 0; i < g; ++i) c.alpha[i] += b.alpha[i];
  for (std::size_t k = 0; k < c.beta.size(); ++k) c.beta[k] += b.beta[k];
  for (std::size_t j = 0; j < g; ++j) {
    if (b.alpha[j].is_zero()) continue;
    for (std::size_t r = j + 1; r < g; ++r) c.beta[bivector_index(j, r, g)] -= a.alpha[r] * b.alpha[j];
  }
  return c;
}

GroupElement ClassTwoGroup::inverse(const GroupElement& a) const {
  check_shape(*this, a);
  const std::size_t g = generators();
  GroupElement c = identity();
  for (std::size_t i = 0; i < g; ++i) c.alpha[i] = -a.alpha[i];
  for (std::size_t k = 0; k < c.beta.size(); ++k) c.beta[k] = -a.beta[k];
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t r = j + 1; r < g; ++r) c.beta[bivector_index(j, r, g)] -= a.alpha[r] * a.alpha[j];
  return c;
}

GroupElement ClassTwoGroup::power(const GroupElement& a, std::int64_t e) const {
  GroupElement base = e < 0 ? inverse(a) : a;
  std::uint64_t k = static_cast<std::uint64_t>(e < 0 ? -e : e);
  GroupElement out = identity();
  while (k > 0) {
    if (k & 1) out = mul(out, base);
    base = mul(base, base);
    k >>= 1;
  }
  return out;
}

GroupElement ClassTwoGroup::commutator(const GroupElement& a, const GroupElement& b) const {
  return mul(mul(a, b), mul(inverse(a), inverse(b)));
}

GroupElement ClassTwoGroup::apply_hom(const std::vector<GroupElement>& images, const GroupElement& x) const {
  check_shape(*this, x);
  const std::size_t g = generators();
  if (images.size() != g) fail(ErrorKind::DimensionMismatch, "one image per generator is required");
  GroupElement out = identity();
  for (std::size_t i = 0; i < g; ++i) out = mul(out, power(images[i], x.alpha[i].index()));
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t r = j + 1; r < g; ++r) {
      const FieldElem e = x.beta[bivector_index(j, r, g)];
      if (!e.is_zero()) out = mul(out, power(commutator(images[j], images[r]), e.index()));
    }
  return out;
}

GroupElement gmul(const GroupElement& a, const GroupElement& b, std::uint32_t p, std::size_t m) {
  return ClassTwoGroup(p, m).mul(a, b);
}

Vector psi(const GroupElement& g) {
  Vector out = g.alpha;
  out.insert(out.end(), g.beta.begin(), g.beta.end());
  return out;
}

Subspace psi_R(const Subspace& central_subgroup) { return central_subgroup; }

GeneratorMap psi_hom(const ClassTwoGroup& g, const std::vector<GroupElement>& images) {
  const std::size_t n = g.generators();
  if (images.size() != n) fail(ErrorKind::DimensionMismatch, "one image per generator is required");
  Matrix a(g.field(), n, n);
  GeneratorMap out;
  for (std::size_t i = 0; i < n; ++i) {
    check_shape(g, images[i]);
    for (std::size_t k = 0; k < n; ++k) a(k, i) = images[i].alpha[k];
    out.central.push_back(images[i].beta);
  }
  out.linear = std::move(a);
  return out;
}

Vector apply_to_element(const GeneratorMap& phi, const Vector& x) {
  const std::size_t g = phi.generators();
  const std::size_t b = bivector_count(g);
  if (x.size() != g + b) fail(ErrorKind::DimensionMismatch, "element does not match the generator map");
  const Vector alpha(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(g));
  const Vector beta(x.begin() + static_cast<std::ptrdiff_t>(g), x.end());
  Vector out = phi.linear.apply(alpha);
  Vector c = exterior_square(phi.linear).apply(beta);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t k = 0; k < b; ++k) c[k] += alpha[i] * phi.central[i][k];
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

ConjugateType conjugate_type(const ClassTwoGroup& g, const Subspace& n, std::uint64_t budget) {
  if (n.field() != g.field() || n.ambient_dim() != g.center_dim())
    fail(ErrorKind::DimensionMismatch, "central subgroup does not match the group");
  const std::size_t gens = g.generators();
  const std::uint64_t cosets = pow_u64(g.p(), gens);
  if (cosets > budget) fail(ErrorKind::BudgetExceeded, "too many coset representatives");
  const std::size_t free_center = g.center_dim() - n.dim();
  const std::uint64_t per_coset = pow_u64(g.p(), free_center);
  ConjugateType t;
  t.order_exponent = gens + free_center;
  std::vector<GroupElement> gen;
  for (std::size_t k = 0; k < gens; ++k) gen.push_back(g.generator(k));
  for (std::uint64_t idx = 0; idx < cosets; ++idx) {
    const GroupElement x = g.element(idx);
    std::vector<Vector> images;
    for (const auto& y : gen) {
      const GroupElement c = g.commutator(x, y);
      if (!is_zero_vector(c.alpha)) fail(ErrorKind::VerificationFailed, "commutator left the center");
      images.push_back(n.reduce(c.beta));
    }
    const std::size_t e = Subspace::span(g.field(), g.center_dim(), images).dim();
    t.elements[e] += per_coset;
    ++t.cosets;
  }
  for (const auto& [e, count] : t.elements) t.exponents.push_back(e);
  return t;
}

CorrespondenceCheck verify_correspondence(const ClassTwoGroup& g, const Subspace& n, std::uint64_t budget) {
  CorrespondenceCheck c;
  c.conjugate = conjugate_type(g, n, budget);
  BreadthOptions opts;
  opts.budget = budget;
  opts.allow_sampling = false;
  c.breadth = breadth_type(free_quotient(psi_R(n), g.generators()), opts);
  c.ok = c.breadth.exact && c.breadth.breadths == c.conjugate.exponents;
  if (!c.ok)
    c.message = "conjugate type " + to_string(c.conjugate, g.p()) + " but breadth type " + to_string(c.breadth);
  return c;
}

std::string to_string(const ConjugateType& t, std::uint32_t p) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.exponents.size(); ++i) {
    if (i) s += ",";
    const std::size_t e = t.exponents[i];
    s += e == 0 ? "1" : e == 1 ? std::to_string(p) : std::to_string(p) + "^" + std::to_string(e);
  }
  return s + ")";
}

}  // namespace breadthlab
