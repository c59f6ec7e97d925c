#include "breadthlab/field.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace breadthlab {

__extension__ typedef __int128 i128;

namespace detail {

struct FieldData {
  FieldSpec spec;
  std::string name;
  FieldKind kind = FieldKind::Rational;
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;

  // Finite fields only. exp has 2(q-1) entries so log sums need no reduction.
  std::vector<std::uint32_t> exp;
  std::vector<std::uint32_t> log;
  std::vector<std::uint32_t> neg;
  std::vector<std::uint16_t> add;  // full table when q <= kAddTableLimit
  std::vector<std::uint8_t> trace;
  std::uint32_t generator = 0;
  std::int64_t least_nonsquare = -1;
  std::int64_t least_trace_one = -1;

  static constexpr std::uint32_t kAddTableLimit = 1024;

  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      out += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return out;
  }
  std::uint32_t fadd(std::uint32_t a, std::uint32_t b) const {
    if (n == 1) return (a + b) % p;
    if (p == 2) return a ^ b;
    if (!add.empty()) return add[static_cast<std::size_t>(a) * q + b];
    return add_slow(a, b);
  }
  std::uint32_t fmul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp[log[a] + log[b]];
  }
};

}  // namespace detail

namespace {

using detail::FieldData;

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over GF(p) as coefficient vectors, lowest degree first.
using IntPoly = std::vector<std::uint32_t>;

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t qt = r / nr;
    std::tie(t, nt) = std::make_tuple(nt, t - qt * nt);
    std::tie(r, nr) = std::make_tuple(nr, r - qt * nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

IntPoly poly_mod(IntPoly a, const IntPoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint32_t c = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.back()) * lead_inv) % p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = (static_cast<std::uint64_t>(c) * m[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  trim(out);
  return out;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool int_poly_irreducible(const IntPoly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  if (deg <= 1) return deg == 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      IntPoly g(d + 1, 0);
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

IntPoly unpack(std::uint32_t idx, std::uint32_t p, std::uint32_t n) {
  IntPoly out(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    out[i] = idx % p;
    idx /= p;
  }
  trim(out);
  return out;
}

std::uint32_t pack(const IntPoly& a, std::uint32_t p) {
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t c : a) {
    out += c * scale;
    scale *= p;
  }
  return out;
}

// Least monic irreducible polynomial of degree n, ordering the lower
// coefficients by their p-adic packed index.
IntPoly default_modulus(std::uint32_t p, std::uint32_t n) {
  if (n == 1) return {0, 1};
  std::uint32_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) count *= p;
  for (std::uint32_t idx = 0; idx < count; ++idx) {
    IntPoly f(n + 1, 0);
    std::uint32_t v = idx;
    for (std::uint32_t i = 0; i < n; ++i) {
      f[i] = v % p;
      v /= p;
    }
    f[n] = 1;
    if (int_poly_irreducible(f, p)) return f;
  }
  fail(ErrorKind::InvalidField, "no irreducible polynomial found");
}

std::unique_ptr<FieldData> build_finite(FieldSpec spec) {
  const std::uint32_t p = spec.p, n = spec.n;
  if (!is_prime(p)) fail(ErrorKind::InvalidField, "p = " + std::to_string(p) + " is not prime");
  if (n < 1) fail(ErrorKind::InvalidField, "extension degree must be >= 1");
  std::uint64_t q64 = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q64 *= p;
    if (q64 > (1u << 16)) fail(ErrorKind::InvalidField, "field order exceeds 2^16");
  }
  const auto q = static_cast<std::uint32_t>(q64);

  IntPoly modulus;
  if (spec.modulus.empty()) {
    modulus = default_modulus(p, n);
  } else {
    modulus = spec.modulus;
    for (auto& c : modulus) {
      if (c >= p) fail(ErrorKind::InvalidField, "modulus coefficient out of range");
    }
    if (modulus.size() != n + 1 || modulus.back() != 1)
      fail(ErrorKind::InvalidField, "modulus must be monic of degree n");
    if (!int_poly_irreducible(modulus, p)) fail(ErrorKind::InvalidField, "modulus is reducible over GF(p)");
  }
  spec.modulus = modulus;

  auto d = std::make_unique<FieldData>();
  d->spec = spec;
  d->kind = FieldKind::Finite;
  d->p = p;
  d->n = n;
  d->q = q;
  d->name = n == 1 ? "gf" + std::to_string(p) : "gf" + std::to_string(p) + "^" + std::to_string(n);
  if (!spec.modulus.empty() && n > 1 && modulus != default_modulus(p, n)) d->name += "*";

  // Addition tables.
  d->neg.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    std::uint32_t out = 0, scale = 1, v = a;
    for (std::uint32_t i = 0; i < n; ++i) {
      out += ((p - v % p) % p) * scale;
      v /= p;
      scale *= p;
    }
    d->neg[a] = out;
  }
  if (n > 1 && p != 2 && q <= FieldData::kAddTableLimit) {
    d->add.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        d->add[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint16_t>(d->add_slow(a, b));
  }

  // Log/antilog tables from the least primitive element.
  d->exp.assign(2 * (q - 1), 0);
  d->log.assign(q, 0);
  auto mul_poly = [&](std::uint32_t a, std::uint32_t b) {
    if (n == 1) return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
    return pack(poly_mod(poly_mul(unpack(a, p, n), unpack(b, p, n), p), modulus, p), p);
  };
  bool found = false;
  for (std::uint32_t g = 1; g < q && !found; ++g) {
    std::uint32_t x = 1;
    std::uint32_t order = 0;
    do {
      x = mul_poly(x, g);
      ++order;
    } while (x != 1 && order < q);
    if (order != q - 1) continue;
    d->generator = g;
    x = 1;
    for (std::uint32_t e = 0; e < q - 1; ++e) {
      d->exp[e] = x;
      d->exp[e + q - 1] = x;
      d->log[x] = e;
      x = mul_poly(x, g);
    }
    found = true;
  }
  if (!found) fail(ErrorKind::InvalidField, "no primitive element (modulus not irreducible?)");

  // Trace table: sum of a^(p^i).
  d->trace.assign(q, 0);
  for (std::uint32_t a = 1; a < q; ++a) {
    std::uint64_t e = d->log[a];
    std::uint32_t acc = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      acc = d->fadd(acc, d->exp[e % (q - 1)]);
      e = (e * p) % (q - 1);
    }
    if (acc >= p) fail(ErrorKind::InvalidField, "trace left the prime subfield");
    d->trace[a] = static_cast<std::uint8_t>(acc);
  }

  for (std::uint32_t a = 1; a < q && d->least_trace_one < 0; ++a)
    if (d->trace[a] == 1) d->least_trace_one = a;
  if (p != 2) {
    for (std::uint32_t a = 1; a < q; ++a) {
      if (d->log[a] % 2 == 1) {
        d->least_nonsquare = a;
        break;
      }
    }
  }
  return d;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::tuple<int, std::uint32_t, std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<FieldData>>&
registry() {
  static std::map<std::tuple<int, std::uint32_t, std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<FieldData>>
      r;
  return r;
}

// Rational helpers; overflow of the 64-bit representation is an error rather
// than a silent wrap.
std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < -INT64_MAX) fail(ErrorKind::Overflow, "rational component exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::pair<std::int64_t, std::int64_t> reduce(i128 num, i128 den) {
  if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return {0, 1};
  const i128 g = gcd128(num, den);
  return {narrow(num / g), narrow(den / g)};
}

bool perfect_square(std::int64_t v, std::int64_t* root = nullptr) {
  if (v < 0) return false;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && static_cast<i128>(r) * r > v) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= v) ++r;
  if (static_cast<i128>(r) * r != v) return false;
  if (root) *root = r;
  return true;
}

const FieldData& same_field(const FieldElem& a, const FieldElem& b) {
  const auto* fa = a.field().data();
  const auto* fb = b.field().data();
  if (fa == nullptr || fa != fb) fail(ErrorKind::FieldMismatch, "operands belong to different fields");
  return *fa;
}

const FieldData& need(const FieldData* d) {
  if (d == nullptr) fail(ErrorKind::FieldMismatch, "uninitialised field handle");
  return *d;
}

}  // namespace

FieldSpec FieldSpec::finite(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus) {
  FieldSpec s;
  s.kind = FieldKind::Finite;
  s.p = p;
  s.n = n;
  s.modulus = std::move(modulus);
  return s;
}

Field Field::get(const FieldSpec& spec) {
  if (spec.kind == FieldKind::Rational) {
    std::lock_guard lock(registry_mutex());
    auto& slot = registry()[{1, 0, 0, {}}];
    if (!slot) {
      slot = std::make_unique<FieldData>();
      slot->kind = FieldKind::Rational;
      slot->name = "rational";
    }
    return Field(slot.get());
  }
  // Resolve the default modulus outside the lock so the key is canonical.
  FieldSpec resolved = spec;
  if (resolved.modulus.empty() && is_prime(resolved.p) && resolved.n >= 1) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < resolved.n && q <= (1u << 16); ++i) q *= resolved.p;
    if (q <= (1u << 16)) resolved.modulus = default_modulus(resolved.p, resolved.n);
  }
  if (resolved.n == 1) resolved.modulus = {0, 1};
  std::tuple<int, std::uint32_t, std::uint32_t, std::vector<std::uint32_t>> key{0, resolved.p, resolved.n,
                                                                                resolved.modulus};
  {
    std::lock_guard lock(registry_mutex());
    auto it = registry().find(key);
    if (it != registry().end()) return Field(it->second.get());
  }
  auto built = build_finite(resolved);
  std::lock_guard lock(registry_mutex());
  auto& slot = registry()[key];
  if (!slot) slot = std::move(built);
  return Field(slot.get());
}

Field Field::gf(std::uint32_t p, std::uint32_t n) { return get(FieldSpec::finite(p, n)); }
Field Field::rational() { return get(FieldSpec::rational()); }

FieldKind Field::kind() const { return need(d_).kind; }
std::uint32_t Field::characteristic() const { return need(d_).p; }
std::uint32_t Field::degree() const { return need(d_).n; }
std::uint32_t Field::size() const { return need(d_).q; }
const FieldSpec& Field::spec() const { return need(d_).spec; }
const std::string& Field::name() const { return need(d_).name; }

FieldElem Field::zero() const {
  const auto& d = need(d_);
  return d.kind == FieldKind::Finite ? FieldElem(d_, 0, 0) : FieldElem(d_, 0, 1);
}

FieldElem Field::one() const {
  const auto& d = need(d_);
  return d.kind == FieldKind::Finite ? FieldElem(d_, 1, 0) : FieldElem(d_, 1, 1);
}

FieldElem Field::from_int(std::int64_t v) const {
  const auto& d = need(d_);
  if (d.kind == FieldKind::Rational) return FieldElem(d_, v, 1);
  std::int64_t r = v % static_cast<std::int64_t>(d.p);
  if (r < 0) r += d.p;
  return FieldElem(d_, r, 0);
}

FieldElem Field::element(std::uint32_t i) const {
  const auto& d = need(d_);
  if (d.kind != FieldKind::Finite) fail(ErrorKind::Unsupported, "indexed elements exist only for finite fields");
  if (i >= d.q) fail(ErrorKind::InvalidArgument, "element index out of range");
  return FieldElem(d_, i, 0);
}

FieldElem Field::ratio(std::int64_t num, std::int64_t den) const {
  const auto& d = need(d_);
  if (d.kind != FieldKind::Rational) {
    return from_int(num) / from_int(den);
  }
  auto [a, b] = reduce(num, den);
  return FieldElem(d_, a, b);
}

FieldElem Field::from_coefficients(const std::vector<std::uint32_t>& coeffs) const {
  const auto& d = need(d_);
  if (d.kind != FieldKind::Finite) fail(ErrorKind::Unsupported, "polynomial coefficients need a finite field");
  if (coeffs.size() > d.n) fail(ErrorKind::InvalidArgument, "too many coefficients");
  std::uint32_t idx = 0, scale = 1;
  for (std::uint32_t c : coeffs) {
    if (c >= d.p) fail(ErrorKind::InvalidArgument, "coefficient out of range");
    idx += c * scale;
    scale *= d.p;
  }
  return FieldElem(d_, idx, 0);
}

FieldElem Field::trace(const FieldElem& a) const {
  const auto& d = need(d_);
  if (a.field() != *this) fail(ErrorKind::FieldMismatch, "trace of a foreign element");
  if (d.kind != FieldKind::Finite) fail(ErrorKind::Unsupported, "trace is defined for finite fields only");
  return FieldElem(d_, d.trace[a.index()], 0);
}

bool Field::is_square(const FieldElem& a) const {
  const auto& d = need(d_);
  if (a.field() != *this) fail(ErrorKind::FieldMismatch, "square test of a foreign element");
  if (d.kind == FieldKind::Rational) {
    if (a.is_zero()) return true;
    return a.num() > 0 && perfect_square(a.num()) && perfect_square(a.den());
  }
  if (d.p == 2) fail(ErrorKind::Unsupported, "square test in characteristic 2 (every element is a square)");
  if (a.is_zero()) return true;
  return d.log[a.index()] % 2 == 0;
}

FieldElem Field::find_nonsquare() const {
  const auto& d = need(d_);
  if (d.kind == FieldKind::Rational) return from_int(-1);
  if (d.p == 2) fail(ErrorKind::NoNonsquare, "every element of GF(2^n) is a square");
  return FieldElem(d_, d.least_nonsquare, 0);
}

FieldElem Field::least_trace_one() const {
  const auto& d = need(d_);
  if (d.kind != FieldKind::Finite) fail(ErrorKind::Unsupported, "trace is defined for finite fields only");
  if (d.least_trace_one < 0) fail(ErrorKind::Unsupported, "no element of trace 1");
  return FieldElem(d_, d.least_trace_one, 0);
}

std::optional<FieldElem> Field::sqrt(const FieldElem& a) const {
  const auto& d = need(d_);
  if (a.field() != *this) fail(ErrorKind::FieldMismatch, "square root of a foreign element");
  if (a.is_zero()) return a;
  if (d.kind == FieldKind::Rational) {
    std::int64_t rn = 0, rd = 0;
    if (a.num() < 0 || !perfect_square(a.num(), &rn) || !perfect_square(a.den(), &rd)) return std::nullopt;
    return ratio(rn, rd);
  }
  const std::uint32_t l = d.log[a.index()];
  if (d.p == 2) {
    // q - 1 is odd, so halving is multiplication by q/2 modulo q - 1.
    const std::uint64_t e = (static_cast<std::uint64_t>(l) * (d.q / 2)) % (d.q - 1);
    return FieldElem(d_, d.exp[e], 0);
  }
  if (l % 2 != 0) return std::nullopt;
  return FieldElem(d_, d.exp[l / 2], 0);
}

std::uint32_t Field::generator_index() const {
  const auto& d = need(d_);
  if (d.kind != FieldKind::Finite) fail(ErrorKind::Unsupported, "no generator for Q");
  return d.generator;
}

FieldElem Field::random(std::mt19937_64& rng, std::int64_t bound) const {
  const auto& d = need(d_);
  if (d.kind == FieldKind::Finite) {
    std::uniform_int_distribution<std::uint32_t> dist(0, d.q - 1);
    return FieldElem(d_, dist(rng), 0);
  }
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  return from_int(dist(rng));
}

bool FieldElem::is_one() const {
  const auto& d = need(f_);
  return d.kind == FieldKind::Finite ? a_ == 1 : (a_ == 1 && b_ == 1);
}

std::uint32_t FieldElem::index() const {
  const auto& d = need(f_);
  if (d.kind != FieldKind::Finite) fail(ErrorKind::Unsupported, "index() on a rational");
  return static_cast<std::uint32_t>(a_);
}

std::int64_t FieldElem::num() const {
  if (need(f_).kind != FieldKind::Rational) fail(ErrorKind::Unsupported, "num() on a finite-field element");
  return a_;
}

std::int64_t FieldElem::den() const {
  if (need(f_).kind != FieldKind::Rational) fail(ErrorKind::Unsupported, "den() on a finite-field element");
  return b_;
}

FieldElem FieldElem::operator-() const {
  const auto& d = need(f_);
  if (d.kind == FieldKind::Finite) return FieldElem(f_, d.neg[a_], 0);
  return FieldElem(f_, narrow(-static_cast<i128>(a_)), b_);
}

FieldElem FieldElem::inv() const {
  const auto& d = need(f_);
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  if (d.kind == FieldKind::Finite) {
    const std::uint32_t l = d.log[a_];
    return FieldElem(f_, d.exp[(d.q - 1 - l) % (d.q - 1)], 0);
  }
  auto [a, b] = reduce(b_, a_);
  return FieldElem(f_, a, b);
}

FieldElem FieldElem::pow(std::int64_t e) const {
  const auto& d = need(f_);
  if (e < 0) return inv().pow(-e);
  if (d.kind == FieldKind::Finite) {
    if (e == 0) return FieldElem(f_, 1, 0);
    if (is_zero()) return *this;
    const std::uint64_t l =
        (static_cast<std::uint64_t>(d.log[a_]) * (static_cast<std::uint64_t>(e) % (d.q - 1))) % (d.q - 1);
    return FieldElem(f_, d.exp[l], 0);
  }
  FieldElem out(f_, 1, 1), base = *this;
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  const auto& d = same_field(a, b);
  if (d.kind == FieldKind::Finite)
    return FieldElem(a.f_, d.fadd(static_cast<std::uint32_t>(a.a_), static_cast<std::uint32_t>(b.a_)), 0);
  if (a.b_ == 1 && b.b_ == 1) return FieldElem(a.f_, narrow(static_cast<i128>(a.a_) + b.a_), 1);
  auto [n, m] = reduce(static_cast<i128>(a.a_) * b.b_ + static_cast<i128>(b.a_) * a.b_, static_cast<i128>(a.b_) * b.b_);
  return FieldElem(a.f_, n, m);
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  const auto& d = same_field(a, b);
  if (d.kind == FieldKind::Finite)
    return FieldElem(a.f_, d.fmul(static_cast<std::uint32_t>(a.a_), static_cast<std::uint32_t>(b.a_)), 0);
  if (a.b_ == 1 && b.b_ == 1) return FieldElem(a.f_, narrow(static_cast<i128>(a.a_) * b.a_), 1);
  auto [n, m] = reduce(static_cast<i128>(a.a_) * b.a_, static_cast<i128>(a.b_) * b.b_);
  return FieldElem(a.f_, n, m);
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  same_field(a, b);
  return a * b.inv();
}

std::string FieldElem::to_string() const {
  if (f_ == nullptr) return "<unset>";
  if (f_->kind == FieldKind::Finite) return std::to_string(a_);
  if (b_ == 1) return std::to_string(a_);
  return std::to_string(a_) + "/" + std::to_string(b_);
}

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vector v(n, f.zero());
  v.at(i) = f.one();
  return v;
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElem& x) { return x.is_zero(); });
}

bool quadratic_irreducible(const FieldElem& a, const FieldElem& b, const FieldElem& c) {
  same_field(a, b);
  same_field(a, c);
  if (a.is_zero()) fail(ErrorKind::DegenerateLeadingCoefficient, "leading coefficient is zero");
  const Field f = a.field();
  if (f.is_finite() && f.characteristic() == 2) {
    if (b.is_zero()) return false;  // a t^2 + c is the square of a linear form
    return f.trace(a * c / (b * b)).is_one();
  }
  const FieldElem disc = b * b - f.from_int(4) * a * c;
  if (disc.is_zero()) return false;
  return !f.is_square(disc);
}

Field parse_field_name(const std::string& text) {
  std::string s;
  for (char ch : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (s == "rational" || s == "q") return Field::rational();
  if (s.rfind("gf", 0) != 0) fail(ErrorKind::Parse, "unrecognised field '" + text + "'");
  s = s.substr(2);
  std::uint32_t p = 0, n = 1;
  try {
    const auto caret = s.find('^');
    if (caret != std::string::npos) {
      p = static_cast<std::uint32_t>(std::stoul(s.substr(0, caret)));
      n = static_cast<std::uint32_t>(std::stoul(s.substr(caret + 1)));
    } else {
      const std::uint32_t q = static_cast<std::uint32_t>(std::stoul(s));
      // Accept prime powers such as gf4 or gf9.
      for (std::uint32_t d = 2; d <= q; ++d) {
        if (q % d == 0) {
          p = d;
          break;
        }
      }
      std::uint32_t v = q;
      n = 0;
      while (p > 1 && v % p == 0) {
        v /= p;
        ++n;
      }
      if (v != 1 || n == 0) fail(ErrorKind::Parse, "field order " + std::to_string(q) + " is not a prime power");
    }
  } catch (const std::logic_error&) {
    fail(ErrorKind::Parse, "unrecognised field '" + text + "'");
  }
  return Field::gf(p, n);
}

}  // namespace breadthlab
