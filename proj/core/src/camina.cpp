#include "breadthlab/camina.hpp"

#include <algorithm>
#include <random>

#include "breadthlab/bivector.hpp"
#include "breadthlab/constructions.hpp"
#include "breadthlab/quadratic_form.hpp"

namespace breadthlab {

namespace {

std::uint64_t checked_pow(std::uint64_t q, std::size_t e, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < e; ++i) {
    out *= q;
    if (out > cap) return cap + 1;
  }
  return out;
}

Matrix combine(const std::vector<Matrix>& xs, const Vector& xi) {
  Matrix m(xs.at(0).field(), xs[0].rows(), xs[0].cols());
  for (std::size_t r = 0; r < xs.size(); ++r)
    if (!xi[r].is_zero()) m = m + xi[r] * xs[r];
  return m;
}

// Small integer search for a singular nonzero combination over Q.
std::optional<Vector> search_singular(const std::vector<Matrix>& xs, std::int64_t bound) {
  const Field f = xs[0].field();
  const std::size_t d = xs.size();
  std::vector<std::int64_t> c(d, -bound);
  while (true) {
    std::size_t first = d;
    for (std::size_t i = 0; i < d; ++i)
      if (c[i] != 0) {
        first = i;
        break;
      }
    if (first < d && c[first] > 0) {
      Vector xi(d, f.zero());
      for (std::size_t i = 0; i < d; ++i) xi[i] = f.from_int(c[i]);
      if (det(combine(xs, xi)).is_zero()) return xi;
    }
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (++c[k] <= bound) break;
      c[k] = -bound;
      if (k == 0) return std::nullopt;
    }
  }
}

// Coefficient vectors of length k over GF(q) sorted by Hamming weight.
std::vector<std::vector<std::uint32_t>> weight_ordered(std::size_t k, std::uint32_t q) {
  std::vector<std::vector<std::uint32_t>> all;
  std::vector<std::uint32_t> digits(k, 0);
  while (true) {
    all.push_back(digits);
    std::size_t i = k;
    bool done = true;
    while (i > 0) {
      --i;
      if (++digits[i] < q) {
        done = false;
        break;
      }
      digits[i] = 0;
    }
    if (done) break;
  }
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    auto w = [](const std::vector<std::uint32_t>& v) {
      return std::count_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
    };
    return w(a) < w(b);
  });
  return all;
}

class SksSearch {
 public:
  SksSearch(std::size_t n, Field f, const SksOptions& opts) : n_(n), f_(f), opts_(opts), dim_(bivector_count(n)) {
    if (opts.fix_first) {
      Vector j = zero_vector(f, dim_);
      for (std::size_t i = 0; i + 1 < n; i += 2) j[bivector_index(i, i + 1, n)] = f.one();
      base_.push_back(j);
      for (std::size_t c = 0; c < dim_; ++c)
        if (c != bivector_index(0, 1, n)) allowed_.push_back(c);
    } else {
      for (std::size_t c = 0; c < dim_; ++c) allowed_.push_back(c);
    }
    best_ = base_;
  }

  void run() {
    std::vector<Vector> rows;
    dfs(rows, 0);
  }

  SksSearchResult result(bool exhaustive) const {
    SksSearchResult r;
    r.k_sks = best_.size();
    r.exhaustive = exhaustive;
    r.nodes = nodes_;
    r.tests = tests_;
    r.certificate.n = n_;
    r.certificate.field = f_;
    r.certificate.skew = true;
    r.certificate.lower_bound = !exhaustive;
    for (const auto& v : best_) r.certificate.basis.push_back(to_skew(v, n_));
    return r;
  }

 private:
  bool nonsingular(const Vector& w) {
    if (++tests_ > opts_.budget) fail(ErrorKind::BudgetExceeded, "rank-subspace search budget exhausted");
    if (n_ == 2) return !w[0].is_zero();
    if (n_ == 4) return !(w[0] * w[5] - w[1] * w[4] + w[2] * w[3]).is_zero();
    return !pfaffian(to_skew(w, n_)).is_zero();
  }

  const std::vector<std::vector<std::uint32_t>>& coefficient_list(std::size_t k) {
    while (weights_.size() <= k) weights_.push_back(weight_ordered(weights_.size(), f_.size()));
    return weights_[k];
  }

  bool admissible(const std::vector<Vector>& rows, const Vector& v) {
    std::vector<const Vector*> span;
    for (const auto& b : base_) span.push_back(&b);
    for (const auto& r : rows) span.push_back(&r);
    for (const auto& coeffs : coefficient_list(span.size())) {
      Vector w = v;
      for (std::size_t i = 0; i < span.size(); ++i) {
        if (coeffs[i] == 0) continue;
        const FieldElem c = f_.element(coeffs[i]);
        for (std::size_t t = 0; t < dim_; ++t)
          if (!(*span[i])[t].is_zero()) w[t] += c * (*span[i])[t];
      }
      if (!nonsingular(w)) return false;
    }
    return true;
  }

  void dfs(std::vector<Vector>& rows, std::size_t start) {
    ++nodes_;
    if (base_.size() + rows.size() > best_.size()) {
      best_ = base_;
      best_.insert(best_.end(), rows.begin(), rows.end());
    }
    // A rank-n subspace injects into k^n via the first row, whose first entry vanishes.
    if (base_.size() + rows.size() >= n_ - 1) return;
    std::vector<std::size_t> pivots;
    for (const auto& r : rows)
      for (std::size_t c : allowed_)
        if (!r[c].is_zero()) {
          pivots.push_back(c);
          break;
        }
    for (std::size_t a = start; a < allowed_.size(); ++a) {
      const std::size_t p = allowed_[a];
      if (std::any_of(rows.begin(), rows.end(), [&](const Vector& r) { return !r[p].is_zero(); })) continue;
      std::vector<std::size_t> free;
      for (std::size_t b = a + 1; b < allowed_.size(); ++b)
        if (std::find(pivots.begin(), pivots.end(), allowed_[b]) == pivots.end()) free.push_back(allowed_[b]);
      std::vector<std::uint32_t> digits(free.size(), 0);
      while (true) {
        Vector v = zero_vector(f_, dim_);
        v[p] = f_.one();
        for (std::size_t k = 0; k < free.size(); ++k) v[free[k]] = f_.element(digits[k]);
        if (admissible(rows, v)) {
          rows.push_back(std::move(v));
          dfs(rows, a + 1);
          rows.pop_back();
        }
        std::size_t k = free.size();
        bool wrapped = true;
        while (k > 0) {
          --k;
          if (++digits[k] < f_.size()) {
            wrapped = false;
            break;
          }
          digits[k] = 0;
        }
        if (wrapped) break;
      }
    }
  }

  std::size_t n_;
  Field f_;
  SksOptions opts_;
  std::size_t dim_;
  std::vector<std::size_t> allowed_;
  std::vector<Vector> base_;
  std::vector<Vector> best_;
  std::vector<std::vector<std::vector<std::uint32_t>>> weights_;
  std::uint64_t nodes_ = 0;
  std::uint64_t tests_ = 0;
};

}  // namespace

CaminaResult is_camina(const LieAlgebra& l, std::uint64_t budget) {
  const Field f = l.field();
  if (!f.is_finite()) fail(ErrorKind::Unsupported, "definition-based Camina test needs a finite field");
  CaminaResult out;
  const Subspace d = derived(l);
  const Subspace z = center(l);
  const std::vector<std::size_t> comp = d.non_pivots();
  const bool central = z.contains(d);
  const std::uint64_t q = f.size();
  const std::uint64_t lines = (checked_pow(q, comp.size(), budget * q) - 1) / (q - 1);
  const std::uint64_t inner = central ? 1 : checked_pow(q, d.dim(), budget);
  if (lines > budget || inner > budget || lines * inner > budget)
    fail(ErrorKind::BudgetExceeded, "Camina scan exceeds budget");
  const std::size_t target = d.dim();
  for_each_projective(f, comp.size(), [&](const Vector& c) {
    Vector base = zero_vector(f, l.dim());
    for (std::size_t i = 0; i < comp.size(); ++i) base[comp[i]] = c[i];
    auto check = [&](const Vector& x) {
      ++out.scanned;
      if (breadth(l, x) != target) {
        out.camina = false;
        out.witness = x;
        return false;
      }
      return true;
    };
    if (central) return check(base);
    bool keep = true;
    for_each_vector(f, d.dim(), [&](const Vector& e) {
      Vector x = base;
      const Vector y = d.combination(e);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
      keep = check(x);
      return keep;
    });
    return keep;
  });
  return out;
}

StructureMatrices structure_matrices(const LieAlgebra& l) {
  std::size_t cls = 0;
  try {
    cls = nilpotency_class(l);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotNilpotent) throw;
    fail(ErrorKind::HypothesisViolated, "algebra is not nilpotent");
  }
  if (cls != 2) fail(ErrorKind::HypothesisViolated, "structure matrices need nilpotency class 2");
  const Subspace d = derived(l);
  if (center(l) != d) fail(ErrorKind::HypothesisViolated, "structure matrices need Z(L) = L'");
  StructureMatrices sm;
  sm.generators = d.non_pivots();
  sm.derived_dim = d.dim();
  const std::size_t n = sm.generators.size();
  for (std::size_t r = 0; r < d.dim(); ++r) sm.x.emplace_back(l.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector v = l.basis_bracket(sm.generators[i], sm.generators[j]);
      for (std::size_t r = 0; r < d.dim(); ++r) sm.x[r](i, j) = v[d.pivots()[r]];
    }
  return sm;
}

StructureCaminaResult camina_via_structure_matrices(const LieAlgebra& l,
                                                    std::optional<std::size_t> declared_generators) {
  const StructureMatrices sm = structure_matrices(l);
  if (declared_generators && *declared_generators != sm.generators.size())
    fail(ErrorKind::HypothesisViolated, "declared generator count differs from dim L/L'");
  const Field f = l.field();
  StructureCaminaResult out;
  if (f.is_finite()) {
    out.method = "exhaustive";
    for_each_projective(f, sm.x.size(), [&](const Vector& xi) {
      ++out.scanned;
      if (det(combine(sm.x, xi)).is_zero()) {
        out.camina = false;
        out.singular_combination = xi;
        return false;
      }
      return true;
    });
    return out;
  }
  if (sm.x.size() == 1) {
    out.method = "determinant";
    out.scanned = 1;
    if (det(sm.x[0]).is_zero()) {
      out.camina = false;
      out.singular_combination = Vector{f.one()};
    }
    return out;
  }
  if (sm.generators.size() == 4) {
    std::vector<Vector> rows;
    for (const auto& x : sm.x) rows.push_back(from_skew(x));
    const Matrix gram = restrict_form(pfaffian_form4(f), Matrix::from_rows(f, rows, 6));
    const Definiteness d = sylvester(gram);
    if (d == Definiteness::PositiveDefinite || d == Definiteness::NegativeDefinite) {
      out.method = "definite";
      return out;
    }
    if (d == Definiteness::Degenerate) {
      out.method = "degenerate";
      out.camina = false;
      out.singular_combination = kernel(gram).basis_vector(0);
      return out;
    }
  } else if (clifford_criterion(sm.x)) {
    out.method = "clifford";
    return out;
  }
  if (auto xi = search_singular(sm.x, 3)) {
    out.method = "isotropic-search";
    out.camina = false;
    out.singular_combination = *xi;
    return out;
  }
  fail(ErrorKind::Undetermined, "Camina property over Q is undecided for these structure matrices");
}

bool clifford_criterion(const std::vector<Matrix>& basis) {
  if (basis.empty()) return true;
  const Field f = basis[0].field();
  if (!f.is_rational()) return false;
  Matrix inv;
  try {
    inv = inverse(basis[0]);
  } catch (const Error&) {
    return false;
  }
  const std::size_t n = basis[0].rows();
  const Matrix id = Matrix::identity(f, n);
  std::vector<Matrix> y;
  for (std::size_t i = 1; i < basis.size(); ++i) y.push_back(inv * basis[i]);
  for (std::size_t i = 0; i < y.size(); ++i) {
    const Matrix sq = y[i] * y[i];
    const FieldElem d = -sq(0, 0);
    if (sq != (-d) * id || d.num() <= 0) return false;
    for (std::size_t j = i + 1; j < y.size(); ++j)
      if (!(y[i] * y[j] + y[j] * y[i]).is_zero()) return false;
  }
  return true;
}

bool verify_certificate(const RankSubspaceCertificate& cert) {
  if (cert.basis.empty()) return true;
  for (const auto& m : cert.basis) {
    if (m.rows() != cert.n || m.cols() != cert.n || m.field() != cert.field) return false;
    if (cert.skew && !is_skew(m)) return false;
  }
  if (Subspace::span(cert.field, cert.n * cert.n,
                     [&] {
                       std::vector<Vector> v;
                       for (const auto& m : cert.basis) v.push_back(m.entries());
                       return v;
                     }())
          .dim() != cert.basis.size())
    return false;
  if (cert.field.is_rational()) return clifford_criterion(cert.basis);
  bool ok = true;
  for_each_projective(cert.field, cert.basis.size(), [&](const Vector& xi) {
    ok = !det(combine(cert.basis, xi)).is_zero();
    return ok;
  });
  return ok;
}

SksSearchResult max_sks_rank_subspace(std::size_t n, Field f, const SksOptions& opts, SksSearchResult* best_so_far) {
  if (!f.is_finite()) fail(ErrorKind::Unsupported, "rank-subspace search needs a finite field");
  if (n % 2 == 1 || n == 0) {
    SksSearchResult r;
    r.certificate.n = n;
    r.certificate.field = f;
    return r;
  }
  SksSearch search(n, f, opts);
  try {
    search.run();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BudgetExceeded && best_so_far) *best_so_far = search.result(false);
    throw;
  }
  return search.result(true);
}

RankSubspaceCertificate double_to_skew(const RankSubspaceCertificate& in) {
  RankSubspaceCertificate in_general = in;
  in_general.skew = false;
  if (!verify_certificate(in_general))
    fail(ErrorKind::InvalidInputCertificate, "input matrices are not a rank-n subspace");
  RankSubspaceCertificate out;
  out.n = 2 * in.n;
  out.field = in.field;
  out.skew = true;
  for (const auto& x : in.basis) {
    Matrix y(in.field, out.n, out.n);
    for (std::size_t i = 0; i < in.n; ++i)
      for (std::size_t j = 0; j < in.n; ++j) {
        y(i, in.n + j) = -x(j, i);
        y(in.n + i, j) = x(i, j);
      }
    out.basis.push_back(std::move(y));
  }
  if (!verify_certificate(out)) fail(ErrorKind::VerificationFailed, "doubled certificate does not re-verify");
  return out;
}

RankSubspaceCertificate rational_quaternion_family() {
  const Field q = Field::rational();
  RankSubspaceCertificate c;
  c.n = 4;
  c.field = q;
  c.skew = true;
  c.basis.push_back(Matrix::from_ints(q, {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}));
  c.basis.push_back(Matrix::from_ints(q, {{0, 0, 0, -1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}}));
  c.basis.push_back(Matrix::from_ints(q, {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}));
  const QuaternionCheck chk = check_quaternion_family(c, 1, 0);
  if (!chk.squares || !chk.anticommute || !chk.determinant_identity)
    fail(ErrorKind::VerificationFailed, "quaternion family fails its defining relations");
  return c;
}

QuaternionCheck check_quaternion_family(const RankSubspaceCertificate& cert, std::int64_t radius,
                                        std::uint64_t random_points, std::uint64_t seed) {
  QuaternionCheck out;
  const Field f = cert.field;
  const auto& x = cert.basis;
  if (x.size() != 3) fail(ErrorKind::InvalidArgument, "expected three matrices");
  const Matrix minus_id = -f.one() * Matrix::identity(f, cert.n);
  for (std::size_t i = 0; i < 3; ++i) {
    if (x[i] * x[i] != minus_id) out.squares = false;
    for (std::size_t j = i + 1; j < 3; ++j)
      if (!(x[i] * x[j] + x[j] * x[i]).is_zero()) out.anticommute = false;
  }
  auto check = [&](std::int64_t a, std::int64_t b, std::int64_t c) {
    ++out.points;
    const Matrix m = f.from_int(a) * x[0] + f.from_int(b) * x[1] + f.from_int(c) * x[2];
    const std::int64_t s = a * a + b * b + c * c;
    if (det(m) != f.from_int(s * s)) out.determinant_identity = false;
  };
  for (std::int64_t a = -radius; a <= radius; ++a)
    for (std::int64_t b = -radius; b <= radius; ++b)
      for (std::int64_t c = -radius; c <= radius; ++c) check(a, b, c);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-1000, 1000);
  for (std::uint64_t i = 0; i < random_points; ++i) {
    const std::int64_t a = dist(rng), b = dist(rng), c = dist(rng);
    check(a, b, c);
  }
  return out;
}

}  // namespace breadthlab
