#include "breadthlab/liealg.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace breadthlab {

namespace {

void need_dim(const LieAlgebra& l, const Vector& x) {
  if (x.size() != l.dim()) fail(ErrorKind::DimensionMismatch, "element length does not match algebra dimension");
}

// Rank of a rows x cols buffer, destroyed in the process.
std::size_t rank_in_place(std::vector<FieldElem>& a, std::size_t rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!a[i * cols + c].is_zero()) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[sel * cols + j], a[r * cols + j]);
    const FieldElem inv = a[r * cols + c].inv();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i * cols + c].is_zero()) continue;
      const FieldElem factor = a[i * cols + c] * inv;
      for (std::size_t j = c; j < cols; ++j) a[i * cols + j] -= factor * a[r * cols + j];
    }
    ++r;
  }
  return r;
}

}  // namespace

LieAlgebra::LieAlgebra(Field f, std::size_t n) : f_(f), n_(n), sc_(n * n * n, f.zero()) {}

LieAlgebra LieAlgebra::from_brackets(Field f, std::size_t n, const std::vector<BracketSpec>& brackets) {
  LieAlgebra l(f, n);
  for (const auto& b : brackets) {
    if (b.i >= n || b.j >= n) fail(ErrorKind::DimensionMismatch, "bracket index out of range");
    if (b.i == b.j) fail(ErrorKind::InvalidArgument, "bracket of a basis vector with itself");
    Vector v = zero_vector(f, n);
    for (const auto& [k, c] : b.terms) {
      if (k >= n) fail(ErrorKind::DimensionMismatch, "bracket index out of range");
      v[k] += c;
    }
    l.set_bracket(b.i, b.j, v);
  }
  return l;
}

LieAlgebra LieAlgebra::from_table(Field f, std::size_t n, std::vector<FieldElem> sc) {
  if (sc.size() != n * n * n) fail(ErrorKind::DimensionMismatch, "structure constant table has the wrong size");
  LieAlgebra l(f, n);
  l.sc_ = std::move(sc);
  return l;
}

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  const auto base = sc_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j) * n_);
  return Vector(base, base + static_cast<std::ptrdiff_t>(n_));
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& v) {
  if (v.size() != n_ || i >= n_ || j >= n_) fail(ErrorKind::DimensionMismatch, "bracket does not fit the algebra");
  for (std::size_t k = 0; k < n_; ++k) {
    sc_[(i * n_ + j) * n_ + k] = v[k];
    sc_[(j * n_ + i) * n_ + k] = -v[k];
  }
}

void LieAlgebra::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_)
    fail(ErrorKind::DimensionMismatch, "label count does not match dimension");
  labels_ = std::move(labels);
}

std::string LieAlgebra::label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return "e" + std::to_string(i + 1);
}

ValidationReport validate(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  ValidationReport rep;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k)
      if (!l.sc(i, i, k).is_zero()) {
        rep = {false, "alternating", i, i, k, "[" + l.label(i) + ", " + l.label(i) + "] != 0"};
        return rep;
      }
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (l.sc(i, j, k) != -l.sc(j, i, k)) {
          rep = {false, "antisymmetry",
                 i,     j,
                 k,     "[" + l.label(i) + ", " + l.label(j) + "] != -[" + l.label(j) + ", " + l.label(i) + "]"};
          return rep;
        }
  }
  const Field f = l.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
        for (std::size_t t = 0; t < n; ++t) {
          FieldElem s = f.zero();
          for (std::size_t u = 0; u < n; ++u) {
            s += l.sc(j, k, u) * l.sc(i, u, t);
            s += l.sc(k, i, u) * l.sc(j, u, t);
            s += l.sc(i, j, u) * l.sc(k, u, t);
          }
          if (!s.is_zero()) {
            rep = {false, "jacobi",
                   i,     j,
                   k,     "Jacobi identity fails for (" + l.label(i) + ", " + l.label(j) + ", " + l.label(k) + ")"};
            return rep;
          }
        }
      }
  return rep;
}

Vector bracket(const LieAlgebra& l, const Vector& x, const Vector& y) {
  need_dim(l, x);
  need_dim(l, y);
  const std::size_t n = l.dim();
  Vector out = zero_vector(l.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero() || i == j) continue;
      const FieldElem c = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const FieldElem& s = l.sc(i, j, k);
        if (!s.is_zero()) out[k] += c * s;
      }
    }
  }
  return out;
}

Matrix ad_matrix(const LieAlgebra& l, const Vector& x) {
  need_dim(l, x);
  const std::size_t n = l.dim();
  Matrix m(l.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const FieldElem& s = l.sc(i, j, k);
        if (!s.is_zero()) m(k, j) += x[i] * s;
      }
  }
  return m;
}

Subspace center(const LieAlgebra& l) {
  // z is central iff sum_i z_i c_ij^k = 0 for all j, k.
  const std::size_t n = l.dim();
  Matrix m(l.field(), n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) m(j * n + k, i) = l.sc(i, j, k);
  if (n == 0) return Subspace(l.field(), 0);
  return kernel(m);
}

Subspace derived(const LieAlgebra& l) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      Vector v = l.basis_bracket(i, j);
      if (!is_zero_vector(v)) gens.push_back(std::move(v));
    }
  return Subspace::span(l.field(), l.dim(), gens);
}

Subspace bracket_subspace(const LieAlgebra& l, const Subspace& s) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    const Vector ei = unit_vector(l.field(), l.dim(), i);
    for (const Vector& v : s.basis()) {
      Vector b = bracket(l, ei, v);
      if (!is_zero_vector(b)) gens.push_back(std::move(b));
    }
  }
  return Subspace::span(l.field(), l.dim(), gens);
}

std::vector<Subspace> lower_central_series(const LieAlgebra& l) {
  std::vector<Subspace> out{Subspace::full(l.field(), l.dim())};
  while (out.back().dim() > 0) {
    Subspace next = bracket_subspace(l, out.back());
    if (next.dim() == out.back().dim())
      fail(ErrorKind::NotNilpotent, "lower central series stabilises at a nonzero term");
    out.push_back(std::move(next));
  }
  return out;
}

std::size_t nilpotency_class(const LieAlgebra& l) {
  if (l.dim() == 0) return 0;
  return lower_central_series(l).size() - 1;
}

bool is_nilpotent(const LieAlgebra& l) {
  try {
    lower_central_series(l);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotNilpotent) return false;
    throw;
  }
}

bool is_stem(const LieAlgebra& l) { return derived(l).contains(center(l)); }

std::size_t breadth(const LieAlgebra& l, const Vector& x) { return rank(ad_matrix(l, x)); }

Subspace centralizer(const LieAlgebra& l, const Vector& x) { return kernel(ad_matrix(l, x)); }

BreadthType breadth_type(const LieAlgebra& l, const BreadthOptions& opts) {
  const std::size_t n = l.dim();
  const Field f = l.field();
  BreadthType out;
  out.breadths = {0};
  if (n == 0) return out;
  const Subspace z = center(l);
  const Subspace d = derived(l);
  const std::vector<std::size_t> comp = z.non_pivots();
  const std::size_t m = comp.size();
  out.upper_bound = std::min(d.dim(), m);
  if (m == 0) return out;

  // ad(e_i) restricted to the complement columns: block[i][k * m + c] = c_{i, comp[c]}^k.
  std::vector<std::vector<FieldElem>> block(m, std::vector<FieldElem>(n * m, f.zero()));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t k = 0; k < n; ++k) block[a][k * m + c] = l.sc(comp[a], comp[c], k);

  std::set<std::size_t> seen{0};
  std::vector<FieldElem> buf(n * m, f.zero());
  auto eval = [&](const Vector& coeffs) {
    std::fill(buf.begin(), buf.end(), f.zero());
    for (std::size_t a = 0; a < m; ++a) {
      if (coeffs[a].is_zero()) continue;
      const auto& blk = block[a];
      for (std::size_t t = 0; t < buf.size(); ++t)
        if (!blk[t].is_zero()) buf[t] += coeffs[a] * blk[t];
    }
    seen.insert(rank_in_place(buf, n, m));
    ++out.evaluated;
  };

  bool exhaustive = f.is_finite() && !opts.force_sampling;
  if (exhaustive) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < m && total <= opts.budget; ++i) total *= f.size();
    if (total > opts.budget) exhaustive = false;
  }
  if (exhaustive) {
    for_each_projective(f, m, [&](const Vector& c) {
      eval(c);
      return true;
    });
    out.exact = true;
  } else {
    if (!opts.allow_sampling) fail(ErrorKind::BudgetExceeded, "coset scan exceeds budget and sampling is disabled");
    std::mt19937_64 rng(opts.seed);
    Vector c(m, f.zero());
    for (std::uint64_t s = 0; s < opts.samples; ++s) {
      for (auto& x : c) x = f.random(rng, opts.rational_bound);
      eval(c);
    }
    out.exact = false;
    out.seed = opts.seed;
  }
  out.breadths.assign(seen.begin(), seen.end());
  return out;
}

std::string to_string(const BreadthType& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.breadths.size(); ++i) os << (i ? "," : "") << t.breadths[i];
  os << ")";
  return os.str();
}

LieAlgebra direct_sum_abelian(const LieAlgebra& l, std::size_t d) {
  const std::size_t n = l.dim();
  LieAlgebra out(l.field(), n + d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = l.basis_bracket(i, j);
      v.resize(n + d, l.field().zero());
      out.set_bracket(i, j, v);
    }
  if (!l.labels().empty()) {
    std::vector<std::string> labels = l.labels();
    for (std::size_t i = 0; i < d; ++i) labels.push_back("a" + std::to_string(i + 1));
    out.set_labels(std::move(labels));
  }
  return out;
}

}  // namespace breadthlab
