#include "breadthlab/campaigns.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "breadthlab/constructions.hpp"

namespace breadthlab {

namespace {

constexpr std::size_t kMaxWitnesses = 20;

using Key = std::vector<std::uint64_t>;

// Per-worker tallies, merged in a fixed order so the report does not depend on the worker count.
struct Tally {
  CampaignCounts counts;
  std::vector<std::pair<Key, json>> witnesses;
  std::map<std::string, std::uint64_t> stats;

  void pass() {
    ++counts.scanned;
    ++counts.passed;
  }
  void failure(Key key, json w) {
    ++counts.scanned;
    ++counts.failed;
    witnesses.emplace_back(std::move(key), std::move(w));
  }
  void check(bool ok, Key key, const std::function<json()>& w) {
    if (ok)
      pass();
    else
      failure(std::move(key), w());
  }
  void merge(Tally&& o) {
    counts.scanned += o.counts.scanned;
    counts.passed += o.counts.passed;
    counts.failed += o.counts.failed;
    counts.skipped += o.counts.skipped;
    for (auto& w : o.witnesses) witnesses.push_back(std::move(w));
    for (const auto& [k, v] : o.stats) stats[k] += v;
  }
};

void run_workers(unsigned jobs, std::vector<Tally>& out, const std::function<void(Tally&, unsigned, unsigned)>& fn) {
  jobs = std::max(1u, jobs);
  out.assign(jobs, Tally{});
  if (jobs == 1) {
    fn(out[0], 0, 1);
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr err;
  std::mutex mu;
  for (unsigned w = 0; w < jobs; ++w)
    threads.emplace_back([&, w] {
      try {
        fn(out[w], w, jobs);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!err) err = std::current_exception();
      }
    });
  for (auto& t : threads) t.join();
  if (err) std::rethrow_exception(err);
}

Tally parallel(unsigned jobs, const std::function<void(Tally&, unsigned, unsigned)>& fn) {
  std::vector<Tally> parts;
  run_workers(jobs, parts, fn);
  Tally all;
  for (auto& p : parts) all.merge(std::move(p));
  return all;
}

// Budget bookkeeping shared by the campaign steps (single-threaded between steps).
struct Budget {
  std::uint64_t limit = 0;
  std::uint64_t used = 0;
  bool exceeded = false;

  // Number of the next `want` instances that still fit.
  std::uint64_t take(std::uint64_t want) {
    if (limit == 0) {
      used += want;
      return want;
    }
    const std::uint64_t left = limit > used ? limit - used : 0;
    const std::uint64_t got = std::min(left, want);
    if (got < want) exceeded = true;
    used += got;
    return got;
  }
};

Field require_field(const CampaignOptions& o, const Field& fallback) { return o.field ? *o.field : fallback; }

json biv_ideal(const Subspace& s) { return ideal_to_json(s, 4); }

Vector biv(const Field& f, std::initializer_list<std::pair<std::size_t, FieldElem>> e) {
  Vector v = zero_vector(f, 6);
  for (const auto& [i, c] : e) v[i] += c;
  return v;
}

struct Stem {
  LieAlgebra algebra;
  std::size_t stripped = 0;
};

Stem stem_of(const LieAlgebra& l) {
  const Field f = l.field();
  const Subspace d = derived(l);
  Subspace acc = d;
  const Subspace z = center(l);
  std::vector<Vector> extra;
  for (const auto& v : z.basis()) {
    if (acc.contains(v)) continue;
    extra.push_back(v);
    acc = sum(acc, Subspace::span(f, l.dim(), {v}));
  }
  if (extra.empty()) return {l, 0};
  return {quotient_by_central_ideal(l, Subspace::span(f, l.dim(), extra)), extra.size()};
}

// A symplectic basis x_i, y_i of S/S' with [x_i, y_i] = z exhibits S as H_k.
bool heisenberg_isomorphic(const LieAlgebra& s) {
  const Field f = s.field();
  const Subspace d = derived(s);
  if (d.dim() != 1 || !(center(s) == d)) return false;
  const std::size_t z = d.pivots()[0];
  const FieldElem zc = d.basis_vector(0)[z];
  std::vector<Vector> rest;
  for (std::size_t i : d.non_pivots()) rest.push_back(unit_vector(f, s.dim(), i));
  auto omega = [&](const Vector& a, const Vector& b) { return bracket(s, a, b)[z] / zc; };
  std::vector<std::pair<Vector, Vector>> pairs;
  while (!rest.empty()) {
    std::size_t bi = rest.size();
    for (std::size_t i = 1; i < rest.size() && bi == rest.size(); ++i)
      if (!omega(rest[0], rest[i]).is_zero()) bi = i;
    if (bi == rest.size()) return false;
    const Vector a = rest[0];
    Vector b = rest[bi];
    const FieldElem w = omega(a, b).inv();
    for (auto& x : b) x *= w;
    std::vector<Vector> next;
    for (std::size_t i = 1; i < rest.size(); ++i) {
      if (i == bi) continue;
      Vector v = rest[i];
      const FieldElem wb = omega(v, b), wa = omega(v, a);
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = v[k] - wb * a[k] + wa * b[k];
      next.push_back(std::move(v));
    }
    pairs.emplace_back(a, b);
    rest = std::move(next);
  }
  const Vector zv = d.basis_vector(0);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      const Vector want = i == j ? zv : zero_vector(f, s.dim());
      if (bracket(s, pairs[i].first, pairs[j].second) != want) return false;
      if (!is_zero_vector(bracket(s, pairs[i].first, pairs[j].first))) return false;
      if (!is_zero_vector(bracket(s, pairs[i].second, pairs[j].second))) return false;
    }
  return breadth_type(heisenberg(pairs.size(), f)).breadths == std::vector<std::size_t>{0, 1};
}

// Subspace of codimension `codim` in GF(q)^b, as the annihilator of random vectors.
Subspace random_coideal(const Field& f, std::size_t b, std::size_t codim, std::mt19937_64& rng) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < codim; ++i) {
    Vector v(b, f.zero());
    for (auto& x : v) x = f.random(rng);
    rows.push_back(std::move(v));
  }
  return annihilator(Subspace::span(f, b, rows));
}

Subspace random_subspace(const Field& f, std::size_t b, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> dim(0, b);
  const std::size_t d = dim(rng);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < d; ++i) {
    Vector v(b, f.zero());
    for (auto& x : v) x = f.random(rng);
    rows.push_back(std::move(v));
  }
  return Subspace::span(f, b, rows);
}

struct Instance {
  std::string source;
  LieAlgebra algebra;
};

// Quotients of the free class-2 algebras: all central ideals on three
// generators, and seeded random ones of small codimension on four and five.
std::vector<Instance> quotient_instances(const Field& f, std::uint64_t samples, std::uint64_t seed) {
  std::vector<Instance> out;
  for (std::size_t d = 0; d <= 3; ++d) {
    SubspaceEnumerator en(f, 3, d);
    Subspace s;
    while (en.next(s))
      out.push_back({"L2/I dim " + std::to_string(d) + " #" + std::to_string(en.produced() - 1), free_quotient(s, 3)});
  }
  std::mt19937_64 rng(seed);
  for (std::size_t g : {4u, 5u}) {
    const std::size_t b = bivector_count(g);
    for (std::uint64_t k = 0; k < samples; ++k) {
      const std::size_t codim = 1 + static_cast<std::size_t>(k % 3);
      out.push_back({"L" + std::to_string(g - 1) + "/I codim " + std::to_string(codim) + " sample " + std::to_string(k),
                     free_quotient(random_coideal(f, b, codim, rng), g)});
    }
  }
  return out;
}

json type_json(const BreadthType& t) { return t.breadths; }

void campaign_t01(CampaignReport& rep, const CampaignOptions& o, Budget& budget, Tally& all) {
  const Field f = rep.field;
  std::vector<Instance> inst = quotient_instances(f, o.samples, o.seed);
  for (std::size_t k = 1; k <= 4; ++k) {
    inst.push_back({"H" + std::to_string(k), heisenberg(k, f)});
    inst.push_back({"H" + std::to_string(k) + "+A2", direct_sum_abelian(heisenberg(k, f), 2)});
  }
  inst.push_back({"five-dim three-step", five_dim_three_step(f)});
  const std::uint64_t n = budget.take(inst.size());
  all.merge(parallel(o.jobs, [&](Tally& t, unsigned w, unsigned jobs) {
    for (std::uint64_t i = w; i < n; i += jobs) {
      const LieAlgebra& l = inst[i].algebra;
      const BreadthType bt = breadth_type(l);
      const Stem s = stem_of(l);
      const bool type01 = bt.breadths == std::vector<std::size_t>{0, 1};
      const bool heis = heisenberg_isomorphic(s.algebra);
      if (type01) ++t.stats["type_01"];
      if (heis) ++t.stats["heisenberg_stems"];
      bool ok = type01 == heis;
      if (bt.breadths.size() == 2) ok = ok && nilpotency_class(l) <= 3;
      t.check(ok, {i}, [&] {
        return json{{"instance", inst[i].source},
                    {"breadth_type", type_json(bt)},
                    {"heisenberg_stem", heis},
                    {"algebra", algebra_to_json(l)}};
      });
    }
  }));
  rep.details["instances"] = inst.size();
}

void campaign_t02(CampaignReport& rep, const CampaignOptions& o, Budget& budget, Tally& all) {
  const Field f = rep.field;
  std::vector<Instance> inst = quotient_instances(f, o.samples, o.seed);
  inst.push_back({"five-dim three-step", five_dim_three_step(f)});
  inst.push_back({"five-dim three-step+A1", direct_sum_abelian(five_dim_three_step(f), 1)});
  inst.push_back({"h2", heisenberg_degree(2, f)});
  inst.push_back({"L2", free_two_step(2, f)});
  const std::uint64_t n = budget.take(inst.size());
  const std::vector<std::size_t> t02{0, 2};
  all.merge(parallel(o.jobs, [&](Tally& t, unsigned w, unsigned jobs) {
    for (std::uint64_t i = w; i < n; i += jobs) {
      const LieAlgebra& l = inst[i].algebra;
      const BreadthType bt = breadth_type(l);
      const Stem s = stem_of(l);
      const LieAlgebra& st = s.algebra;
      const std::size_t cls = nilpotency_class(st);
      const std::size_t dd = derived(st).dim();
      std::string family = "none";
      bool ok = true;
      if (cls == 2) {
        // A class-2 stem is Camina iff its breadth type is (0, dim L').
        const bool camina = is_camina(st).camina;
        ok = camina == (bt.breadths == std::vector<std::size_t>{0, dd});
        if (camina && dd == 2) family = "camina";
        if (st.dim() == 6 && dd == 3 && breadth_type(free_two_step(2, f)) == breadth_type(st)) family = "L2";
      } else if (cls == 3 && st.dim() == 5 && dd == 3 && center(st).dim() == 2) {
        family = "five-dim three-step";
      }
      if (bt.breadths == t02) {
        ++t.stats["type_02"];
        ++t.stats["family_" + family];
        ok = ok && family != "none" && cls <= 3;
      }
      if (bt.breadths.size() == 2) ok = ok && cls <= 3;
      t.check(ok, {i}, [&] {
        return json{{"instance", inst[i].source},
                    {"breadth_type", type_json(bt)},
                    {"family", family},
                    {"algebra", algebra_to_json(l)}};
      });
    }
  }));
  rep.details["instances"] = inst.size();
}

struct LayerSpec {
  std::size_t dim;
  bool even;
};

// One layer: every dim-d subspace of bivectors on four generators.
void theorem_layer(CampaignReport& rep, const CampaignOptions& o, Budget& budget, Tally& all, std::size_t d) {
  const Field f = rep.field;
  const bool even = f.characteristic() == 2;
  const std::uint64_t total = gaussian_binomial(6, d, f.size());
  const std::uint64_t n = budget.take(total);
  const Vector j1 = biv(f, {{0, f.one()}, {5, f.one()}});
  const Subspace dim1_target = Subspace::span(f, 6, {j1});
  Subspace dim2_target;
  if (even) {
    const FieldElem z = f.least_trace_one();
    dim2_target = Subspace::span(f, 6, {j1, biv(f, {{1, z}, {4, f.one()}, {5, f.one()}})});
  } else {
    dim2_target = Subspace::span(f, 6, {j1, biv(f, {{1, f.one()}, {4, f.find_nonsquare()}})});
  }
  const std::vector<std::size_t> t03{0, 3};
  Tally layer = parallel(o.jobs, [&](Tally& t, unsigned w, unsigned jobs) {
    SubspaceEnumerator en(f, 6, d);
    Subspace s;
    for (std::uint64_t i = 0; i < n && en.next(s); ++i) {
      if (i % jobs != w) continue;
      const BracketFreeResult bf = bracket_free(s, 4);
      const BreadthType bt = breadth_type(free_quotient(s, 4));
      const bool top = bt.breadths == t03;
      bool nf_ok = true;
      std::optional<NormalFormResult> nf;
      if (bf.bracket_free) ++t.stats["bracket_free"];
      if (top) ++t.stats["type_03"];
      if (bf.witness && !(s.contains(*bf.witness) && bf.factors && wedge(bf.factors->a, bf.factors->b) == *bf.witness))
        nf_ok = false;
      if (d == 1) {
        nf = reduce_dim1(s, 4);
        nf_ok = nf_ok && ((nf->r == 2) == bf.bracket_free) && (!bf.bracket_free || nf->canonical == dim1_target);
      } else if (d == 2) {
        nf = reduce_dim2(s);
        const bool canon = nf->tag != NormalFormTag::NotBreadthType;
        nf_ok = nf_ok && canon == bf.bracket_free && (!canon || nf->canonical == dim2_target);
        if (!canon) nf_ok = nf_ok && nf->witness && s.contains(wedge(nf->witness->a, nf->witness->b));
      } else {
        nf_ok = nf_ok && !bf.bracket_free;
      }
      if (nf && nf->tag != NormalFormTag::NotBreadthType) ++t.stats["canonical"];
      t.check(nf_ok && bf.bracket_free == top, {d, i}, [&] {
        json w = {{"layer", d},
                  {"index", i},
                  {"ideal", biv_ideal(s)},
                  {"bracket_free", bf.bracket_free},
                  {"breadth_type", type_json(bt)}};
        if (nf) w["normal_form"] = to_string(nf->tag);
        return w;
      });
    }
  });
  json layer_json = {{"subspaces", total},
                     {"scanned", layer.counts.scanned},
                     {"bracket_free", layer.stats["bracket_free"]},
                     {"type_03", layer.stats["type_03"]},
                     {"canonical", layer.stats["canonical"]},
                     {"mismatches", layer.counts.failed}};
  if (d == 1) layer_json["canonical_ideal"] = biv_ideal(dim1_target);
  if (d == 2) layer_json["canonical_ideal"] = biv_ideal(dim2_target);
  rep.details["dim" + std::to_string(d)] = layer_json;
  layer.stats.clear();
  all.merge(std::move(layer));
}

void campaign_t03(CampaignReport& rep, const CampaignOptions& o, Budget& budget, Tally& all, bool even) {
  const Field f = rep.field;
  if (!f.is_finite()) fail(ErrorKind::UnsupportedField, "the exhaustive scan needs a finite field");
  if (even != (f.characteristic() == 2))
    fail(ErrorKind::UnsupportedField, even ? "t03-even needs characteristic 2" : "t03-odd needs odd characteristic");
  for (std::size_t d = 1; d <= 3; ++d) theorem_layer(rep, o, budget, all, d);
  if (!even) return;
  // Trace criterion against exhaustive root search.
  json trace = json::object();
  for (std::uint32_t n : {1u, 2u, 3u}) {
    const Field k = Field::gf(2, n);
    const std::uint64_t q = k.size();
    const std::uint64_t count = budget.take((q - 1) * q * q);
    Tally t;
    std::uint64_t idx = 0;
    for (std::uint32_t a = 1; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c, ++idx) {
          if (idx >= count) continue;
          const FieldElem fa = k.element(a), fb = k.element(b), fc = k.element(c);
          bool root = false;
          for (std::uint32_t x = 0; x < q && !root; ++x) {
            const FieldElem fx = k.element(x);
            root = (fa * fx * fx + fb * fx + fc).is_zero();
          }
          t.check(quadratic_irreducible(fa, fb, fc) == !root, {9, n, idx},
                  [&] { return json{{"field", k.name()}, {"a", a}, {"b", b}, {"c", c}}; });
        }
    trace[k.name()] = {{"quadratics", t.counts.scanned}, {"mismatches", t.counts.failed}};
    all.merge(std::move(t));
  }
  rep.details["trace_criterion"] = trace;
}

void campaign_camina_bound(CampaignReport& rep, const CampaignOptions& o, Budget& budget, Tally& all) {
  const Field f = rep.field;
  if (!f.is_finite()) fail(ErrorKind::UnsupportedField, "the rank-subspace search needs a finite field");
  SksOptions so;
  if (budget.limit) so.budget = budget.limit;
  so.fix_first = o.n >= 6;
  SksSearchResult best;
  SksSearchResult res;
  try {
    res = max_sks_rank_subspace(o.n, f, so, &best);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    budget.exceeded = true;
    res = best;
    res.exhaustive = false;
  }
  rep.details["n"] = o.n;
  rep.details["k_sks"] = res.k_sks;
  rep.details["exhaustive"] = res.exhaustive;
  rep.details["nodes"] = res.nodes;
  rep.details["tests"] = res.tests;
  rep.details["fix_first"] = so.fix_first;
  rep.details["certificate"] = certificate_to_json(res.certificate);
  all.check(2 * res.k_sks <= o.n, {0}, [&] { return json{{"violation", "k_sks > n/2"}, {"k_sks", res.k_sks}}; });
  if (res.k_sks > 0) {
    all.check(verify_certificate(res.certificate), {1},
              [&] { return json{{"violation", "certificate fails recheck"}}; });
    const RankSubspaceCertificate doubled = double_to_skew(res.certificate);
    const bool small = 2 * o.n <= 8;
    if (small)
      all.check(verify_certificate(doubled), {2},
                [&] { return json{{"violation", "doubled certificate fails recheck"}}; });
    rep.details["doubled"] = {{"n", doubled.n}, {"dim", doubled.basis.size()}, {"verified", small}};
  }
}

void campaign_correspondence(CampaignReport& rep, const CampaignOptions& o, Budget& budget, Tally& all) {
  const Field f = rep.field;
  if (!f.is_finite() || f.degree() != 1) fail(ErrorKind::UnsupportedField, "the correspondence needs a prime field");
  const std::uint32_t p = f.characteristic();
  std::mt19937_64 rng(o.seed);
  json details = json::object();

  // Group law.
  for (std::size_t m = 1; m <= 3; ++m) {
    const ClassTwoGroup g(p, m);
    Tally t;
    auto law = [&](const GroupElement& a, const GroupElement& b, const GroupElement& c, std::uint64_t idx) {
      const bool assoc = g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
      const bool expo = g.power(a, p) == g.identity();
      const bool inv = g.mul(a, g.inverse(a)) == g.identity() && g.mul(g.identity(), a) == a;
      t.check(assoc && expo && inv, {1, m, idx}, [&] {
        return json{
            {"m", m}, {"a", vector_to_json(psi(a))}, {"b", vector_to_json(psi(b))}, {"c", vector_to_json(psi(c))}};
      });
    };
    if (m == 1) {
      const std::uint64_t order = static_cast<std::uint64_t>(p) * p * p;
      const std::uint64_t total = budget.take(order * order * order);
      std::uint64_t idx = 0;
      for (std::uint64_t a = 0; a < order && idx < total; ++a)
        for (std::uint64_t b = 0; b < order && idx < total; ++b)
          for (std::uint64_t c = 0; c < order && idx < total; ++c, ++idx)
            law(g.element(a), g.element(b), g.element(c), idx);
    } else {
      const std::uint64_t total = budget.take(o.triples);
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        const GroupElement a = g.random(rng), b = g.random(rng), c = g.random(rng);
        law(a, b, c, idx);
      }
    }
    details["group_law"]["m" + std::to_string(m)] = {{"checked", t.counts.scanned}, {"failed", t.counts.failed}};
    all.merge(std::move(t));
  }

  // Commutators map to brackets.
  for (std::size_t m = 1; m <= 3; ++m) {
    const ClassTwoGroup g(p, m);
    const LieAlgebra l = free_two_step(m, f);
    Tally t;
    auto square = [&](const GroupElement& a, const GroupElement& b, std::uint64_t idx) {
      t.check(psi(g.commutator(a, b)) == bracket(l, psi(a), psi(b)), {2, m, idx},
              [&] { return json{{"m", m}, {"a", vector_to_json(psi(a))}, {"b", vector_to_json(psi(b))}}; });
    };
    if (m <= 2) {
      std::uint64_t order = 1;
      for (std::size_t i = 0; i < g.order_exponent(); ++i) order *= p;
      const std::uint64_t total = budget.take(order * order);
      std::uint64_t idx = 0;
      for (std::uint64_t a = 0; a < order && idx < total; ++a) {
        const GroupElement ga = g.element(a);
        for (std::uint64_t b = 0; b < order && idx < total; ++b, ++idx) square(ga, g.element(b), idx);
      }
    } else {
      const std::uint64_t total = budget.take(10000);
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        const GroupElement a = g.random(rng), b = g.random(rng);
        square(a, b, idx);
      }
    }
    details["commuting_square"]["m" + std::to_string(m)] = {{"checked", t.counts.scanned}, {"failed", t.counts.failed}};
    all.merge(std::move(t));
  }

  // Conjugate type against breadth type.
  auto correspond = [&](const ClassTwoGroup& g, const Subspace& n, Key key, json& list) {
    const CorrespondenceCheck c = verify_correspondence(g, n);
    bool ok = c.ok;
    std::uint64_t sum = 0;
    for (const auto& [e, cnt] : c.conjugate.elements) {
      std::uint64_t pe = 1;
      for (std::size_t i = 0; i < e; ++i) pe *= g.p();
      ok = ok && cnt % pe == 0;
      sum += cnt;
    }
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < c.conjugate.order_exponent; ++i) order *= g.p();
    ok = ok && sum == order;
    list.push_back({{"ideal", ideal_to_json(n, g.generators())},
                    {"conjugate_type", to_string(c.conjugate, g.p())},
                    {"breadth_type", to_string(c.breadth)},
                    {"ok", ok}});
    all.check(ok, std::move(key),
              [&] { return json{{"ideal", ideal_to_json(n, g.generators())}, {"message", c.message}}; });
  };
  {
    const ClassTwoGroup g(p, 1);
    json list = json::array();
    if (budget.take(1)) correspond(g, Subspace(f, 1), {3, 1, 0}, list);
    details["verify_correspondence"]["m1"] = list;
  }
  {
    const ClassTwoGroup g(p, 2);
    json list = json::array();
    std::uint64_t idx = 0;
    for (std::size_t d = 0; d <= 3; ++d) {
      SubspaceEnumerator en(f, 3, d);
      Subspace s;
      while (en.next(s))
        if (budget.take(1)) correspond(g, s, {3, 2, idx++}, list);
    }
    details["verify_correspondence"]["m2"] = list;
  }
  {
    const ClassTwoGroup g(p, 3);
    json list = json::array();
    std::vector<Subspace> subs{Subspace::span(f, 6, {biv(f, {{0, f.one()}, {5, f.one()}})})};
    while (subs.size() < 50) subs.push_back(random_subspace(f, 6, rng));
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (budget.take(1)) correspond(g, subs[i], {3, 3, i}, list);
    details["verify_correspondence"]["m3"] = list;
  }

  // Generator-map automorphisms: Psi(theta) agrees with theta on generators,
  // on central elements, on commutators, and carries psi_R(N) to psi_R(theta(N)).
  for (std::size_t m = 2; m <= 3; ++m) {
    const ClassTwoGroup g(p, m);
    const LieAlgebra l = free_two_step(m, f);
    const std::size_t gens = g.generators();
    Tally t;
    const std::uint64_t total = budget.take(20);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<GroupElement> images;
      Matrix a;
      do {
        images.clear();
        for (std::size_t i = 0; i < gens; ++i) images.push_back(g.random(rng));
        a = psi_hom(g, images).linear;
      } while (det(a).is_zero());
      const GeneratorMap phi = psi_hom(g, images);
      bool ok = true;
      for (std::size_t i = 0; i < gens; ++i)
        ok = ok && psi(g.apply_hom(images, g.generator(i))) == apply_to_element(phi, psi(g.generator(i)));
      for (std::size_t k = 0; k < g.center_dim(); ++k) {
        GroupElement c = g.identity();
        c.beta[k] = f.one();
        ok = ok && psi(g.apply_hom(images, c)) == apply_to_element(phi, psi(c));
      }
      const GroupElement x = g.random(rng), y = g.random(rng);
      ok = ok && psi(g.apply_hom(images, g.commutator(x, y))) ==
                     bracket(l, apply_to_element(phi, psi(x)), apply_to_element(phi, psi(y)));
      const Subspace n = random_subspace(f, g.center_dim(), rng);
      std::vector<Vector> image_rows;
      for (const auto& v : n.basis())
        image_rows.push_back(g.apply_hom(images, GroupElement{zero_vector(f, gens), v}).beta);
      ok = ok && push_ideal(phi, psi_R(n)) == psi_R(Subspace::span(f, g.center_dim(), image_rows));
      t.check(ok, {4, m, idx}, [&] { return json{{"m", m}, {"automorphism", generator_map_to_json(phi)}}; });
    }
    details["automorphisms"]["m" + std::to_string(m)] = {{"checked", t.counts.scanned}, {"failed", t.counts.failed}};
    all.merge(std::move(t));
  }
  details["p"] = p;
  rep.details = details;
}

void campaign_rational(CampaignReport& rep, const CampaignOptions& o, Budget& budget, Tally& all) {
  const Field q = Field::rational();
  const Field f3 = Field::gf(3);
  budget.take(6);
  const RankSubspaceCertificate cert = rational_quaternion_family();
  const QuaternionCheck qc = check_quaternion_family(cert, 2, 100, o.seed);
  all.check(qc.squares && qc.anticommute && qc.determinant_identity, {0}, [&] {
    return json{{"squares", qc.squares}, {"anticommute", qc.anticommute}, {"determinant", qc.determinant_identity}};
  });
  all.check(clifford_criterion(cert.basis) && verify_certificate(cert), {1},
            [&] { return json{{"violation", "quaternion certificate fails the Clifford criterion"}}; });
  rep.details["quaternion"] = {{"points", qc.points},
                               {"squares", qc.squares},
                               {"anticommute", qc.anticommute},
                               {"determinant_identity", qc.determinant_identity},
                               {"certificate", certificate_to_json(cert)}};

  auto camina_ideal = [](const Field& f) {
    const FieldElem one = f.one();
    return Subspace::span(f, 6,
                          {biv(f, {{0, one}, {5, one}}), biv(f, {{1, one}, {4, -one}}), biv(f, {{2, one}, {3, one}})});
  };
  const Subspace iq = camina_ideal(q);
  const BracketFreeResult bq = bracket_free(iq, 4);
  all.check(bq.bracket_free && bq.method == "definite", {2},
            [&] { return json{{"field", "rational"}, {"method", bq.method}}; });
  const StructureCaminaResult sq = camina_via_structure_matrices(free_quotient(iq, 4), 4);
  all.check(sq.camina, {3},
            [&] { return json{{"violation", "quotient over Q is not Camina"}, {"method", sq.method}}; });

  const Subspace i3 = camina_ideal(f3);
  const BracketFreeResult b3 = bracket_free(i3, 4);
  const bool witness_ok = !b3.bracket_free && b3.witness && b3.factors && i3.contains(*b3.witness) &&
                          wedge(b3.factors->a, b3.factors->b) == *b3.witness && !is_zero_vector(*b3.witness);
  all.check(witness_ok, {4}, [&] { return json{{"field", "gf3"}, {"bracket_free", b3.bracket_free}}; });
  rep.details["ideal"] = {
      {"rational", {{"bracket_free", bq.bracket_free}, {"method", bq.method}, {"camina_method", sq.method}}},
      {"gf3",
       {{"bracket_free", b3.bracket_free}, {"witness", b3.witness ? vector_to_json(*b3.witness) : json(nullptr)}}}};

  json fams = json::array();
  for (const Family& fam : theorem_families(q)) {
    const Classification c = classify_4gen_2step(fam.algebra);
    const bool ok = c.family == fam.tag;
    fams.push_back({{"tag", fam.tag}, {"name", fam.name}, {"classified", c.family}});
    all.check(ok, {5}, [&] { return json{{"family", fam.name}, {"classified", c.family}}; });
  }
  rep.details["families"] = fams;
}

}  // namespace

int CampaignReport::exit_code() const {
  if (counts.failed > 0) return 1;
  if (budget_exceeded) return 3;
  return 0;
}

std::vector<std::string> campaign_ids() {
  return {"t01", "t02", "t03-odd", "t03-even", "camina-bound", "correspondence", "rational-camina"};
}

unsigned default_jobs() {
  if (const char* env = std::getenv("BREADTHLAB_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
    }
  }
  return 1;
}

CampaignReport run_campaign(const std::string& id, const CampaignOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  CampaignReport rep;
  rep.command = "verify " + id;
  Budget budget;
  budget.limit = opts.budget;
  Tally all;
  if (id == "t01" || id == "t02") {
    rep.field = require_field(opts, Field::gf(3));
    if (!rep.field.is_finite()) fail(ErrorKind::UnsupportedField, id + " needs a finite field");
    rep.seed = opts.seed;
    rep.parameters["samples"] = opts.samples;
    if (id == "t01")
      campaign_t01(rep, opts, budget, all);
    else
      campaign_t02(rep, opts, budget, all);
  } else if (id == "t03-odd") {
    rep.field = require_field(opts, Field::gf(3));
    campaign_t03(rep, opts, budget, all, false);
  } else if (id == "t03-even") {
    rep.field = require_field(opts, Field::gf(2));
    campaign_t03(rep, opts, budget, all, true);
  } else if (id == "camina-bound") {
    rep.field = require_field(opts, Field::gf(2));
    rep.parameters["n"] = opts.n;
    campaign_camina_bound(rep, opts, budget, all);
  } else if (id == "correspondence") {
    rep.field = require_field(opts, Field::gf(3));
    rep.seed = opts.seed;
    rep.parameters["triples"] = opts.triples;
    campaign_correspondence(rep, opts, budget, all);
  } else if (id == "rational-camina") {
    rep.field = Field::rational();
    rep.seed = opts.seed;
    campaign_rational(rep, opts, budget, all);
  } else {
    fail(ErrorKind::UnknownTheorem, "unknown theorem id " + id);
  }
  rep.parameters["theorem"] = id;
  rep.parameters["budget"] = opts.budget;
  if (!all.stats.empty()) rep.details["statistics"] = all.stats;
  rep.counts = all.counts;
  rep.budget_exceeded = budget.exceeded;
  std::sort(all.witnesses.begin(), all.witnesses.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < all.witnesses.size() && i < kMaxWitnesses; ++i)
    rep.witnesses.push_back(all.witnesses[i].second);
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

json report_to_json(const CampaignReport& r) {
  return {{"command", r.command},
          {"parameters", r.parameters},
          {"field", field_to_json(r.field)},
          {"counts",
           {{"scanned", r.counts.scanned},
            {"passed", r.counts.passed},
            {"failed", r.counts.failed},
            {"skipped", r.counts.skipped}}},
          {"witnesses", r.witnesses},
          {"seed", r.seed ? json(*r.seed) : json(nullptr)},
          {"budget_exceeded", r.budget_exceeded},
          {"status", r.counts.failed     ? "fail"
                     : r.budget_exceeded ? "budget"
                                         : "pass"},
          {"wall_time_s", r.wall_time_s},
          {"details", r.details}};
}

}  // namespace breadthlab
