#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "breadthlab/campaigns.hpp"
#include "breadthlab/constructions.hpp"

using namespace breadthlab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMath = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Common {
  std::string field = "gf3";
  std::uint64_t budget = 0;
  std::uint64_t seed = 20240601;
  std::optional<std::string> json_path;
  bool json_flag = false;
  unsigned jobs = default_jobs();
};

void add_common(CLI::App* app, Common& c, bool with_field = true) {
  if (with_field) app->add_option("--field", c.field, "gfP, gfP^N or rational");
  app->add_option("--budget", c.budget, "Instance or evaluation budget (0 = default)");
  app->add_option("--seed", c.seed, "Seed for sampled computations");
  app->add_option("--jobs", c.jobs, "Worker threads (default: BREADTHLAB_JOBS or 1)")->check(CLI::Range(1u, 1024u));
  app->add_option("--json", c.json_path, "Write the JSON report to a file, or stdout without a path")
      ->expected(0, 1)
      ->default_str("");
}

// Prints or saves the report; returns true when JSON went to stdout.
void emit(const Common& c, const CLI::App* app, const json& j, const std::string& text) {
  const bool want_json = app->count("--json") > 0;
  if (want_json && c.json_path && !c.json_path->empty()) {
    write_json_file(*c.json_path, j);
    std::cout << text;
  } else if (want_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

json wrap(const std::string& command, const json& parameters, const Field& f, const json& result,
          std::optional<std::uint64_t> seed, double seconds) {
  CampaignReport r;
  r.command = command;
  r.parameters = parameters;
  r.field = f;
  r.counts.scanned = 1;
  r.counts.passed = 1;
  r.seed = seed;
  r.wall_time_s = seconds;
  r.details = result;
  return report_to_json(r);
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

LieAlgebra make_family(const std::string& name, Field f, const std::string& ideal_path, std::size_t abelian) {
  LieAlgebra l;
  auto index = [&](std::size_t skip) { return static_cast<std::size_t>(std::stoul(name.substr(skip))); };
  if (!ideal_path.empty()) {
    std::size_t g = 0;
    const Subspace s = ideal_from_json(read_json_file(ideal_path), f, g);
    l = free_quotient(s, g);
  } else if (name == "sl2") {
    l = sl2(f);
  } else if (name == "five-dim-3step") {
    l = five_dim_three_step(f);
  } else if (name == "nonabelian2") {
    l = two_dim_nonabelian(f);
  } else if (name.rfind("family", 0) == 0) {
    const std::string tag = name.substr(name.find(':') + 1);
    bool found = false;
    for (const Family& fam : theorem_families(f))
      if (fam.tag == tag) {
        l = fam.algebra;
        found = true;
      }
    if (!found) fail(ErrorKind::InvalidArgument, "no theorem family " + tag + " over " + f.name());
  } else if (name.size() > 1 && name[0] == 'L') {
    l = free_two_step(index(1), f);
  } else if (name.size() > 1 && name[0] == 'H') {
    l = heisenberg(index(1), f);
  } else if (name.size() > 1 && name[0] == 'h') {
    l = heisenberg_degree(index(1), f);
  } else {
    fail(ErrorKind::InvalidArgument, "unknown family " + name);
  }
  return abelian ? direct_sum_abelian(l, abelian) : l;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Breadth types, Camina algebras and normal forms of nilpotent Lie algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "breadth-lab 0.1.0");

  Common c;
  int code = kExitPass;

  // breadth
  std::string alg_path;
  bool exact = false;
  std::uint64_t samples = 0;
  auto* breadth_cmd = app.add_subcommand("breadth", "Breadth type of an algebra");
  breadth_cmd->add_option("--alg", alg_path, "Algebra JSON")->required();
  breadth_cmd->add_flag("--exact", exact, "Fail instead of sampling when the scan exceeds the budget");
  breadth_cmd->add_option("--sample", samples, "Force sampling with N elements");
  add_common(breadth_cmd, c, false);

  // make
  std::string family, out_path, ideal_path;
  std::size_t abelian = 0;
  auto* make_cmd = app.add_subcommand("make", "Write a named family as algebra JSON");
  make_cmd->add_option("--family", family, "L<m>, H<m>, h<m>, sl2, five-dim-3step, nonabelian2, family:(iii)");
  make_cmd->add_option("--ideal", ideal_path, "Ideal JSON; writes the free quotient");
  make_cmd->add_option("--abelian", abelian, "Append an abelian summand of this dimension");
  make_cmd->add_option("--out", out_path, "Output file (stdout if omitted)");
  add_common(make_cmd, c);

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Recognise a four-generated class-2 algebra");
  classify_cmd->add_option("--alg", alg_path, "Algebra JSON")->required();
  add_common(classify_cmd, c, false);

  // camina
  auto* camina_cmd = app.add_subcommand("camina", "Camina test");
  camina_cmd->add_option("--alg", alg_path, "Algebra JSON")->required();
  add_common(camina_cmd, c, false);

  // sks-search
  std::size_t n = 4;
  bool fix_first = false;
  auto* sks_cmd = app.add_subcommand("sks-search", "Largest subspace of invertible skew matrices");
  sks_cmd->add_option("--n", n, "Matrix size");
  sks_cmd->add_flag("--fix-first", fix_first, "Assume the standard form lies in the subspace");
  add_common(sks_cmd, c);

  // correspond
  std::uint32_t p = 3;
  std::size_t m = 2;
  bool all_subgroups = false;
  auto* corr_cmd = app.add_subcommand("correspond", "Conjugate type against breadth type");
  corr_cmd->add_option("--p", p, "Odd prime");
  corr_cmd->add_option("--m", m, "The group has m+1 generators");
  auto* all_opt = corr_cmd->add_flag("--all-central-subgroups", all_subgroups, "Every central subgroup");
  corr_cmd->add_option("--ideal", ideal_path, "Ideal JSON for N")->excludes(all_opt);
  add_common(corr_cmd, c, false);

  // verify
  std::string theorem;
  CampaignOptions copts;
  bool field_given = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run a theorem verification campaign");
  verify_cmd
      ->add_option("theorem", theorem, "t01, t02, t03-odd, t03-even, camina-bound, correspondence, rational-camina")
      ->required();
  verify_cmd->add_option("--n", copts.n, "Matrix size for camina-bound");
  verify_cmd->add_option("--samples", copts.samples, "Random quotients per generator count (t01, t02)");
  verify_cmd->add_option("--triples", copts.triples, "Random triples per m (correspondence)");
  add_common(verify_cmd, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (*breadth_cmd) {
      const LieAlgebra l = algebra_from_json(read_json_file(alg_path));
      BreadthOptions opts;
      if (c.budget) opts.budget = c.budget;
      opts.seed = c.seed;
      opts.allow_sampling = !exact;
      if (samples) {
        opts.force_sampling = true;
        opts.samples = samples;
      }
      const BreadthType t = breadth_type(l, opts);
      const json params = {{"alg", alg_path}, {"budget", c.budget}, {"exact", exact}, {"sample", samples}};
      emit(
          c, breadth_cmd,
          wrap("breadth", params, l.field(), {{"breadth_type", breadth_type_to_json(t)}, {"dim", l.dim()}}, t.seed,
               since(t0)),
          "breadth type " + to_string(t) + (t.exact ? "" : " (observed, seed " + std::to_string(*t.seed) + ")") + "\n");
    } else if (*make_cmd) {
      if (family.empty() && ideal_path.empty()) fail(ErrorKind::InvalidArgument, "give --family or --ideal");
      const LieAlgebra l = make_family(family, parse_field_name(c.field), ideal_path, abelian);
      const json j = algebra_to_json(l);
      if (out_path.empty())
        std::cout << j.dump(2) << "\n";
      else
        write_json_file(out_path, j);
    } else if (*classify_cmd) {
      const LieAlgebra l = algebra_from_json(read_json_file(alg_path));
      const Classification cl = classify_4gen_2step(l);
      if (cl.family == "none") code = kExitMath;
      emit(c, classify_cmd,
           wrap("classify", {{"alg", alg_path}}, l.field(), classification_to_json(cl), std::nullopt, since(t0)),
           "family " + cl.family + " (" + cl.kind + ")\n");
    } else if (*camina_cmd) {
      const LieAlgebra l = algebra_from_json(read_json_file(alg_path));
      json result = json::object();
      std::string text;
      bool camina = true;
      if (l.field().is_finite()) {
        const CaminaResult r = c.budget ? is_camina(l, c.budget) : is_camina(l);
        camina = r.camina;
        result["camina"] = r.camina;
        result["scanned"] = r.scanned;
        if (r.witness) result["witness"] = vector_to_json(*r.witness);
      }
      try {
        const StructureCaminaResult s = camina_via_structure_matrices(l);
        result["structure_matrices"] = {{"camina", s.camina}, {"method", s.method}, {"scanned", s.scanned}};
        if (!l.field().is_finite()) {
          camina = s.camina;
          result["camina"] = s.camina;
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::HypothesisViolated) throw;
        if (!l.field().is_finite()) throw;
        result["structure_matrices"] = {{"skipped", e.what()}};
      }
      emit(c, camina_cmd,
           wrap("camina", {{"alg", alg_path}, {"budget", c.budget}}, l.field(), result, std::nullopt, since(t0)),
           std::string(camina ? "Camina" : "not Camina") + "\n");
    } else if (*sks_cmd) {
      const Field f = parse_field_name(c.field);
      SksOptions so;
      if (c.budget) so.budget = c.budget;
      so.fix_first = fix_first;
      SksSearchResult best;
      SksSearchResult r;
      bool partial = false;
      try {
        r = max_sks_rank_subspace(n, f, so, &best);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        r = best;
        r.exhaustive = false;
        partial = true;
        code = kExitBudget;
      }
      const json result = {{"k_sks", r.k_sks},           {"exhaustive", r.exhaustive},
                           {"nodes", r.nodes},           {"tests", r.tests},
                           {"budget_exceeded", partial}, {"certificate", certificate_to_json(r.certificate)}};
      emit(c, sks_cmd,
           wrap("sks-search", {{"n", n}, {"budget", c.budget}, {"fix_first", fix_first}}, f, result, std::nullopt,
                since(t0)),
           "k_sks(" + std::to_string(n) + ") over " + f.name() + (partial ? " >= " : " = ") + std::to_string(r.k_sks) +
               "\n");
    } else if (*corr_cmd) {
      const ClassTwoGroup g(p, m);
      const Field f = g.field();
      std::vector<Subspace> subs;
      if (all_subgroups) {
        for (std::size_t d = 0; d <= g.center_dim(); ++d) {
          SubspaceEnumerator en(f, g.center_dim(), d);
          Subspace s;
          while (en.next(s)) subs.push_back(s);
        }
      } else if (!ideal_path.empty()) {
        std::size_t gens = 0;
        subs.push_back(ideal_from_json(read_json_file(ideal_path), f, gens));
        if (gens != g.generators()) fail(ErrorKind::DimensionMismatch, "ideal does not match m+1 generators");
      } else {
        subs.emplace_back(f, g.center_dim());
      }
      json list = json::array();
      std::string text;
      std::uint64_t bad = 0;
      for (const auto& s : subs) {
        const CorrespondenceCheck chk = c.budget ? verify_correspondence(g, s, c.budget) : verify_correspondence(g, s);
        if (!chk.ok) ++bad;
        list.push_back({{"ideal", ideal_to_json(s, g.generators())},
                        {"conjugate_type", conjugate_type_to_json(chk.conjugate)},
                        {"breadth_type", breadth_type_to_json(chk.breadth)},
                        {"ok", chk.ok}});
        text += to_string(chk.conjugate, p) + " <-> " + to_string(chk.breadth) + (chk.ok ? "" : "  MISMATCH") + "\n";
      }
      if (bad) code = kExitMath;
      CampaignReport r;
      r.command = "correspond";
      r.parameters = {{"p", p}, {"m", m}, {"all_central_subgroups", all_subgroups}, {"ideal", ideal_path}};
      r.field = f;
      r.counts.scanned = subs.size();
      r.counts.failed = bad;
      r.counts.passed = subs.size() - bad;
      r.wall_time_s = since(t0);
      r.details = {{"subgroups", list}};
      emit(c, corr_cmd, report_to_json(r), text);
    } else if (*verify_cmd) {
      copts.field = parse_field_name(c.field);
      field_given = verify_cmd->count("--field") > 0;
      if (!field_given) copts.field.reset();
      copts.budget = c.budget;
      copts.seed = c.seed;
      copts.jobs = c.jobs;
      const CampaignReport r = run_campaign(theorem, copts);
      code = r.exit_code();
      const std::string text = r.command + " over " + r.field.name() + ": " + std::to_string(r.counts.passed) + "/" +
                               std::to_string(r.counts.scanned) + " passed, " + std::to_string(r.counts.failed) +
                               " failed" + (r.budget_exceeded ? ", budget exhausted" : "") + "\n";
      emit(c, verify_cmd, report_to_json(r), text);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::BudgetExceeded:
        return kExitBudget;
      case ErrorKind::Parse:
      case ErrorKind::InvalidArgument:
      case ErrorKind::InvalidField:
      case ErrorKind::UnsupportedField:
      case ErrorKind::UnknownTheorem:
      case ErrorKind::DimensionMismatch:
      case ErrorKind::NotFourGenerated:
      case ErrorKind::NotClassTwo:
      case ErrorKind::EvenPrime:
      case ErrorKind::HypothesisViolated:
        return kExitUsage;
      default:
        return kExitMath;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return code;
}
