#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "g2cm/harness.hpp"

using namespace g2cm;

namespace {

void emit(std::ostream& os, const json& j) { os << j.dump() << '\n'; }

int analyze_curve_cmd(u64 p, const std::vector<i64>& f, const std::vector<u64>& ells, u64 enum_bound) {
  CurveAnalysisOptions opts;
  opts.ells = ells;
  opts.enum_bound = enum_bound;
  const AnalysisReport r = analyze_curve(p, f, opts);
  std::cout << to_json_line(r) << '\n';
  return r.has_failure() ? 1 : 0;
}

int analyze_cm_cmd(i64 D, i64 a, i64 b, const std::vector<i64>& c, const std::vector<u64>& ells) {
  if (c.size() != 4) throw Error(Errc::InvalidArgument, "--c takes exactly four integers");
  const CMField field(D, a, b);
  AnalysisReport r = analyze_cm_instance(field, {c[0], c[1], c[2], c[3]});
  if (!ells.empty()) {
    const std::set<u64> keep(ells.begin(), ells.end());
    std::erase_if(r.verdicts, [&](const VerdictRecord& v) { return !keep.count(v.ell); });
    std::erase_if(r.embedding, [&](const EmbeddingDegreeReport& e) { return !keep.count(e.ell); });
    for (u64 ell : keep) {
      const bool have = std::any_of(r.embedding.begin(), r.embedding.end(),
                                    [&](const EmbeddingDegreeReport& e) { return e.ell == ell; });
      if (!have && ell != r.p && is_prime(ell)) r.embedding.push_back(embedding_degree(r.p, ell));
    }
    r.input["ell"] = ells;
  }
  std::cout << to_json_line(r) << '\n';
  return r.has_failure() ? 1 : 0;
}

int sweep_cmd(const SweepConfig& cfg, const std::string& out) {
  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    if (!file) throw Error(Errc::InvalidArgument, "cannot open " + out);
  }
  std::ostream& os = out.empty() ? std::cout : file;
  bool failed = false;
  const SweepCounters counters = run_sweep(cfg, [&](const AnalysisReport& r) {
    failed = failed || r.has_failure();
    os << to_json_line(r) << '\n';
  });
  emit(std::cerr, {{"kind", "sweep-summary"}, {"counters", to_json(counters)}});
  return failed ? 1 : 0;
}

int verify_cmd(const std::string& suite, const VerifyParams& vp) {
  const SuiteSummary s = verify_corpus(suite, vp);
  emit(std::cout, {{"kind", "verify"}, {"suite", s.suite}, {"passed", s.passed}, {"summary", s.summary}});
  return s.passed ? 0 : 1;
}

int sylow_gen_cmd(u64 p, const std::vector<i64>& f, u64 ell, u64 max_trials, u64 seed) {
  const Curve c(p, f);
  Rng rng(seed);
  const SylowSearchResult r = sylow_generator_search(c, ell, max_trials, rng);
  json j = {{"kind", "sylow-gen"},
            {"input", {{"p", p}, {"f", f}, {"ell", ell}, {"max_trials", max_trials}}},
            {"seed", seed},
            {"status", to_string(r.status)},
            {"valuation", r.valuation},
            {"trials", r.trials},
            {"generator", r.generator ? to_json(*r.generator) : json(nullptr)}};
  emit(std::cout, j);
  return r.status == SylowSearchResult::Status::Found ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus-2 Jacobian and quartic CM analysis"};
  app.require_subcommand(1);

  u64 p = 0, ell_one = 0, enum_bound = kDefaultEnumerationBound, max_trials = 10000, seed = 0;
  std::vector<i64> f, c;
  std::vector<u64> ells;
  i64 D = 0, a = 0, b = 0;

  auto* ac = app.add_subcommand("analyze-curve", "Count points, build P(X) and analyse the group of a curve y^2 = f(x)");
  ac->add_option("--p", p, "Odd prime")->required();
  ac->add_option("--f", f, "Coefficients of f, lowest degree first")->required()->delimiter(',');
  ac->add_option("--ell", ells, "Primes to report on")->delimiter(',');
  ac->add_option("--enum-bound", enum_bound, "Largest p for full enumeration");

  auto* cm = app.add_subcommand("analyze-cm", "Analyse a CM parameter tuple");
  cm->add_option("--D", D)->required();
  cm->add_option("--a", a)->required();
  cm->add_option("--b", b)->required();
  cm->add_option("--c", c, "c1,c2,c3,c4")->required()->delimiter(',')->expected(4);
  cm->add_option("--ell", ells, "Restrict verdicts to these primes")->delimiter(',');

  SweepConfig cfg;
  std::string out;
  auto* sw = app.add_subcommand("sweep", "Enumerate CM tuples with prime norm and analyse each");
  sw->add_option("--D-max", cfg.D_max)->required();
  sw->add_option("--ab-max", cfg.ab_max)->required();
  sw->add_option("--c-max", cfg.c_max)->required();
  sw->add_option("--p-max", cfg.p_max)->required();
  sw->add_option("--out", out, "Write records here instead of stdout");
  sw->add_option("--threads", cfg.threads)->check(CLI::PositiveNumber);
  sw->add_option("--seed", cfg.seed);

  VerifyParams vp;
  std::string suite;
  auto* vf = app.add_subcommand("verify", "Run a verification suite");
  vf->add_option("--suite", suite)->required()->check(CLI::IsMember({"ed1", "c2", "geometric", "sylow-gen"}));
  vf->add_option("--ell-max", vp.ell_max);
  vf->add_option("--curves", vp.curves);
  vf->add_option("--p-max", vp.p_max);
  vf->add_option("--trials", vp.trials);
  vf->add_option("--seed", vp.seed);

  auto* sg = app.add_subcommand("sylow-gen", "Search for a generator of a cyclic Sylow subgroup");
  sg->add_option("--p", p)->required();
  sg->add_option("--f", f)->required()->delimiter(',');
  sg->add_option("--ell", ell_one)->required();
  sg->add_option("--max-trials", max_trials);
  sg->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (ac->parsed()) return analyze_curve_cmd(p, f, ells, enum_bound);
    if (cm->parsed()) return analyze_cm_cmd(D, a, b, c, ells);
    if (sw->parsed()) {
      cfg.validate();
      return sweep_cmd(cfg, out);
    }
    if (vf->parsed()) return verify_cmd(suite, vp);
    if (sg->parsed()) return sylow_gen_cmd(p, f, ell_one, max_trials, seed);
  } catch (const Error& e) {
    emit(std::cerr, {{"error", errc_name(e.code())}, {"message", e.what()}});
    return 2;
  }
  return 2;
}
