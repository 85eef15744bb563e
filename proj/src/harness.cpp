#include "g2cm/harness.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "g2cm/error.hpp"

namespace g2cm {
namespace {

constexpr double kSylowRateTolerance = 0.05;
constexpr size_t kSylowInstances = 4;

/// (X - 1)^2 | P mod ell, for any prime ell including 2.
bool square_divides_mod(const WeilPoly& poly, u64 ell) {
  const IntPoly r = remainder_mod_sq(poly);
  const auto L = static_cast<i128>(ell);
  return r.coeff(0) % L == 0 && r.coeff(1) % L == 0;
}

i64 mod_floor(i64 x, i64 m) { return ((x % m) + m) % m; }

/// Runs fn(i) for i in [0, n) on up to `threads` workers; rethrows the first
/// exception after all workers finish.
template <typename Fn>
void parallel_for(size_t n, unsigned threads, Fn&& fn) {
  const unsigned workers = static_cast<unsigned>(std::min<size_t>(std::max(1U, threads), n));
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<u64> odd_primes_up_to(u64 bound) {
  std::vector<u64> out;
  for (u64 q = 3; q <= bound; q += 2) {
    if (is_prime(q)) out.push_back(q);
  }
  return out;
}

u64 ipow(u64 base, unsigned e) {
  u64 r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

AnalysisReport analyze_cm_instance(const CMField& field, const FrobeniusElement& w, u64 seed) {
  AnalysisReport r;
  r.kind = "cm";
  r.input = {{"D", field.D()}, {"a", field.a()}, {"b", field.b()}, {"c", {w.c1, w.c2, w.c3, w.c4}}};
  r.seed = seed;
  r.p = frobenius_norm(field, w);
  r.weil = frobenius_char_poly(field, w, r.p);
  if (r.weil != frobenius_char_poly_from_trace_norm(field, w, r.p)) {
    throw Error(Errc::InvalidArgument, "branch formula and trace/norm derivation disagree");
  }
  r.order = static_cast<u64>(r.weil.at_one());
  r.factorization = factorize(r.order, seed);
  const i64 q = q_bound(field);
  r.q_bound = q;
  const Primitivity prim = primitivity_screen(field);
  r.primitivity = std::string(to_string(prim));
  r.flags.emplace_back("class-number-h(K0)=1-unverified");
  if (prim == Primitivity::BiquadraticSuspect) r.flags.emplace_back("biquadratic-suspect");

  const i64 c1_or_c = field.branch() == DBranch::D23 ? w.c1 : 2 * w.c1 + w.c2;
  bool any_odd = false;
  for (const auto& [ell, e] : r.factorization) {
    if (ell == r.p) {
      r.notes.push_back("ell = " + std::to_string(ell) + " equals p and is excluded");
      continue;
    }
    r.embedding.push_back(embedding_degree(r.p, ell));
    if (ell == 2) {
      r.verdicts.push_back({2, "ed1", true, r.p % 2 == 1, "ell = 2: p = 1 mod 2 trivially", std::nullopt});
      continue;
    }
    any_odd = true;
    const auto L = static_cast<i64>(ell);
    const bool ell_divides_c2 = w.c2 % L == 0;
    if (ell_divides_c2) {
      const TheoremVerdict tv = theorem_c2_check(w.c1, static_cast<i64>(r.p), ell);
      r.verdicts.push_back({ell, "c2", tv.hypotheses_met, tv.conclusion_holds, tv.detail, tv});
    } else {
      const TheoremVerdict tv =
          theorem_ed1_check(field.branch(), c1_or_c, w.c2, field.D(), static_cast<i64>(r.p), ell);
      r.verdicts.push_back({ell, "ed1", tv.hypotheses_met, tv.conclusion_holds, tv.detail, tv});
    }
    if (!ell_divides_c2 && L > q) {
      const bool p_is_one = r.p % ell == 1;
      r.verdicts.push_back({ell, "large-ell-prediction", true, true,
                            p_is_one ? "predicted: rank two with p = 1 mod ell, or cyclic"
                                     : "predicted: cyclic ell-Sylow subgroup",
                            std::nullopt});
    }
  }
  if (!any_odd) r.notes.emplace_back("no applicable odd ell divides the order");
  return r;
}

AnalysisReport analyze_curve(u64 p, const std::vector<i64>& f, const CurveAnalysisOptions& opts) {
  const Curve c(p, f);
  AnalysisReport r;
  r.kind = "curve";
  r.input = {{"p", p}, {"f", f}, {"ell", opts.ells}, {"enum_bound", opts.enum_bound}};
  r.seed = opts.seed;
  r.p = p;
  const u64 n1 = count_points(c, 1, opts.count_bound);
  const u64 n2 = count_points(c, 2, opts.count_bound);
  r.point_counts = std::array<u64, 2>{n1, n2};
  r.weil = char_poly_from_counts(n1, n2, p);
  r.order = static_cast<u64>(r.weil.at_one());
  r.factorization = factorize(r.order, opts.seed);
  if (c.moved_root()) r.notes.push_back("degree-6 model; root " + std::to_string(*c.moved_root()) + " moved to infinity");

  if (p <= opts.enum_bound) {
    const TorsionProfile profile = torsion_profile(c, opts.enum_bound);
    r.enumerated_order = profile.order;
    r.verdicts.push_back({0, "dual-path-order", true, profile.order == r.order,
                          "enumerated " + std::to_string(profile.order) + " vs P(1) = " + std::to_string(r.order),
                          std::nullopt});
    const GroupStructure s = structure_from_profile(profile);
    r.structure = s;
    r.verdicts.push_back({0, "structure", true, s.divisibility_chain_holds() && s.n2_divides(p - 1),
                          "n1 | n2 | n3 | n4 and n2 | p - 1", std::nullopt});
    for (const auto& pr : profile.primes) {
      const SylowReport sr = sylow_from_profile(profile, pr.ell);
      r.sylow.push_back(sr);
      if (pr.ell == p) continue;
      r.verdicts.push_back({pr.ell, "noncyclic-implies-square-factor", sr.rank >= 2, square_divides_mod(r.weil, pr.ell),
                            "rank " + std::to_string(sr.rank) + "; (X-1)^2 | P mod ell", std::nullopt});
      r.verdicts.push_back({pr.ell, "rank4-implies-p-one", sr.rank == 4, p % pr.ell == 1,
                            "full ell-torsion rational forces p = 1 mod ell", std::nullopt});
      if (sr.rank >= 2 && p % pr.ell != 1) {
        r.flags.push_back("cm-hypothesis-presumably-violated:ell=" + std::to_string(pr.ell));
      }
    }
  } else {
    r.notes.emplace_back("p above the enumeration bound; structure omitted");
  }

  if (opts.ells.empty()) {
    for (const auto& [ell, e] : r.factorization) {
      if (ell != p) r.embedding.push_back(embedding_degree(p, ell));
    }
  } else {
    for (u64 ell : opts.ells) r.embedding.push_back(embedding_degree(p, ell));
  }
  return r;
}

void SweepConfig::validate() const {
  if (D_max < 0 || ab_max < 0 || c_max < 0) throw Error(Errc::InvalidArgument, "sweep bounds must be non-negative");
  if (p_max > (u64{1} << 31)) throw Error(Errc::InvalidArgument, "p-max must not exceed 2^31");
}

std::vector<CMInstance> sweep_cm_params(const SweepConfig& cfg, SweepCounters* counters) {
  cfg.validate();
  SweepCounters local;
  SweepCounters& k = counters ? *counters : local;
  std::vector<CMInstance> out;
  for (i64 D = 2; D <= cfg.D_max; ++D) {
    for (i64 a = 1; a <= cfg.ab_max; ++a) {
      for (i64 b = -cfg.ab_max; b <= cfg.ab_max; ++b) {
        ++k.fields_considered;
        std::optional<CMField> field;
        try {
          field.emplace(D, a, b);
        } catch (const Error&) {
          ++k.fields_rejected;
          continue;
        }
        const i64 m = cfg.c_max;
        for (i64 c1 = -m; c1 <= m; ++c1) {
          for (i64 c2 = -m; c2 <= m; ++c2) {
            for (i64 c3 = -m; c3 <= m; ++c3) {
              for (i64 c4 = -m; c4 <= m; ++c4) {
                ++k.tuples_considered;
                const FrobeniusElement w{c1, c2, c3, c4};
                u64 p = 0;
                try {
                  p = frobenius_norm(*field, w);
                } catch (const Error& e) {
                  if (e.code() == Errc::IrrationalNorm) ++k.irrational_norm;
                  else if (e.code() == Errc::EvenNorm) ++k.even_norm;
                  else ++k.composite_norm;
                  continue;
                }
                if (p > cfg.p_max) {
                  ++k.above_p_max;
                  continue;
                }
                try {
                  (void)frobenius_char_poly(*field, w, p);
                } catch (const Error&) {
                  ++k.weil_rejected;
                  continue;
                }
                u64 h = mix64(cfg.seed);
                for (i64 v : {D, a, b, c1, c2, c3, c4}) h = mix64(h ^ static_cast<u64>(v));
                out.push_back({*field, w, p, h});
                ++k.emitted;
              }
            }
          }
        }
      }
    }
  }
  return out;
}

SweepCounters run_sweep(const SweepConfig& cfg, const std::function<void(const AnalysisReport&)>& sink) {
  SweepCounters counters;
  const auto instances = sweep_cm_params(cfg, &counters);
  std::vector<AnalysisReport> reports(instances.size());
  parallel_for(instances.size(), cfg.threads, [&](size_t i) {
    reports[i] = analyze_cm_instance(instances[i].field, instances[i].w, instances[i].seed);
  });
  for (const auto& r : reports) sink(r);
  return counters;
}

SuiteSummary verify_ed1(const VerifyParams& params) {
  const auto ells = odd_primes_up_to(params.ell_max);
  struct Row {
    u64 ell;
    DBranch branch;
    u64 tuples = 0, witnesses = 0, counterexamples = 0;
  };
  std::vector<Row> rows;
  for (u64 ell : ells) {
    for (DBranch b : {DBranch::D23, DBranch::D1}) rows.push_back({ell, b});
  }
  parallel_for(rows.size(), params.threads, [&](size_t i) {
    Row& row = rows[i];
    const auto L = static_cast<i64>(row.ell);
    for (i64 c = 0; c < L; ++c) {
      for (i64 c2 = 1; c2 < L; ++c2) {
        for (i64 D = 1; D < L; ++D) {
          for (i64 p = 1; p < L; ++p) {
            const TheoremVerdict v = theorem_ed1_check(row.branch, c, c2, D, p, row.ell);
            ++row.tuples;
            if (v.hypotheses_met) ++row.witnesses;
            if (v.counterexample()) ++row.counterexamples;
          }
        }
      }
    }
  });
  SuiteSummary out{"ed1", true, {}};
  json per = json::array();
  u64 total_cex = 0;
  for (const auto& row : rows) {
    per.push_back({{"ell", row.ell},
                   {"branch", to_string(row.branch)},
                   {"tuples", row.tuples},
                   {"witnesses", row.witnesses},
                   {"counterexamples", row.counterexamples}});
    total_cex += row.counterexamples;
    if (row.counterexamples != 0 || row.witnesses == 0) out.passed = false;
  }
  out.summary = {{"suite", "ed1"}, {"ell_max", params.ell_max}, {"counterexamples", total_cex}, {"per_ell", per}};
  return out;
}

SuiteSummary verify_c2(const VerifyParams& params) {
  SuiteSummary out{"c2", true, {}};
  json per = json::array();
  u64 total = 0;
  for (u64 ell : odd_primes_up_to(params.ell_max)) {
    const auto L = static_cast<i64>(ell);
    u64 pairs = 0, violations = 0, vanishing = 0;
    for (i64 c1 = 0; c1 < L; ++c1) {
      for (i64 p = 0; p < L; ++p) {
        const TheoremVerdict v = theorem_c2_check(c1, p, ell);
        ++pairs;
        if (!v.conclusion_holds) ++violations;
        if (mod_floor(1 - 2 * c1 + p, L) == 0) ++vanishing;
      }
    }
    total += violations;
    per.push_back({{"ell", ell}, {"pairs", pairs}, {"violations", violations}, {"p1_vanishing", vanishing}});
  }
  out.passed = total == 0;
  out.summary = {{"suite", "c2"}, {"ell_max", params.ell_max}, {"violations", total}, {"per_ell", per}};
  return out;
}

Curve random_curve(Rng& rng, u64 p_max, std::vector<i64>* coeffs_out) {
  std::vector<u64> primes = odd_primes_up_to(p_max);
  if (primes.empty()) throw Error(Errc::InvalidArgument, "no odd prime up to p-max");
  while (true) {
    const u64 p = primes[uniform_below(rng, primes.size())];
    const int deg = uniform_below(rng, 4) == 0 ? 6 : 5;
    std::vector<i64> f(static_cast<size_t>(deg) + 1);
    for (auto& c : f) c = static_cast<i64>(uniform_below(rng, p));
    f.back() = 1 + static_cast<i64>(uniform_below(rng, p - 1));
    try {
      Curve c(p, f);
      if (coeffs_out) *coeffs_out = f;
      return c;
    } catch (const Error& e) {
      if (e.code() != Errc::NotSquarefree && e.code() != Errc::DegreeSixUnsupported) throw;
    }
  }
}

SuiteSummary verify_geometric(const VerifyParams& params) {
  struct Row {
    u64 p = 0;
    std::vector<i64> f;
    u64 order = 0, enumerated = 0;
    GroupStructure structure;
    bool weil_ok = true, structure_ok = true, torsion_ok = true;
    u64 square_violations = 0, rank4_violations = 0, presumed_cm_violations = 0, noncyclic = 0;
    int max_rank = 0;
  };
  std::vector<Row> rows(params.curves);
  const u64 enum_bound = std::max(params.p_max, kDefaultEnumerationBound);
  parallel_for(rows.size(), params.threads, [&](size_t i) {
    Rng rng(mix64(params.seed + i));
    Row& row = rows[i];
    const Curve c = random_curve(rng, params.p_max, &row.f);
    row.p = c.p();
    const WeilPoly P = weil_poly(c);
    row.weil_ok = weil_validate(P);
    row.order = static_cast<u64>(P.at_one());
    const TorsionProfile profile = torsion_profile(c, enum_bound);
    row.enumerated = profile.order;
    try {
      row.structure = structure_from_profile(profile);
      row.structure_ok = row.structure.divisibility_chain_holds() && row.structure.n2_divides(row.p - 1);
    } catch (const Error&) {
      row.structure_ok = false;
    }
    for (const auto& pr : profile.primes) {
      SylowReport s;
      try {
        s = sylow_from_profile(profile, pr.ell);
      } catch (const Error&) {
        row.torsion_ok = false;
        continue;
      }
      row.max_rank = std::max(row.max_rank, static_cast<int>(s.rank));
      if (pr.ell == row.p) continue;
      if (s.rank >= 2) {
        ++row.noncyclic;
        if (!square_divides_mod(P, pr.ell)) ++row.square_violations;
        if (row.p % pr.ell != 1) ++row.presumed_cm_violations;
      }
      if (s.rank == 4 && row.p % pr.ell != 1) ++row.rank4_violations;
    }
  });
  u64 mismatches = 0, weil_bad = 0, structure_bad = 0, torsion_bad = 0, square_bad = 0, rank4_bad = 0;
  u64 presumed = 0, noncyclic = 0;
  json curves = json::array();
  for (const auto& row : rows) {
    mismatches += row.order != row.enumerated;
    weil_bad += !row.weil_ok;
    structure_bad += !row.structure_ok;
    torsion_bad += !row.torsion_ok;
    square_bad += row.square_violations;
    rank4_bad += row.rank4_violations;
    presumed += row.presumed_cm_violations;
    noncyclic += row.noncyclic;
    curves.push_back({{"p", row.p},
                      {"f", row.f},
                      {"order", row.order},
                      {"enumerated", row.enumerated},
                      {"invariant_factors", row.structure.invariant_factors},
                      {"max_rank", row.max_rank}});
  }
  SuiteSummary out{"geometric", false, {}};
  out.passed = mismatches == 0 && weil_bad == 0 && structure_bad == 0 && torsion_bad == 0 && square_bad == 0 &&
               rank4_bad == 0;
  out.summary = {{"suite", "geometric"},
                 {"curves", params.curves},
                 {"p_max", params.p_max},
                 {"seed", params.seed},
                 {"order_mismatches", mismatches},
                 {"weil_violations", weil_bad},
                 {"structure_violations", structure_bad},
                 {"torsion_violations", torsion_bad},
                 {"square_factor_violations", square_bad},
                 {"rank4_violations", rank4_bad},
                 {"noncyclic_sylow", noncyclic},
                 {"cm_hypothesis_presumably_violated", presumed},
                 {"instances", curves}};
  return out;
}

SuiteSummary verify_sylow_gen(const VerifyParams& params) {
  struct Instance {
    std::vector<i64> f;
    u64 p, ell, order;
    unsigned valuation;
  };
  std::vector<Instance> cyclic;
  std::optional<Instance> noncyclic;
  Rng rng(params.seed);
  const u64 enum_bound = std::max(params.p_max, kDefaultEnumerationBound);
  for (int attempt = 0; attempt < 400 && (cyclic.size() < kSylowInstances || !noncyclic); ++attempt) {
    std::vector<i64> f;
    const Curve c = random_curve(rng, params.p_max, &f);
    const TorsionProfile profile = torsion_profile(c, enum_bound);
    for (const auto& pr : profile.primes) {
      const SylowReport s = sylow_from_profile(profile, pr.ell);
      const Instance inst{f, c.p(), pr.ell, profile.order, pr.valuation};
      if (!s.cyclic) {
        if (!noncyclic) noncyclic = inst;
        continue;
      }
      const bool seen = std::any_of(cyclic.begin(), cyclic.end(), [&](const Instance& x) { return x.ell == pr.ell; });
      if (!seen && cyclic.size() < kSylowInstances) cyclic.push_back(inst);
    }
  }

  SuiteSummary out{"sylow-gen", !cyclic.empty(), {}};
  json rows = json::array();
  for (size_t i = 0; i < cyclic.size(); ++i) {
    const Instance& inst = cyclic[i];
    const Curve c(inst.p, inst.f);
    Rng trial_rng(mix64(params.seed ^ (i + 1)));
    u64 successes = 0, bad_certificates = 0;
    const u64 target = ipow(inst.ell, inst.valuation);
    for (u64 t = 0; t < params.trials; ++t) {
      if (auto g = sylow_trial(c, inst.ell, inst.order, trial_rng)) {
        ++successes;
        if (element_order(c, *g, inst.order) != target) ++bad_certificates;
      }
    }
    const double rate = params.trials ? static_cast<double>(successes) / static_cast<double>(params.trials) : 0.0;
    const double expected = 1.0 - 1.0 / static_cast<double>(inst.ell);
    const bool within = params.trials > 0 && std::abs(rate - expected) <= kSylowRateTolerance;
    const SylowSearchResult search = sylow_generator_search(c, inst.ell, 200, trial_rng, enum_bound);
    const bool search_ok = search.status == SylowSearchResult::Status::Found && search.generator &&
                           has_order_prime_power(c, *search.generator, inst.ell, inst.valuation);
    out.passed = out.passed && within && bad_certificates == 0 && search_ok;
    rows.push_back({{"p", inst.p},
                    {"f", inst.f},
                    {"ell", inst.ell},
                    {"valuation", inst.valuation},
                    {"trials", params.trials},
                    {"successes", successes},
                    {"rate", rate},
                    {"expected", expected},
                    {"within_tolerance", within},
                    {"bad_certificates", bad_certificates},
                    {"search_status", to_string(search.status)},
                    {"search_trials", search.trials}});
  }
  json noncyclic_row = nullptr;
  if (noncyclic) {
    const Curve c(noncyclic->p, noncyclic->f);
    const SylowSearchResult search = sylow_generator_search(c, noncyclic->ell, 200, rng, enum_bound);
    const bool ok = search.status == SylowSearchResult::Status::NotCyclic;
    out.passed = out.passed && ok;
    noncyclic_row = {{"p", noncyclic->p}, {"f", noncyclic->f}, {"ell", noncyclic->ell},
                     {"search_status", to_string(search.status)}};
  }
  out.summary = {{"suite", "sylow-gen"},
                 {"tolerance", kSylowRateTolerance},
                 {"seed", params.seed},
                 {"instances", rows},
                 {"noncyclic_instance", noncyclic_row}};
  return out;
}

SuiteSummary verify_corpus(const std::string& suite, const VerifyParams& params) {
  if (suite == "ed1") return verify_ed1(params);
  if (suite == "c2") return verify_c2(params);
  if (suite == "geometric") return verify_geometric(params);
  if (suite == "sylow-gen") return verify_sylow_gen(params);
  throw Error(Errc::InvalidArgument, "unknown suite '" + suite + "'");
}

}  // namespace g2cm
