#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "g2cm/cm.hpp"
#include "g2cm/group.hpp"
#include "g2cm/jacobian.hpp"

namespace g2cm {

using json = nlohmann::json;

/// Outcome of one named check inside a report.
struct VerdictRecord {
  u64 ell = 0;
  std::string check;
  bool hypotheses_met = false;
  bool conclusion_holds = true;
  std::string detail;
  std::optional<TheoremVerdict> theorem;

  bool failed() const noexcept { return hypotheses_met && !conclusion_holds; }
};

struct AnalysisReport {
  std::string kind;  // "curve" or "cm"
  json input;
  u64 seed = 0;
  u64 p = 0;
  WeilPoly weil;
  /// #C(F_p), #C(F_{p^2}) for curve reports.
  std::optional<std::array<u64, 2>> point_counts;
  u64 order = 0;
  Factorization factorization;
  std::optional<GroupStructure> structure;
  std::optional<u64> enumerated_order;
  std::vector<SylowReport> sylow;
  std::vector<EmbeddingDegreeReport> embedding;
  std::vector<VerdictRecord> verdicts;
  std::optional<i64> q_bound;
  std::optional<std::string> primitivity;
  std::vector<std::string> flags;
  std::vector<std::string> notes;

  /// True when some check had its hypotheses met but its conclusion failed.
  bool has_failure() const noexcept;
};

json to_json(const AnalysisReport& r);
json to_json(const Divisor& d);
/// One line of UTF-8 JSON, no trailing newline.
std::string to_json_line(const AnalysisReport& r);

AnalysisReport analyze_cm_instance(const CMField& field, const FrobeniusElement& w, u64 seed = 0);

struct CurveAnalysisOptions {
  std::vector<u64> ells;  // empty: every prime dividing the order except p
  u64 enum_bound = kDefaultEnumerationBound;
  u64 count_bound = kDefaultCountBound;
  u64 seed = 0;
};

AnalysisReport analyze_curve(u64 p, const std::vector<i64>& f, const CurveAnalysisOptions& opts = {});

struct SweepConfig {
  i64 D_max = 0;
  i64 ab_max = 0;
  i64 c_max = 0;
  u64 p_max = 0;
  u64 seed = 0;
  unsigned threads = 1;

  /// Throws InvalidArgument on negative bounds or p_max > 2^31.
  void validate() const;
};

struct CMInstance {
  CMField field;
  FrobeniusElement w;
  u64 p = 0;
  u64 seed = 0;
};

struct SweepCounters {
  u64 fields_considered = 0;
  u64 fields_rejected = 0;
  u64 tuples_considered = 0;
  u64 irrational_norm = 0;
  u64 composite_norm = 0;
  u64 even_norm = 0;
  u64 above_p_max = 0;
  u64 weil_rejected = 0;
  u64 emitted = 0;
};

json to_json(const SweepCounters& c);

/// Valid CM instances in the box: D in [2, D_max] squarefree, a in [1, ab_max],
/// b in [-ab_max, ab_max], each c_i in [-c_max, c_max]; ordered by
/// (D, a, b, c1, c2, c3, c4).
std::vector<CMInstance> sweep_cm_params(const SweepConfig& cfg, SweepCounters* counters = nullptr);

/// Analyses every swept instance (in parallel when cfg.threads > 1) and hands
/// the reports to sink in sweep order.
SweepCounters run_sweep(const SweepConfig& cfg, const std::function<void(const AnalysisReport&)>& sink);

struct VerifyParams {
  u64 ell_max = 31;
  u64 curves = 30;
  u64 p_max = 61;
  u64 trials = 2000;
  u64 seed = 1;
  unsigned threads = 1;
};

struct SuiteSummary {
  std::string suite;
  bool passed = false;
  json summary;
};

SuiteSummary verify_ed1(const VerifyParams& params);
SuiteSummary verify_c2(const VerifyParams& params);
SuiteSummary verify_geometric(const VerifyParams& params);
SuiteSummary verify_sylow_gen(const VerifyParams& params);
/// Dispatches on "ed1", "c2", "geometric", "sylow-gen".
SuiteSummary verify_corpus(const std::string& suite, const VerifyParams& params);

/// Random genus-2 curve with p prime in [3, p_max]; mostly degree 5, some
/// degree 6 with a rational root.
Curve random_curve(Rng& rng, u64 p_max, std::vector<i64>* coeffs_out = nullptr);

}  // namespace g2cm
