#include "g2cm/harness.hpp"

#include <algorithm>

namespace g2cm {
namespace {

json poly_json(const FpPoly& a) { return json(a.coeffs); }

json verdict_json(const VerdictRecord& v) {
  json j{{"ell", v.ell},
         {"check", v.check},
         {"hypotheses_met", v.hypotheses_met},
         {"conclusion_holds", v.conclusion_holds},
         {"detail", v.detail}};
  if (v.theorem) {
    j["remainder_mod_ell"] = {v.theorem->remainder_constant, v.theorem->remainder_linear};
    j["candidate_p"] = v.theorem->candidate_p;
  }
  return j;
}

}  // namespace

bool AnalysisReport::has_failure() const noexcept {
  return std::any_of(verdicts.begin(), verdicts.end(), [](const VerdictRecord& v) { return v.failed(); });
}

json to_json(const Divisor& d) { return json{{"u", poly_json(d.u)}, {"v", poly_json(d.v)}}; }

json to_json(const AnalysisReport& r) {
  json j;
  j["kind"] = r.kind;
  j["input"] = r.input;
  j["seed"] = r.seed;
  j["p"] = r.p;
  json weil = json::array();
  for (i128 c : r.weil.descending()) weil.push_back(static_cast<i64>(c));
  j["weil_poly"] = weil;
  j["point_counts"] = r.point_counts ? json(*r.point_counts) : json(nullptr);
  j["order"] = r.order;
  json fac = json::array();
  for (const auto& [q, e] : r.factorization) fac.push_back({q, e});
  j["factorization"] = fac;
  if (r.structure) {
    j["structure"] = {{"invariant_factors", r.structure->invariant_factors}, {"order", r.structure->order}};
  } else {
    j["structure"] = nullptr;
  }
  j["enumerated_order"] = r.enumerated_order ? json(*r.enumerated_order) : json(nullptr);
  json sylow = json::array();
  for (const auto& s : r.sylow) {
    sylow.push_back({{"ell", s.ell},
                     {"valuation", s.valuation},
                     {"rank", s.rank},
                     {"cyclic", s.cyclic},
                     {"generator", s.generator ? to_json(*s.generator) : json(nullptr)}});
  }
  j["sylow"] = sylow;
  json emb = json::array();
  for (const auto& e : r.embedding) emb.push_back({{"ell", e.ell}, {"k", e.k}});
  j["embedding_degree"] = emb;
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_json(v));
  j["verdicts"] = verdicts;
  j["q_bound"] = r.q_bound ? json(*r.q_bound) : json(nullptr);
  j["primitivity"] = r.primitivity ? json(*r.primitivity) : json(nullptr);
  j["flags"] = r.flags;
  j["notes"] = r.notes;
  return j;
}

std::string to_json_line(const AnalysisReport& r) { return to_json(r).dump(); }

json to_json(const SweepCounters& c) {
  return json{{"fields_considered", c.fields_considered}, {"fields_rejected", c.fields_rejected},
              {"tuples_considered", c.tuples_considered}, {"irrational_norm", c.irrational_norm},
              {"composite_norm", c.composite_norm},       {"even_norm", c.even_norm},
              {"above_p_max", c.above_p_max},             {"weil_rejected", c.weil_rejected},
              {"emitted", c.emitted}};
}

}  // namespace g2cm
