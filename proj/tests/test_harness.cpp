#include <gtest/gtest.h>

#include "g2cm/harness.hpp"

using namespace g2cm;

namespace {

bool contains(const std::vector<CMInstance>& xs, i64 D, i64 a, i64 b, FrobeniusElement w, u64 p) {
  return std::any_of(xs.begin(), xs.end(), [&](const CMInstance& x) {
    return x.field.D() == D && x.field.a() == a && x.field.b() == b && x.w == w && x.p == p;
  });
}

}  // namespace

TEST(Sweep, ContainsKnownInstances) {
  SweepConfig cfg;
  cfg.D_max = 5;
  cfg.ab_max = 2;
  cfg.c_max = 2;
  cfg.p_max = 100;
  SweepCounters counters;
  const auto xs = sweep_cm_params(cfg, &counters);
  EXPECT_TRUE(contains(xs, 2, 2, 1, {1, -1, 0, 1}, 7));
  EXPECT_TRUE(contains(xs, 5, 2, 1, {-2, 2, 0, 1}, 11));
  EXPECT_EQ(counters.emitted, xs.size());
  for (const auto& x : xs) {
    EXPECT_LE(x.p, 100U);
    EXPECT_TRUE(weil_validate(frobenius_char_poly(x.field, x.w, x.p)));
  }
}

TEST(Sweep, EmptyAndInvalidBounds) {
  SweepConfig cfg;
  EXPECT_TRUE(sweep_cm_params(cfg).empty());
  u64 calls = 0;
  const auto counters = run_sweep(cfg, [&](const AnalysisReport&) { ++calls; });
  EXPECT_EQ(calls, 0U);
  EXPECT_EQ(counters.emitted, 0U);
  cfg.D_max = -1;
  EXPECT_THROW(cfg.validate(), Error);
  cfg.D_max = 3;
  cfg.p_max = (u64{1} << 31) + 1;
  EXPECT_THROW(cfg.validate(), Error);
}

TEST(Sweep, DeterministicAcrossThreadCounts) {
  SweepConfig cfg;
  cfg.D_max = 6;
  cfg.ab_max = 2;
  cfg.c_max = 1;
  cfg.p_max = 200;
  cfg.seed = 9;
  std::string one, many;
  cfg.threads = 1;
  run_sweep(cfg, [&](const AnalysisReport& r) { one += to_json_line(r) + "\n"; });
  cfg.threads = 4;
  run_sweep(cfg, [&](const AnalysisReport& r) { many += to_json_line(r) + "\n"; });
  EXPECT_FALSE(one.empty());
  EXPECT_EQ(one, many);
}

TEST(AnalyzeCM, InstanceA) {
  const auto r = analyze_cm_instance(CMField(2, 2, 1), {1, -1, 0, 1}, 3);
  EXPECT_EQ(r.p, 7U);
  EXPECT_EQ(r.order, 28U);
  EXPECT_EQ(r.factorization, (Factorization{{2, 2}, {7, 1}}));
  for (const auto& v : r.verdicts) EXPECT_NE(v.ell, 7U);
  EXPECT_FALSE(r.has_failure());
  EXPECT_FALSE(r.notes.empty());
  const json j = to_json(r);
  EXPECT_EQ(j["weil_poly"], json({1, -4, 10, -28, 49}));
  EXPECT_EQ(j["order"], 28);
  EXPECT_EQ(j["seed"], 3);
  EXPECT_EQ(j["q_bound"], 2);
  EXPECT_EQ(j["input"]["D"], 2);
}

TEST(AnalyzeCM, InstanceB) {
  const auto r = analyze_cm_instance(CMField(5, 2, 1), {-2, 2, 0, 1});
  EXPECT_EQ(r.p, 11U);
  EXPECT_EQ(r.order, 176U);
  EXPECT_EQ(r.factorization, (Factorization{{2, 4}, {11, 1}}));
  for (const auto& v : r.verdicts) EXPECT_NE(v.ell, 11U);
  EXPECT_EQ(r.weil.at_one(), 176);
  EXPECT_EQ(r.q_bound, 20);
}

TEST(AnalyzeCurve, SmallCurve) {
  const auto r = analyze_curve(7, {1, 0, 0, 0, 0, 1});
  ASSERT_TRUE(r.point_counts.has_value());
  EXPECT_EQ((*r.point_counts)[0], 8U);
  EXPECT_EQ(r.weil.a1, 0);
  EXPECT_EQ(r.order, 50U);
  ASSERT_TRUE(r.enumerated_order.has_value());
  EXPECT_EQ(*r.enumerated_order, 50U);
  ASSERT_TRUE(r.structure.has_value());
  EXPECT_TRUE(r.structure->n2_divides(6));
  EXPECT_FALSE(r.has_failure());
}

TEST(AnalyzeCurve, BeyondEnumerationBound) {
  CurveAnalysisOptions opts;
  opts.enum_bound = 5;
  opts.ells = {3, 5};
  const auto r = analyze_curve(101, {1, 0, 0, 0, 0, 1}, opts);
  EXPECT_FALSE(r.structure.has_value());
  EXPECT_FALSE(r.enumerated_order.has_value());
  EXPECT_EQ(r.embedding.size(), 2U);
}

TEST(AnalyzeCurve, Errors) {
  try {
    (void)analyze_curve(7, {0, 0, 0, 0, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotSquarefree);
  }
}

TEST(Verify, SmallSuitesPass) {
  VerifyParams vp;
  vp.ell_max = 7;
  vp.curves = 6;
  vp.p_max = 23;
  vp.trials = 400;
  for (const char* s : {"ed1", "c2", "geometric"}) {
    const auto sum = verify_corpus(s, vp);
    EXPECT_TRUE(sum.passed) << s << " " << sum.summary.dump();
  }
  EXPECT_THROW(verify_corpus("bogus", vp), Error);
}

TEST(Json, ReportIsStable) {
  const auto a = to_json_line(analyze_curve(13, {1, 2, 0, 3, 0, 1}));
  const auto b = to_json_line(analyze_curve(13, {1, 2, 0, 3, 0, 1}));
  EXPECT_EQ(a, b);
  const json j = json::parse(a);
  EXPECT_EQ(j["weil_poly"], json({1, 2, 22, 26, 169}));
  EXPECT_EQ(j["order"], 220);
  EXPECT_EQ(j["point_counts"], json({16, 210}));
}
