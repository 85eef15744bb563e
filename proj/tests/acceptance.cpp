// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "g2cm/harness.hpp"
#include "support/oracles.hpp"

using namespace g2cm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void run(int id, const char* name, double time_limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit_s > 0 && secs > time_limit_s) {
    o.pass = false;
    o.detail += " (over time limit)";
  }
  if (!o.pass) ++failures;
  std::printf("criterion %2d %-22s %s  %s [%.2fs]\n", id, name, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
  std::fflush(stdout);
}

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// P(1) from point counts taken by listing points, no library counting.
i64 oracle_order(const std::vector<i64>& f, u64 p) {
  const auto P = static_cast<i64>(p);
  const i64 n1 = static_cast<i64>(oracle::count_points_fp(f, P));
  const i64 n2 = static_cast<i64>(oracle::count_points_fp2(f, P));
  const i64 a1 = P + 1 - n1;
  const i64 a2 = (n2 - P * P - 1 + a1 * a1) / 2;
  return 1 - a1 + a2 - P * a1 + P * P;
}

// Largest distance between a root modulus and sqrt(p).
double worst_modulus_error(const WeilPoly& w) {
  const auto d = w.descending();
  std::vector<long double> lo;
  for (int i = 4; i >= 0; --i) lo.push_back(static_cast<long double>(d[static_cast<size_t>(i)]));
  double worst = 0;
  const long double s = std::sqrt(static_cast<long double>(w.p));
  for (const auto& z : oracle::roots(lo)) worst = std::max(worst, static_cast<double>(std::abs(std::abs(z) - s)));
  return worst;
}

std::vector<u64> odd_primes_upto(u64 n) {
  std::vector<u64> out;
  for (u64 q = 3; q <= n; q += 2) {
    if (oracle::is_prime_naive(q)) out.push_back(q);
  }
  return out;
}

Outcome group_law() {
  Rng rng(101);
  u64 triples = 0, bad = 0;
  for (int i = 0; i < 25; ++i) {
    const Curve c = random_curve(rng, 97);
    for (int t = 0; t < 400; ++t, ++triples) {
      const Divisor a = random_divisor(c, rng), b = random_divisor(c, rng), d = random_divisor(c, rng);
      const bool ok = cantor_add(c, cantor_add(c, a, b), d) == cantor_add(c, a, cantor_add(c, b, d)) &&
                      cantor_add(c, a, b) == cantor_add(c, b, a) && cantor_add(c, a, c.identity()) == a &&
                      cantor_add(c, a, neg(c, a)).is_identity();
      bad += !ok;
    }
  }
  return {bad == 0, fmt("%llu triples on 25 curves, %llu violations", (unsigned long long)triples, (unsigned long long)bad)};
}

Outcome dual_path() {
  Rng rng(202);
  u64 mismatches = 0;
  for (int i = 0; i < 30; ++i) {
    std::vector<i64> f;
    const Curve c = random_curve(rng, 61, &f);
    const u64 n = enumerate_jacobian(c).size();
    const i128 from_counts = weil_poly(c).at_one();
    if (static_cast<i128>(n) != from_counts || static_cast<i64>(n) != oracle_order(f, c.p())) ++mismatches;
  }
  return {mismatches == 0, fmt("30 curves, %llu order mismatches", (unsigned long long)mismatches)};
}

Outcome structure() {
  Rng rng(303);
  u64 violations = 0, curves = 0;
  for (int i = 0; i < 30; ++i, ++curves) {
    const Curve c = random_curve(rng, 61);
    const auto elems = enumerate_jacobian(c);
    const auto prof = torsion_profile(c);
    const GroupStructure s = structure_from_profile(prof);
    bool ok = s.divisibility_chain_holds() && s.n2_divides(c.p() - 1) && s.order == elems.size() && s.rank() <= 4;
    for (const auto& q : prof.primes) {
      u64 x = q.killed.size() > 1 ? q.killed[1] : 1;
      unsigned r = 0;
      while (x % q.ell == 0) x /= q.ell, ++r;
      ok = ok && x == 1 && r <= 4;
    }
    // Killed-by-d counts must match the invariant factors for every d | N.
    for (u64 d = 1; d <= s.order && ok; ++d) {
      if (s.order % d) continue;
      u64 killed = 0;
      for (const auto& e : elems) killed += scalar_mul(c, static_cast<i64>(d), e).is_identity();
      u64 expect = 1;
      for (u64 ni : s.invariant_factors) expect *= std::gcd(d, ni);
      ok = killed == expect;
    }
    violations += !ok;
  }
  return {violations == 0, fmt("%llu curves, %llu violations", (unsigned long long)curves, (unsigned long long)violations)};
}

Outcome ed1() {
  u64 counterexamples = 0, disagreements = 0, min_witness = ~u64{0};
  for (u64 ell : odd_primes_upto(31)) {
    const auto L = static_cast<i64>(ell);
    for (DBranch br : {DBranch::D23, DBranch::D1}) {
      u64 witnesses = 0;
      for (i64 c = 0; c < L; ++c)
        for (i64 c2 = 1; c2 < L; ++c2)
          for (i64 D = 1; D < L; ++D)
            for (i64 p = 1; p < L; ++p) {
              const auto v = theorem_ed1_check(br, c, c2, D, p, ell);
              const i64 a1 = br == DBranch::D23 ? 4 * c : 2 * c;
              const i64 a2 = br == DBranch::D23 ? 2 * p + 4 * (c * c - c2 * c2 * D) : 2 * p + c * c - c2 * c2 * D;
              // (X - 1)^2 | P iff P(1) = P'(1) = 0.
              const bool hyp = oracle::mod(1 - a1 + a2 - p * a1 + p * p, L) == 0 &&
                               oracle::mod(4 - 3 * a1 + 2 * a2 - p * a1, L) == 0;
              disagreements += hyp != v.hypotheses_met;
              if (hyp) {
                ++witnesses;
                counterexamples += p != 1;
              }
              counterexamples += v.counterexample();
            }
      min_witness = std::min(min_witness, witnesses);
    }
  }
  return {counterexamples == 0 && disagreements == 0 && min_witness > 0,
          fmt("ell 3..31, both branches: %llu counterexamples, %llu predicate disagreements, min witnesses %llu",
              (unsigned long long)counterexamples, (unsigned long long)disagreements, (unsigned long long)min_witness)};
}

Outcome c2() {
  u64 violations = 0, zero_cases = 0;
  for (u64 ell : odd_primes_upto(31)) {
    const auto L = static_cast<i64>(ell);
    for (i64 c1 = 0; c1 < L; ++c1)
      for (i64 p = 0; p < L; ++p) {
        const std::vector<i64> sq{p * p, -4 * c1 * p, 4 * c1 * c1 + 2 * p, -4 * c1, 1};
        for (i64 D = 0; D < L; ++D) {
          const auto d23 = frobenius_poly_mod(DBranch::D23, c1, 0, D, p, ell);
          const auto d1 = frobenius_poly_mod(DBranch::D1, 2 * c1, 0, D, p, ell);
          for (int i = 0; i <= 4; ++i) {
            const auto want = static_cast<Residue>(oracle::mod(sq[static_cast<size_t>(i)], L));
            violations += d23.coeff(i) != want || d1.coeff(i) != want;
          }
        }
        const i64 at1 = oracle::mod(1 - 2 * c1 + p, L);
        if (at1 == 0) {
          ++zero_cases;
          violations += oracle::mod(p - (2 * c1 - 1), L) != 0;
          // (X - 1)^2 (X - p)^2
          const std::vector<i64> want{p * p, -2 * p * p - 2 * p, p * p + 4 * p + 1, -2 * p - 2, 1};
          for (int i = 0; i <= 4; ++i)
            violations += oracle::mod(sq[static_cast<size_t>(i)] - want[static_cast<size_t>(i)], L) != 0;
        }
        violations += theorem_c2_check(c1, p, ell).counterexample();
      }
  }
  return {violations == 0 && zero_cases > 0,
          fmt("ell 3..31: %llu violations over %llu P(1)=0 cases", (unsigned long long)violations, (unsigned long long)zero_cases)};
}

Outcome regression() {
  const CMField fa(2, 2, 1), fb(5, 2, 1);
  const WeilPoly a = frobenius_char_poly(fa, {1, -1, 0, 1}, 7);
  const WeilPoly b = frobenius_char_poly(fb, {-2, 2, 0, 1}, 11);
  const bool ok = a.to_string() == "X^4 - 4X^3 + 10X^2 - 28X + 49" && remainder_mod_sq(a) == IntPoly{44, -16} &&
                  closed_form_remainder(DBranch::D23, 1, -1, 2, 7) == IntPoly{44, -16} &&
                  b.to_string() == "X^4 + 4X^3 + 6X^2 + 44X + 121" && remainder_mod_sq(b) == IntPoly{104, 72} &&
                  closed_form_remainder(DBranch::D1, -2, 2, 5, 11) == IntPoly{104, 72};
  return {ok, "A: " + a.to_string() + ", R = " + to_string(remainder_mod_sq(a)) + "; B: " + b.to_string() +
                  ", R = " + to_string(remainder_mod_sq(b))};
}

Outcome embedding() {
  Rng rng(707);
  u64 mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    u64 ell, p;
    do ell = 2 + uniform_below(rng, 9998);
    while (!oracle::is_prime_naive(ell));
    do p = 3 + uniform_below(rng, 1u << 30);
    while (!oracle::is_prime_naive(p) || p == ell);
    mismatches += embedding_degree(p, ell).k != oracle::naive_multiplicative_order(p, ell);
  }
  return {mismatches == 0, fmt("1000 pairs, %llu mismatches", (unsigned long long)mismatches)};
}

Outcome sylow_gen() {
  Rng rng(808);
  std::vector<u64> seen;
  std::string detail;
  bool ok = true;
  for (int i = 0; i < 3000 && seen.size() < 4; ++i) {
    const Curve c = random_curve(rng, 61);
    const auto prof = torsion_profile(c);
    for (const auto& q : prof.primes) {
      if (q.ell == 2 || std::count(seen.begin(), seen.end(), q.ell)) continue;
      if (!sylow_from_profile(prof, q.ell).cyclic) continue;
      seen.push_back(q.ell);
      Rng trial_rng(q.ell * 7919 + static_cast<u64>(i));
      u64 hits = 0;
      const u64 trials = 4000;
      for (u64 t = 0; t < trials; ++t) {
        const auto g = sylow_trial(c, q.ell, prof.order, trial_rng);
        if (!g) continue;
        ++hits;
        // Certificate by repeated addition.
        u64 k = 1;
        for (Divisor acc = *g; !acc.is_identity(); acc = cantor_add(c, acc, *g)) ++k;
        u64 pv = 1;
        for (unsigned j = 0; j < q.valuation; ++j) pv *= q.ell;
        ok = ok && k == pv && has_order_prime_power(c, *g, q.ell, q.valuation);
      }
      const double rate = static_cast<double>(hits) / trials;
      const double expect = 1.0 - 1.0 / static_cast<double>(q.ell);
      ok = ok && std::abs(rate - expect) <= 0.05;
      detail += fmt("ell=%llu p=%llu rate %.4f vs %.4f; ", (unsigned long long)q.ell, (unsigned long long)c.p(), rate, expect);
      break;
    }
  }
  return {ok && seen.size() >= 3, detail};
}

Outcome weil_validity() {
  Rng rng(909);
  u64 checked = 0, invalid = 0;
  double worst = 0;
  for (int i = 0; i < 60; ++i) {
    const Curve c = random_curve(rng, 97);
    const WeilPoly w = weil_poly(c);
    invalid += !weil_validate(w);
    worst = std::max(worst, worst_modulus_error(w));
    ++checked;
  }
  SweepConfig cfg;
  cfg.D_max = 13;
  cfg.ab_max = 3;
  cfg.c_max = 2;
  cfg.p_max = 1000;
  for (const auto& x : sweep_cm_params(cfg)) {
    const WeilPoly w = frobenius_char_poly(x.field, x.w, x.p);
    invalid += !weil_validate(w);
    worst = std::max(worst, worst_modulus_error(w));
    ++checked;
  }
  return {invalid == 0 && worst <= 1e-9,
          fmt("%llu polynomials, %llu invalid, worst modulus error %.2e", (unsigned long long)checked,
              (unsigned long long)invalid, worst)};
}

Outcome norm_gate() {
  const CMField f(2, 2, 1);
  const u64 pa = frobenius_norm(f, {1, -1, 0, 1});
  const u64 pb = frobenius_norm(CMField(5, 2, 1), {-2, 2, 0, 1});
  bool ok = pa == 7 && pb == 11;
  std::string detail = fmt("A -> %llu, B -> %llu; perturbed:", (unsigned long long)pa, (unsigned long long)pb);
  for (int i = 0; i < 4; ++i) {
    FrobeniusElement w{1, -1, 0, 1};
    (&w.c1)[i] += 1;
    try {
      const u64 p = frobenius_norm(f, w);
      ok = ok && p != 7;
      detail += fmt(" c%d->p=%llu", i + 1, (unsigned long long)p);
    } catch (const Error& e) {
      const bool allowed = e.code() == Errc::IrrationalNorm || e.code() == Errc::CompositeNorm || e.code() == Errc::EvenNorm;
      ok = ok && allowed;
      detail += fmt(" c%d->%s", i + 1, std::string(errc_name(e.code())).c_str());
    }
  }
  return {ok, detail};
}

}  // namespace

int main() {
  run(1, "group-law", 60, group_law);
  run(2, "dual-path-order", 60, dual_path);
  run(3, "structure", 0, structure);
  run(4, "ed1-exhaustive", 120, ed1);
  run(5, "c2-exhaustive", 0, c2);
  run(6, "remainder-regression", 0, regression);
  run(7, "embedding-degree", 0, embedding);
  run(8, "sylow-generator", 0, sylow_gen);
  run(9, "weil-validity", 0, weil_validity);
  run(10, "norm-gate", 0, norm_gate);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
