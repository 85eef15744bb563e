#include "g2cm/cm.hpp"

#include <algorithm>

#include "g2cm/error.hpp"
#include "g2cm/number_theory.hpp"

namespace g2cm {
namespace {

bool is_squarefree_int(i64 n) {
  for (i64 q = 2; q * q <= n; ++q) {
    if (n % (q * q) == 0) return false;
  }
  return true;
}

/// s + b sqrt(D) > 0 and s - b sqrt(D) > 0, i.e. s > |b| sqrt(D).
bool both_conjugates_positive(i128 s, i128 b, i128 D) {
  if (s <= 0) return false;
  return s * s > b * b * D;
}

PrimeField ell_field(u64 ell) {
  if (ell == 2) throw Error(Errc::EvenEll, "theorem predicates require odd ell");
  if (!is_prime(ell)) throw Error(Errc::EllNotPrime, std::to_string(ell) + " is not prime");
  return PrimeField(ell);
}

i64 narrow(i128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error(Errc::IntegerOverflow, what);
  return static_cast<i64>(v);
}

}  // namespace

std::string_view to_string(DBranch b) noexcept { return b == DBranch::D1 ? "d1" : "d23"; }

std::string_view to_string(Primitivity p) noexcept {
  return p == Primitivity::NonBiquadratic ? "non-biquadratic" : "biquadratic-suspect";
}

CMField::CMField(i64 D, i64 a, i64 b)
    : D_(D), a_(a), b_(b), branch_(D % 4 == 1 ? DBranch::D1 : DBranch::D23) {
  if (D < 2) throw Error(Errc::DegenerateField, "D must be at least 2");
  if (!is_squarefree_int(D)) throw Error(Errc::NotSquarefree, "D = " + std::to_string(D) + " is not squarefree");
  // Conjugates of a + b xi: (2a + b +- b sqrt D) / 2 or a +- b sqrt D.
  const i128 s = branch_ == DBranch::D1 ? 2 * static_cast<i128>(a) + b : static_cast<i128>(a);
  if (!both_conjugates_positive(s, b, D)) {
    throw Error(Errc::NotTotallyPositive, "a + b xi is not totally positive");
  }
}

RealQuadInt CMField::mul(RealQuadInt x, RealQuadInt y) const {
  // xi^2 = t xi - n.
  const i128 t = xi_trace(), n = xi_norm();
  return {x.x0 * y.x0 - n * x.x1 * y.x1, x.x0 * y.x1 + x.x1 * y.x0 + t * x.x1 * y.x1};
}

i128 CMField::norm(RealQuadInt x) const {
  const i128 t = xi_trace(), n = xi_norm();
  return x.x0 * x.x0 + t * x.x0 * x.x1 + n * x.x1 * x.x1;
}

Primitivity primitivity_screen(const CMField& field) {
  return is_perfect_square(field.norm(field.eta_square_neg())) ? Primitivity::BiquadraticSuspect
                                                               : Primitivity::NonBiquadratic;
}

u64 frobenius_norm(const CMField& field, const FrobeniusElement& w) {
  const RealQuadInt A{w.c1, w.c2};
  const RealQuadInt B{w.c3, w.c4};
  const RealQuadInt A2 = field.mul(A, A);
  const RealQuadInt tail = field.mul(field.eta_square_neg(), field.mul(B, B));
  const RealQuadInt n{A2.x0 + tail.x0, A2.x1 + tail.x1};
  if (n.x1 != 0) {
    throw Error(Errc::IrrationalNorm, "xi-coefficient of the norm is " + to_string(n.x1));
  }
  if (n.x0 > 0 && n.x0 % 2 == 0) throw Error(Errc::EvenNorm, "norm " + to_string(n.x0) + " is even");
  if (n.x0 < 2 || n.x0 > static_cast<i128>(UINT64_MAX) || !is_prime(static_cast<u64>(n.x0))) {
    throw Error(Errc::CompositeNorm, "norm " + to_string(n.x0) + " is not prime");
  }
  return static_cast<u64>(n.x0);
}

WeilPoly frobenius_char_poly(const CMField& field, const FrobeniusElement& w, u64 p) {
  const auto P = static_cast<i128>(p);
  const i128 c1 = w.c1, c2 = w.c2, D = field.D();
  i128 a1 = 0, a2 = 0;
  if (field.branch() == DBranch::D23) {
    a1 = 4 * c1;
    a2 = 2 * P + 4 * (c1 * c1 - c2 * c2 * D);
  } else {
    const i128 c = 2 * c1 + c2;
    a1 = 2 * c;
    a2 = 2 * P + c * c - c2 * c2 * D;
  }
  WeilPoly out{p, narrow(a1, "a1"), narrow(a2, "a2")};
  if (!weil_validate(out)) throw Error(Errc::WeilViolation, out.to_string() + " is not a Weil polynomial");
  return out;
}

WeilPoly frobenius_char_poly_from_trace_norm(const CMField& field, const FrobeniusElement& w, u64 p) {
  // omega_1 + omega_2 = 2A, omega_3 + omega_4 = 2 A', each pair multiplies to p.
  const RealQuadInt A{w.c1, w.c2};
  const i128 trace_A = 2 * A.x0 + field.xi_trace() * A.x1;
  const i128 a1 = 2 * trace_A;
  const i128 a2 = 2 * static_cast<i128>(p) + 4 * field.norm(A);
  WeilPoly out{p, narrow(a1, "a1"), narrow(a2, "a2")};
  if (!weil_validate(out)) throw Error(Errc::WeilViolation, out.to_string() + " is not a Weil polynomial");
  return out;
}

IntPoly remainder_mod_sq(const WeilPoly& poly) {
  return divrem(poly.to_int_poly(), IntPoly{1, -2, 1}).remainder;
}

FpPoly remainder_mod_sq(const WeilPoly& poly, u64 ell) {
  return reduce(remainder_mod_sq(poly), FpPolyRing(PrimeField(ell)));
}

IntPoly closed_form_remainder(DBranch branch, i64 c1_or_c, i64 c2, i64 D, i64 p) {
  const i128 P = p, C = c1_or_c, c2sqD = static_cast<i128>(c2) * c2 * D;
  if (branch == DBranch::D23) {
    const i128 m = C * C - c2sqD;
    const i128 linear = 4 * (1 - 3 * C - (C - 1) * P + 2 * m);
    const i128 constant = P * P - 2 * P - 4 * m + 8 * C - 3;
    return IntPoly{constant, linear};
  }
  const i128 linear = (4 - 2 * C) * P + 2 * C * C - 6 * C - 2 * c2sqD + 4;
  const i128 constant = P * P - 2 * P - 3 + 4 * C - C * C + c2sqD;
  return IntPoly{constant, linear};
}

FpPoly frobenius_poly_mod(DBranch branch, i64 c1_or_c, i64 c2, i64 D, i64 p, u64 ell) {
  const PrimeField F(ell);
  const Residue C = F.reduce(c1_or_c), s2 = F.reduce(c2), d = F.reduce(D), pp = F.reduce(p);
  const Residue c2sqD = F.mul(F.mul(s2, s2), d);
  const Residue two_p = F.add(pp, pp);
  Residue a1 = 0, a2 = 0;
  if (branch == DBranch::D23) {
    a1 = F.mul(4 % ell, C);
    a2 = F.add(two_p, F.mul(4 % ell, F.sub(F.mul(C, C), c2sqD)));
  } else {
    a1 = F.add(C, C);
    a2 = F.add(two_p, F.sub(F.mul(C, C), c2sqD));
  }
  return FpPoly(std::vector<Residue>{F.mul(pp, pp), F.neg(F.mul(pp, a1)), a2, F.neg(a1), 1});
}

TheoremVerdict theorem_ed1_check(DBranch branch, i64 c1_or_c, i64 c2, i64 D, i64 p, u64 ell) {
  const PrimeField F = ell_field(ell);
  const FpPolyRing R(F);
  const FpPoly P = frobenius_poly_mod(branch, c1_or_c, c2, D, p, ell);
  const FpPoly rem = R.rem(P, FpPoly(std::vector<Residue>{1, F.neg(2), 1}));
  const Residue pr = F.reduce(p);

  TheoremVerdict v;
  v.remainder_constant = rem.coeff(0);
  v.remainder_linear = rem.coeff(1);
  // Either p = 1 or p = 2 c1 - 1 (D23), resp. p = c - 1 (D1).
  const Residue C = F.reduce(c1_or_c);
  const Residue other = branch == DBranch::D23 ? F.sub(F.add(C, C), 1) : F.sub(C, 1);
  v.candidate_p = {1};
  if (other != 1) v.candidate_p.push_back(other);
  std::sort(v.candidate_p.begin(), v.candidate_p.end());

  const bool nondegenerate = pr != 0 && F.reduce(c2) != 0 && F.reduce(D) != 0;
  v.hypotheses_met = nondegenerate && rem.is_zero();
  v.conclusion_holds = pr == 1;
  if (!nondegenerate) {
    v.detail = "ell divides p * c2 * D";
  } else if (!rem.is_zero()) {
    v.detail = "(X-1)^2 does not divide P mod ell";
  } else {
    v.detail = v.conclusion_holds ? "(X-1)^2 | P mod ell and p = 1 mod ell" : "COUNTEREXAMPLE";
  }
  return v;
}

TheoremVerdict theorem_c2_check(i64 c1, i64 p, u64 ell) {
  const PrimeField F = ell_field(ell);
  const FpPolyRing R(F);
  const Residue C = F.reduce(c1), pr = F.reduce(p);
  const FpPoly quad(std::vector<Residue>{pr, F.neg(F.add(C, C)), 1});
  const FpPoly square = R.mul(quad, quad);
  // D is multiplied by c2^2 = 0 everywhere, so any value works here.
  const FpPoly p23 = frobenius_poly_mod(DBranch::D23, c1, 0, 1, p, ell);
  const FpPoly p1 = frobenius_poly_mod(DBranch::D1, 2 * c1, 0, 1, p, ell);
  const bool identity = p23 == square && p1 == square;

  TheoremVerdict v;
  v.hypotheses_met = true;
  const FpPoly rem = R.rem(p23, FpPoly(std::vector<Residue>{1, F.neg(2), 1}));
  v.remainder_constant = rem.coeff(0);
  v.remainder_linear = rem.coeff(1);
  const Residue expected_p = F.sub(F.add(C, C), 1);
  v.candidate_p = {expected_p};
  const bool vanishes_at_one = R.eval(p23, 1) == 0;
  bool factored = true;
  if (vanishes_at_one) {
    const FpPoly x_minus_1(std::vector<Residue>{F.neg(1), 1});
    const FpPoly x_minus_p(std::vector<Residue>{F.neg(pr), 1});
    const FpPoly target = R.mul(R.mul(x_minus_1, x_minus_1), R.mul(x_minus_p, x_minus_p));
    factored = pr == expected_p && p23 == target;
  }
  v.conclusion_holds = identity && factored;
  if (!identity) {
    v.detail = "P differs from (X^2 - 2 c1 X + p)^2 mod ell";
  } else if (!factored) {
    v.detail = "P(1) = 0 but P is not (X-1)^2 (X-p)^2 mod ell";
  } else {
    v.detail = vanishes_at_one ? "P(1) = 0, p = 2 c1 - 1, P = (X-1)^2 (X-p)^2" : "P = (X^2 - 2 c1 X + p)^2";
  }
  return v;
}

i64 q_bound(const CMField& field) {
  const i128 a = field.a(), b = field.b(), D = field.D();
  i128 q = std::max(a, D);
  if (field.branch() == DBranch::D23) {
    q = std::max(q, a * a - b * b * D);
  } else {
    q = std::max(q, 4 * a * (a + b) - b * b * (D - 1));
    q = std::max(q, a * D + 2 * b * (D - 1));
  }
  return narrow(q, "Q");
}

}  // namespace g2cm
