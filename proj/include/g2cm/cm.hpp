#pragma once

#include <string>
#include <vector>

#include "g2cm/poly.hpp"
#include "g2cm/weil.hpp"

namespace g2cm {

/// Which integral basis the real quadratic subfield Q(sqrt D) uses:
/// xi = sqrt(D) when D = 2, 3 mod 4, xi = (1 + sqrt D) / 2 when D = 1 mod 4.
enum class DBranch { D23, D1 };

std::string_view to_string(DBranch b) noexcept;

/// Element x0 + x1 xi of the ring of integers Z[xi] of K0 = Q(sqrt D).
struct RealQuadInt {
  i128 x0 = 0;
  i128 x1 = 0;
  bool operator==(const RealQuadInt&) const = default;
};

/// Quartic CM field K = K0(eta), eta = i sqrt(a + b xi), K0 = Q(sqrt D).
class CMField {
 public:
  /// Throws DegenerateField (D < 2), NotSquarefree, NotTotallyPositive.
  CMField(i64 D, i64 a, i64 b);

  i64 D() const noexcept { return D_; }
  i64 a() const noexcept { return a_; }
  i64 b() const noexcept { return b_; }
  DBranch branch() const noexcept { return branch_; }
  /// xi^2 = xi_trace * xi - xi_norm.
  i64 xi_trace() const noexcept { return branch_ == DBranch::D1 ? 1 : 0; }
  i64 xi_norm() const noexcept { return branch_ == DBranch::D1 ? (1 - D_) / 4 : -D_; }

  RealQuadInt mul(RealQuadInt x, RealQuadInt y) const;
  /// Norm from K0 down to Q.
  i128 norm(RealQuadInt x) const;
  /// a + b xi, so that eta^2 = -(a + b xi).
  RealQuadInt eta_square_neg() const { return {a_, b_}; }

 private:
  i64 D_;
  i64 a_;
  i64 b_;
  DBranch branch_;
};

/// omega = c1 + c2 xi + (c3 + c4 xi) eta.
struct FrobeniusElement {
  i64 c1 = 0;
  i64 c2 = 0;
  i64 c3 = 0;
  i64 c4 = 0;
  bool operator==(const FrobeniusElement&) const = default;
};

enum class Primitivity { NonBiquadratic, BiquadraticSuspect };

std::string_view to_string(Primitivity p) noexcept;

/// Flags K as possibly biquadratic when Norm_{K0/Q}(a + b xi) is a perfect
/// square. A screen only; it does not prove primitivity.
Primitivity primitivity_screen(const CMField& field);

/// omega * conj(omega) = (c1 + c2 xi)^2 + (a + b xi)(c3 + c4 xi)^2 expanded
/// in the basis {1, xi}. Returns it when rational and an odd prime.
u64 frobenius_norm(const CMField& field, const FrobeniusElement& w);

/// Closed-form Frobenius polynomial for each D branch:
///   D = 2,3 mod 4:  a1 = 4 c1,  a2 = 2p + 4(c1^2 - c2^2 D)
///   D = 1 mod 4:    a1 = 2c,    a2 = 2p + c^2 - c2^2 D,   c = 2 c1 + c2
WeilPoly frobenius_char_poly(const CMField& field, const FrobeniusElement& w, u64 p);

/// Same polynomial from first principles in the basis {1, xi}: a1 is twice
/// the K0-trace of c1 + c2 xi and a2 = 2p + 4 Norm(c1 + c2 xi). Independent of
/// the branch formulas above.
WeilPoly frobenius_char_poly_from_trace_norm(const CMField& field, const FrobeniusElement& w, u64 p);

/// Remainder of P(X) on division by (X - 1)^2 over the integers.
IntPoly remainder_mod_sq(const WeilPoly& poly);
/// The same remainder reduced mod ell.
FpPoly remainder_mod_sq(const WeilPoly& poly, u64 ell);

/// Remainder written out as a closed form in the CM parameters; c1_or_c is
/// c1 for D23 and c = 2 c1 + c2 for D1.
IntPoly closed_form_remainder(DBranch branch, i64 c1_or_c, i64 c2, i64 D, i64 p);

/// P(X) mod ell for residue-level parameters.
FpPoly frobenius_poly_mod(DBranch branch, i64 c1_or_c, i64 c2, i64 D, i64 p, u64 ell);

struct TheoremVerdict {
  bool hypotheses_met = false;
  bool conclusion_holds = true;
  /// Remainder of P mod (X - 1)^2 over F_ell, as (constant, linear).
  Residue remainder_constant = 0;
  Residue remainder_linear = 0;
  /// Residues of p left open by P(1) = 0 and the remainder's linear term.
  std::vector<Residue> candidate_p;
  std::string detail;

  bool counterexample() const noexcept { return hypotheses_met && !conclusion_holds; }
};

/// Residue-level check of: ell odd, ell does not divide p c2 D, and
/// (X - 1)^2 | P(X) mod ell imply p = 1 mod ell. Inputs are reduced mod ell.
TheoremVerdict theorem_ed1_check(DBranch branch, i64 c1_or_c, i64 c2, i64 D, i64 p, u64 ell);

/// Residue-level check of the ell | c2 case: P = (X^2 - 2 c1 X + p)^2 mod ell
/// in both branches, and when P(1) = 0 also p = 2 c1 - 1 and
/// P = (X - 1)^2 (X - p)^2 mod ell.
TheoremVerdict theorem_c2_check(i64 c1, i64 p, u64 ell);

/// Upper bound on odd primes dividing n2.
i64 q_bound(const CMField& field);

}  // namespace g2cm
