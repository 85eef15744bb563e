#pragma once

#include <array>
#include <string>

#include "g2cm/number_theory.hpp"
#include "g2cm/poly.hpp"

namespace g2cm {

/// P(X) = X^4 - a1 X^3 + a2 X^2 - p a1 X + p^2, the characteristic
/// polynomial of Frobenius on a genus-2 Jacobian over F_p.
struct WeilPoly {
  u64 p = 0;
  i64 a1 = 0;
  i64 a2 = 0;

  bool operator==(const WeilPoly&) const = default;

  /// Coefficients in descending degree: [1, -a1, a2, -p*a1, p^2].
  std::array<i128, 5> descending() const;
  IntPoly to_int_poly() const;
  /// P(1), the order of the group of rational points.
  i128 at_one() const;
  std::string to_string() const;
};

/// Exact Weil-bound test: |a1| <= 4 sqrt(p), |a2| <= 6p, and every complex
/// root has absolute value sqrt(p). Writing P(X) = X^2 g(X + p/X) with
/// g(Y) = Y^2 - a1 Y + (a2 - 2p), the last condition is that g has real
/// roots inside [-2 sqrt(p), 2 sqrt(p)]; all comparisons are integral.
bool weil_validate(const WeilPoly& poly);

}  // namespace g2cm
