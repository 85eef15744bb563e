#include "g2cm/weil.hpp"

namespace g2cm {

std::array<i128, 5> WeilPoly::descending() const {
  const auto P = static_cast<i128>(p);
  return {1, -static_cast<i128>(a1), a2, -P * a1, P * P};
}

IntPoly WeilPoly::to_int_poly() const {
  const auto d = descending();
  return IntPoly({d[4], d[3], d[2], d[1], d[0]});
}

i128 WeilPoly::at_one() const {
  i128 sum = 0;
  for (i128 c : descending()) sum += c;
  return sum;
}

std::string WeilPoly::to_string() const { return g2cm::to_string(to_int_poly()); }

bool weil_validate(const WeilPoly& poly) {
  const auto p = static_cast<i128>(poly.p);
  const i128 a1 = poly.a1;
  const i128 a2 = poly.a2;
  if (p < 2) return false;
  if (a1 * a1 > 16 * p) return false;
  if (a2 > 6 * p || a2 < -6 * p) return false;
  // g(Y) = Y^2 - a1 Y + c, roots real and inside [-B, B] with B^2 = 4p.
  const i128 c = a2 - 2 * p;
  if (a1 * a1 - 4 * c < 0) return false;
  // g(+-B) = 4p + c -+ a1 B >= 0  <=>  4p + c >= 0 and (4p + c)^2 >= 4 p a1^2.
  const i128 g_edge = 4 * p + c;
  if (g_edge < 0) return false;
  if (g_edge * g_edge < 4 * p * a1 * a1) return false;
  return true;
}

}  // namespace g2cm
