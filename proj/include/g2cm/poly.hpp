#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "g2cm/field.hpp"

namespace g2cm {

/// Nothing in scope goes beyond degree 6 inputs; products stay far below this.
inline constexpr int kMaxPolyDegree = 16;

/// Dense polynomial over F_p, lowest degree first. Canonical form has no
/// trailing zero coefficient; the zero polynomial is empty.
struct FpPoly {
  std::vector<Residue> coeffs;

  FpPoly() = default;
  explicit FpPoly(std::vector<Residue> c);
  FpPoly(std::initializer_list<Residue> c) : FpPoly(std::vector<Residue>(c)) {}

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const noexcept { return coeffs.empty(); }
  Residue lead() const noexcept { return coeffs.empty() ? 0 : coeffs.back(); }
  Residue coeff(int i) const noexcept {
    return i >= 0 && i < static_cast<int>(coeffs.size()) ? coeffs[static_cast<size_t>(i)] : 0;
  }
  bool is_one() const noexcept { return coeffs.size() == 1 && coeffs[0] == 1; }

  bool operator==(const FpPoly&) const = default;
  auto operator<=>(const FpPoly& o) const {
    if (auto c = coeffs.size() <=> o.coeffs.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(coeffs.rbegin(), coeffs.rend(), o.coeffs.rbegin(),
                                                  o.coeffs.rend());
  }

  void normalize() noexcept {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
};

template <typename P>
struct DivRem {
  P quotient;
  P remainder;
};

/// Bezout data: g = s*a + t*b with g monic (or zero).
struct XGcd {
  FpPoly g;
  FpPoly s;
  FpPoly t;
};

/// Arithmetic in F_p[x].
class FpPolyRing {
 public:
  explicit FpPolyRing(PrimeField field) : field_(field) {}

  const PrimeField& field() const noexcept { return field_; }

  /// Reduces signed integer coefficients into F_p.
  FpPoly from_ints(std::span<const i64> c) const;
  FpPoly constant(Residue a) const { return FpPoly(std::vector<Residue>{a}); }
  FpPoly x() const { return FpPoly(std::vector<Residue>{0, 1}); }

  FpPoly add(const FpPoly& a, const FpPoly& b) const;
  FpPoly sub(const FpPoly& a, const FpPoly& b) const;
  FpPoly neg(const FpPoly& a) const;
  FpPoly mul(const FpPoly& a, const FpPoly& b) const;
  FpPoly scale(const FpPoly& a, Residue k) const;
  FpPoly derivative(const FpPoly& a) const;
  FpPoly monic(const FpPoly& a) const;
  FpPoly pow(const FpPoly& a, unsigned e) const;

  DivRem<FpPoly> divrem(const FpPoly& num, const FpPoly& den) const;
  FpPoly rem(const FpPoly& num, const FpPoly& den) const { return divrem(num, den).remainder; }
  /// Exact division; the remainder must vanish.
  FpPoly exact_div(const FpPoly& num, const FpPoly& den) const;

  FpPoly gcd(const FpPoly& a, const FpPoly& b) const { return xgcd(a, b).g; }
  XGcd xgcd(const FpPoly& a, const FpPoly& b) const;
  bool is_squarefree(const FpPoly& f) const;

  Residue eval(const FpPoly& a, Residue x) const noexcept;
  QuadraticExtension::Elem eval(const QuadraticExtension& ext, const FpPoly& a,
                                QuadraticExtension::Elem x) const noexcept;

  /// Roots in F_p, ascending, without multiplicity (deg <= 2 only).
  std::vector<Residue> roots_low_degree(const FpPoly& a) const;
  /// All roots in F_p by exhaustive evaluation.
  std::vector<Residue> roots_by_search(const FpPoly& a) const;

 private:
  PrimeField field_;
};

std::string to_string(const FpPoly& a);

/// Polynomial over the integers with overflow-checked 128-bit coefficients.
struct IntPoly {
  std::vector<i128> coeffs;

  IntPoly() = default;
  explicit IntPoly(std::vector<i128> c);
  IntPoly(std::initializer_list<i128> c) : IntPoly(std::vector<i128>(c)) {}

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const noexcept { return coeffs.empty(); }
  i128 lead() const noexcept { return coeffs.empty() ? 0 : coeffs.back(); }
  i128 coeff(int i) const noexcept {
    return i >= 0 && i < static_cast<int>(coeffs.size()) ? coeffs[static_cast<size_t>(i)] : 0;
  }

  bool operator==(const IntPoly&) const = default;

  void normalize() noexcept {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
};

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
/// Division by a monic integer polynomial.
DivRem<IntPoly> divrem(const IntPoly& num, const IntPoly& den);
i128 eval(const IntPoly& a, i128 x);
FpPoly reduce(const IntPoly& a, const FpPolyRing& ring);

std::string to_string(const IntPoly& a);
std::string to_string(i128 v);

}  // namespace g2cm
