#pragma once

#include <optional>
#include <span>
#include <vector>

#include "g2cm/field.hpp"
#include "g2cm/poly.hpp"
#include "g2cm/weil.hpp"

namespace g2cm {

/// A reduced divisor class in Mumford form (u, v): u monic with deg u <= 2,
/// deg v < deg u, and u | v^2 - f. The identity is (1, 0).
struct Divisor {
  FpPoly u{1};
  FpPoly v{};

  bool is_identity() const noexcept { return u.is_one(); }
  bool operator==(const Divisor&) const = default;
  auto operator<=>(const Divisor&) const = default;
};

std::string to_string(const Divisor& d);

inline constexpr u64 kDefaultEnumerationBound = 97;
inline constexpr u64 kDefaultCountBound = u64{1} << 26;

/// Genus-2 curve y^2 = f(x) over F_p with f squarefree of degree 5 or 6.
///
/// Group arithmetic runs on an imaginary (degree-5) model. A degree-6 input
/// with a rational root x0 is moved to that model by x = x0 + 1/z,
/// y = w / z^3; without a rational root the curve is rejected.
class Curve {
 public:
  /// Coefficients lowest degree first.
  Curve(u64 p, std::span<const i64> f);
  Curve(u64 p, std::initializer_list<i64> f)
      : Curve(p, std::span<const i64>(f.begin(), f.size())) {}

  const PrimeField& field() const noexcept { return ring_.field(); }
  const FpPolyRing& ring() const noexcept { return ring_; }
  const QuadraticExtension& ext() const noexcept { return ext_; }
  u64 p() const noexcept { return field().p(); }

  /// The input polynomial.
  const FpPoly& f() const noexcept { return f_; }
  /// The degree-5 polynomial that divisors refer to.
  const FpPoly& model() const noexcept { return model_; }
  /// Root moved to infinity for degree-6 inputs.
  std::optional<Residue> moved_root() const noexcept { return moved_root_; }

  Divisor identity() const { return {}; }
  bool is_valid(const Divisor& d) const;

 private:
  FpPolyRing ring_;
  QuadraticExtension ext_;
  FpPoly f_;
  FpPoly model_;
  std::optional<Residue> moved_root_;
};

/// Reduced representative of d1 + d2 (Cantor composition then reduction).
Divisor cantor_add(const Curve& c, const Divisor& d1, const Divisor& d2);
Divisor neg(const Curve& c, const Divisor& d);
Divisor scalar_mul(const Curve& c, i64 n, const Divisor& d);

/// Uniform element of Jac(C)(F_p). Picks a monic u of degree <= 2 uniformly,
/// then one of four slots; a draw is rejected when that slot has no
/// matching class. After 64 rejections a degree-1 class (or the identity) is
/// returned instead.
Divisor random_divisor(const Curve& c, Rng& rng);

/// Number of points of the smooth model over F_{p^k}, k in {1, 2}.
u64 count_points(const Curve& c, int k, u64 max_field_size = kDefaultCountBound);

/// Builds P(X) from #C(F_p) and #C(F_{p^2}).
WeilPoly char_poly_from_counts(u64 n1, u64 n2, u64 p);

/// P(X) of the curve from its two point counts.
WeilPoly weil_poly(const Curve& c, u64 max_field_size = kDefaultCountBound);

/// Every element of Jac(C)(F_p): the identity first, then degree-1 and
/// degree-2 classes in increasing (u, v) order.
std::vector<Divisor> enumerate_jacobian(const Curve& c, u64 max_p = kDefaultEnumerationBound);

/// Exact order of d, given N with N d = 0.
u64 element_order(const Curve& c, const Divisor& d, u64 n);

}  // namespace g2cm
