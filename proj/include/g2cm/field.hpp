#pragma once

#include <optional>
#include <vector>

#include "g2cm/error.hpp"
#include "g2cm/number_theory.hpp"

namespace g2cm {

using Residue = u64;

/// The prime field F_p for an odd 64-bit prime p. Immutable once built.
class PrimeField {
 public:
  /// Validates p; throws EvenCharacteristic for 2, CompositeModulus otherwise.
  explicit PrimeField(u64 p);

  u64 p() const noexcept { return p_; }

  Residue reduce(i64 x) const noexcept;
  Residue reduce128(i128 x) const noexcept;
  /// Lifts a residue to the symmetric range (-p/2, p/2].
  i64 lift(Residue a) const noexcept;

  Residue add(Residue a, Residue b) const noexcept {
    // No wraparound even when p is close to 2^64.
    return a >= p_ - b ? a - (p_ - b) : a + b;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : p_ - (b - a); }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept { return mulmod(a, b, p_); }
  Residue pow(Residue a, u64 e) const noexcept { return powmod(a, e, p_); }
  Residue inv(Residue a) const;
  Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

  /// -1, 0 or +1 by Euler's criterion.
  int legendre(Residue a) const noexcept;

  /// All square roots of a, ascending: {} for non-residues, {0} for 0,
  /// {r, p - r} otherwise (Tonelli-Shanks).
  std::vector<Residue> sqrt_all(Residue a) const;
  std::optional<Residue> sqrt(Residue a) const;

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

 private:
  u64 p_;
};

/// F_{p^2} = F_p[t]/(t^2 - ns) with ns the least quadratic non-residue >= 2.
class QuadraticExtension {
 public:
  struct Elem {
    Residue lo = 0;
    Residue hi = 0;
    bool operator==(const Elem&) const = default;
  };

  explicit QuadraticExtension(PrimeField base);

  const PrimeField& base() const noexcept { return base_; }
  Residue non_residue() const noexcept { return ns_; }

  Elem from_base(Residue a) const noexcept { return {a, 0}; }
  Elem t() const noexcept { return {0, 1}; }

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const;
  Elem pow(Elem a, u64 e) const noexcept;
  /// Frobenius x -> x^p, which is the conjugation t -> -t.
  Elem conj(Elem a) const noexcept { return {a.lo, base_.neg(a.hi)}; }
  Residue norm(Elem a) const noexcept;

  /// Quadratic character of F_{p^2}, via the norm down to F_p.
  int legendre(Elem a) const noexcept { return base_.legendre(norm(a)); }
  std::optional<Elem> sqrt(Elem a) const;

 private:
  PrimeField base_;
  Residue ns_;
};

}  // namespace g2cm
