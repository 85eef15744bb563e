#include "g2cm/field.hpp"

#include <string>

namespace g2cm {

PrimeField::PrimeField(u64 p) : p_(p) {
  if (p == 2) throw Error(Errc::EvenCharacteristic, "characteristic 2 is not supported");
  if (!is_prime(p)) throw Error(Errc::CompositeModulus, std::to_string(p) + " is not prime");
}

Residue PrimeField::reduce(i64 x) const noexcept { return reduce128(x); }

Residue PrimeField::reduce128(i128 x) const noexcept {
  const auto m = static_cast<i128>(p_);
  i128 r = x % m;
  if (r < 0) r += m;
  return static_cast<Residue>(r);
}

i64 PrimeField::lift(Residue a) const noexcept {
  return a > p_ / 2 ? -static_cast<i64>(p_ - a) : static_cast<i64>(a);
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw Error(Errc::DivisionByZero, "inverse of zero in F_" + std::to_string(p_));
  // Extended Euclid on signed 128-bit values.
  i128 r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const i128 q = r0 / r1;
    i128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  return reduce128(s0);
}

int PrimeField::legendre(Residue a) const noexcept {
  if (a == 0) return 0;
  return pow(a, (p_ - 1) / 2) == 1 ? 1 : -1;
}

std::optional<Residue> PrimeField::sqrt(Residue a) const {
  a %= p_;
  if (a == 0) return Residue{0};
  if (legendre(a) != 1) return std::nullopt;
  if (p_ % 4 == 3) return pow(a, (p_ + 1) / 4);

  // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
  u64 q = p_ - 1;
  int s = 0;
  while ((q & 1U) == 0) {
    q >>= 1U;
    ++s;
  }
  Residue z = 2;
  while (legendre(z) != -1) ++z;
  Residue c = pow(z, q);
  Residue x = pow(a, (q + 1) / 2);
  Residue t = pow(a, q);
  int m = s;
  while (t != 1) {
    int i = 0;
    Residue t2 = t;
    while (t2 != 1) {
      t2 = mul(t2, t2);
      ++i;
    }
    Residue b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mul(b, b);
    x = mul(x, b);
    c = mul(b, b);
    t = mul(t, c);
    m = i;
  }
  return x;
}

std::vector<Residue> PrimeField::sqrt_all(Residue a) const {
  const auto r = sqrt(a);
  if (!r) return {};
  if (*r == 0) return {0};
  Residue lo = *r, hi = p_ - *r;
  if (lo > hi) std::swap(lo, hi);
  return {lo, hi};
}

QuadraticExtension::QuadraticExtension(PrimeField base) : base_(base), ns_(2) {
  while (base_.legendre(ns_) != -1) ++ns_;
}

QuadraticExtension::Elem QuadraticExtension::add(Elem a, Elem b) const noexcept {
  return {base_.add(a.lo, b.lo), base_.add(a.hi, b.hi)};
}

QuadraticExtension::Elem QuadraticExtension::sub(Elem a, Elem b) const noexcept {
  return {base_.sub(a.lo, b.lo), base_.sub(a.hi, b.hi)};
}

QuadraticExtension::Elem QuadraticExtension::neg(Elem a) const noexcept {
  return {base_.neg(a.lo), base_.neg(a.hi)};
}

QuadraticExtension::Elem QuadraticExtension::mul(Elem a, Elem b) const noexcept {
  const Residue lo = base_.add(base_.mul(a.lo, b.lo), base_.mul(ns_, base_.mul(a.hi, b.hi)));
  const Residue hi = base_.add(base_.mul(a.lo, b.hi), base_.mul(a.hi, b.lo));
  return {lo, hi};
}

Residue QuadraticExtension::norm(Elem a) const noexcept {
  return base_.sub(base_.mul(a.lo, a.lo), base_.mul(ns_, base_.mul(a.hi, a.hi)));
}

QuadraticExtension::Elem QuadraticExtension::inv(Elem a) const {
  const Residue n = norm(a);
  if (n == 0) throw Error(Errc::DivisionByZero, "inverse of zero in F_p^2");
  const Residue ninv = base_.inv(n);
  const Elem c = conj(a);
  return {base_.mul(c.lo, ninv), base_.mul(c.hi, ninv)};
}

QuadraticExtension::Elem QuadraticExtension::pow(Elem a, u64 e) const noexcept {
  Elem result{1, 0};
  while (e != 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

std::optional<QuadraticExtension::Elem> QuadraticExtension::sqrt(Elem a) const {
  if (a.hi == 0) {
    if (auto r = base_.sqrt(a.lo)) return Elem{*r, 0};
    // a = ns * w^2 for some w in F_p, so sqrt(a) = w * t.
    const auto w = base_.sqrt(base_.div(a.lo, ns_));
    return Elem{0, *w};
  }
  const auto n = base_.sqrt(norm(a));
  if (!n) return std::nullopt;
  // (c + d t)^2 = a  <=>  c^2 = (lo +- sqrt(N(a))) / 2,  d = hi / (2c).
  const Residue half = base_.inv(2);
  Residue delta = base_.mul(base_.add(a.lo, *n), half);
  if (base_.legendre(delta) != 1) delta = base_.mul(base_.sub(a.lo, *n), half);
  const auto c = base_.sqrt(delta);
  if (!c || *c == 0) return std::nullopt;
  const Residue d = base_.div(a.hi, base_.add(*c, *c));
  return Elem{*c, d};
}

}  // namespace g2cm
