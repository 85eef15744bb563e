#include "g2cm/poly.hpp"

#include <algorithm>
#include <sstream>

namespace g2cm {
namespace {

void check_cap(size_t ncoeffs) {
  if (ncoeffs > static_cast<size_t>(kMaxPolyDegree) + 1) {
    throw Error(Errc::DegreeCapExceeded,
                "polynomial degree " + std::to_string(ncoeffs - 1) + " exceeds cap");
  }
}

i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::IntegerOverflow, "integer polynomial add");
  return r;
}

i128 checked_sub(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(Errc::IntegerOverflow, "integer polynomial sub");
  return r;
}

i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::IntegerOverflow, "integer polynomial mul");
  return r;
}

}  // namespace

FpPoly::FpPoly(std::vector<Residue> c) : coeffs(std::move(c)) {
  normalize();
  check_cap(coeffs.size());
}

FpPoly FpPolyRing::from_ints(std::span<const i64> c) const {
  std::vector<Residue> out(c.size());
  std::transform(c.begin(), c.end(), out.begin(), [&](i64 v) { return field_.reduce(v); });
  return FpPoly(std::move(out));
}

FpPoly FpPolyRing::add(const FpPoly& a, const FpPoly& b) const {
  std::vector<Residue> out(std::max(a.coeffs.size(), b.coeffs.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = field_.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  }
  return FpPoly(std::move(out));
}

FpPoly FpPolyRing::sub(const FpPoly& a, const FpPoly& b) const {
  std::vector<Residue> out(std::max(a.coeffs.size(), b.coeffs.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = field_.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  }
  return FpPoly(std::move(out));
}

FpPoly FpPolyRing::neg(const FpPoly& a) const {
  FpPoly out = a;
  for (auto& c : out.coeffs) c = field_.neg(c);
  return out;
}

FpPoly FpPolyRing::mul(const FpPoly& a, const FpPoly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  check_cap(a.coeffs.size() + b.coeffs.size() - 1);
  std::vector<Residue> out(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs.size(); ++j) {
      out[i + j] = field_.add(out[i + j], field_.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return FpPoly(std::move(out));
}

FpPoly FpPolyRing::scale(const FpPoly& a, Residue k) const {
  if (k == 0) return {};
  FpPoly out = a;
  for (auto& c : out.coeffs) c = field_.mul(c, k);
  return out;
}

FpPoly FpPolyRing::derivative(const FpPoly& a) const {
  if (a.degree() < 1) return {};
  std::vector<Residue> out(a.coeffs.size() - 1);
  for (size_t i = 1; i < a.coeffs.size(); ++i) out[i - 1] = field_.mul(a.coeffs[i], i % field_.p());
  return FpPoly(std::move(out));
}

FpPoly FpPolyRing::monic(const FpPoly& a) const {
  if (a.is_zero() || a.lead() == 1) return a;
  return scale(a, field_.inv(a.lead()));
}

FpPoly FpPolyRing::pow(const FpPoly& a, unsigned e) const {
  FpPoly result{1};
  for (unsigned i = 0; i < e; ++i) result = mul(result, a);
  return result;
}

DivRem<FpPoly> FpPolyRing::divrem(const FpPoly& num, const FpPoly& den) const {
  if (den.is_zero()) throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial");
  if (num.degree() < den.degree()) return {FpPoly{}, num};
  std::vector<Residue> r = num.coeffs;
  std::vector<Residue> q(num.coeffs.size() - den.coeffs.size() + 1, 0);
  const Residue lead_inv = field_.inv(den.lead());
  const size_t dn = den.coeffs.size();
  for (size_t k = q.size(); k-- > 0;) {
    const Residue coef = field_.mul(r[k + dn - 1], lead_inv);
    q[k] = coef;
    if (coef == 0) continue;
    for (size_t j = 0; j < dn; ++j) r[k + j] = field_.sub(r[k + j], field_.mul(coef, den.coeffs[j]));
  }
  r.resize(dn - 1);
  return {FpPoly(std::move(q)), FpPoly(std::move(r))};
}

FpPoly FpPolyRing::exact_div(const FpPoly& num, const FpPoly& den) const {
  auto [q, r] = divrem(num, den);
  if (!r.is_zero()) throw Error(Errc::InvalidArgument, "inexact polynomial division");
  return q;
}

XGcd FpPolyRing::xgcd(const FpPoly& a, const FpPoly& b) const {
  FpPoly r0 = a, r1 = b;
  FpPoly s0{1}, s1{};
  FpPoly t0{}, t1{1};
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly s2 = sub(s0, mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    FpPoly t2 = sub(t0, mul(q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {FpPoly{}, FpPoly{}, FpPoly{}};
  const Residue k = field_.inv(r0.lead());
  return {scale(r0, k), scale(s0, k), scale(t0, k)};
}

bool FpPolyRing::is_squarefree(const FpPoly& f) const {
  if (f.degree() < 1) return true;
  return gcd(f, derivative(f)).degree() == 0;
}

Residue FpPolyRing::eval(const FpPoly& a, Residue x) const noexcept {
  Residue acc = 0;
  for (size_t i = a.coeffs.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), a.coeffs[i]);
  return acc;
}

QuadraticExtension::Elem FpPolyRing::eval(const QuadraticExtension& ext, const FpPoly& a,
                                          QuadraticExtension::Elem x) const noexcept {
  QuadraticExtension::Elem acc{};
  for (size_t i = a.coeffs.size(); i-- > 0;) acc = ext.add(ext.mul(acc, x), ext.from_base(a.coeffs[i]));
  return acc;
}

std::vector<Residue> FpPolyRing::roots_low_degree(const FpPoly& a) const {
  if (a.degree() > 2) throw Error(Errc::InvalidArgument, "roots_low_degree needs degree <= 2");
  if (a.degree() < 1) return {};
  const FpPoly m = monic(a);
  if (m.degree() == 1) return {field_.neg(m.coeffs[0])};
  // x^2 + b x + c: x = (-b +- sqrt(b^2 - 4c)) / 2
  const Residue b = m.coeffs[1], c = m.coeffs[0];
  const Residue disc = field_.sub(field_.mul(b, b), field_.mul(4 % field_.p(), c));
  const auto sq = field_.sqrt_all(disc);
  const Residue half = field_.inv(2);
  std::vector<Residue> out;
  for (Residue s : sq) out.push_back(field_.mul(field_.sub(s, b), half));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Residue> FpPolyRing::roots_by_search(const FpPoly& a) const {
  std::vector<Residue> out;
  if (a.degree() < 1) return out;
  for (Residue x = 0; x < field_.p(); ++x) {
    if (eval(a, x) == 0) out.push_back(x);
  }
  return out;
}

std::string to_string(const FpPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = a.degree(); i >= 0; --i) {
    const Residue c = a.coeffs[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPoly::IntPoly(std::vector<i128> c) : coeffs(std::move(c)) {
  normalize();
  check_cap(coeffs.size());
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
  std::vector<i128> out(std::max(a.coeffs.size(), b.coeffs.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = checked_add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  }
  return IntPoly(std::move(out));
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
  std::vector<i128> out(std::max(a.coeffs.size(), b.coeffs.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = checked_sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  }
  return IntPoly(std::move(out));
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  check_cap(a.coeffs.size() + b.coeffs.size() - 1);
  std::vector<i128> out(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    for (size_t j = 0; j < b.coeffs.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return IntPoly(std::move(out));
}

DivRem<IntPoly> divrem(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial");
  if (den.lead() != 1) throw Error(Errc::NonMonicIntegerDivisor, "integer divisor must be monic");
  if (num.degree() < den.degree()) return {IntPoly{}, num};
  std::vector<i128> r = num.coeffs;
  std::vector<i128> q(num.coeffs.size() - den.coeffs.size() + 1, 0);
  const size_t dn = den.coeffs.size();
  for (size_t k = q.size(); k-- > 0;) {
    const i128 coef = r[k + dn - 1];
    q[k] = coef;
    if (coef == 0) continue;
    for (size_t j = 0; j < dn; ++j) r[k + j] = checked_sub(r[k + j], checked_mul(coef, den.coeffs[j]));
  }
  r.resize(dn - 1);
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

i128 eval(const IntPoly& a, i128 x) {
  i128 acc = 0;
  for (size_t i = a.coeffs.size(); i-- > 0;) acc = checked_add(checked_mul(acc, x), a.coeffs[i]);
  return acc;
}

FpPoly reduce(const IntPoly& a, const FpPolyRing& ring) {
  std::vector<Residue> out(a.coeffs.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = ring.field().reduce128(a.coeffs[i]);
  return FpPoly(std::move(out));
}

std::string to_string(i128 v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  u128 m = negative ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  std::string digits;
  while (m != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
    m /= 10;
  }
  if (negative) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

std::string to_string(const IntPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = a.degree(); i >= 0; --i) {
    i128 c = a.coeffs[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const i128 mag = c < 0 ? -c : c;
    if (mag != 1 || i == 0) os << to_string(mag);
    if (i >= 1) os << "X";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace g2cm
