#include "g2cm/jacobian.hpp"

#include <algorithm>
#include <cmath>

namespace g2cm {
namespace {

using Elem = QuadraticExtension::Elem;

FpPoly degree_five_model(const FpPolyRing& ring, const FpPoly& f, Residue x0) {
  // z^6 f(x0 + 1/z) = sum_i f_i (x0 z + 1)^i z^(6 - i); the z^6 term is f(x0) = 0.
  const FpPoly lin(std::vector<Residue>{1, x0});
  FpPoly out;
  for (int i = 0; i <= 6; ++i) {
    const Residue fi = f.coeff(i);
    if (fi == 0) continue;
    std::vector<Residue> shift(static_cast<size_t>(6 - i) + 1, 0);
    shift.back() = fi;
    out = ring.add(out, ring.mul(ring.pow(lin, static_cast<unsigned>(i)), FpPoly(std::move(shift))));
  }
  return out;
}

Divisor add_unchecked(const Curve& c, const Divisor& d1, const Divisor& d2) {
  if (d1.is_identity()) return d2;
  if (d2.is_identity()) return d1;
  const FpPolyRing& R = c.ring();
  const FpPoly& f = c.model();

  // Composition: d = gcd(u1, u2, v1 + v2) = s1 u1 + s2 u2 + s3 (v1 + v2).
  const XGcd g1 = R.xgcd(d1.u, d2.u);
  const FpPoly vsum = R.add(d1.v, d2.v);
  FpPoly d, s1, s2, s3;
  if (g1.g.is_one()) {
    d = g1.g;
    s1 = g1.s;
    s2 = g1.t;
  } else {
    const XGcd g2 = R.xgcd(g1.g, vsum);
    d = g2.g;
    s1 = R.mul(g2.s, g1.s);
    s2 = R.mul(g2.s, g1.t);
    s3 = g2.t;
  }
  FpPoly u = R.mul(d1.u, d2.u);
  FpPoly num = R.add(R.mul(R.mul(s1, d1.u), d2.v), R.mul(R.mul(s2, d2.u), d1.v));
  if (!s3.is_zero()) num = R.add(num, R.mul(s3, R.add(R.mul(d1.v, d2.v), f)));
  if (!d.is_one()) {
    u = R.exact_div(u, R.mul(d, d));
    num = R.exact_div(num, d);
  }
  FpPoly v = R.rem(num, u);

  // Reduction.
  while (u.degree() > 2) {
    u = R.monic(R.exact_div(R.sub(f, R.mul(v, v)), u));
    v = R.rem(R.neg(v), u);
  }
  u = R.monic(u);
  v = R.rem(v, u);
  return {std::move(u), std::move(v)};
}

Divisor neg_unchecked(const Curve& c, const Divisor& d) {
  return {d.u, c.ring().neg(d.v)};
}

/// All classes (u, v) for one monic u of degree <= 2, ordered by v.
std::vector<Divisor> classes_over(const Curve& c, const FpPoly& u) {
  const PrimeField& F = c.field();
  const FpPolyRing& R = c.ring();
  const FpPoly& f = c.model();
  std::vector<Divisor> out;
  if (u.degree() == 0) {
    out.push_back(c.identity());
    return out;
  }
  if (u.degree() == 1) {
    const Residue r = F.neg(u.coeffs[0]);
    for (Residue s : F.sqrt_all(R.eval(f, r))) out.push_back({u, FpPoly(std::vector<Residue>{s})});
    return out;
  }
  const Residue u1 = u.coeffs[1], u0 = u.coeffs[0];
  const Residue disc = F.sub(F.mul(u1, u1), F.mul(4, u0));
  const Residue half = F.inv(2);
  const int chi = F.legendre(disc);
  if (chi == 0) {
    // (x - r)^2: v(r) = s != 0 and v'(r) = f'(r) / (2 s).
    const Residue r = F.mul(F.neg(u1), half);
    const Residue fr = R.eval(f, r);
    if (fr == 0) return out;
    const Residue dfr = R.eval(R.derivative(f), r);
    for (Residue s : F.sqrt_all(fr)) {
      const Residue v1 = F.div(dfr, F.add(s, s));
      const Residue v0 = F.sub(s, F.mul(v1, r));
      out.push_back({u, FpPoly(std::vector<Residue>{v0, v1})});
    }
  } else if (chi == 1) {
    const auto sq = F.sqrt_all(disc);
    const Residue r1 = F.mul(F.sub(sq[0], u1), half);
    const Residue r2 = F.mul(F.sub(sq[1], u1), half);
    const auto s1s = F.sqrt_all(R.eval(f, r1));
    const auto s2s = F.sqrt_all(R.eval(f, r2));
    const Residue dr_inv = F.inv(F.sub(r1, r2));
    for (Residue s1 : s1s) {
      for (Residue s2 : s2s) {
        const Residue v1 = F.mul(F.sub(s1, s2), dr_inv);
        const Residue v0 = F.sub(s1, F.mul(v1, r1));
        out.push_back({u, FpPoly(std::vector<Residue>{v0, v1})});
      }
    }
  } else {
    // Conjugate roots alpha, alpha^p in F_{p^2}; v(alpha) = beta forces
    // v(alpha^p) = beta^p, so v1 = Im(beta) / Im(alpha).
    const QuadraticExtension& E = c.ext();
    const Elem root_disc = *E.sqrt(E.from_base(disc));
    const Elem alpha = E.mul(E.sub(root_disc, E.from_base(u1)), E.from_base(half));
    const Elem fa = R.eval(E, f, alpha);
    if (fa == Elem{}) {
      out.push_back({u, FpPoly{}});
      return out;
    }
    const auto beta = E.sqrt(fa);
    if (!beta) return out;
    for (const Elem b : {*beta, E.neg(*beta)}) {
      const Residue v1 = F.div(b.hi, alpha.hi);
      const Residue v0 = F.sub(b.lo, F.mul(v1, alpha.lo));
      out.push_back({u, FpPoly(std::vector<Residue>{v0, v1})});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_divisor(const Curve& c, const Divisor& d) {
  if (!c.is_valid(d)) throw Error(Errc::InvalidDivisor, "not a reduced divisor: " + to_string(d));
}

}  // namespace

std::string to_string(const Divisor& d) { return "(" + to_string(d.u) + ", " + to_string(d.v) + ")"; }

Curve::Curve(u64 p, std::span<const i64> f)
    : ring_(PrimeField(p)), ext_(ring_.field()), f_(ring_.from_ints(f)), model_(f_) {
  if (f_.degree() != 5 && f_.degree() != 6) {
    throw Error(Errc::BadDegree, "f must have degree 5 or 6 mod p, got " + std::to_string(f_.degree()));
  }
  if (!ring_.is_squarefree(f_)) throw Error(Errc::NotSquarefree, "f has a repeated root mod p");
  if (f_.degree() == 6) {
    const auto roots = ring_.roots_by_search(f_);
    if (roots.empty()) {
      throw Error(Errc::DegreeSixUnsupported, "degree-6 model without a rational root");
    }
    moved_root_ = roots.front();
    model_ = degree_five_model(ring_, f_, roots.front());
  }
}

bool Curve::is_valid(const Divisor& d) const {
  if (d.u.is_zero() || d.u.lead() != 1 || d.u.degree() > 2) return false;
  if (d.v.degree() >= d.u.degree()) return false;
  for (Residue c : d.u.coeffs) {
    if (c >= p()) return false;
  }
  for (Residue c : d.v.coeffs) {
    if (c >= p()) return false;
  }
  if (d.u.degree() == 0) return true;
  return ring_.rem(ring_.sub(ring_.mul(d.v, d.v), model_), d.u).is_zero();
}

Divisor cantor_add(const Curve& c, const Divisor& d1, const Divisor& d2) {
  check_divisor(c, d1);
  check_divisor(c, d2);
  return add_unchecked(c, d1, d2);
}

Divisor neg(const Curve& c, const Divisor& d) {
  check_divisor(c, d);
  return neg_unchecked(c, d);
}

Divisor scalar_mul(const Curve& c, i64 n, const Divisor& d) {
  check_divisor(c, d);
  Divisor base = n < 0 ? neg_unchecked(c, d) : d;
  u64 k = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
  Divisor acc = c.identity();
  while (k != 0) {
    if (k & 1U) acc = add_unchecked(c, acc, base);
    k >>= 1U;
    if (k != 0) base = add_unchecked(c, base, base);
  }
  return acc;
}

Divisor random_divisor(const Curve& c, Rng& rng) {
  const u64 p = c.p();
  const u64 choices = 1 + p + p * p;
  for (int round = 0; round < 64; ++round) {
    const u64 idx = uniform_below(rng, choices);
    FpPoly u;
    if (idx == 0) {
      u = FpPoly{1};
    } else if (idx <= p) {
      u = FpPoly(std::vector<Residue>{idx - 1, 1});
    } else {
      const u64 k = idx - 1 - p;
      u = FpPoly(std::vector<Residue>{k % p, k / p, 1});
    }
    // At most four classes share a u (two split roots, two signs each).
    const u64 pick = uniform_below(rng, 4);
    auto cands = classes_over(c, u);
    if (pick < cands.size()) return std::move(cands[pick]);
  }
  for (Residue r = 0; r < p; ++r) {
    auto cands = classes_over(c, FpPoly(std::vector<Residue>{c.field().neg(r), 1}));
    if (!cands.empty()) return std::move(cands.front());
  }
  return c.identity();
}

u64 count_points(const Curve& c, int k, u64 max_field_size) {
  if (k != 1 && k != 2) throw Error(Errc::InvalidArgument, "count_points supports k = 1 or 2");
  const PrimeField& F = c.field();
  const u64 p = F.p();
  const u64 q = k == 1 ? p : p * p;
  if ((k == 2 && p > (u64{1} << 32)) || q > max_field_size) {
    throw Error(Errc::BoundExceeded, "field of size p^" + std::to_string(k) + " exceeds the count bound");
  }
  // Quadratic character table on F_p.
  std::vector<signed char> chi(p, -1);
  chi[0] = 0;
  for (u64 y = 1; y <= p / 2; ++y) chi[F.mul(y, y)] = 1;

  const FpPoly& f = c.f();
  u64 affine = 0;
  if (k == 1) {
    for (Residue x = 0; x < p; ++x) affine += static_cast<u64>(1 + chi[c.ring().eval(f, x)]);
  } else {
    const QuadraticExtension& E = c.ext();
    for (Residue hi = 0; hi < p; ++hi) {
      for (Residue lo = 0; lo < p; ++lo) {
        const Elem fx = c.ring().eval(E, f, Elem{lo, hi});
        affine += static_cast<u64>(1 + chi[E.norm(fx)]);
      }
    }
  }
  u64 infinity = 1;
  if (f.degree() == 6) {
    // Every element of F_p is a square in F_{p^2}.
    infinity = (k == 2 || F.legendre(f.lead()) == 1) ? 2 : 0;
  }
  return affine + infinity;
}

WeilPoly char_poly_from_counts(u64 n1, u64 n2, u64 p) {
  // N1 = p + 1 - a1,  N2 = p^2 + 1 - (a1^2 - 2 a2).
  const auto P = static_cast<i128>(p);
  const i128 a1 = P + 1 - static_cast<i128>(n1);
  if (a1 * a1 > 16 * P) {
    throw Error(Errc::InconsistentCounts, "N1 = " + std::to_string(n1) + " violates the Hasse-Weil bound");
  }
  const i128 twice_a2 = static_cast<i128>(n2) - P * P - 1 + a1 * a1;
  if (twice_a2 % 2 != 0) throw Error(Errc::InconsistentCounts, "a2 is not an integer");
  WeilPoly out{p, static_cast<i64>(a1), static_cast<i64>(twice_a2 / 2)};
  if (!weil_validate(out)) {
    throw Error(Errc::InconsistentCounts, "counts give a non-Weil polynomial " + out.to_string());
  }
  return out;
}

WeilPoly weil_poly(const Curve& c, u64 max_field_size) {
  return char_poly_from_counts(count_points(c, 1, max_field_size), count_points(c, 2, max_field_size), c.p());
}

std::vector<Divisor> enumerate_jacobian(const Curve& c, u64 max_p) {
  const u64 p = c.p();
  if (p > max_p) {
    throw Error(Errc::BoundExceeded, "p = " + std::to_string(p) + " exceeds enumeration bound " +
                                         std::to_string(max_p));
  }
  std::vector<Divisor> out{c.identity()};
  for (Residue r = 0; r < p; ++r) {
    for (auto& d : classes_over(c, FpPoly(std::vector<Residue>{r, 1}))) out.push_back(std::move(d));
  }
  for (Residue u1 = 0; u1 < p; ++u1) {
    for (Residue u0 = 0; u0 < p; ++u0) {
      for (auto& d : classes_over(c, FpPoly(std::vector<Residue>{u0, u1, 1}))) out.push_back(std::move(d));
    }
  }
  return out;
}

u64 element_order(const Curve& c, const Divisor& d, u64 n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "group order must be positive");
  if (!scalar_mul(c, static_cast<i64>(n), d).is_identity()) {
    throw Error(Errc::NotAnnihilated, "N * d is not the identity");
  }
  u64 order = n;
  for (const auto& [q, e] : factorize(n)) {
    for (unsigned i = 0; i < e; ++i) {
      if (!scalar_mul(c, static_cast<i64>(order / q), d).is_identity()) break;
      order /= q;
    }
  }
  return order;
}

}  // namespace g2cm
