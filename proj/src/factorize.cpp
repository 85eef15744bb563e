#include "g2cm/error.hpp"
#include "g2cm/number_theory.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace g2cm {
namespace {

constexpr u64 kTrialLimit = 1'000'000;

u64 brent_rho(u64 n, Rng& rng) {
  if (n % 2 == 0) return 2;
  while (true) {
    const u64 c = 1 + uniform_below(rng, n - 1);
    u64 y = uniform_below(rng, n);
    const u64 m = 128;
    u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
    auto step = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      u64 k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(u64 n, Rng& rng, std::map<u64, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const u64 d = brent_rho(n, rng);
  split(d, rng, out);
  split(n / d, rng, out);
}

}  // namespace

Factorization factorize(u64 n, u64 seed) {
  if (n == 0) throw Error(Errc::InvalidArgument, "cannot factor 0");
  std::map<u64, unsigned> found;
  for (u64 q = 2; q <= kTrialLimit && q * q <= n; q += (q == 2 ? 1 : 2)) {
    while (n % q == 0) {
      ++found[q];
      n /= q;
    }
  }
  if (n > 1) {
    Rng rng(seed);
    split(n, rng, found);
  }
  Factorization out;
  for (auto [q, e] : found) out.push_back({q, e});
  return out;
}

u64 expand(const Factorization& f) {
  u64 n = 1;
  for (const auto& pp : f) {
    for (unsigned i = 0; i < pp.exponent; ++i) n *= pp.prime;
  }
  return n;
}

unsigned valuation(u64 n, u64 q) {
  unsigned v = 0;
  while (n != 0 && n % q == 0) {
    n /= q;
    ++v;
  }
  return v;
}

}  // namespace g2cm
