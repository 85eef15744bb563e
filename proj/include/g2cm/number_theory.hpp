#pragma once

#include <cstdint>
#include <random>

namespace g2cm {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

/// Random source threaded explicitly through every randomized operation.
using Rng = std::mt19937_64;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

/// floor(sqrt(n)).
u64 isqrt(u64 n);

/// Exact floor(sqrt(n)) for non-negative 128-bit n.
u128 isqrt128(u128 n);

bool is_perfect_square(i128 n);

/// Uniform draw from [0, bound) by rejection; bound > 0. Independent of
/// the standard library's distribution implementations, so streams are
/// reproducible across toolchains.
u64 uniform_below(Rng& rng, u64 bound);

/// SplitMix64 finalizer, used to derive per-instance seeds.
u64 mix64(u64 x);

}  // namespace g2cm

#include <vector>

namespace g2cm {

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

/// Ascending by prime.
using Factorization = std::vector<PrimePower>;

/// Complete factorization of 1 <= n < 2^64: trial division up to 10^6, then
/// Pollard rho with Brent's cycle detection. Deterministic for a given seed.
Factorization factorize(u64 n, u64 seed = 0);

u64 expand(const Factorization& f);

/// Exponent of the prime q in n (n > 0).
unsigned valuation(u64 n, u64 q);

}  // namespace g2cm
