#include "g2cm/group.hpp"

#include <algorithm>

#include "g2cm/error.hpp"

namespace g2cm {
namespace {

u64 ipow(u64 base, unsigned e) {
  u64 r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

/// Returns r with ell^r = n, or -1.
int exact_log(u64 n, u64 ell) {
  int r = 0;
  while (n > 1) {
    if (n % ell != 0) return -1;
    n /= ell;
    ++r;
  }
  return n == 1 ? r : -1;
}

/// ell-adic valuation of the order of d, given the cofactor N / ell^v.
unsigned ell_exponent(const Curve& c, const Divisor& d, u64 ell, u64 cofactor) {
  Divisor y = scalar_mul(c, static_cast<i64>(cofactor), d);
  unsigned e = 0;
  while (!y.is_identity()) {
    y = scalar_mul(c, static_cast<i64>(ell), y);
    ++e;
  }
  return e;
}

TorsionProfile::Prime profile_prime(const Curve& c, const std::vector<Divisor>& elems, u64 n, u64 ell,
                                    unsigned v) {
  const u64 cofactor = n / ipow(ell, v);
  std::vector<u64> hist(v + 1, 0);
  for (const auto& d : elems) {
    const unsigned e = ell_exponent(c, d, ell, cofactor);
    if (e > v) throw Error(Errc::InvalidArgument, "element order exceeds the ell-part of N");
    ++hist[e];
  }
  TorsionProfile::Prime out{ell, v, {}};
  u64 cumulative = 0;
  for (unsigned j = 0; j <= v; ++j) {
    cumulative += hist[j];
    // {x : ell-part of ord(x) | ell^j} = Sylow[ell^j] x (prime-to-ell part).
    if (cumulative % cofactor != 0) throw Error(Errc::InvalidArgument, "torsion count not divisible");
    out.killed.push_back(cumulative / cofactor);
  }
  return out;
}

}  // namespace

int GroupStructure::rank() const noexcept {
  return static_cast<int>(std::count_if(invariant_factors.begin(), invariant_factors.end(),
                                        [](u64 n) { return n != 1; }));
}

bool GroupStructure::divisibility_chain_holds() const noexcept {
  for (size_t i = 0; i + 1 < invariant_factors.size(); ++i) {
    if (invariant_factors[i] == 0 || invariant_factors[i + 1] % invariant_factors[i] != 0) return false;
  }
  return true;
}

bool GroupStructure::n2_divides(u64 p_minus_1) const noexcept { return p_minus_1 % invariant_factors[1] == 0; }

TorsionProfile torsion_profile(const Curve& c, u64 max_p) {
  const auto elems = enumerate_jacobian(c, max_p);
  TorsionProfile out;
  out.order = elems.size();
  out.factorization = factorize(out.order);
  for (const auto& [ell, v] : out.factorization) {
    out.primes.push_back(profile_prime(c, elems, out.order, ell, v));
  }
  return out;
}

GroupStructure structure_from_profile(const TorsionProfile& profile) {
  GroupStructure s;
  s.order = profile.order;
  for (const auto& pr : profile.primes) {
    // ranks[j] = log_ell #S[ell^j]; parts of size >= j number ranks[j] - ranks[j-1].
    std::vector<int> ranks;
    for (u64 k : pr.killed) {
      const int r = exact_log(k, pr.ell);
      if (r < 0) throw Error(Errc::InvalidArgument, "torsion count is not a power of ell");
      ranks.push_back(r);
    }
    std::array<unsigned, 4> parts{0, 0, 0, 0};  // descending exponents
    for (size_t j = 1; j < ranks.size(); ++j) {
      const int at_least_j = ranks[j] - ranks[j - 1];
      if (at_least_j < 0 || at_least_j > 4) throw Error(Errc::InvalidArgument, "ell-torsion rank exceeds four");
      for (int i = 0; i < at_least_j; ++i) ++parts[static_cast<size_t>(i)];
    }
    // parts[0] >= parts[1] >= ...; the largest goes into n4.
    for (size_t i = 0; i < 4; ++i) s.invariant_factors[3 - i] *= ipow(pr.ell, parts[i]);
  }
  u64 product = 1;
  for (u64 n : s.invariant_factors) product *= n;
  if (product != s.order) throw Error(Errc::InvalidArgument, "invariant factors do not multiply to the order");
  return s;
}

GroupStructure group_structure(const Curve& c, u64 max_p) {
  return structure_from_profile(torsion_profile(c, max_p));
}

SylowReport sylow_from_profile(const TorsionProfile& profile, u64 ell) {
  SylowReport out;
  out.ell = ell;
  for (const auto& pr : profile.primes) {
    if (pr.ell != ell) continue;
    out.valuation = pr.valuation;
    const int r = pr.killed.size() > 1 ? exact_log(pr.killed[1], ell) : 0;
    if (r < 0 || r > 4) throw Error(Errc::InvalidArgument, "ell-torsion count is not ell^r with r <= 4");
    out.rank = static_cast<unsigned>(r);
  }
  out.cyclic = out.rank <= 1;
  return out;
}

SylowReport sylow_rank(const Curve& c, u64 ell, u64 max_p) {
  if (!is_prime(ell)) throw Error(Errc::NotPrime, std::to_string(ell) + " is not prime");
  const auto elems = enumerate_jacobian(c, max_p);
  const u64 n = elems.size();
  const unsigned v = valuation(n, ell);
  SylowReport out;
  out.ell = ell;
  out.valuation = v;
  if (v == 0) return out;
  TorsionProfile profile;
  profile.order = n;
  profile.primes.push_back(profile_prime(c, elems, n, ell, v));
  out = sylow_from_profile(profile, ell);
  if (out.cyclic) {
    const u64 cofactor = n / ipow(ell, v);
    for (const auto& d : elems) {
      if (ell_exponent(c, d, ell, cofactor) == v) {
        out.generator = scalar_mul(c, static_cast<i64>(cofactor), d);
        break;
      }
    }
  }
  return out;
}

EmbeddingDegreeReport embedding_degree(u64 p, u64 ell) {
  if (!is_prime(ell)) throw Error(Errc::NotPrime, std::to_string(ell) + " is not prime");
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p == ell) throw Error(Errc::EllEqualsP, "embedding degree needs ell != p");
  u64 k = ell - 1;
  if (k == 0) return {ell, 1};
  for (const auto& [q, e] : factorize(ell - 1)) {
    for (unsigned i = 0; i < e && powmod(p, k / q, ell) == 1; ++i) k /= q;
  }
  return {ell, k};
}

bool has_order_prime_power(const Curve& c, const Divisor& d, u64 ell, unsigned v) {
  if (v == 0) return d.is_identity();
  const Divisor almost = scalar_mul(c, static_cast<i64>(ipow(ell, v - 1)), d);
  return !almost.is_identity() && scalar_mul(c, static_cast<i64>(ell), almost).is_identity();
}

std::optional<Divisor> sylow_trial(const Curve& c, u64 ell, u64 n, Rng& rng) {
  const unsigned v = valuation(n, ell);
  if (v == 0) throw Error(Errc::TrivialSylow, std::to_string(ell) + " does not divide the group order");
  const u64 cofactor = n / ipow(ell, v);
  Divisor g = scalar_mul(c, static_cast<i64>(cofactor), random_divisor(c, rng));
  if (has_order_prime_power(c, g, ell, v)) return g;
  return std::nullopt;
}

std::string_view to_string(SylowSearchResult::Status s) noexcept {
  switch (s) {
    case SylowSearchResult::Status::Found: return "found";
    case SylowSearchResult::Status::NotCyclic: return "not-cyclic";
    case SylowSearchResult::Status::Exhausted: return "exhausted";
  }
  return "unknown";
}

SylowSearchResult sylow_generator_search(const Curve& c, u64 ell, u64 max_trials, Rng& rng, u64 max_p) {
  if (!is_prime(ell)) throw Error(Errc::NotPrime, std::to_string(ell) + " is not prime");
  const auto n = weil_poly(c).at_one();
  const auto order = static_cast<u64>(n);
  SylowSearchResult out;
  out.valuation = valuation(order, ell);
  if (out.valuation == 0) throw Error(Errc::TrivialSylow, std::to_string(ell) + " does not divide the group order");
  if (c.p() <= max_p && !sylow_rank(c, ell, max_p).cyclic) {
    out.status = SylowSearchResult::Status::NotCyclic;
    return out;
  }
  while (out.trials < max_trials) {
    ++out.trials;
    if (auto g = sylow_trial(c, ell, order, rng)) {
      out.status = SylowSearchResult::Status::Found;
      out.generator = std::move(g);
      return out;
    }
  }
  out.status = SylowSearchResult::Status::Exhausted;
  return out;
}

QBoundVerdict q_bound_check(const CMField& field, const FrobeniusElement& w, const GroupStructure& s) {
  QBoundVerdict out;
  out.q = q_bound(field);
  const u64 n2 = s.invariant_factors[1];
  if (n2 <= 1) return out;
  for (const auto& [ell, e] : factorize(n2)) {
    if (ell == 2) continue;
    QBoundVerdict::Entry entry;
    entry.ell = ell;
    entry.within_bound = static_cast<i64>(ell) <= out.q;
    entry.above_D = static_cast<i64>(ell) > field.D();
    if (entry.above_D) {
      const auto L = static_cast<i64>(ell);
      entry.congruences_hold = ((w.c1 - 1) % L + L) % L == 0 && w.c2 % L == 0;
    }
    out.holds = out.holds && entry.within_bound && entry.congruences_hold;
    out.entries.push_back(entry);
  }
  return out;
}

}  // namespace g2cm
