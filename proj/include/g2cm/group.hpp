#pragma once

#include <array>
#include <optional>
#include <vector>

#include "g2cm/cm.hpp"
#include "g2cm/jacobian.hpp"
#include "g2cm/number_theory.hpp"

namespace g2cm {

/// Jac(C)(F_p) = Z/n1 x Z/n2 x Z/n3 x Z/n4 with n1 | n2 | n3 | n4. Always four
/// factors; unused leading ones are 1.
struct GroupStructure {
  std::array<u64, 4> invariant_factors{1, 1, 1, 1};
  u64 order = 1;

  /// Number of nontrivial invariant factors.
  int rank() const noexcept;
  bool divisibility_chain_holds() const noexcept;
  /// n2 | p - 1.
  bool n2_divides(u64 p_minus_1) const noexcept;
  bool operator==(const GroupStructure&) const = default;
};

/// Per-prime torsion data gathered from a full enumeration.
struct TorsionProfile {
  struct Prime {
    u64 ell = 0;
    unsigned valuation = 0;
    /// killed[j] = #Jac(C)(F_p)[ell^j] for j = 0..valuation.
    std::vector<u64> killed;
  };

  u64 order = 0;
  Factorization factorization;
  std::vector<Prime> primes;
};

/// Enumerates the Jacobian and records, for each prime ell | N, how many
/// elements each ell^j kills.
TorsionProfile torsion_profile(const Curve& c, u64 max_p = kDefaultEnumerationBound);
GroupStructure structure_from_profile(const TorsionProfile& profile);
GroupStructure group_structure(const Curve& c, u64 max_p = kDefaultEnumerationBound);

struct SylowReport {
  u64 ell = 0;
  unsigned valuation = 0;
  /// #Jac(C)(F_p)[ell] = ell^rank.
  unsigned rank = 0;
  bool cyclic = true;
  /// Element of order exactly ell^valuation, when the Sylow subgroup is cyclic.
  std::optional<Divisor> generator;
};

SylowReport sylow_from_profile(const TorsionProfile& profile, u64 ell);
SylowReport sylow_rank(const Curve& c, u64 ell, u64 max_p = kDefaultEnumerationBound);

struct EmbeddingDegreeReport {
  u64 ell = 0;
  u64 k = 0;
};

/// Multiplicative order of p mod ell.
EmbeddingDegreeReport embedding_degree(u64 p, u64 ell);

/// True iff ell^v d = 0 and ell^(v-1) d != 0.
bool has_order_prime_power(const Curve& c, const Divisor& d, u64 ell, unsigned v);

/// One draw of the generator search: a random element pushed into the
/// ell-Sylow subgroup by multiplying with N / ell^v. Returns it when its order
/// is ell^v.
std::optional<Divisor> sylow_trial(const Curve& c, u64 ell, u64 n, Rng& rng);

struct SylowSearchResult {
  enum class Status { Found, NotCyclic, Exhausted };
  Status status = Status::Exhausted;
  std::optional<Divisor> generator;
  u64 trials = 0;
  unsigned valuation = 0;
};

std::string_view to_string(SylowSearchResult::Status s) noexcept;

/// Random search for a generator of a cyclic ell-Sylow subgroup. When p is
/// within the enumeration bound, a non-cyclic subgroup is detected up front.
SylowSearchResult sylow_generator_search(const Curve& c, u64 ell, u64 max_trials, Rng& rng,
                                         u64 max_p = kDefaultEnumerationBound);

/// Bound check for the odd primes dividing n2: each must be at most Q, and
/// those above D must satisfy c1 = 1, c2 = 0 mod ell. Only meaningful when the
/// structure really belongs to a curve whose Frobenius is w.
struct QBoundVerdict {
  struct Entry {
    u64 ell = 0;
    bool within_bound = false;
    bool above_D = false;
    bool congruences_hold = true;
  };
  i64 q = 0;
  std::vector<Entry> entries;
  bool holds = true;
};

QBoundVerdict q_bound_check(const CMField& field, const FrobeniusElement& w, const GroupStructure& s);

}  // namespace g2cm
