#pragma once

#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "gibsum/integer.hpp"
#include "gibsum/seed.hpp"

namespace gibsum {

// (seed, m, pi_{G0,G1}(m)).
struct PeriodRecord {
  Seed seed;
  std::uint64_t modulus = 1;
  std::uint64_t period = 1;

  friend bool operator==(const PeriodRecord&, const PeriodRecord&) = default;
};

// Period memo keyed by the canonical residue pair and the modulus; the period
// depends on nothing else. Safe for concurrent readers and writers.
class PeriodCache {
 public:
  std::optional<std::uint64_t> find(std::uint64_t r0, std::uint64_t r1, std::uint64_t m) const;
  void insert(std::uint64_t r0, std::uint64_t r1, std::uint64_t m, std::uint64_t period);
  void clear();
  std::size_t size() const;

 private:
  struct Key {
    std::uint64_t r0, r1, m;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, std::uint64_t, KeyHash> entries_;
};

// Process-wide cache used by pisano_period().
PeriodCache& default_period_cache();

// Least r >= 1 with (G_r, G_{r+1}) == (G_0, G_1) mod m, found by stepping
// residue pairs. pi(1) = 1 by convention. Throws DomainError for m = 0 or
// when G0 == G1 == 0 (mod m) with m >= 2.
std::uint64_t pisano_period(const Seed& seed, std::uint64_t m);

// Same search without touching any cache.
std::uint64_t pisano_period_uncached(const Seed& seed, std::uint64_t m);

// Arbitrary-size modulus. Moduli below 2^63 take the 64-bit path.
Integer pisano_period(const Seed& seed, const Integer& m);

// True when G0 == G1 == 0 (mod m); such moduli have no defined period.
bool degenerate_mod(const Seed& seed, std::uint64_t m);

PeriodRecord period_record(const Seed& seed, std::uint64_t m);

// pi(m) | k. Requires m >= 2, k >= 1.
bool period_divides_k(const Seed& seed, std::uint64_t m, std::uint64_t k);

// Least s in [1, search_cap] such that m divides every s-term window sum.
// "Every window" is certified over one full residue period of start indices.
// Throws DomainError when no s <= search_cap qualifies.
std::uint64_t minimal_window_length(const Seed& seed, std::uint64_t m, std::uint64_t search_cap);

struct ParityScanReport {
  Seed seed;
  std::uint64_t m_max = 0;
  std::vector<PeriodRecord> odd_period_moduli;  // m > 2 with odd period
  std::vector<std::uint64_t> degenerate_moduli;  // skipped: seed == (0,0) mod m

  friend bool operator==(const ParityScanReport&, const ParityScanReport&) = default;
};

// Scans m in (2, m_max]. Requires m_max >= 3.
ParityScanReport parity_scan(const Seed& seed, std::uint64_t m_max);

// Least shift r in [0, pi) with G_{r+n} == G'_n (mod m) for all n, provided the
// two periods agree; nullopt otherwise. Requires m >= 2 and both residue
// sequences non-degenerate.
std::optional<std::uint64_t> equivalent_up_to_shift(const Seed& a, const Seed& b, std::uint64_t m);

// lcm(pi(m1), pi(m2)) for coprime m1, m2, checked against pi(m1 m2).
// Throws DomainError when gcd(m1, m2) != 1 and std::logic_error on mismatch.
std::uint64_t period_lcm_compose(const Seed& seed, std::uint64_t m1, std::uint64_t m2);

}  // namespace gibsum
