#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gibsum/integer.hpp"
#include "gibsum/seed.hpp"

namespace gibsum {

// Identity families from the preliminaries: the five fundamental identities,
// generalized Cassini, the gap-two Gibonacci sum, the three F_{4j+c} - 1
// factorizations with their two-parameter family, and the four G_{4j+c}
// difference identities.
enum class IdentityId {
  lucas_from_fib,   // L_n = F_{n+1} + F_{n-1}, n in Z
  fib_doubling,     // F_{2n} = F_n L_n, n in Z
  gib_addition,     // G_{m+n} = F_{m-1} G_n + F_m G_{n+1}, m, n >= 1
  gib_from_fib,     // G_i = G0 F_{i-1} + G1 F_i, i >= 1
  gib_prefix_sum,   // sum_{i=1}^{n} G_i = G_{n+2} - G_2, n >= 1
  cassini,          // G_{n+1} G_{n-1} - G_n^2 = (-1)^n D, n >= 0
  gap_two_sum,      // G_{j-1} + G_{j+1} = G0 L_{j-1} + G1 L_j, j >= 1
  fib_4j1,          // F_{4j+1} - 1 = F_{2j} L_{2j+1}, j >= 0
  fib_4j3,          // F_{4j+3} - 1 = F_{2j+2} L_{2j+1}, j >= 0
  fib_4j4,          // F_{4j+4} - 1 = F_{2j+3} L_{2j+1}, j >= 0
  fib_family,       // F_{4j+r+1} - F_{r-1} = F_{2j+r} L_{2j+1}, j, r in Z
  gib_4j1,          // G_{4j+1} - G_1 = F_{2j} (G_{2j} + G_{2j+2}), j >= 0
  gib_4j2,          // G_{4j+2} - G_2 = F_{2j} (G_{2j+1} + G_{2j+3}), j >= 0
  gib_4j3,          // G_{4j+3} - G_1 = L_{2j+1} G_{2j+2}, j >= 0
  gib_4j4,          // G_{4j+4} - G_2 = L_{2j+1} G_{2j+3}, j >= 0
};

inline constexpr std::int64_t kUnbounded = INT64_MIN;

struct IndexRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

// Term values over a symmetric index window [-reach, reach], built two ways:
// by stepping the recurrence (walk_*) and by fast doubling (fast, fib, lucas).
// Identity sides draw from different builders so a bug in one path cannot
// cancel itself out.
class TermTables {
 public:
  TermTables(const Seed& seed, std::int64_t reach, bool with_seed_terms);

  const Seed& seed() const { return seed_; }
  std::int64_t reach() const { return reach_; }

  const Integer& walk(std::int64_t i) const { return at(walk_, i); }
  const Integer& walk_fib(std::int64_t i) const { return at(walk_fib_, i); }
  const Integer& walk_lucas(std::int64_t i) const { return at(walk_lucas_, i); }
  const Integer& fast(std::int64_t i) const { return at(fast_, i); }
  const Integer& fib(std::int64_t i) const { return at(fib_, i); }
  const Integer& lucas(std::int64_t i) const { return at(lucas_, i); }

 private:
  const Integer& at(const std::vector<Integer>& table, std::int64_t i) const;

  Seed seed_;
  std::int64_t reach_;
  std::vector<Integer> walk_, walk_fib_, walk_lucas_, fast_, fib_, lucas_;
};

using IdentitySide = std::function<Integer(const TermTables&, std::int64_t, std::int64_t)>;

struct IdentitySpec {
  IdentityId id;
  std::string name;
  std::string statement;
  bool seeded = false;         // depends on (G0, G1)
  bool two_parameter = false;  // second index q is meaningful
  std::int64_t primary_min = kUnbounded;
  std::int64_t secondary_min = kUnbounded;
  // Largest |index| an evaluation at |p|, |q| <= M touches is below
  // reach_factor * M + 8.
  std::int64_t reach_factor = 5;
  IdentitySide lhs;
  IdentitySide rhs;
};

struct IdentityFailure {
  std::optional<Seed> seed;
  std::int64_t p = 0;
  std::optional<std::int64_t> q;
  Integer lhs;
  Integer rhs;

  friend bool operator==(const IdentityFailure&, const IdentityFailure&) = default;
};

struct IdentityReport {
  IdentityId id;
  IndexRange primary;
  std::optional<IndexRange> secondary;
  std::size_t seeds_checked = 0;
  std::size_t points_checked = 0;
  std::vector<IdentityFailure> failures;

  bool held() const { return failures.empty(); }
  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

const std::vector<IdentitySpec>& all_identities();
const IdentitySpec& identity_spec(IdentityId id);

std::string to_string(IdentityId id);

// Throws DomainError for an unknown name.
IdentityId identity_from_name(std::string_view name);

// Evaluates both sides exactly at every (seed, p[, q]) point. Requested ranges
// are clipped to the identity's domain; an empty intersection, an empty range
// or an empty seed list is a DomainError. Unseeded identities ignore `seeds`.
IdentityReport verify_identity(const IdentitySpec& spec, IndexRange primary,
                               std::optional<IndexRange> secondary, std::span<const Seed> seeds);

IdentityReport verify_identity(IdentityId id, IndexRange primary,
                               std::optional<IndexRange> secondary, std::span<const Seed> seeds);

}  // namespace gibsum
