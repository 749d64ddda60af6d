#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "gibsum/integer.hpp"
#include "gibsum/seed.hpp"

namespace gibsum {

enum class GcdMethod { closed_gcd, brute_force, lcm_periods };

std::string to_string(GcdMethod method);
GcdMethod gcd_method_from_name(std::string_view name);

// gcd of all sums of k consecutive terms G_n + ... + G_{n+k-1}, n >= 1.
struct GcdSumResult {
  Seed seed;
  std::int64_t k = 1;
  Integer value;
  GcdMethod method = GcdMethod::closed_gcd;
  // lcm_periods with a bounded scan that stopped below the closed-form value:
  // `value` is then only a divisor of the true gcd.
  bool partial = false;

  friend bool operator==(const GcdSumResult&, const GcdSumResult&) = default;
};

// gcd(|G_{k+1} - G_1|, |G_{k+2} - G_2|). Any seed except (0,0); k >= 1.
GcdSumResult gcd_sum(const Seed& seed, std::int64_t k);

// gcd of the first `num_windows` window sums, each summed term by term from a
// recurrence walk. num_windows >= 2.
GcdSumResult gcd_sum_bruteforce(const Seed& seed, std::int64_t k, std::int64_t num_windows);

// Takes the closed-form value v and returns lcm{d | v : pi(d) divides k},
// throwing std::logic_error unless that lcm equals v. Coprime seeds only.
struct DivisorVerified {};

// lcm{m <= bound : pi(m) divides k}. Moduli where the seed vanishes count as
// period 1. Any nonzero seed; bound >= 1.
struct BoundedScan {
  std::uint64_t bound = 1;
};

using LcmMode = std::variant<DivisorVerified, BoundedScan>;

GcdSumResult gcd_sum_lcm(const Seed& seed, std::int64_t k, const LcmMode& mode);

struct ReducedSeed {
  Integer d;     // gcd(g0, g1) >= 1
  Seed reduced;  // (g0 / d, g1 / d), coprime

  friend bool operator==(const ReducedSeed&, const ReducedSeed&) = default;
};

ReducedSeed reduce_seed(const Seed& seed);

// Rows of the k mod 12 summary table.
enum class TableRow { row_048, row_2610, row_39, row_15711 };

enum class Footnote { delta_is_1, delta_is_5, d_is_unit, d_not_unit, none };

std::string to_string(TableRow row);
std::string to_string(Footnote note);
TableRow table_row_from_name(std::string_view name);
Footnote footnote_from_name(std::string_view name);

struct Classification {
  Seed seed;
  std::int64_t k = 1;
  int residue_mod_12 = 1;
  TableRow row = TableRow::row_15711;
  std::optional<Integer> predicted;  // nullopt: the table does not apply
  Footnote footnote = Footnote::none;
  std::string formula;  // e.g. "delta*F_{k/2}"
  Integer actual;       // closed-form gcd
  Integer delta;
  Integer d;

  bool conforms() const { return !predicted || *predicted == actual; }

  friend bool operator==(const Classification&, const Classification&) = default;
};

// Table lookup for a coprime seed. Odd k with |D| != 1 is reported as
// table-inapplicable rather than guessed.
Classification classify(const Seed& seed, std::int64_t k);

}  // namespace gibsum
