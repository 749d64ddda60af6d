#include "gibsum/gcdsum.hpp"

#include <array>
#include <stdexcept>

#include "gibsum/error.hpp"
#include "gibsum/factor.hpp"
#include "gibsum/pisano.hpp"
#include "gibsum/scan.hpp"
#include "gibsum/sequences.hpp"

namespace gibsum {
namespace {

void require_window_length(std::int64_t k) {
  if (k < 1) throw DomainError("k must be >= 1 (k = 0 is an empty window)");
}

template <typename Enum, std::size_t N>
Enum enum_from_name(std::string_view name, const std::array<std::pair<Enum, const char*>, N>& table,
                    const char* what) {
  for (const auto& [value, text] : table) {
    if (name == text) return value;
  }
  throw DomainError(std::string("unknown ") + what + " '" + std::string(name) + "'");
}

template <typename Enum, std::size_t N>
std::string enum_name(Enum value, const std::array<std::pair<Enum, const char*>, N>& table) {
  for (const auto& [v, text] : table) {
    if (v == value) return text;
  }
  throw std::logic_error("unnamed enumerator");
}

constexpr std::array<std::pair<GcdMethod, const char*>, 3> kMethods{{
    {GcdMethod::closed_gcd, "closed_gcd"},
    {GcdMethod::brute_force, "brute_force"},
    {GcdMethod::lcm_periods, "lcm_periods"},
}};

constexpr std::array<std::pair<TableRow, const char*>, 4> kRows{{
    {TableRow::row_048, "row_048"},
    {TableRow::row_2610, "row_2610"},
    {TableRow::row_39, "row_39"},
    {TableRow::row_15711, "row_15711"},
}};

constexpr std::array<std::pair<Footnote, const char*>, 5> kFootnotes{{
    {Footnote::delta_is_1, "delta_is_1"},
    {Footnote::delta_is_5, "delta_is_5"},
    {Footnote::d_is_unit, "d_is_unit"},
    {Footnote::d_not_unit, "d_not_unit"},
    {Footnote::none, "none"},
}};

Integer lcm_over_divisors(const Seed& seed, std::int64_t k, const Integer& candidate) {
  const Integer kk = from_i64(k);
  Integer acc = 1;
  for (const Integer& d : divisors(candidate)) {
    const Integer period = pisano_period(seed, d);
    if (kk % period == 0) acc = lcm(acc, d);
  }
  return acc;
}

Integer lcm_over_scan(const Seed& seed, std::int64_t k, std::uint64_t bound) {
  const std::vector<std::uint64_t> periods = scan::period_table(seed, 1, bound);
  const auto kk = static_cast<std::uint64_t>(k);
  Integer acc = 1;
  for (std::uint64_t m = 1; m <= bound; ++m) {
    const std::uint64_t p = periods[m - 1];
    // p == 0: every term is 0 mod m, so m divides every window sum.
    if (p == 0 || kk % p == 0) acc = lcm(acc, from_u64(m));
  }
  return acc;
}

}  // namespace

std::string to_string(GcdMethod method) { return enum_name(method, kMethods); }
GcdMethod gcd_method_from_name(std::string_view name) {
  return enum_from_name(name, kMethods, "gcd method");
}
std::string to_string(TableRow row) { return enum_name(row, kRows); }
std::string to_string(Footnote note) { return enum_name(note, kFootnotes); }
TableRow table_row_from_name(std::string_view name) {
  return enum_from_name(name, kRows, "table row");
}
Footnote footnote_from_name(std::string_view name) {
  return enum_from_name(name, kFootnotes, "footnote");
}

GcdSumResult gcd_sum(const Seed& seed, std::int64_t k) {
  require_nondegenerate(seed);
  require_window_length(k);
  auto [g_k1, g_k2] = gib_pair(seed, k + 1);
  const Integer g2 = seed.g0 + seed.g1;
  return {seed, k, gcd(g_k1 - seed.g1, g_k2 - g2), GcdMethod::closed_gcd, false};
}

GcdSumResult gcd_sum_bruteforce(const Seed& seed, std::int64_t k, std::int64_t num_windows) {
  require_nondegenerate(seed);
  require_window_length(k);
  if (num_windows < 2) throw DomainError("brute force needs num_windows >= 2");

  // terms[i] = G_{i+1}, i.e. G_1 .. G_{num_windows + k - 1}.
  const auto count = static_cast<std::size_t>(num_windows + k - 1);
  std::vector<Integer> terms(count);
  Integer prev = seed.g0, cur = seed.g1;
  for (std::size_t i = 0; i < count; ++i) {
    terms[i] = cur;
    Integer next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }

  const auto len = static_cast<std::size_t>(k);
  Integer window = 0;
  for (std::size_t i = 0; i < len; ++i) window += terms[i];
  Integer acc = abs(window);
  for (std::size_t start = 1; start < static_cast<std::size_t>(num_windows); ++start) {
    window += terms[start + len - 1];
    window -= terms[start - 1];
    acc = gcd(acc, window);
  }
  return {seed, k, acc, GcdMethod::brute_force, false};
}

GcdSumResult gcd_sum_lcm(const Seed& seed, std::int64_t k, const LcmMode& mode) {
  require_nondegenerate(seed);
  require_window_length(k);
  GcdSumResult out{seed, k, 1, GcdMethod::lcm_periods, false};
  if (std::holds_alternative<DivisorVerified>(mode)) {
    require_coprime(seed, "gcd_sum_lcm(divisor_verified)");
    const Integer candidate = gcd_sum(seed, k).value;
    out.value = lcm_over_divisors(seed, k, candidate);
    if (out.value != candidate) {
      throw std::logic_error("lcm over period-dividing divisors " + to_string(out.value) +
                             " differs from closed form " + to_string(candidate) + " for seed (" +
                             to_string(seed) + "), k = " + std::to_string(k));
    }
    return out;
  }
  const std::uint64_t bound = std::get<BoundedScan>(mode).bound;
  if (bound < 1) throw DomainError("bounded_scan needs bound >= 1");
  out.value = lcm_over_scan(seed, k, bound);
  out.partial = from_u64(bound) < gcd_sum(seed, k).value;
  return out;
}

ReducedSeed reduce_seed(const Seed& seed) {
  require_nondegenerate(seed);
  Integer d = gcd(seed.g0, seed.g1);
  Integer a, b;
  mpz_divexact(a.get_mpz_t(), seed.g0.get_mpz_t(), d.get_mpz_t());
  mpz_divexact(b.get_mpz_t(), seed.g1.get_mpz_t(), d.get_mpz_t());
  return {std::move(d), Seed(std::move(a), std::move(b))};
}

Classification classify(const Seed& seed, std::int64_t k) {
  require_coprime(seed, "classify");
  require_window_length(k);
  const SeedInvariants inv = seed_invariants(seed);

  Classification c;
  c.seed = seed;
  c.k = k;
  c.residue_mod_12 = static_cast<int>(k % 12);
  c.actual = gcd_sum(seed, k).value;
  c.delta = inv.delta;
  c.d = inv.d;
  const bool d_unit = abs(inv.d) == 1;

  switch (c.residue_mod_12) {
    case 0:
    case 4:
    case 8:
      c.row = TableRow::row_048;
      c.formula = "delta*F_{k/2}";
      c.predicted = Integer(inv.delta * fib(k / 2));
      c.footnote = inv.delta == 1 ? Footnote::delta_is_1 : Footnote::delta_is_5;
      break;
    case 2:
    case 6:
    case 10:
      c.row = TableRow::row_2610;
      c.formula = "L_{k/2}";
      c.predicted = lucas(k / 2);
      c.footnote = Footnote::none;
      break;
    case 3:
    case 9:
      c.row = TableRow::row_39;
      c.formula = "2";
      c.footnote = d_unit ? Footnote::d_is_unit : Footnote::d_not_unit;
      if (d_unit) c.predicted = Integer(2);
      break;
    default:
      c.row = TableRow::row_15711;
      c.formula = "1";
      c.footnote = d_unit ? Footnote::d_is_unit : Footnote::d_not_unit;
      if (d_unit) c.predicted = Integer(1);
      break;
  }
  return c;
}

}  // namespace gibsum
