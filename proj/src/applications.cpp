#include "gibsum/applications.hpp"

#include <algorithm>

#include "gibsum/error.hpp"
#include "gibsum/factor.hpp"
#include "gibsum/gcdsum.hpp"
#include "gibsum/pisano.hpp"
#include "gibsum/sequences.hpp"

namespace gibsum {

bool is_restricted_residue(const Integer& prime) {
  const unsigned long r = mpz_fdiv_ui(prime.get_mpz_t(), 20);
  return r == 3 || r == 7 || r == 13 || r == 17;
}

PrimeRestrictionReport prime_restriction_check(const Seed& seed, std::int64_t k,
                                               std::uint64_t prime_bound) {
  if (k < 1 || k % 2 == 0) throw DomainError("prime_restriction_check requires odd k >= 1");
  require_coprime(seed, "prime_restriction_check");
  PrimeRestrictionReport report;
  report.seed = seed;
  report.k = k;
  report.value = gcd_sum(seed, k).value;
  TrialDivision td = trial_divide(report.value, prime_bound);
  for (const auto& [p, e] : td.primes) {
    report.primes.push_back(p);
    if (is_restricted_residue(p)) report.offending.push_back(p);
  }
  report.unfactored_cofactor = td.cofactor;
  return report;
}

std::string to_string(ModulusKind kind) {
  return kind == ModulusKind::fibonacci ? "fibonacci" : "lucas";
}

ModulusKind modulus_kind_from_name(std::string_view name) {
  if (name == "fibonacci") return ModulusKind::fibonacci;
  if (name == "lucas") return ModulusKind::lucas;
  throw DomainError("unknown modulus kind '" + std::string(name) + "'");
}

std::vector<ModulusPeriodEntry> pisano_of_fib_lucas_moduli(std::int64_t i_max) {
  if (i_max < 5) throw DomainError("pisano_of_fib_lucas_moduli requires i_max >= 5");
  const Seed f = fibonacci_seed();
  std::vector<ModulusPeriodEntry> out;
  for (std::int64_t i = 4; i <= i_max; ++i) {
    Integer m = fib(i);
    Integer predicted = from_i64(i % 2 == 0 ? 2 * i : 4 * i);
    Integer computed = pisano_period(f, m);
    out.push_back({ModulusKind::fibonacci, i, std::move(m), std::move(predicted), std::move(computed)});
  }
  for (std::int64_t i = 2; i <= i_max; ++i) {
    Integer m = lucas(i);
    Integer predicted = from_i64(i % 2 == 0 ? 4 * i : 2 * i);
    Integer computed = pisano_period(f, m);
    out.push_back({ModulusKind::lucas, i, std::move(m), std::move(predicted), std::move(computed)});
  }
  return out;
}

std::string to_string(HalfForm form) {
  return form == HalfForm::fib_half ? "fib_half" : "lucas_half";
}

HalfForm half_form_from_name(std::string_view name) {
  if (name == "fib_half") return HalfForm::fib_half;
  if (name == "lucas_half") return HalfForm::lucas_half;
  throw DomainError("unknown half form '" + std::string(name) + "'");
}

bool MaxModulusResult::holds() const {
  return m_f == form_value && verified_period == from_i64(k) &&
         (!exhaustive_run || exhaustive_check);
}

MaxModulusResult max_modulus_for_period(std::int64_t k, bool exhaustive) {
  if (k < 6 || k % 2 != 0) throw DomainError("max_modulus_for_period requires even k >= 6");
  const Seed f = fibonacci_seed();
  MaxModulusResult r;
  r.k = k;
  r.m_f = gcd_sum(f, k).value;
  r.predicted_form = k % 4 == 0 ? HalfForm::fib_half : HalfForm::lucas_half;
  r.form_value = r.predicted_form == HalfForm::fib_half ? fib(k / 2) : lucas(k / 2);
  r.verified_period = pisano_period(f, r.m_f);
  if (!exhaustive) return r;

  // Any m with pi_F(m) = k divides the gcd-sum, so its divisors are the whole
  // candidate set.
  r.exhaustive_run = true;
  const Integer kk = from_i64(k);
  bool all_divide = true;
  const std::vector<Integer> divs = divisors(r.m_f);
  r.divisors_examined = divs.size();
  for (const Integer& d : divs) {
    const Integer p = pisano_period(f, d);
    if (kk % p != 0) all_divide = false;
    if (p == kk) r.moduli_with_period_k.push_back(d);
  }
  r.exhaustive_check = all_divide && !r.moduli_with_period_k.empty() &&
                       r.moduli_with_period_k.back() == r.m_f;
  return r;
}

Integer lucas_from_gcd(const Seed& seed, std::int64_t j) {
  if (j < 1 || j % 2 == 0) throw DomainError("lucas_from_gcd requires odd j >= 1");
  require_coprime(seed, "lucas_from_gcd");
  auto [a, b] = gib_pair(seed, 2 * j + 1);  // (G_{2j+1}, G_{2j+2})
  return gcd(a - seed.g1, b - (seed.g0 + seed.g1));
}

std::optional<bool> SquaresGcdRecord::matches_conjecture() const {
  if (!conjectured) return std::nullopt;
  return *conjectured == empirical_value;
}

std::int64_t default_square_windows(std::int64_t k) { return std::max<std::int64_t>(2 * k + 10, 50); }

std::vector<Integer> squares_gcd_progression(const Seed& seed, std::int64_t k,
                                             std::int64_t num_windows) {
  if (k < 0) throw DomainError("squares_gcd requires k >= 0");
  if (num_windows < 1) throw DomainError("squares_gcd requires num_windows >= 1");
  if (k == 0) return std::vector<Integer>(static_cast<std::size_t>(num_windows), Integer(0));

  const auto count = static_cast<std::size_t>(num_windows + k - 1);
  std::vector<Integer> squares(count);
  Integer prev = seed.g0, cur = seed.g1;
  for (std::size_t i = 0; i < count; ++i) {
    squares[i] = cur * cur;  // G_{i+1}^2
    Integer next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  const auto len = static_cast<std::size_t>(k);
  Integer window = 0;
  for (std::size_t i = 0; i < len; ++i) window += squares[i];
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(num_windows));
  Integer acc = window;
  out.push_back(acc);
  for (std::size_t start = 1; start < static_cast<std::size_t>(num_windows); ++start) {
    window += squares[start + len - 1];
    window -= squares[start - 1];
    acc = gcd(acc, window);
    out.push_back(acc);
  }
  return out;
}

SquaresGcdRecord squares_gcd(const Seed& seed, std::int64_t k, std::int64_t num_windows) {
  if (k >= 1 && num_windows < 2) throw DomainError("squares_gcd requires num_windows >= 2");
  SquaresGcdRecord r;
  r.seed = seed;
  r.k = k;
  r.windows_used = num_windows;
  r.empirical_value = squares_gcd_progression(seed, k, std::max<std::int64_t>(num_windows, 1)).back();
  if (seed == fibonacci_seed() && k % 2 == 0) r.conjectured = fib(k);
  return r;
}

}  // namespace gibsum
