#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gibsum/integer.hpp"
#include "gibsum/seed.hpp"

namespace gibsum {

// Odd k: primes p == 3, 7, 13, 17 (mod 20) never divide gcd_sum(seed, k).
struct PrimeRestrictionReport {
  Seed seed;
  std::int64_t k = 1;
  Integer value;                    // gcd_sum(seed, k)
  std::vector<Integer> primes;      // distinct proven prime factors found
  std::vector<Integer> offending;   // subset == 3, 7, 13, 17 (mod 20); expected empty
  Integer unfactored_cofactor = 1;  // part left unsplit by trial division

  friend bool operator==(const PrimeRestrictionReport&, const PrimeRestrictionReport&) = default;
};

bool is_restricted_residue(const Integer& prime);

// Requires odd k >= 1 and a coprime seed.
PrimeRestrictionReport prime_restriction_check(const Seed& seed, std::int64_t k,
                                               std::uint64_t prime_bound = 1000000);

enum class ModulusKind { fibonacci, lucas };

std::string to_string(ModulusKind kind);
ModulusKind modulus_kind_from_name(std::string_view name);

struct ModulusPeriodEntry {
  ModulusKind kind = ModulusKind::fibonacci;
  std::int64_t i = 0;
  Integer modulus;  // F_i or L_i
  Integer predicted;
  Integer computed;  // pi_F(modulus)

  bool matches() const { return predicted == computed; }
  friend bool operator==(const ModulusPeriodEntry&, const ModulusPeriodEntry&) = default;
};

// pi_F(F_i) for 4 <= i <= i_max and pi_F(L_i) for 2 <= i <= i_max against
//   pi_F(F_i) = 2i (even i), 4i (odd i);  pi_F(L_i) = 4i (even i), 2i (odd i).
// Requires i_max >= 5.
std::vector<ModulusPeriodEntry> pisano_of_fib_lucas_moduli(std::int64_t i_max);

enum class HalfForm { fib_half, lucas_half };

std::string to_string(HalfForm form);
HalfForm half_form_from_name(std::string_view name);

struct MaxModulusResult {
  std::int64_t k = 6;
  Integer m_f;  // Fibonacci gcd-sum for k
  HalfForm predicted_form = HalfForm::fib_half;
  Integer form_value;       // F_{k/2} or L_{k/2}, per predicted_form
  Integer verified_period;  // pi_F(m_f)
  bool exhaustive_run = false;
  // Every divisor d of m_f has pi_F(d) | k, and m_f is the largest with pi_F = k.
  bool exhaustive_check = false;
  std::size_t divisors_examined = 0;
  std::vector<Integer> moduli_with_period_k;  // divisors m of m_f with pi_F(m) = k

  bool holds() const;
  friend bool operator==(const MaxModulusResult&, const MaxModulusResult&) = default;
};

// Largest m with pi_F(m) = k, for even k >= 6. With `exhaustive`, every
// divisor of the gcd-sum is examined.
MaxModulusResult max_modulus_for_period(std::int64_t k, bool exhaustive);

// gcd(|G_{2j+1} - G_1|, |G_{2j+2} - G_2|), which equals L_j for odd j and a
// coprime seed.
Integer lucas_from_gcd(const Seed& seed, std::int64_t j);

// Empirical only: no closed form is known for sums of squares.
struct SquaresGcdRecord {
  Seed seed;
  std::int64_t k = 0;
  Integer empirical_value;
  std::int64_t windows_used = 0;
  std::optional<Integer> conjectured;  // F_k for the Fibonacci seed and even k

  std::optional<bool> matches_conjecture() const;
  friend bool operator==(const SquaresGcdRecord&, const SquaresGcdRecord&) = default;
};

std::int64_t default_square_windows(std::int64_t k);

// gcd of the first num_windows sums G_n^2 + ... + G_{n+k-1}^2, n >= 1.
// k = 0 yields 0. num_windows >= 2 when k >= 1.
SquaresGcdRecord squares_gcd(const Seed& seed, std::int64_t k, std::int64_t num_windows);

// Running gcd after 1, 2, ..., num_windows windows.
std::vector<Integer> squares_gcd_progression(const Seed& seed, std::int64_t k,
                                             std::int64_t num_windows);

}  // namespace gibsum
