#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gibsum/integer.hpp"

namespace gibsum {

struct TrialDivision {
  std::map<Integer, unsigned> primes;  // proven prime -> exponent
  Integer cofactor = 1;                // unsplit part, no prime factor <= bound; 1 when fully split
};

// Strips every prime factor p <= bound from |n| (n != 0). A leftover below
// (bound + 1)^2 is necessarily prime and is moved into `primes`.
TrialDivision trial_divide(const Integer& n, std::uint64_t bound);

bool is_probable_prime(const Integer& n);

// Complete factorization of |n| >= 1: trial division to `trial_bound`, then
// Brent's Pollard rho on what remains.
std::map<Integer, unsigned> factorize(const Integer& n, std::uint64_t trial_bound = 10000);

// All positive divisors, ascending.
std::vector<Integer> divisors(const std::map<Integer, unsigned>& factorization);
std::vector<Integer> divisors(const Integer& n);

}  // namespace gibsum
