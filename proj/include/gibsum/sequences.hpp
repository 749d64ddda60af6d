#pragma once

#include <cstdint>

#include "gibsum/integer.hpp"
#include "gibsum/seed.hpp"

namespace gibsum {

// (F_n, F_{n+1}) for any integer n.
struct FibPair {
  Integer current;
  Integer next;
};

// Fast doubling for n >= 0, reflection F_{-n} = (-1)^{n+1} F_n below zero.
FibPair fib_pair(std::int64_t n);

Integer fib(std::int64_t n);

// L_n = F_{n-1} + F_{n+1}; L_{-n} = (-1)^n L_n falls out of the same formula.
Integer lucas(std::int64_t n);

// G_n = G0 F_{n-1} + G1 F_n, valid for every integer n.
Integer gib_term(const Seed& seed, std::int64_t n);

// (G_n, G_{n+1}) from a single fast-doubling evaluation.
std::pair<Integer, Integer> gib_pair(const Seed& seed, std::int64_t n);

// Sum of the k terms G_n .. G_{n+k-1}, evaluated as G_{n+k+1} - G_{n+1}.
// Throws DomainError for k < 1.
Integer window_sum(const Seed& seed, std::int64_t n, std::int64_t k);

// delta = gcd(G0 + G2, G1 + G3) >= 0, d = G1^2 - G0 G1 - G0^2 (signed).
struct SeedInvariants {
  Integer delta;
  Integer d;

  friend bool operator==(const SeedInvariants&, const SeedInvariants&) = default;
};

// Throws DomainError for the (0, 0) seed.
SeedInvariants seed_invariants(const Seed& seed);

// D for the pair (a, b) = (G_n, G_{n+1}).
Integer d_invariant(const Integer& a, const Integer& b);

}  // namespace gibsum
