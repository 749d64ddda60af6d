#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gibsum/integer.hpp"

namespace gibsum {

// Initial pair (G0, G1) of a Gibonacci sequence G_n = G_{n-1} + G_{n-2}.
// Coprimality is not part of the type; operations that need it say so.
struct Seed {
  Integer g0;
  Integer g1;

  Seed() : g0(0), g1(1) {}
  Seed(Integer first, Integer second) : g0(std::move(first)), g1(std::move(second)) {}
  Seed(long first, long second) : g0(first), g1(second) {}

  bool is_zero() const { return sgn(g0) == 0 && sgn(g1) == 0; }

  friend bool operator==(const Seed& a, const Seed& b) { return a.g0 == b.g0 && a.g1 == b.g1; }
};

inline Seed fibonacci_seed() { return Seed(0, 1); }
inline Seed lucas_seed() { return Seed(2, 1); }

// Throws DomainError for (0, 0).
void require_nondegenerate(const Seed& seed);

bool is_coprime(const Seed& seed);

// Throws DomainError unless gcd(g0, g1) = 1.
void require_coprime(const Seed& seed, std::string_view operation);

// "g0,g1"
std::string to_string(const Seed& seed);

// Accepts "g0,g1" with optional signs on either entry.
Seed parse_seed(std::string_view text);

// Every coprime (g0, g1) with |g0|, |g1| <= bound, ordered by (g0, g1).
// (0, 1) and (2, 1) are always present.
std::vector<Seed> coprime_grid(int bound = 10);

// 25 seeds: g0 in [-2, 2], g1 in [1, 5]. Contains Fibonacci, Lucas, (1, 4)
// and a few non-coprime seeds; identities hold for all integer seeds.
std::vector<Seed> identity_grid();

}  // namespace gibsum
