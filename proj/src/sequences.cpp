#include "gibsum/sequences.hpp"

#include <bit>

#include "gibsum/error.hpp"

namespace gibsum {
namespace {

// (F_n, F_{n+1}) for n >= 0, scanning the bits of n from the top.
//   F_{2j}   = F_j (2 F_{j+1} - F_j)
//   F_{2j+1} = F_j^2 + F_{j+1}^2
FibPair doubling(std::uint64_t n) {
  Integer a = 0;
  Integer b = 1;
  Integer c;
  Integer d;
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    c = a * (2 * b - a);
    d = a * a + b * b;
    if ((n >> bit) & 1U) {
      a = d;
      b = c + d;
    } else {
      a = std::move(c);
      b = std::move(d);
    }
  }
  return {std::move(a), std::move(b)};
}

std::uint64_t magnitude(std::int64_t n) {
  return n < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
}

}  // namespace

FibPair fib_pair(std::int64_t n) {
  if (n >= 0) return doubling(static_cast<std::uint64_t>(n));
  // n = -m with m >= 1: F_{-m} = (-1)^{m+1} F_m and F_{-m+1} = (-1)^m F_{m-1}.
  const std::uint64_t m = magnitude(n);
  FibPair base = doubling(m - 1);  // (F_{m-1}, F_m)
  const bool m_odd = (m & 1U) != 0;
  Integer current = m_odd ? base.next : Integer(-base.next);
  Integer next = m_odd ? Integer(-base.current) : base.current;
  return {std::move(current), std::move(next)};
}

Integer fib(std::int64_t n) { return fib_pair(n).current; }

Integer lucas(std::int64_t n) {
  FibPair p = fib_pair(n);
  // F_{n-1} + F_{n+1} = (F_{n+1} - F_n) + F_{n+1}
  return 2 * p.next - p.current;
}

std::pair<Integer, Integer> gib_pair(const Seed& seed, std::int64_t n) {
  FibPair p = fib_pair(n - 1);  // (F_{n-1}, F_n)
  Integer f_next = p.current + p.next;
  Integer term = seed.g0 * p.current + seed.g1 * p.next;
  Integer following = seed.g0 * p.next + seed.g1 * f_next;
  return {std::move(term), std::move(following)};
}

Integer gib_term(const Seed& seed, std::int64_t n) {
  FibPair p = fib_pair(n - 1);
  return seed.g0 * p.current + seed.g1 * p.next;
}

Integer window_sum(const Seed& seed, std::int64_t n, std::int64_t k) {
  if (k < 1) throw DomainError("window length k must be >= 1");
  return gib_term(seed, n + k + 1) - gib_term(seed, n + 1);
}

Integer d_invariant(const Integer& a, const Integer& b) { return b * b - a * b - a * a; }

SeedInvariants seed_invariants(const Seed& seed) {
  require_nondegenerate(seed);
  const Integer g2 = seed.g0 + seed.g1;
  const Integer g3 = seed.g1 + g2;
  return {gcd(seed.g0 + g2, seed.g1 + g3), d_invariant(seed.g0, seed.g1)};
}

}  // namespace gibsum
