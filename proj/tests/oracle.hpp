#pragma once

// Slow, direct reference computations used only by tests. Nothing here calls
// into the library's arithmetic beyond the Integer type itself.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

// Terms G_lo..G_hi by stepping the recurrence outward from (g0, g1).
inline std::map<std::int64_t, mpz_class> walk(const mpz_class& g0, const mpz_class& g1,
                                              std::int64_t lo, std::int64_t hi) {
  std::map<std::int64_t, mpz_class> t;
  t[0] = g0;
  t[1] = g1;
  for (std::int64_t i = 2; i <= hi; ++i) t[i] = t[i - 1] + t[i - 2];
  for (std::int64_t i = -1; i >= lo; --i) t[i] = t[i + 2] - t[i + 1];
  return t;
}

inline mpz_class fib(std::int64_t n) {
  mpz_class a = 0, b = 1;  // F_0, F_1
  if (n >= 0) {
    for (std::int64_t i = 0; i < n; ++i) {
      mpz_class c = a + b;
      a = b;
      b = c;
    }
    return a;
  }
  for (std::int64_t i = 0; i > n; --i) {  // step down: F_{i-1} = F_{i+1} - F_i
    mpz_class prev = b - a;
    b = a;
    a = prev;
  }
  return a;
}

inline mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class x = a < 0 ? mpz_class(-a) : a;
  mpz_class y = b < 0 ? mpz_class(-b) : b;
  while (y != 0) {
    mpz_class r = x % y;
    x = y;
    y = r;
  }
  return x;
}

inline mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

inline std::int64_t mod(const mpz_class& v, std::int64_t m) {
  mpz_class r = v % m;
  if (r < 0) r += m;
  return r.get_si();
}

// Least r >= 1 returning the residue pair to its start; 1 for m = 1.
inline std::int64_t period(std::int64_t g0, std::int64_t g1, std::int64_t m) {
  if (m == 1) return 1;
  const std::int64_t a0 = ((g0 % m) + m) % m, b0 = ((g1 % m) + m) % m;
  std::int64_t a = a0, b = b0;
  for (std::int64_t r = 1;; ++r) {
    const std::int64_t c = (a + b) % m;
    a = b;
    b = c;
    if (a == a0 && b == b0) return r;
  }
}

// Direct summation G_n + ... + G_{n+k-1}.
inline mpz_class window(const mpz_class& g0, const mpz_class& g1, std::int64_t n, std::int64_t k) {
  auto t = walk(g0, g1, std::min<std::int64_t>(n, 0), std::max<std::int64_t>(n + k, 2));
  mpz_class s = 0;
  for (std::int64_t i = n; i < n + k; ++i) s += t[i];
  return s;
}

// gcd over the first `windows` window sums starting at n = 1.
inline mpz_class window_gcd(const mpz_class& g0, const mpz_class& g1, std::int64_t k,
                            std::int64_t windows) {
  auto t = walk(g0, g1, 0, windows + k + 2);
  mpz_class g = 0;
  for (std::int64_t n = 1; n <= windows; ++n) {
    mpz_class s = 0;
    for (std::int64_t i = n; i < n + k; ++i) s += t[i];
    g = gcd(g, s);
  }
  return g;
}

inline mpz_class squares_gcd(std::int64_t k, std::int64_t windows) {
  auto t = walk(0, 1, 0, windows + k + 2);
  mpz_class g = 0;
  for (std::int64_t n = 1; n <= windows; ++n) {
    mpz_class s = 0;
    for (std::int64_t i = n; i < n + k; ++i) s += t[i] * t[i];
    g = gcd(g, s);
  }
  return g;
}

inline bool is_prime_naive(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace oracle
