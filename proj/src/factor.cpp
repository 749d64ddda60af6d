#include "gibsum/factor.hpp"

#include <algorithm>
#include <stdexcept>

#include "gibsum/error.hpp"

namespace gibsum {
namespace {

// Brent's cycle-finding variant of Pollard rho with x -> x^2 + c.
Integer rho_split(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, ys, q = 1, g = 1;
    const unsigned long batch = 128;
    unsigned long r = 1;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long lim = std::min(batch, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          step(y);
          q = q * abs(Integer(x - y));
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
        k += lim;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      // Batched product overshot; back up one step at a time.
      do {
        step(ys);
        g = gcd(abs(Integer(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = rho_split(n);
  split_into(d, out);
  split_into(Integer(n / d), out);
}

}  // namespace

TrialDivision trial_divide(const Integer& n, std::uint64_t bound) {
  if (sgn(n) == 0) throw DomainError("cannot factor 0");
  TrialDivision td;
  Integer rest = abs(n);
  auto strip = [&](unsigned long p) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned e = 0;
      do {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
      td.primes.emplace(Integer(p), e);
    }
  };
  if (bound >= 2) strip(2);
  for (unsigned long p = 3; p <= bound && rest > 1; p += 2) {
    if (Integer(p) * p > rest) break;
    strip(p);
  }
  // No factor below min(bound, sqrt(rest)) survives, so a leftover under
  // (bound + 1)^2 is prime.
  const Integer limit = Integer(static_cast<unsigned long>(bound) + 1) * (static_cast<unsigned long>(bound) + 1);
  if (rest > 1 && rest < limit) {
    td.primes.emplace(rest, 1);
    rest = 1;
  }
  td.cofactor = rest;
  return td;
}

bool is_probable_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::map<Integer, unsigned> factorize(const Integer& n, std::uint64_t trial_bound) {
  TrialDivision td = trial_divide(n, trial_bound);
  std::map<Integer, unsigned> out = std::move(td.primes);
  std::map<Integer, unsigned> rest;
  split_into(td.cofactor, rest);
  for (auto& [p, e] : rest) out[p] += e;
  return out;
}

std::vector<Integer> divisors(const std::map<Integer, unsigned>& factorization) {
  std::vector<Integer> out{Integer(1)};
  for (const auto& [p, e] : factorization) {
    const std::size_t base = out.size();
    Integer power = 1;
    for (unsigned i = 1; i <= e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> divisors(const Integer& n) { return divisors(factorize(n)); }

}  // namespace gibsum
