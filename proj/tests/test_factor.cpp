#include <gtest/gtest.h>

#include "gibsum/error.hpp"
#include "gibsum/factor.hpp"
#include "gibsum/sequences.hpp"
#include "oracle.hpp"

using namespace gibsum;

namespace {
Integer product(const std::map<Integer, unsigned>& f) {
  Integer p = 1;
  for (const auto& [q, e] : f) {
    for (unsigned i = 0; i < e; ++i) p *= q;
  }
  return p;
}
}  // namespace

TEST(Factor, SmallNumbersAgainstNaive) {
  for (long n = 1; n <= 3000; ++n) {
    const auto f = factorize(Integer(n));
    ASSERT_EQ(product(f), n);
    for (const auto& [p, e] : f) ASSERT_TRUE(oracle::is_prime_naive(p.get_ui())) << n;
  }
}

TEST(Factor, NegativeInputsUseMagnitude) {
  const auto f = factorize(Integer(-360));
  EXPECT_EQ(product(f), 360);
  EXPECT_THROW(factorize(Integer(0)), DomainError);
}

TEST(Factor, LargeFibonacciNeedsRho) {
  const Integer n = fib(120);
  const auto f = factorize(n, 1000);
  EXPECT_EQ(product(f), n);
  for (const auto& [p, e] : f) EXPECT_TRUE(is_probable_prime(p));
}

TEST(Factor, TrialDivisionLeavesCofactor) {
  const Integer big_prime("1000000007");
  const TrialDivision t = trial_divide(Integer(12) * big_prime * big_prime, 100);
  EXPECT_EQ(t.primes.at(2), 2u);
  EXPECT_EQ(t.primes.at(3), 1u);
  EXPECT_EQ(t.cofactor, big_prime * big_prime);
  const TrialDivision small = trial_divide(Integer(2 * 101), 10);  // 101 < 11^2
  EXPECT_EQ(small.cofactor, 1);
  EXPECT_EQ(small.primes.at(101), 1u);
}

TEST(Factor, Divisors) {
  EXPECT_EQ(divisors(Integer(12)), (std::vector<Integer>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(Integer(1)), (std::vector<Integer>{1}));
  const auto d = divisors(Integer(832040));
  for (long v = 1; v <= 832040; v += 997) {
    const bool divides = 832040 % v == 0;
    EXPECT_EQ(std::binary_search(d.begin(), d.end(), Integer(v)), divides) << v;
  }
}
