#include <gtest/gtest.h>

#include <set>

#include "gibsum/error.hpp"
#include "gibsum/pisano.hpp"
#include "gibsum/sequences.hpp"
#include "oracle.hpp"

using namespace gibsum;

TEST(Pisano, Examples) {
  EXPECT_EQ(pisano_period(Seed(0, 1), 10), 60u);
  EXPECT_EQ(pisano_period(Seed(1, 4), 11), 5u);
  EXPECT_EQ(pisano_period(Seed(2, 1), 5), 4u);
  EXPECT_EQ(pisano_period(Seed(7, -3), 1), 1u);
  for (const Seed& s : coprime_grid(10)) EXPECT_EQ(pisano_period(s, 2), 3u) << to_string(s);
}

TEST(Pisano, Errors) {
  EXPECT_THROW(pisano_period(Seed(0, 1), 0), DomainError);
  EXPECT_THROW(pisano_period(Seed(5, 10), 5), DomainError);
  EXPECT_THROW(pisano_period(Seed(0, 0), 7), DomainError);
}

TEST(Pisano, MatchesNaivePairIteration) {
  for (const Seed& s : identity_grid()) {
    for (std::int64_t m = 1; m <= 150; ++m) {
      if (oracle::mod(s.g0, m) == 0 && oracle::mod(s.g1, m) == 0) continue;
      ASSERT_EQ(pisano_period_uncached(s, m),
                static_cast<std::uint64_t>(oracle::period(s.g0.get_si(), s.g1.get_si(), m)))
          << to_string(s) << " m=" << m;
    }
  }
}

TEST(Pisano, CachedAndUncachedAgree) {
  default_period_cache().clear();
  for (std::uint64_t m = 2; m <= 300; ++m) {
    EXPECT_EQ(pisano_period(Seed(3, -8), m), pisano_period_uncached(Seed(3, -8), m));
  }
  EXPECT_GT(default_period_cache().size(), 0u);
  EXPECT_EQ(pisano_period(Seed(3, -8), 299), pisano_period_uncached(Seed(3, -8), 299));
}

TEST(Pisano, PeriodicityAndMinimalityOnGrid) {
  for (const Seed& s : coprime_grid(10)) {
    for (std::uint64_t m = 2; m <= 200; ++m) {
      const std::uint64_t p = pisano_period(s, m);
      const std::int64_t mi = static_cast<std::int64_t>(m);
      std::vector<std::int64_t> r(4 * p + 2);
      r[0] = oracle::mod(s.g0, mi);
      r[1] = oracle::mod(s.g1, mi);
      for (std::size_t i = 2; i < r.size(); ++i) r[i] = (r[i - 1] + r[i - 2]) % mi;
      for (std::size_t n = 0; n <= 3 * p; ++n) ASSERT_EQ(r[n + p], r[n]) << to_string(s) << " m=" << m;
      for (std::size_t q = 1; q < p; ++q) {
        ASSERT_FALSE(r[q] == r[0] && r[q + 1] == r[1]) << to_string(s) << " m=" << m << " q=" << q;
      }
    }
  }
}

TEST(Pisano, BigModulusPath) {
  const Integer m = fib(100);  // above 2^63
  EXPECT_FALSE(fits_modulus(m));
  // pi_F(F_n) = 2n for even n >= 4.
  EXPECT_EQ(pisano_period(fibonacci_seed(), m), 200);
  EXPECT_EQ(pisano_period(fibonacci_seed(), Integer(10)), 60);
}

TEST(Pisano, DividesK) {
  EXPECT_TRUE(period_divides_k(Seed(0, 1), 2, 9));
  EXPECT_FALSE(period_divides_k(Seed(0, 1), 2, 8));
  EXPECT_TRUE(period_divides_k(Seed(1, 4), 11, 5));
  EXPECT_THROW(period_divides_k(Seed(0, 1), 1, 5), DomainError);
  EXPECT_THROW(period_divides_k(Seed(0, 1), 3, 0), DomainError);
}

TEST(WindowLength, Examples) {
  EXPECT_EQ(minimal_window_length(Seed(0, 1), 2, 1000), 3u);
  EXPECT_EQ(minimal_window_length(Seed(2, 1), 5, 1000), 4u);
  EXPECT_EQ(minimal_window_length(Seed(0, 1), 10, 1000), 60u);
  EXPECT_THROW(minimal_window_length(Seed(0, 1), 10, 30), DomainError);
}

// The least window length that m divides is expected to be the period itself.
TEST(WindowLength, EqualsPeriodOnGrid) {
  for (const Seed& s : identity_grid()) {
    for (std::uint64_t m = 2; m <= 60; ++m) {
      const std::int64_t mi = static_cast<std::int64_t>(m);
      if (oracle::mod(s.g0, mi) == 0 && oracle::mod(s.g1, mi) == 0) continue;
      if (!is_coprime(s)) continue;
      EXPECT_EQ(minimal_window_length(s, m, 100000), pisano_period(s, m)) << to_string(s) << " m=" << m;
    }
  }
}

TEST(WindowLength, PeriodWindowsAreDivisible) {
  for (const Seed& s : coprime_grid(4)) {
    for (std::uint64_t m = 2; m <= 50; ++m) {
      const std::uint64_t p = pisano_period(s, m);
      for (std::int64_t n = 1; n <= static_cast<std::int64_t>(2 * p); ++n) {
        const Integer w = window_sum(s, n, static_cast<std::int64_t>(p));
        ASSERT_EQ(oracle::mod(w, static_cast<std::int64_t>(m)), 0) << to_string(s) << " m=" << m;
      }
    }
  }
}

TEST(ParityScan, Examples) {
  EXPECT_TRUE(parity_scan(Seed(0, 1), 500).odd_period_moduli.empty());
  EXPECT_TRUE(parity_scan(Seed(2, 1), 500).odd_period_moduli.empty());
  const auto r = parity_scan(Seed(1, 4), 500);
  bool found = false;
  for (const auto& rec : r.odd_period_moduli) found |= rec.modulus == 11 && rec.period == 5;
  EXPECT_TRUE(found);
  for (const auto& rec : r.odd_period_moduli) {
    EXPECT_GT(rec.modulus, 2u);
    EXPECT_EQ(rec.period % 2, 1u);
  }
}

TEST(ParityScan, DegenerateModuliAreListed) {
  const auto r = parity_scan(Seed(6, 12), 12);
  EXPECT_EQ(r.degenerate_moduli, (std::vector<std::uint64_t>{3, 6}));
}

TEST(Shift, Examples) {
  EXPECT_EQ(equivalent_up_to_shift(Seed(0, 1), Seed(0, 1), 13), 0u);
  EXPECT_FALSE(equivalent_up_to_shift(Seed(0, 1), Seed(2, 1), 5).has_value());
  // Every coprime seed with delta = 5 is a shift of Lucas mod 5.
  for (const Seed& s : coprime_grid(10)) {
    if (seed_invariants(s).delta != 5) continue;
    EXPECT_TRUE(equivalent_up_to_shift(s, lucas_seed(), 5).has_value()) << to_string(s);
  }
}

TEST(Shift, WitnessAlignsSequences) {
  const Seed a(0, 1);
  const Seed b(fib(7), fib(8));  // Fibonacci shifted by 7
  EXPECT_EQ(equivalent_up_to_shift(a, b, 11), 7u);  // pi_F(11) = 10
  EXPECT_EQ(equivalent_up_to_shift(b, a, 11), 3u);
}

TEST(PeriodLcm, Examples) {
  EXPECT_EQ(period_lcm_compose(Seed(0, 1), 2, 5), 60u);
  EXPECT_EQ(period_lcm_compose(Seed(2, 1), 5, 3), pisano_period(Seed(2, 1), 15));
  EXPECT_EQ(period_lcm_compose(Seed(4, 9), 1, 14), pisano_period(Seed(4, 9), 14));
  EXPECT_THROW(period_lcm_compose(Seed(0, 1), 4, 6), DomainError);
}

TEST(Pisano, WallPrimesMatchFibonacci) {
  for (std::uint64_t p : {3, 7, 13, 17, 23, 43}) {
    for (std::uint64_t m : {p, p * p}) {
      const std::uint64_t pf = pisano_period(fibonacci_seed(), m);
      for (const Seed& s : coprime_grid(10)) {
        ASSERT_EQ(pisano_period(s, m), pf) << to_string(s) << " m=" << m;
      }
    }
  }
}

TEST(Pisano, CassiniCongruence) {
  for (const Seed& s : coprime_grid(10)) {
    const Integer d = seed_invariants(s).d;
    for (std::uint64_t m = 3; m <= 200; ++m) {
      const std::uint64_t p = pisano_period(s, m);
      const Integer lhs = (p % 2 == 0) ? d : Integer(-d);
      ASSERT_EQ(oracle::mod(lhs - d, static_cast<std::int64_t>(m)), 0) << to_string(s) << " m=" << m;
    }
  }
}

TEST(Pisano, FibonacciRangeAndBound) {
  for (std::uint64_t m = 1; m <= 1000; ++m) {
    const std::uint64_t p = pisano_period(fibonacci_seed(), m);
    EXPECT_TRUE(p == 1 || p == 3 || (p % 2 == 0 && p >= 6)) << m;
    if (m >= 2) EXPECT_LE(p, 6 * m) << m;
  }
  EXPECT_EQ(pisano_period(fibonacci_seed(), 10), 60u);
}
