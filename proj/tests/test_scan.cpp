#include <gtest/gtest.h>

#include "gibsum/pisano.hpp"
#include "gibsum/scan.hpp"
#include "oracle.hpp"

using namespace gibsum;

TEST(Scan, PeriodTableParallelMatchesSerial) {
  for (const Seed& s : {Seed(0, 1), Seed(2, 1), Seed(6, 9), Seed(-4, 7)}) {
    const auto par = scan::period_table(s, 1, 400);
    EXPECT_EQ(par, scan::period_table_serial(s, 1, 400));
    ASSERT_EQ(par.size(), 400u);
    for (std::int64_t m = 1; m <= 400; ++m) {
      const bool degenerate = oracle::mod(s.g0, m) == 0 && oracle::mod(s.g1, m) == 0 && m > 1;
      const std::uint64_t expected =
          degenerate ? 0 : static_cast<std::uint64_t>(oracle::period(s.g0.get_si(), s.g1.get_si(), m));
      ASSERT_EQ(par[static_cast<std::size_t>(m - 1)], expected) << to_string(s) << " m=" << m;
    }
  }
}

TEST(Scan, TableConformanceParallelMatchesSerial) {
  const auto grid = coprime_grid(4);
  const auto par = scan::table_conformance(grid, 1, 48);
  EXPECT_EQ(par, scan::table_conformance_serial(grid, 1, 48));
  EXPECT_EQ(par.points, grid.size() * 48);
  EXPECT_TRUE(par.mismatches.empty());
  EXPECT_GT(par.applicable, 0u);
  EXPECT_LT(par.applicable, par.points);
}

TEST(Scan, ClosedVsBruteParallelMatchesSerial) {
  const auto grid = coprime_grid(4);
  const auto par = scan::closed_vs_bruteforce(grid, 1, 60, 10);
  EXPECT_EQ(par, scan::closed_vs_bruteforce_serial(grid, 1, 60, 10));
  EXPECT_TRUE(par.empty());
}

TEST(Scan, BiconditionalParallelMatchesSerial) {
  const auto grid = coprime_grid(3);
  const auto par = scan::biconditional(grid, 2, 40, 1, 24);
  EXPECT_EQ(par, scan::biconditional_serial(grid, 2, 40, 1, 24));
  EXPECT_TRUE(par.empty());
}

// Open question: the biconditional for seeds sharing a factor. Recorded, not asserted.
TEST(Scan, BiconditionalNonCoprimeRunsAndIsDeterministic) {
  const std::vector<Seed> seeds{Seed(3, 9), Seed(2, 4), Seed(5, 5)};
  const auto a = scan::biconditional(seeds, 2, 30, 1, 24);
  EXPECT_EQ(a, scan::biconditional_serial(seeds, 2, 30, 1, 24));
  for (const auto& v : a) EXPECT_NE(v.period_divides, v.m_divides_sum);
}

TEST(Scan, BiconditionalAgreesWithDirectOracle) {
  const auto grid = coprime_grid(3);
  for (const Seed& s : grid) {
    for (std::int64_t k = 1; k <= 24; ++k) {
      const mpz_class value = oracle::window_gcd(s.g0, s.g1, k, 3);
      for (std::int64_t m = 2; m <= 40; ++m) {
        const bool period_divides = k % oracle::period(s.g0.get_si(), s.g1.get_si(), m) == 0;
        const bool m_divides = oracle::mod(value, m) == 0;
        ASSERT_EQ(period_divides, m_divides) << to_string(s) << " m=" << m << " k=" << k;
      }
    }
  }
  EXPECT_TRUE(scan::biconditional(grid, 2, 40, 1, 24).empty());
}
