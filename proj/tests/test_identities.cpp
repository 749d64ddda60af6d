#include <gtest/gtest.h>

#include "gibsum/error.hpp"
#include "gibsum/identities.hpp"

using namespace gibsum;

TEST(Identities, EveryFamilyHoldsOnSmallRanges) {
  const auto seeds = identity_grid();
  for (const auto& spec : all_identities()) {
    const IndexRange r = spec.id == IdentityId::fib_family ? IndexRange{-10, 10} : IndexRange{0, 40};
    const IdentityReport report = verify_identity(spec, r, r, seeds);
    EXPECT_TRUE(report.held()) << spec.name << " fails at p=" << report.failures.front().p;
    EXPECT_GT(report.points_checked, 0u) << spec.name;
  }
}

TEST(Identities, CassiniForFibonacci) {
  const std::vector<Seed> seeds{fibonacci_seed()};
  const IdentityReport r = verify_identity(IdentityId::cassini, {0, 100}, std::nullopt, seeds);
  EXPECT_TRUE(r.held());
  EXPECT_EQ(r.points_checked, 101u);
}

TEST(Identities, FamilyOverNegativeParameters) {
  const std::vector<Seed> seeds{fibonacci_seed()};
  const IdentityReport r =
      verify_identity(IdentityId::fib_family, {-10, 10}, IndexRange{-10, 10}, seeds);
  EXPECT_TRUE(r.held());
  EXPECT_EQ(r.points_checked, 21u * 21u);
}

TEST(Identities, PerturbedRightSideFailsEverywhere) {
  IdentitySpec broken = identity_spec(IdentityId::gib_from_fib);
  const IdentitySide rhs = broken.rhs;
  broken.rhs = [rhs](const TermTables& t, std::int64_t p, std::int64_t q) {
    return Integer(rhs(t, p, q) + 1);
  };
  const auto seeds = identity_grid();
  const IdentityReport r = verify_identity(broken, {1, 60}, std::nullopt, seeds);
  EXPECT_EQ(r.failures.size(), r.points_checked);
  EXPECT_EQ(r.points_checked, 60u * seeds.size());
  for (const auto& f : r.failures) EXPECT_EQ(f.rhs, f.lhs + 1);
}

TEST(Identities, RangesAreClippedToDomain) {
  const std::vector<Seed> seeds{Seed(3, 7)};
  const IdentityReport r = verify_identity(IdentityId::gap_two_sum, {-5, 5}, std::nullopt, seeds);
  EXPECT_EQ(r.primary.lo, 1);
  EXPECT_EQ(r.primary.hi, 5);
  EXPECT_THROW(verify_identity(IdentityId::gap_two_sum, {-5, -1}, std::nullopt, seeds), DomainError);
  EXPECT_THROW(verify_identity(IdentityId::cassini, {5, 1}, std::nullopt, seeds), DomainError);
}

TEST(Identities, NamesRoundTrip) {
  for (const auto& spec : all_identities()) {
    EXPECT_EQ(identity_from_name(spec.name), spec.id);
    EXPECT_EQ(to_string(spec.id), spec.name);
  }
  EXPECT_THROW(identity_from_name("no_such_identity"), DomainError);
}

TEST(Identities, SeededFamiliesNeedSeeds) {
  EXPECT_THROW(verify_identity(IdentityId::cassini, {0, 3}, std::nullopt, {}), DomainError);
}
