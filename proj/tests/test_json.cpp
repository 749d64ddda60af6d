#include <gtest/gtest.h>

#include <random>

#include "gibsum/applications.hpp"
#include "gibsum/gcdsum.hpp"
#include "gibsum/identities.hpp"
#include "gibsum/json.hpp"
#include "gibsum/pisano.hpp"
#include "gibsum/sequences.hpp"
#include "gibsum/suite.hpp"

using namespace gibsum;

namespace {

// No JSON number may carry an integer; only timing fields are floating point.
void expect_no_integer_numbers(const json& j, const std::string& path = "$") {
  if (j.is_number_integer() || j.is_number_unsigned()) {
    ADD_FAILURE() << "integer number at " << path;
  } else if (j.is_object()) {
    for (const auto& [key, value] : j.items()) expect_no_integer_numbers(value, path + "." + key);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      expect_no_integer_numbers(j[i], path + "[" + std::to_string(i) + "]");
    }
  }
}

template <typename T>
void round_trip(const T& value) {
  const json j = value;
  expect_no_integer_numbers(j);
  const json reparsed = json::parse(j.dump());
  EXPECT_EQ(reparsed.get<T>(), value) << j.dump();
}

Seed random_coprime_seed(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-40, 40);
  while (true) {
    Seed s(dist(rng), dist(rng));
    if (is_coprime(s)) return s;
  }
}

}  // namespace

TEST(Json, IntegersAreDecimalStrings) {
  const json j = gcd_sum(Seed(0, 1), 360);
  EXPECT_TRUE(j.at("value").is_string());
  EXPECT_TRUE(j.at("k").is_string());
  EXPECT_EQ(j.at("k"), "360");
  EXPECT_GT(j.at("value").get<std::string>().size(), 30u);
  EXPECT_EQ(j.at("method"), "closed_gcd");
}

TEST(Json, ClassificationMarksInapplicable) {
  const json j = classify(Seed(1, 4), 5);
  EXPECT_EQ(j.at("predicted"), "table-inapplicable");
  EXPECT_EQ(j.at("case_row"), "row_15711");
}

TEST(Json, RandomizedRoundTrips) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::int64_t> kdist(1, 200);
  for (int trial = 0; trial < 60; ++trial) {
    const Seed s = random_coprime_seed(rng);
    const std::int64_t k = kdist(rng);
    round_trip(s);
    round_trip(seed_invariants(s));
    round_trip(gcd_sum(s, k));
    round_trip(gcd_sum_bruteforce(s, k, 3));
    round_trip(classify(s, k));
    round_trip(reduce_seed(Seed(s.g0 * 6, s.g1 * 6)));
    round_trip(period_record(s, static_cast<std::uint64_t>(k) + 1));
    round_trip(squares_gcd(s, k % 20, 50));
    if (k % 2 == 1 && k < 60) round_trip(prime_restriction_check(s, k, 10000));
  }
  round_trip(squares_gcd(fibonacci_seed(), 8, 50));
  round_trip(parity_scan(Seed(1, 4), 200));
  round_trip(parity_scan(Seed(6, 9), 40));
  round_trip(max_modulus_for_period(30, true));
  for (const auto& e : pisano_of_fib_lucas_moduli(8)) round_trip(e);
  round_trip(IndexRange{-3, 9});
}

TEST(Json, IdentityReportsRoundTrip) {
  const auto seeds = identity_grid();
  round_trip(verify_identity(IdentityId::gib_addition, {1, 5}, IndexRange{1, 4}, seeds));
  IdentitySpec broken = identity_spec(IdentityId::cassini);
  broken.rhs = [](const TermTables&, std::int64_t, std::int64_t) { return Integer(0); };
  const IdentityReport failing = verify_identity(broken, {0, 3}, std::nullopt, seeds);
  ASSERT_FALSE(failing.held());
  round_trip(failing);
  const std::vector<Seed> one{fibonacci_seed()};
  round_trip(verify_identity(IdentityId::fib_doubling, {-4, 4}, std::nullopt, one));
}

TEST(Json, SummaryRoundTripAndTimingSwitch) {
  VerificationSummary v;
  v.criteria.push_back({1, "a", "first", true, "1 checks", {}, 0.25});
  v.criteria.push_back({2, "b", "second", false, "2 checks", {"k=3 value 9"}, 0.5});
  v.passed = 1;
  v.failed = 1;
  v.elapsed_seconds = 0.75;
  const json with = summary_to_json(v, true);
  EXPECT_EQ(json::parse(with.dump()).get<VerificationSummary>(), v);
  const json without = summary_to_json(v, false);
  EXPECT_FALSE(without.contains("elapsed_seconds"));
  EXPECT_FALSE(without.at("criteria")[0].contains("seconds"));
  expect_no_integer_numbers(without);
}

TEST(Json, MalformedIntegersAreRejected) {
  json j = gcd_sum(Seed(0, 1), 5);
  j["value"] = "12x";
  EXPECT_ANY_THROW(j.get<GcdSumResult>());
  j = gcd_sum(Seed(0, 1), 5);
  j["k"] = 5;
  EXPECT_ANY_THROW(j.get<GcdSumResult>());
}
