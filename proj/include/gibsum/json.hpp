#pragma once

// JSON encodings of every result type. Integers of every size are written as
// decimal strings so consumers never lose precision.

#include <json.hpp>

#include "gibsum/applications.hpp"
#include "gibsum/gcdsum.hpp"
#include "gibsum/identities.hpp"
#include "gibsum/integer.hpp"
#include "gibsum/pisano.hpp"
#include "gibsum/sequences.hpp"
#include "gibsum/suite.hpp"

namespace nlohmann {

template <>
struct adl_serializer<mpz_class> {
  static void to_json(json& j, const mpz_class& v) { j = v.get_str(10); }
  static void from_json(const json& j, mpz_class& v) { v = gibsum::parse_integer(j.get<std::string>()); }
};

}  // namespace nlohmann

namespace gibsum {

using json = nlohmann::json;

// int64/uint64 <-> decimal string
json int_field(std::int64_t v);
json uint_field(std::uint64_t v);
std::int64_t read_int(const json& j);
std::uint64_t read_uint(const json& j);

void to_json(json& j, const Seed& v);
void from_json(const json& j, Seed& v);
void to_json(json& j, const SeedInvariants& v);
void from_json(const json& j, SeedInvariants& v);
void to_json(json& j, const IndexRange& v);
void from_json(const json& j, IndexRange& v);
void to_json(json& j, const IdentityFailure& v);
void from_json(const json& j, IdentityFailure& v);
void to_json(json& j, const IdentityReport& v);
void from_json(const json& j, IdentityReport& v);
void to_json(json& j, const PeriodRecord& v);
void from_json(const json& j, PeriodRecord& v);
void to_json(json& j, const ParityScanReport& v);
void from_json(const json& j, ParityScanReport& v);
void to_json(json& j, const GcdSumResult& v);
void from_json(const json& j, GcdSumResult& v);
void to_json(json& j, const ReducedSeed& v);
void from_json(const json& j, ReducedSeed& v);
void to_json(json& j, const Classification& v);
void from_json(const json& j, Classification& v);
void to_json(json& j, const PrimeRestrictionReport& v);
void from_json(const json& j, PrimeRestrictionReport& v);
void to_json(json& j, const ModulusPeriodEntry& v);
void from_json(const json& j, ModulusPeriodEntry& v);
void to_json(json& j, const MaxModulusResult& v);
void from_json(const json& j, MaxModulusResult& v);
void to_json(json& j, const SquaresGcdRecord& v);
void from_json(const json& j, SquaresGcdRecord& v);
void to_json(json& j, const CriterionResult& v);
void from_json(const json& j, CriterionResult& v);
// `include_timing` false drops elapsed times so repeated runs compare byte-equal.
json summary_to_json(const VerificationSummary& v, bool include_timing);
void from_json(const json& j, VerificationSummary& v);

}  // namespace gibsum
