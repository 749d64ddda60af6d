#include "gibsum/json.hpp"

#include <charconv>

#include "gibsum/error.hpp"

namespace gibsum {
namespace {

template <typename T>
T parse_fixed(const json& j) {
  const std::string s = j.get<std::string>();
  T out{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DomainError("malformed integer field '" + s + "'");
  }
  return out;
}

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> read_opt(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

json uint_list(const std::vector<std::uint64_t>& v) {
  json a = json::array();
  for (auto x : v) a.push_back(uint_field(x));
  return a;
}

std::vector<std::uint64_t> read_uint_list(const json& j) {
  std::vector<std::uint64_t> out;
  for (const auto& x : j) out.push_back(read_uint(x));
  return out;
}

}  // namespace

json int_field(std::int64_t v) { return std::to_string(v); }
json uint_field(std::uint64_t v) { return std::to_string(v); }
std::int64_t read_int(const json& j) { return parse_fixed<std::int64_t>(j); }
std::uint64_t read_uint(const json& j) { return parse_fixed<std::uint64_t>(j); }

void to_json(json& j, const Seed& v) { j = json{{"g0", v.g0}, {"g1", v.g1}}; }
void from_json(const json& j, Seed& v) {
  v = Seed(j.at("g0").get<Integer>(), j.at("g1").get<Integer>());
}

void to_json(json& j, const SeedInvariants& v) { j = json{{"delta", v.delta}, {"d", v.d}}; }
void from_json(const json& j, SeedInvariants& v) {
  v.delta = j.at("delta").get<Integer>();
  v.d = j.at("d").get<Integer>();
}

void to_json(json& j, const IndexRange& v) { j = json{{"lo", int_field(v.lo)}, {"hi", int_field(v.hi)}}; }
void from_json(const json& j, IndexRange& v) {
  v.lo = read_int(j.at("lo"));
  v.hi = read_int(j.at("hi"));
}

void to_json(json& j, const IdentityFailure& v) {
  j = json{{"seed", opt(v.seed)},
           {"p", int_field(v.p)},
           {"q", v.q ? int_field(*v.q) : json(nullptr)},
           {"lhs", v.lhs},
           {"rhs", v.rhs}};
}
void from_json(const json& j, IdentityFailure& v) {
  v.seed = read_opt<Seed>(j.at("seed"));
  v.p = read_int(j.at("p"));
  v.q = j.at("q").is_null() ? std::nullopt : std::optional<std::int64_t>(read_int(j.at("q")));
  v.lhs = j.at("lhs").get<Integer>();
  v.rhs = j.at("rhs").get<Integer>();
}

void to_json(json& j, const IdentityReport& v) {
  j = json{{"identity", to_string(v.id)},
           {"primary", v.primary},
           {"secondary", opt(v.secondary)},
           {"seeds_checked", uint_field(v.seeds_checked)},
           {"points_checked", uint_field(v.points_checked)},
           {"held", v.held()},
           {"failures", v.failures}};
}
void from_json(const json& j, IdentityReport& v) {
  v.id = identity_from_name(j.at("identity").get<std::string>());
  v.primary = j.at("primary").get<IndexRange>();
  v.secondary = read_opt<IndexRange>(j.at("secondary"));
  v.seeds_checked = read_uint(j.at("seeds_checked"));
  v.points_checked = read_uint(j.at("points_checked"));
  v.failures = j.at("failures").get<std::vector<IdentityFailure>>();
}

void to_json(json& j, const PeriodRecord& v) {
  j = json{{"seed", v.seed}, {"modulus", uint_field(v.modulus)}, {"period", uint_field(v.period)}};
}
void from_json(const json& j, PeriodRecord& v) {
  v.seed = j.at("seed").get<Seed>();
  v.modulus = read_uint(j.at("modulus"));
  v.period = read_uint(j.at("period"));
}

void to_json(json& j, const ParityScanReport& v) {
  j = json{{"seed", v.seed},
           {"m_max", uint_field(v.m_max)},
           {"odd_period_moduli", v.odd_period_moduli},
           {"degenerate_moduli", uint_list(v.degenerate_moduli)}};
}
void from_json(const json& j, ParityScanReport& v) {
  v.seed = j.at("seed").get<Seed>();
  v.m_max = read_uint(j.at("m_max"));
  v.odd_period_moduli = j.at("odd_period_moduli").get<std::vector<PeriodRecord>>();
  v.degenerate_moduli = read_uint_list(j.at("degenerate_moduli"));
}

void to_json(json& j, const GcdSumResult& v) {
  j = json{{"seed", v.seed},
           {"k", int_field(v.k)},
           {"value", v.value},
           {"method", to_string(v.method)},
           {"partial", v.partial}};
}
void from_json(const json& j, GcdSumResult& v) {
  v.seed = j.at("seed").get<Seed>();
  v.k = read_int(j.at("k"));
  v.value = j.at("value").get<Integer>();
  v.method = gcd_method_from_name(j.at("method").get<std::string>());
  v.partial = j.at("partial").get<bool>();
}

void to_json(json& j, const ReducedSeed& v) { j = json{{"d", v.d}, {"reduced", v.reduced}}; }
void from_json(const json& j, ReducedSeed& v) {
  v.d = j.at("d").get<Integer>();
  v.reduced = j.at("reduced").get<Seed>();
}

void to_json(json& j, const Classification& v) {
  j = json{{"seed", v.seed},
           {"k", int_field(v.k)},
           {"residue_mod_12", int_field(v.residue_mod_12)},
           {"case_row", to_string(v.row)},
           {"predicted", v.predicted ? json(*v.predicted) : json("table-inapplicable")},
           {"footnote", to_string(v.footnote)},
           {"formula", v.formula},
           {"actual", v.actual},
           {"delta", v.delta},
           {"d", v.d}};
}
void from_json(const json& j, Classification& v) {
  v.seed = j.at("seed").get<Seed>();
  v.k = read_int(j.at("k"));
  v.residue_mod_12 = static_cast<int>(read_int(j.at("residue_mod_12")));
  v.row = table_row_from_name(j.at("case_row").get<std::string>());
  const std::string predicted = j.at("predicted").get<std::string>();
  v.predicted = predicted == "table-inapplicable" ? std::nullopt
                                                  : std::optional<Integer>(parse_integer(predicted));
  v.footnote = footnote_from_name(j.at("footnote").get<std::string>());
  v.formula = j.at("formula").get<std::string>();
  v.actual = j.at("actual").get<Integer>();
  v.delta = j.at("delta").get<Integer>();
  v.d = j.at("d").get<Integer>();
}

void to_json(json& j, const PrimeRestrictionReport& v) {
  j = json{{"seed", v.seed},
           {"k", int_field(v.k)},
           {"value", v.value},
           {"primes", v.primes},
           {"offending", v.offending},
           {"unfactored_cofactor", v.unfactored_cofactor}};
}
void from_json(const json& j, PrimeRestrictionReport& v) {
  v.seed = j.at("seed").get<Seed>();
  v.k = read_int(j.at("k"));
  v.value = j.at("value").get<Integer>();
  v.primes = j.at("primes").get<std::vector<Integer>>();
  v.offending = j.at("offending").get<std::vector<Integer>>();
  v.unfactored_cofactor = j.at("unfactored_cofactor").get<Integer>();
}

void to_json(json& j, const ModulusPeriodEntry& v) {
  j = json{{"kind", to_string(v.kind)},   {"i", int_field(v.i)},
           {"modulus", v.modulus},        {"predicted", v.predicted},
           {"computed", v.computed},      {"matches", v.matches()}};
}
void from_json(const json& j, ModulusPeriodEntry& v) {
  v.kind = modulus_kind_from_name(j.at("kind").get<std::string>());
  v.i = read_int(j.at("i"));
  v.modulus = j.at("modulus").get<Integer>();
  v.predicted = j.at("predicted").get<Integer>();
  v.computed = j.at("computed").get<Integer>();
}

void to_json(json& j, const MaxModulusResult& v) {
  j = json{{"k", int_field(v.k)},
           {"m_F", v.m_f},
           {"predicted_form", to_string(v.predicted_form)},
           {"form_value", v.form_value},
           {"verified_period", v.verified_period},
           {"exhaustive_run", v.exhaustive_run},
           {"exhaustive_check", v.exhaustive_check},
           {"divisors_examined", uint_field(v.divisors_examined)},
           {"moduli_with_period_k", v.moduli_with_period_k},
           {"holds", v.holds()}};
}
void from_json(const json& j, MaxModulusResult& v) {
  v.k = read_int(j.at("k"));
  v.m_f = j.at("m_F").get<Integer>();
  v.predicted_form = half_form_from_name(j.at("predicted_form").get<std::string>());
  v.form_value = j.at("form_value").get<Integer>();
  v.verified_period = j.at("verified_period").get<Integer>();
  v.exhaustive_run = j.at("exhaustive_run").get<bool>();
  v.exhaustive_check = j.at("exhaustive_check").get<bool>();
  v.divisors_examined = read_uint(j.at("divisors_examined"));
  v.moduli_with_period_k = j.at("moduli_with_period_k").get<std::vector<Integer>>();
}

void to_json(json& j, const SquaresGcdRecord& v) {
  const auto match = v.matches_conjecture();
  j = json{{"seed", v.seed},
           {"k", int_field(v.k)},
           {"empirical_value", v.empirical_value},
           {"windows_used", int_field(v.windows_used)},
           {"conjectured", opt(v.conjectured)},
           {"matches_conjecture", match ? json(*match) : json(nullptr)},
           {"label", "empirical"}};
}
void from_json(const json& j, SquaresGcdRecord& v) {
  v.seed = j.at("seed").get<Seed>();
  v.k = read_int(j.at("k"));
  v.empirical_value = j.at("empirical_value").get<Integer>();
  v.windows_used = read_int(j.at("windows_used"));
  v.conjectured = read_opt<Integer>(j.at("conjectured"));
}

void to_json(json& j, const CriterionResult& v) {
  j = json{{"id", int_field(v.id)},
           {"key", v.key},
           {"title", v.title},
           {"passed", v.passed},
           {"detail", v.detail},
           {"counterexamples", v.counterexamples},
           {"seconds", v.seconds}};
}
void from_json(const json& j, CriterionResult& v) {
  v.id = static_cast<int>(read_int(j.at("id")));
  v.key = j.at("key").get<std::string>();
  v.title = j.at("title").get<std::string>();
  v.passed = j.at("passed").get<bool>();
  v.detail = j.at("detail").get<std::string>();
  v.counterexamples = j.at("counterexamples").get<std::vector<std::string>>();
  v.seconds = j.contains("seconds") ? j.at("seconds").get<double>() : 0.0;
}

json summary_to_json(const VerificationSummary& v, bool include_timing) {
  json criteria = json::array();
  for (const auto& c : v.criteria) {
    json e = c;
    if (!include_timing) e.erase("seconds");
    criteria.push_back(std::move(e));
  }
  json j{{"criteria", std::move(criteria)},
         {"passed", uint_field(v.passed)},
         {"failed", uint_field(v.failed)},
         {"all_passed", v.all_passed()}};
  if (include_timing) j["elapsed_seconds"] = v.elapsed_seconds;
  return j;
}

void from_json(const json& j, VerificationSummary& v) {
  v.criteria = j.at("criteria").get<std::vector<CriterionResult>>();
  v.passed = read_uint(j.at("passed"));
  v.failed = read_uint(j.at("failed"));
  v.elapsed_seconds = j.contains("elapsed_seconds") ? j.at("elapsed_seconds").get<double>() : 0.0;
}

}  // namespace gibsum
