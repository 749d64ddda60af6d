#include "gibsum/suite.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "gibsum/applications.hpp"
#include "gibsum/gcdsum.hpp"
#include "gibsum/identities.hpp"
#include "gibsum/pisano.hpp"
#include "gibsum/scan.hpp"
#include "gibsum/sequences.hpp"

namespace gibsum {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects checks for one criterion; keeps the first few counterexamples verbatim.
class Checker {
 public:
  explicit Checker(std::size_t keep = 20) : keep_(keep) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (counterexamples_.size() < keep_) counterexamples_.push_back(what);
  }

  // Records `n` checks performed in bulk by a scan; failures arrive through expect().
  void bulk(std::size_t n) { checks_ += n; }

  void note(const std::string& line) {
    if (!notes_.empty()) notes_ += "; ";
    notes_ += line;
  }

  CriterionResult finish(int id, std::string key, std::string title) const {
    CriterionResult r;
    r.id = id;
    r.key = std::move(key);
    r.title = std::move(title);
    r.passed = failures_ == 0;
    std::ostringstream d;
    d << checks_ << " checks, " << failures_ << " failed";
    if (!notes_.empty()) d << "; " << notes_;
    r.detail = d.str();
    r.counterexamples = counterexamples_;
    return r;
  }

 private:
  std::size_t keep_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> counterexamples_;
  std::string notes_;
};

std::string seed_k(const Seed& s, std::int64_t k) {
  return "seed=(" + to_string(s) + ") k=" + std::to_string(k);
}

CriterionResult sum_of_twenty_fibonacci() {
  Checker c;
  const Seed f = fibonacci_seed();
  const auto start = Clock::now();
  const Integer closed = gcd_sum(f, 20).value;
  const Integer brute = gcd_sum_bruteforce(f, 20, 10).value;
  const double elapsed = seconds_since(start);
  c.expect(closed == 55, "closed gcd_sum((0,1), 20) = " + to_string(closed) + ", expected 55");
  c.expect(brute == closed, "brute force (10 windows) = " + to_string(brute));
  c.expect(elapsed < 1e-3, "took " + std::to_string(elapsed * 1e3) + " ms, budget 1 ms");
  return c.finish(1, "sum-of-twenty", "");
}

CriterionResult seed_1_4_example() {
  Checker c;
  const Seed s(1, 4);
  const long expected[] = {55, 88, 143, 231};
  for (int n = 1; n <= 4; ++n) {
    const Integer w = window_sum(s, n, 5);
    c.expect(w == expected[n - 1], "window_sum((1,4), n=" + std::to_string(n) + ", k=5) = " +
                                       to_string(w) + ", expected " + std::to_string(expected[n - 1]));
  }
  const Integer value = gcd_sum(s, 5).value;
  c.expect(value == 11, "gcd_sum((1,4), 5) = " + to_string(value));
  const std::uint64_t period = pisano_period(s, 11);
  c.expect(period == 5, "pi_{1,4}(11) = " + std::to_string(period));
  const Integer lcm_value = gcd_sum_lcm(s, 5, DivisorVerified{}).value;
  c.expect(lcm_value == 11, "lcm characterization = " + to_string(lcm_value));
  return c.finish(2, "seed-1-4-example", "");
}

CriterionResult largest_modulus_sixty() {
  Checker c;
  const auto start = Clock::now();
  const Integer value = gcd_sum(fibonacci_seed(), 60).value;
  c.expect(value == 832040, "F(60) gcd-sum = " + to_string(value));
  const std::uint64_t period = pisano_period_uncached(fibonacci_seed(), 832040);
  c.expect(period == 60, "pi_F(832040) = " + std::to_string(period));
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 5.0, "took " + std::to_string(elapsed) + " s, budget 5 s");
  return c.finish(3, "modulus-832040", "");
}

CriterionResult table_conformance() {
  Checker c;
  const auto grid = coprime_grid(10);
  const scan::TableScan result = scan::table_conformance(grid, 1, 120);
  c.expect(result.points == grid.size() * 120, "scan covered " + std::to_string(result.points) + " points");
  c.bulk(result.applicable - result.mismatches.size());
  for (const auto& m : result.mismatches) {
    c.expect(false, seed_k(m.point.seed, m.point.k) + " predicted " + to_string(m.predicted) +
                        " actual " + to_string(m.actual));
  }
  c.note(std::to_string(grid.size()) + " seeds, " + std::to_string(result.applicable) + " of " +
         std::to_string(result.points) + " points table-applicable");
  return c.finish(4, "table-conformance", "");
}

CriterionResult characterization_equivalence() {
  Checker c;
  const auto grid = coprime_grid(10);
  const auto brute = scan::closed_vs_bruteforce(grid, 1, 120, 10);
  c.bulk(grid.size() * 120 - brute.size());
  for (const auto& m : brute) {
    c.expect(false, seed_k(m.point.seed, m.point.k) + " closed " + to_string(m.closed) +
                        " brute " + to_string(m.other));
  }
  for (const Seed& s : {fibonacci_seed(), lucas_seed(), Seed(1, 4)}) {
    for (std::int64_t k = 1; k <= 24; ++k) {
      const Integer closed = gcd_sum(s, k).value;
      const GcdSumResult scanned = gcd_sum_lcm(s, k, BoundedScan{to_u64(closed)});
      c.expect(scanned.value == closed && !scanned.partial,
               seed_k(s, k) + " closed " + to_string(closed) + " lcm scan " + to_string(scanned.value));
    }
  }
  c.note(std::to_string(grid.size() * 120) + " brute-force points, 72 lcm scans");
  return c.finish(5, "characterization-equivalence", "");
}

CriterionResult period_divisibility_biconditional() {
  Checker c;
  const auto grid = coprime_grid(10);
  const auto violations = scan::biconditional(grid, 2, 60, 1, 36);
  c.bulk(grid.size() * 59 * 36 - violations.size());
  for (const auto& v : violations) {
    c.expect(false, seed_k(v.seed, v.k) + " m=" + std::to_string(v.m) + " period|k=" +
                        (v.period_divides ? "true" : "false") + " m|sum=" +
                        (v.m_divides_sum ? "true" : "false"));
  }
  c.note(std::to_string(grid.size() * 59 * 36) + " (seed, m, k) triples");
  return c.finish(6, "period-divisibility", "");
}

CriterionResult identity_suite() {
  Checker c;
  const auto seeds = identity_grid();
  std::size_t points = 0;
  for (const auto& spec : all_identities()) {
    IndexRange primary{0, 200};
    std::optional<IndexRange> secondary;
    if (spec.id == IdentityId::fib_family) {
      primary = {-10, 10};
      secondary = IndexRange{-10, 10};
    } else if (spec.two_parameter) {
      secondary = IndexRange{0, 200};
    }
    const IdentityReport r = verify_identity(spec, primary, secondary, seeds);
    points += r.points_checked;
    c.bulk(r.points_checked - r.failures.size());
    for (const auto& f : r.failures) {
      c.expect(false, spec.name + " seed=" + (f.seed ? "(" + to_string(*f.seed) + ")" : "-") +
                          " p=" + std::to_string(f.p) +
                          (f.q ? " q=" + std::to_string(*f.q) : "") + " lhs=" + to_string(f.lhs) +
                          " rhs=" + to_string(f.rhs));
    }
  }
  c.note(std::to_string(all_identities().size()) + " identities, " + std::to_string(points) +
         " points");
  return c.finish(7, "identities", "");
}

CriterionResult even_periods() {
  Checker c;
  std::vector<Seed> unit_d;
  for (const Seed& s : coprime_grid(10)) {
    if (abs(seed_invariants(s).d) == 1) unit_d.push_back(s);
  }
  unit_d.push_back(lucas_seed());
  for (const Seed& s : unit_d) {
    const ParityScanReport r = parity_scan(s, 500);
    c.expect(r.odd_period_moduli.empty(),
             "seed=(" + to_string(s) + ") has " + std::to_string(r.odd_period_moduli.size()) +
                 " odd-period moduli" +
                 (r.odd_period_moduli.empty()
                      ? ""
                      : ", first m=" + std::to_string(r.odd_period_moduli.front().modulus)));
  }
  const ParityScanReport odd = parity_scan(Seed(1, 4), 500);
  bool found = false;
  for (const auto& rec : odd.odd_period_moduli) found |= rec.modulus == 11 && rec.period == 5;
  c.expect(found, "seed=(1,4) scan lacks (11, 5)");
  c.note(std::to_string(unit_d.size()) + " seeds scanned over (2, 500]");
  return c.finish(8, "even-periods", "");
}

CriterionResult fib_lucas_modulus_periods() {
  Checker c;
  for (const auto& e : pisano_of_fib_lucas_moduli(20)) {
    c.expect(e.matches(), to_string(e.kind) + " i=" + std::to_string(e.i) + " modulus " +
                              to_string(e.modulus) + " predicted " + to_string(e.predicted) +
                              " computed " + to_string(e.computed));
  }
  return c.finish(9, "fib-lucas-modulus-periods", "");
}

CriterionResult largest_modulus_for_period() {
  Checker c;
  for (std::int64_t k = 6; k <= 40; k += 2) {
    const MaxModulusResult r = max_modulus_for_period(k, true);
    c.expect(r.holds(), "k=" + std::to_string(k) + " m_F=" + to_string(r.m_f) + " form " +
                            to_string(r.form_value) + " period " + to_string(r.verified_period) +
                            " exhaustive " + (r.exhaustive_check ? "ok" : "failed"));
  }
  return c.finish(10, "largest-modulus", "");
}

CriterionResult odd_index_lucas() {
  Checker c;
  const auto grid = coprime_grid(10);
  for (const Seed& s : grid) {
    for (std::int64_t j = 1; j <= 41; j += 2) {
      const Integer got = lucas_from_gcd(s, j);
      const Integer want = lucas(j);
      c.expect(got == want, "seed=(" + to_string(s) + ") j=" + std::to_string(j) + " gcd " +
                                to_string(got) + " L_j " + to_string(want));
    }
  }
  return c.finish(11, "odd-index-lucas", "");
}

CriterionResult odd_k_prime_restriction() {
  Checker c;
  std::size_t with_cofactor = 0;
  std::map<std::string, std::size_t> primes_seen;
  for (const Seed& s : coprime_grid(10)) {
    for (std::int64_t k = 1; k <= 39; k += 2) {
      const PrimeRestrictionReport r = prime_restriction_check(s, k, 1000000);
      for (const Integer& p : r.offending) {
        c.expect(false, seed_k(s, k) + " value " + to_string(r.value) + " has prime " + to_string(p));
      }
      if (r.offending.empty()) c.expect(true, "");
      if (r.unfactored_cofactor != 1) {
        ++with_cofactor;
        c.note("unfactored cofactor " + to_string(r.unfactored_cofactor) + " at " + seed_k(s, k));
      }
    }
  }
  c.note(std::to_string(with_cofactor) + " values with unfactored cofactors");
  return c.finish(12, "odd-k-prime-restriction", "");
}

// Sums of k consecutive squared Fibonacci numbers, as tabulated for k <= 23.
const std::map<std::int64_t, long>& square_table() {
  static const std::map<std::int64_t, long> table{
      {0, 0},   {1, 1},   {2, 1},    {3, 2},   {4, 3},     {5, 1},   {6, 8},     {7, 1},
      {8, 21},  {9, 2},   {10, 55},  {11, 1},  {12, 144},  {13, 1},  {14, 377},  {15, 2},
      {16, 987}, {17, 1}, {18, 2584}, {19, 1}, {20, 6765}, {21, 2},  {22, 17711}, {23, 1}};
  return table;
}

CriterionResult squares_table() {
  Checker c;
  const Seed f = fibonacci_seed();
  for (const auto& [k, listed] : square_table()) {
    const SquaresGcdRecord r = squares_gcd(f, k, default_square_windows(k));
    c.expect(r.empirical_value == listed, "k=" + std::to_string(k) + " empirical " +
                                              to_string(r.empirical_value) + " listed " +
                                              std::to_string(listed));
  }
  std::size_t findings = 0;
  for (std::int64_t k = 2; k <= 30; k += 2) {
    const SquaresGcdRecord r = squares_gcd(f, k, default_square_windows(k));
    if (r.matches_conjecture() != true) {
      ++findings;
      c.note("finding: k=" + std::to_string(k) + " empirical " + to_string(r.empirical_value) +
             " vs F_k " + to_string(*r.conjectured));
    }
  }
  c.note(std::to_string(findings) + " conjecture findings for even k in [2, 30] (empirical)");
  return c.finish(13, "squares-table", "");
}

CriterionResult period_upper_bound() {
  Checker c;
  const std::vector<std::uint64_t> periods = scan::period_table(fibonacci_seed(), 2, 1000);
  for (std::uint64_t m = 2; m <= 1000; ++m) {
    const std::uint64_t p = periods[m - 2];
    c.expect(p <= 6 * m, "pi_F(" + std::to_string(m) + ") = " + std::to_string(p) + " > 6m");
  }
  c.expect(periods[10 - 2] == 60, "pi_F(10) = " + std::to_string(periods[8]) + ", expected 60");
  return c.finish(14, "period-upper-bound", "");
}

struct Entry {
  const char* key;
  const char* title;
  CriterionResult (*fn)();
};

constexpr Entry kEntries[] = {
    {"sum-of-twenty", "gcd of sums of 20 consecutive Fibonacci numbers is 55; brute force agrees; < 1 ms",
     sum_of_twenty_fibonacci},
    {"seed-1-4-example", "seed (1,4), k=5: sums 55,88,143,231; gcd 11; pi(11)=5; lcm form 11",
     seed_1_4_example},
    {"modulus-832040", "F(60) = 832040 and pi_F(832040) = 60 in < 5 s", largest_modulus_sixty},
    {"table-conformance", "k mod 12 table matches the closed gcd on the coprime |g|<=10 grid, k<=120",
     table_conformance},
    {"characterization-equivalence",
     "closed gcd = brute force (10 windows) on the grid; = lcm scan for k<=24", characterization_equivalence},
    {"period-divisibility", "pi(m) | k iff m | gcd-sum, m in [2,60], k in [1,36]",
     period_divisibility_biconditional},
    {"identities", "all preliminary identities hold exactly on the 25-seed grid", identity_suite},
    {"even-periods", "|D| = 1 seeds and Lucas have even periods for m in (2,500]; (1,4) has pi(11)=5",
     even_periods},
    {"fib-lucas-modulus-periods", "pi_F(F_i), pi_F(L_i) match 2i/4i predictions up to i=20",
     fib_lucas_modulus_periods},
    {"largest-modulus", "largest modulus with pi_F = k is F(k), exhaustive for even k in [6,40]",
     largest_modulus_for_period},
    {"odd-index-lucas", "gcd(G_{2j+1}-G_1, G_{2j+2}-G_2) = L_j, odd j <= 41, coprime grid",
     odd_index_lucas},
    {"odd-k-prime-restriction", "no prime = 3,7,13,17 mod 20 divides the gcd-sum for odd k <= 39",
     odd_k_prime_restriction},
    {"squares-table", "gcd of sums of k squared Fibonacci numbers matches the k<=23 table",
     squares_table},
    {"period-upper-bound", "pi_F(m) <= 6m for m in [2,1000], equality at m=10", period_upper_bound},
};

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> criteria = [] {
    std::vector<Criterion> out;
    int id = 1;
    for (const Entry& e : kEntries) {
      const int this_id = id++;
      out.push_back({this_id, e.key, e.title, [e, this_id] {
                       CriterionResult r = e.fn();
                       r.id = this_id;
                       r.key = e.key;
                       r.title = e.title;
                       return r;
                     }});
    }
    return out;
  }();
  return criteria;
}

VerificationSummary run_acceptance(const std::set<int>& only,
                                   const std::function<void(const CriterionResult&)>& on_result) {
  VerificationSummary summary;
  const auto start = Clock::now();
  for (const Criterion& criterion : acceptance_criteria()) {
    if (!only.empty() && !only.count(criterion.id)) continue;
    const auto t0 = Clock::now();
    CriterionResult r;
    try {
      r = criterion.run();
    } catch (const std::exception& e) {
      r.id = criterion.id;
      r.key = criterion.key;
      r.title = criterion.title;
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
      r.counterexamples.push_back(r.detail);
    }
    r.seconds = seconds_since(t0);
    (r.passed ? summary.passed : summary.failed) += 1;
    if (on_result) on_result(r);
    summary.criteria.push_back(std::move(r));
  }
  summary.elapsed_seconds = seconds_since(start);
  return summary;
}

}  // namespace gibsum
