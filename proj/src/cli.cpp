#include "gibsum/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <ostream>
#include <set>

#include "gibsum/applications.hpp"
#include "gibsum/error.hpp"
#include "gibsum/gcdsum.hpp"
#include "gibsum/identities.hpp"
#include "gibsum/json.hpp"
#include "gibsum/pisano.hpp"
#include "gibsum/scan.hpp"
#include "gibsum/sequences.hpp"
#include "gibsum/suite.hpp"

namespace gibsum::cli {
namespace {

std::int64_t to_i64(const std::string& name, const std::string& text) {
  const Integer v = parse_integer(text);
  if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max()) {
    throw DomainError("--" + name + " out of 64-bit range: " + text);
  }
  return v.get_si();
}

std::uint64_t to_u64_arg(const std::string& name, const std::string& text) {
  const Integer v = parse_integer(text);
  if (!fits_modulus(v)) throw DomainError("--" + name + " must lie in [0, 2^63): " + text);
  return to_u64(v);
}

struct Context {
  std::string seed_text = "0,1";
  std::string format = "text";
  std::ostream* out = nullptr;

  Seed seed() const { return parse_seed(seed_text); }
  bool json_out() const { return format == "json"; }

  void emit(const json& j) const { *out << j.dump(2) << '\n'; }
  std::ostream& text() const { return *out; }
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

// Each subcommand registers its options and returns a handler run after parsing.
using Handler = std::function<int()>;

Handler add_term(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("term", "Gibonacci term G_n");
  auto n = std::make_shared<std::string>();
  sub->add_option("--n", *n, "index (may be negative)")->required();
  return [&ctx, n] {
    const Seed s = ctx.seed();
    const std::int64_t idx = to_i64("n", *n);
    const Integer v = gib_term(s, idx);
    if (ctx.json_out()) {
      ctx.emit({{"seed", s}, {"n", int_field(idx)}, {"value", v}});
    } else {
      ctx.text() << to_string(v) << '\n';
    }
    return kOk;
  };
}

Handler add_sum(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("sum", "sum G_n + ... + G_{n+k-1}");
  auto n = std::make_shared<std::string>();
  auto k = std::make_shared<std::string>();
  sub->add_option("--n", *n, "first index")->required();
  sub->add_option("--k", *k, "window length, k >= 1")->required();
  return [&ctx, n, k] {
    const Seed s = ctx.seed();
    const std::int64_t ni = to_i64("n", *n);
    const std::int64_t ki = to_i64("k", *k);
    const Integer v = window_sum(s, ni, ki);
    if (ctx.json_out()) {
      ctx.emit({{"seed", s}, {"n", int_field(ni)}, {"k", int_field(ki)}, {"value", v}});
    } else {
      ctx.text() << to_string(v) << '\n';
    }
    return kOk;
  };
}

Handler add_gcd_sum(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("gcd-sum", "gcd of all sums of k consecutive terms");
  struct Opts {
    std::string k;
    std::string method = "closed";
    std::string windows = "10";
    std::string lcm_mode = "divisor";
    std::string bound;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--k", o->k, "window length, k >= 1")->required();
  sub->add_option("--method", o->method, "closed | brute | lcm | all")
      ->check(CLI::IsMember({"closed", "brute", "lcm", "all"}));
  sub->add_option("--windows", o->windows, "windows for the brute-force method (>= 2)");
  sub->add_option("--lcm-mode", o->lcm_mode, "divisor | scan")
      ->check(CLI::IsMember({"divisor", "scan"}));
  sub->add_option("--bound", o->bound, "modulus bound for --lcm-mode scan (default: closed value)");
  return [&ctx, o] {
    const Seed s = ctx.seed();
    const std::int64_t k = to_i64("k", o->k);
    auto lcm_run = [&] {
      if (o->lcm_mode == "divisor") return gcd_sum_lcm(s, k, DivisorVerified{});
      std::uint64_t bound = 0;
      if (o->bound.empty()) {
        const Integer closed = gcd_sum(s, k).value;
        if (!fits_modulus(closed)) throw DomainError("closed value too large for a scan bound; pass --bound");
        bound = to_u64(closed);
      } else {
        bound = to_u64_arg("bound", o->bound);
      }
      return gcd_sum_lcm(s, k, BoundedScan{bound});
    };
    std::vector<GcdSumResult> results;
    if (o->method == "closed" || o->method == "all") results.push_back(gcd_sum(s, k));
    if (o->method == "brute" || o->method == "all") {
      results.push_back(gcd_sum_bruteforce(s, k, to_i64("windows", o->windows)));
    }
    if (o->method == "lcm" || o->method == "all") results.push_back(lcm_run());

    bool agree = true;
    for (const auto& r : results) agree &= r.value == results.front().value;

    if (ctx.json_out()) {
      if (results.size() == 1) {
        ctx.emit(results.front());
      } else {
        ctx.emit({{"results", results}, {"agree", agree}});
      }
    } else {
      for (const auto& r : results) {
        ctx.text() << to_string(r.value);
        if (results.size() > 1) ctx.text() << "  [" << to_string(r.method) << ']';
        if (r.partial) ctx.text() << "  (partial: bound below closed value)";
        ctx.text() << '\n';
      }
      if (!agree) ctx.text() << "methods disagree\n";
    }
    return agree ? kOk : kVerificationFailure;
  };
}

Handler add_pisano(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("pisano", "period of the seed's sequence modulo m");
  auto m = std::make_shared<std::string>();
  sub->add_option("--m", *m, "modulus, m >= 1")->required();
  return [&ctx, m] {
    const Seed s = ctx.seed();
    const Integer mod = parse_integer(*m);
    const Integer period = pisano_period(s, mod);
    if (ctx.json_out()) {
      ctx.emit({{"seed", s}, {"modulus", mod}, {"period", period}});
    } else {
      ctx.text() << to_string(period) << '\n';
    }
    return kOk;
  };
}

Handler add_classify(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("classify", "k mod 12 table prediction against the closed gcd");
  auto k = std::make_shared<std::string>();
  auto reduce = std::make_shared<bool>(false);
  sub->add_option("--k", *k, "window length, k >= 1")->required();
  sub->add_flag("--reduce", *reduce, "divide out gcd(G0, G1) first and scale by it");
  return [&ctx, k, reduce] {
    Seed s = ctx.seed();
    std::optional<ReducedSeed> red;
    if (*reduce) {
      red = reduce_seed(s);
      s = red->reduced;
    }
    const Classification c = classify(s, to_i64("k", *k));
    if (ctx.json_out()) {
      json j = c;
      if (red) j["reduction"] = *red;
      ctx.emit(j);
    } else {
      auto& o = ctx.text();
      if (red) o << "reduced seed: " << to_string(red->reduced) << " (d = " << to_string(red->d) << ")\n";
      o << "row: " << to_string(c.row) << " (k mod 12 = " << c.residue_mod_12 << ")\n"
        << "formula: " << c.formula << '\n'
        << "predicted: " << (c.predicted ? to_string(*c.predicted) : "table-inapplicable") << '\n'
        << "footnote: " << to_string(c.footnote) << '\n'
        << "actual: " << to_string(c.actual) << '\n'
        << "delta: " << to_string(c.delta) << "  D: " << to_string(c.d) << '\n';
      if (red) o << "actual (unreduced seed): " << to_string(red->d * c.actual) << '\n';
    }
    return c.conforms() ? kOk : kVerificationFailure;
  };
}

Handler add_parity_scan(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("parity-scan", "moduli m in (2, m_max] with odd period");
  auto m_max = std::make_shared<std::string>("500");
  sub->add_option("--m-max", *m_max, "largest modulus scanned");
  return [&ctx, m_max] {
    const ParityScanReport r = parity_scan(ctx.seed(), to_u64_arg("m-max", *m_max));
    if (ctx.json_out()) {
      ctx.emit(r);
    } else {
      ctx.text() << r.odd_period_moduli.size() << " odd-period moduli up to " << r.m_max << '\n';
      for (const auto& rec : r.odd_period_moduli) {
        ctx.text() << "  m=" << rec.modulus << " period=" << rec.period << '\n';
      }
      if (!r.degenerate_moduli.empty()) {
        ctx.text() << r.degenerate_moduli.size() << " degenerate moduli skipped\n";
      }
    }
    return kOk;
  };
}

Handler add_max_modulus(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("max-modulus", "largest modulus with Fibonacci period k (even k >= 6)");
  auto k = std::make_shared<std::string>();
  auto exhaustive = std::make_shared<bool>(false);
  sub->add_option("--k", *k, "even period, k >= 6")->required();
  sub->add_flag("--exhaustive", *exhaustive, "check every divisor of the candidate");
  return [&ctx, k, exhaustive] {
    const MaxModulusResult r = max_modulus_for_period(to_i64("k", *k), *exhaustive);
    if (ctx.json_out()) {
      ctx.emit(r);
    } else {
      auto& o = ctx.text();
      o << "m_F: " << to_string(r.m_f) << '\n'
        << "form: " << to_string(r.predicted_form) << " = " << to_string(r.form_value) << '\n'
        << "period of m_F: " << to_string(r.verified_period) << '\n';
      if (r.exhaustive_run) {
        o << "divisors examined: " << r.divisors_examined << ", with period k: "
          << r.moduli_with_period_k.size() << ", exhaustive check: " << bool_text(r.exhaustive_check)
          << '\n';
      }
    }
    return r.holds() ? kOk : kVerificationFailure;
  };
}

Handler add_lucas_odd(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("lucas-odd", "gcd(G_{2j+1} - G_1, G_{2j+2} - G_2) for odd j");
  auto j = std::make_shared<std::string>();
  sub->add_option("--j", *j, "odd j >= 1")->required();
  return [&ctx, j] {
    const Seed s = ctx.seed();
    const std::int64_t ji = to_i64("j", *j);
    const Integer got = lucas_from_gcd(s, ji);
    const Integer want = lucas(ji);
    if (ctx.json_out()) {
      ctx.emit({{"seed", s}, {"j", int_field(ji)}, {"value", got}, {"lucas", want}, {"equal", got == want}});
    } else {
      ctx.text() << to_string(got) << (got == want ? "  = L_j\n" : "  != L_j = " + to_string(want) + "\n");
    }
    return got == want ? kOk : kVerificationFailure;
  };
}

Handler add_primes_check(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("primes-check", "prime factors of the gcd-sum for odd k");
  auto k = std::make_shared<std::string>();
  auto bound = std::make_shared<std::string>("1000000");
  sub->add_option("--k", *k, "odd k >= 1")->required();
  sub->add_option("--bound", *bound, "trial-division bound");
  return [&ctx, k, bound] {
    const PrimeRestrictionReport r =
        prime_restriction_check(ctx.seed(), to_i64("k", *k), to_u64_arg("bound", *bound));
    if (ctx.json_out()) {
      ctx.emit(r);
    } else {
      auto& o = ctx.text();
      o << "value: " << to_string(r.value) << "\nprimes:";
      for (const auto& p : r.primes) o << ' ' << to_string(p);
      o << "\noffending:";
      for (const auto& p : r.offending) o << ' ' << to_string(p);
      o << "\nunfactored cofactor: " << to_string(r.unfactored_cofactor) << '\n';
    }
    return r.offending.empty() ? kOk : kVerificationFailure;
  };
}

Handler add_squares(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("squares", "gcd of sums of k consecutive squares (empirical)");
  auto k = std::make_shared<std::string>();
  auto windows = std::make_shared<std::string>();
  auto progression = std::make_shared<bool>(false);
  sub->add_option("--k", *k, "window length, k >= 0")->required();
  sub->add_option("--windows", *windows, "number of windows (default max(2k+10, 50))");
  sub->add_flag("--progression", *progression, "print the running gcd after each window");
  return [&ctx, k, windows, progression] {
    const Seed s = ctx.seed();
    const std::int64_t ki = to_i64("k", *k);
    const std::int64_t w = windows->empty() ? default_square_windows(ki) : to_i64("windows", *windows);
    const SquaresGcdRecord r = squares_gcd(s, ki, w);
    std::vector<Integer> prog;
    if (*progression) prog = squares_gcd_progression(s, ki, w);
    if (ctx.json_out()) {
      json j = r;
      if (*progression) j["progression"] = prog;
      ctx.emit(j);
    } else {
      auto& o = ctx.text();
      o << "empirical: " << to_string(r.empirical_value) << " (" << r.windows_used << " windows)\n";
      if (r.conjectured) {
        o << "conjectured F_k: " << to_string(*r.conjectured) << " ("
          << (*r.matches_conjecture() ? "matches" : "differs") << ")\n";
      }
      if (*progression) {
        o << "progression:";
        for (const auto& v : prog) o << ' ' << to_string(v);
        o << '\n';
      }
    }
    return kOk;
  };
}

Handler add_verify(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("verify", "run the acceptance suite and print a scoreboard");
  auto only = std::make_shared<std::vector<int>>();
  auto no_timing = std::make_shared<bool>(false);
  sub->add_option("--only", *only, "criterion ids to run (default all)");
  sub->add_flag("--no-timing", *no_timing, "omit timings so output is byte-stable");
  return [&ctx, only, no_timing] {
    const std::set<int> ids(only->begin(), only->end());
    for (int id : ids) {
      if (id < 1 || id > static_cast<int>(acceptance_criteria().size())) {
        throw DomainError("--only: no criterion " + std::to_string(id));
      }
    }
    const bool text = !ctx.json_out();
    auto& o = ctx.text();
    const VerificationSummary summary = run_acceptance(ids, [&](const CriterionResult& r) {
      if (!text) return;
      o << (r.passed ? "PASS" : "FAIL") << "  " << r.id << ' ' << r.key << ": " << r.title << '\n'
        << "      " << r.detail;
      if (!*no_timing) o << " (" << r.seconds << " s)";
      o << '\n';
      for (const auto& ce : r.counterexamples) o << "      counterexample: " << ce << '\n';
    });
    if (text) {
      o << summary.passed << '/' << summary.criteria.size() << " criteria passed";
      if (!*no_timing) o << " in " << summary.elapsed_seconds << " s";
      o << '\n';
    } else {
      ctx.emit(summary_to_json(summary, !*no_timing));
    }
    return summary.all_passed() ? kOk : kVerificationFailure;
  };
}

Handler add_identities(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("identities", "check the preliminary identities exactly");
  struct Opts {
    std::string name;
    std::string lo = "0", hi = "50";
    std::string q_lo, q_hi;
    bool grid = false;
    bool list = false;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--name", o->name, "single identity (default all)");
  sub->add_option("--lo", o->lo, "first primary index");
  sub->add_option("--hi", o->hi, "last primary index");
  sub->add_option("--q-lo", o->q_lo, "first secondary index (two-parameter identities)");
  sub->add_option("--q-hi", o->q_hi, "last secondary index");
  sub->add_flag("--grid", o->grid, "use the 25-seed grid g0 in [-2,2], g1 in [1,5] instead of --seed");
  sub->add_flag("--list", o->list, "list identity names and exit");
  return [&ctx, o] {
    if (o->list) {
      for (const auto& spec : all_identities()) {
        if (ctx.json_out()) continue;
        ctx.text() << spec.name << "  " << spec.statement << '\n';
      }
      if (ctx.json_out()) {
        json names = json::array();
        for (const auto& spec : all_identities()) names.push_back(spec.name);
        ctx.emit(names);
      }
      return kOk;
    }
    const std::vector<Seed> seeds = o->grid ? identity_grid() : std::vector<Seed>{ctx.seed()};
    const IndexRange primary{to_i64("lo", o->lo), to_i64("hi", o->hi)};
    std::optional<IndexRange> secondary;
    if (!o->q_lo.empty() || !o->q_hi.empty()) {
      secondary = IndexRange{to_i64("q-lo", o->q_lo.empty() ? o->lo : o->q_lo),
                             to_i64("q-hi", o->q_hi.empty() ? o->hi : o->q_hi)};
    }
    std::vector<IdentityReport> reports;
    if (o->name.empty()) {
      for (const auto& spec : all_identities()) {
        std::optional<IndexRange> sec = spec.two_parameter ? std::optional(secondary.value_or(primary))
                                                           : std::nullopt;
        reports.push_back(verify_identity(spec, primary, sec, seeds));
      }
    } else {
      const IdentitySpec& spec = identity_spec(identity_from_name(o->name));
      std::optional<IndexRange> sec = spec.two_parameter ? std::optional(secondary.value_or(primary))
                                                         : std::nullopt;
      reports.push_back(verify_identity(spec, primary, sec, seeds));
    }
    bool all_held = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.held(); });
    if (ctx.json_out()) {
      ctx.emit({{"reports", reports}, {"all_held", all_held}});
    } else {
      for (const auto& r : reports) {
        ctx.text() << (r.held() ? "holds " : "FAILS ") << to_string(r.id) << "  (" << r.points_checked
                   << " points, " << r.seeds_checked << " seeds)\n";
        for (const auto& f : r.failures) {
          ctx.text() << "  p=" << f.p;
          if (f.q) ctx.text() << " q=" << *f.q;
          if (f.seed) ctx.text() << " seed=" << to_string(*f.seed);
          ctx.text() << " lhs=" << to_string(f.lhs) << " rhs=" << to_string(f.rhs) << '\n';
        }
      }
    }
    return all_held ? kOk : kVerificationFailure;
  };
}

Handler add_window_length(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("window-length", "least k such that m divides every k-window sum");
  auto m = std::make_shared<std::string>();
  auto cap = std::make_shared<std::string>("100000");
  sub->add_option("--m", *m, "modulus, m >= 2")->required();
  sub->add_option("--cap", *cap, "largest k searched");
  return [&ctx, m, cap] {
    const Seed s = ctx.seed();
    const std::uint64_t mod = to_u64_arg("m", *m);
    const std::uint64_t k = minimal_window_length(s, mod, to_u64_arg("cap", *cap));
    if (ctx.json_out()) {
      ctx.emit({{"seed", s}, {"modulus", uint_field(mod)}, {"k", uint_field(k)}});
    } else {
      ctx.text() << k << '\n';
    }
    return kOk;
  };
}

Handler add_shift(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("shift", "least r with the --other sequence equal to this one shifted by r mod m");
  auto other = std::make_shared<std::string>();
  auto m = std::make_shared<std::string>();
  sub->add_option("--other", *other, "second seed g0,g1")->required();
  sub->add_option("--m", *m, "modulus, m >= 1")->required();
  return [&ctx, other, m] {
    const Seed a = ctx.seed();
    const Seed b = parse_seed(*other);
    const std::uint64_t mod = to_u64_arg("m", *m);
    const auto r = equivalent_up_to_shift(a, b, mod);
    if (ctx.json_out()) {
      ctx.emit({{"seed", a}, {"other", b}, {"modulus", uint_field(mod)},
                {"shift", r ? json(uint_field(*r)) : json(nullptr)}});
    } else {
      ctx.text() << (r ? std::to_string(*r) : std::string("none")) << '\n';
    }
    return kOk;
  };
}

Handler add_period_lcm(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("period-lcm", "period mod m1*m2 as lcm of periods, gcd(m1, m2) = 1");
  auto m1 = std::make_shared<std::string>();
  auto m2 = std::make_shared<std::string>();
  sub->add_option("--m1", *m1, "first modulus")->required();
  sub->add_option("--m2", *m2, "second modulus")->required();
  return [&ctx, m1, m2] {
    const Seed s = ctx.seed();
    const std::uint64_t a = to_u64_arg("m1", *m1), b = to_u64_arg("m2", *m2);
    const std::uint64_t p = period_lcm_compose(s, a, b);
    if (ctx.json_out()) {
      ctx.emit({{"seed", s}, {"m1", uint_field(a)}, {"m2", uint_field(b)}, {"period", uint_field(p)}});
    } else {
      ctx.text() << p << '\n';
    }
    return kOk;
  };
}

Handler add_invariants(CLI::App& app, Context& ctx) {
  app.add_subcommand("invariants", "delta = gcd(G0+G2, G1+G3) and D = G1^2 - G0 G1 - G0^2");
  return [&ctx] {
    const Seed s = ctx.seed();
    const SeedInvariants inv = seed_invariants(s);
    if (ctx.json_out()) {
      json j = inv;
      j["seed"] = s;
      ctx.emit(j);
    } else {
      ctx.text() << "delta: " << to_string(inv.delta) << "\nD: " << to_string(inv.d) << '\n';
    }
    return kOk;
  };
}

Handler add_reduce(CLI::App& app, Context& ctx) {
  app.add_subcommand("reduce", "split the seed into gcd(G0, G1) times a coprime seed");
  return [&ctx] {
    const ReducedSeed r = reduce_seed(ctx.seed());
    if (ctx.json_out()) {
      ctx.emit(r);
    } else {
      ctx.text() << "d: " << to_string(r.d) << "\nreduced: " << to_string(r.reduced) << '\n';
    }
    return kOk;
  };
}

Handler add_lucas_periods(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("lucas-periods", "Fibonacci periods modulo F_i and L_i against 2i / 4i");
  auto i_max = std::make_shared<std::string>("20");
  sub->add_option("--i-max", *i_max, "largest index, >= 5");
  return [&ctx, i_max] {
    const auto entries = pisano_of_fib_lucas_moduli(to_i64("i-max", *i_max));
    const bool ok = std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.matches(); });
    if (ctx.json_out()) {
      ctx.emit(entries);
    } else {
      for (const auto& e : entries) {
        ctx.text() << (e.kind == ModulusKind::fibonacci ? "F_" : "L_") << e.i << " = "
                   << to_string(e.modulus) << "  period " << to_string(e.computed) << "  predicted "
                   << to_string(e.predicted) << (e.matches() ? "" : "  MISMATCH") << '\n';
      }
    }
    return ok ? kOk : kVerificationFailure;
  };
}

Handler add_biconditional(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand(
      "biconditional",
      "check period(m) | k <=> m | gcd-sum; non-coprime seeds are experimental and never fail");
  auto m_max = std::make_shared<std::string>("60");
  auto k_max = std::make_shared<std::string>("36");
  sub->add_option("--m-max", *m_max, "largest modulus");
  sub->add_option("--k-max", *k_max, "largest k");
  return [&ctx, m_max, k_max] {
    const Seed s = ctx.seed();
    require_nondegenerate(s);
    const bool experimental = !is_coprime(s);
    const std::vector<Seed> seeds{s};
    const auto v = scan::biconditional(seeds, 2, to_u64_arg("m-max", *m_max), 1, to_i64("k-max", *k_max));
    if (ctx.json_out()) {
      json list = json::array();
      for (const auto& x : v) {
        list.push_back({{"m", uint_field(x.m)}, {"k", int_field(x.k)},
                        {"period_divides", x.period_divides}, {"m_divides_sum", x.m_divides_sum}});
      }
      ctx.emit({{"seed", s}, {"experimental", experimental}, {"violations", list}});
    } else {
      if (experimental) ctx.text() << "experimental: seed is not coprime\n";
      ctx.text() << v.size() << " violations\n";
      for (const auto& x : v) {
        ctx.text() << "  m=" << x.m << " k=" << x.k << " period|k=" << bool_text(x.period_divides)
                   << " m|sum=" << bool_text(x.m_divides_sum) << '\n';
      }
    }
    return v.empty() || experimental ? kOk : kVerificationFailure;
  };
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gibonacci window-sum gcds and generalized Pisano periods", "gibsum"};
  Context ctx;
  ctx.out = &out;
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", ctx.seed_text, "seed g0,g1 (default 0,1)");
  app.add_option("--format", ctx.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::pair<CLI::App*, Handler>> handlers;
  using Adder = Handler (*)(CLI::App&, Context&);
  for (Adder add : {add_term, add_sum, add_gcd_sum, add_pisano, add_classify, add_parity_scan,
                    add_max_modulus, add_lucas_odd, add_primes_check, add_squares, add_verify,
                    add_identities, add_window_length, add_shift, add_period_lcm, add_invariants,
                    add_reduce, add_lucas_periods, add_biconditional}) {
    Handler h = add(app, ctx);
    handlers.emplace_back(app.get_subcommands([](CLI::App*) { return true; }).back(), std::move(h));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kDomainError;
  }

  try {
    for (auto& [sub, handler] : handlers) {
      if (sub->parsed()) return handler();
    }
    err << "error: no subcommand\n";
    return kDomainError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
}

}  // namespace gibsum::cli
