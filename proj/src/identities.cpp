#include "gibsum/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "gibsum/error.hpp"
#include "gibsum/sequences.hpp"

namespace gibsum {
namespace {

std::vector<Integer> walk_table(const Integer& g0, const Integer& g1, std::int64_t reach) {
  const auto size = static_cast<std::size_t>(2 * reach + 1);
  std::vector<Integer> t(size);
  const auto origin = static_cast<std::size_t>(reach);
  t[origin] = g0;
  if (reach == 0) return t;
  t[origin + 1] = g1;
  for (std::size_t i = origin + 2; i < size; ++i) t[i] = t[i - 1] + t[i - 2];
  // G_{i-1} = G_{i+1} - G_i
  for (std::size_t i = origin; i-- > 0;) t[i] = t[i + 2] - t[i + 1];
  return t;
}

template <typename Eval>
std::vector<Integer> indexed_table(std::int64_t reach, Eval eval) {
  std::vector<Integer> t;
  t.reserve(static_cast<std::size_t>(2 * reach + 1));
  for (std::int64_t i = -reach; i <= reach; ++i) t.push_back(eval(i));
  return t;
}

Integer sign_power(std::int64_t n) { return (n % 2 == 0) ? Integer(1) : Integer(-1); }

std::vector<IdentitySpec> build_specs() {
  std::vector<IdentitySpec> v;
  using T = TermTables;
  using I = std::int64_t;

  v.push_back({IdentityId::lucas_from_fib, "lucas_from_fib", "L_n = F_{n+1} + F_{n-1}", false,
               false, kUnbounded, kUnbounded, 2,
               [](const T& t, I n, I) { return t.walk_lucas(n); },
               [](const T& t, I n, I) { return Integer(t.fib(n + 1) + t.fib(n - 1)); }});
  v.push_back({IdentityId::fib_doubling, "fib_doubling", "F_{2n} = F_n L_n", false, false,
               kUnbounded, kUnbounded, 2,
               [](const T& t, I n, I) { return t.walk_fib(2 * n); },
               [](const T& t, I n, I) { return Integer(t.fib(n) * t.lucas(n)); }});
  v.push_back({IdentityId::gib_addition, "gib_addition", "G_{m+n} = F_{m-1} G_n + F_m G_{n+1}",
               true, true, 1, 1, 2,
               [](const T& t, I m, I n) { return t.walk(m + n); },
               [](const T& t, I m, I n) {
                 return Integer(t.fib(m - 1) * t.fast(n) + t.fib(m) * t.fast(n + 1));
               }});
  v.push_back({IdentityId::gib_from_fib, "gib_from_fib", "G_i = G0 F_{i-1} + G1 F_i", true, false,
               1, kUnbounded, 2, [](const T& t, I i, I) { return t.walk(i); },
               [](const T& t, I i, I) {
                 return Integer(t.seed().g0 * t.fib(i - 1) + t.seed().g1 * t.fib(i));
               }});
  v.push_back({IdentityId::gib_prefix_sum, "gib_prefix_sum", "sum_{i=1}^{n} G_i = G_{n+2} - G_2",
               true, false, 1, kUnbounded, 2,
               [](const T& t, I n, I) {
                 Integer s = 0;
                 for (I i = 1; i <= n; ++i) s += t.walk(i);
                 return s;
               },
               [](const T& t, I n, I) { return Integer(t.fast(n + 2) - t.fast(2)); }});
  v.push_back({IdentityId::cassini, "cassini", "G_{n+1} G_{n-1} - G_n^2 = (-1)^n D", true, false,
               0, kUnbounded, 2,
               [](const T& t, I n, I) {
                 return Integer(t.walk(n + 1) * t.walk(n - 1) - t.walk(n) * t.walk(n));
               },
               [](const T& t, I n, I) {
                 return Integer(sign_power(n) * d_invariant(t.seed().g0, t.seed().g1));
               }});
  v.push_back({IdentityId::gap_two_sum, "gap_two_sum", "G_{j-1} + G_{j+1} = G0 L_{j-1} + G1 L_j",
               true, false, 1, kUnbounded, 2,
               [](const T& t, I j, I) { return Integer(t.walk(j - 1) + t.walk(j + 1)); },
               [](const T& t, I j, I) {
                 return Integer(t.seed().g0 * t.lucas(j - 1) + t.seed().g1 * t.lucas(j));
               }});
  v.push_back({IdentityId::fib_4j1, "fib_4j1", "F_{4j+1} - 1 = F_{2j} L_{2j+1}", false, false, 0,
               kUnbounded, 4, [](const T& t, I j, I) { return Integer(t.walk_fib(4 * j + 1) - 1); },
               [](const T& t, I j, I) { return Integer(t.fib(2 * j) * t.lucas(2 * j + 1)); }});
  v.push_back({IdentityId::fib_4j3, "fib_4j3", "F_{4j+3} - 1 = F_{2j+2} L_{2j+1}", false, false, 0,
               kUnbounded, 4, [](const T& t, I j, I) { return Integer(t.walk_fib(4 * j + 3) - 1); },
               [](const T& t, I j, I) { return Integer(t.fib(2 * j + 2) * t.lucas(2 * j + 1)); }});
  v.push_back({IdentityId::fib_4j4, "fib_4j4", "F_{4j+4} - 1 = F_{2j+3} L_{2j+1}", false, false, 0,
               kUnbounded, 4, [](const T& t, I j, I) { return Integer(t.walk_fib(4 * j + 4) - 1); },
               [](const T& t, I j, I) { return Integer(t.fib(2 * j + 3) * t.lucas(2 * j + 1)); }});
  // Parameters are (j, r).
  v.push_back({IdentityId::fib_family, "fib_family", "F_{4j+r+1} - F_{r-1} = F_{2j+r} L_{2j+1}",
               false, true, kUnbounded, kUnbounded, 5,
               [](const T& t, I j, I r) {
                 return Integer(t.walk_fib(4 * j + r + 1) - t.walk_fib(r - 1));
               },
               [](const T& t, I j, I r) { return Integer(t.fib(2 * j + r) * t.lucas(2 * j + 1)); }});
  v.push_back({IdentityId::gib_4j1, "gib_4j1", "G_{4j+1} - G_1 = F_{2j} (G_{2j} + G_{2j+2})", true,
               false, 0, kUnbounded, 4,
               [](const T& t, I j, I) { return Integer(t.walk(4 * j + 1) - t.walk(1)); },
               [](const T& t, I j, I) {
                 return Integer(t.fib(2 * j) * (t.fast(2 * j) + t.fast(2 * j + 2)));
               }});
  v.push_back({IdentityId::gib_4j2, "gib_4j2", "G_{4j+2} - G_2 = F_{2j} (G_{2j+1} + G_{2j+3})",
               true, false, 0, kUnbounded, 4,
               [](const T& t, I j, I) { return Integer(t.walk(4 * j + 2) - t.walk(2)); },
               [](const T& t, I j, I) {
                 return Integer(t.fib(2 * j) * (t.fast(2 * j + 1) + t.fast(2 * j + 3)));
               }});
  v.push_back({IdentityId::gib_4j3, "gib_4j3", "G_{4j+3} - G_1 = L_{2j+1} G_{2j+2}", true, false, 0,
               kUnbounded, 4,
               [](const T& t, I j, I) { return Integer(t.walk(4 * j + 3) - t.walk(1)); },
               [](const T& t, I j, I) { return Integer(t.lucas(2 * j + 1) * t.fast(2 * j + 2)); }});
  v.push_back({IdentityId::gib_4j4, "gib_4j4", "G_{4j+4} - G_2 = L_{2j+1} G_{2j+3}", true, false, 0,
               kUnbounded, 4,
               [](const T& t, I j, I) { return Integer(t.walk(4 * j + 4) - t.walk(2)); },
               [](const T& t, I j, I) { return Integer(t.lucas(2 * j + 1) * t.fast(2 * j + 3)); }});
  return v;
}

IndexRange clip(IndexRange requested, std::int64_t domain_min, const std::string& name) {
  if (requested.lo > requested.hi) {
    throw DomainError("empty index range for identity " + name);
  }
  IndexRange r = requested;
  if (domain_min != kUnbounded) r.lo = std::max(r.lo, domain_min);
  if (r.lo > r.hi) {
    throw DomainError("index range lies outside the domain of identity " + name);
  }
  return r;
}

std::int64_t max_abs(IndexRange r) { return std::max(r.lo < 0 ? -r.lo : r.lo, r.hi < 0 ? -r.hi : r.hi); }

}  // namespace

TermTables::TermTables(const Seed& seed, std::int64_t reach, bool with_seed_terms)
    : seed_(seed), reach_(reach) {
  walk_fib_ = walk_table(0, 1, reach);
  walk_lucas_ = walk_table(2, 1, reach);
  fib_ = indexed_table(reach, [](std::int64_t i) { return gibsum::fib(i); });
  lucas_ = indexed_table(reach, [](std::int64_t i) { return gibsum::lucas(i); });
  if (with_seed_terms) {
    walk_ = walk_table(seed.g0, seed.g1, reach);
    fast_ = indexed_table(reach, [&seed](std::int64_t i) { return gib_term(seed, i); });
  }
}

const Integer& TermTables::at(const std::vector<Integer>& table, std::int64_t i) const {
  if (i < -reach_ || i > reach_ || table.empty()) {
    throw std::out_of_range("term index " + std::to_string(i) + " outside table reach");
  }
  return table[static_cast<std::size_t>(i + reach_)];
}

const std::vector<IdentitySpec>& all_identities() {
  static const std::vector<IdentitySpec> specs = build_specs();
  return specs;
}

const IdentitySpec& identity_spec(IdentityId id) {
  for (const auto& s : all_identities()) {
    if (s.id == id) return s;
  }
  throw DomainError("unknown identity id");
}

std::string to_string(IdentityId id) { return identity_spec(id).name; }

IdentityId identity_from_name(std::string_view name) {
  for (const auto& s : all_identities()) {
    if (s.name == name) return s.id;
  }
  throw DomainError("unknown identity '" + std::string(name) + "'");
}

IdentityReport verify_identity(const IdentitySpec& spec, IndexRange primary,
                               std::optional<IndexRange> secondary, std::span<const Seed> seeds) {
  IdentityReport report{spec.id, clip(primary, spec.primary_min, spec.name), std::nullopt, 0, 0, {}};
  if (spec.two_parameter) {
    report.secondary = clip(secondary.value_or(primary), spec.secondary_min, spec.name);
  }

  std::vector<Seed> run_seeds;
  if (spec.seeded) {
    if (seeds.empty()) throw DomainError("identity " + spec.name + " needs at least one seed");
    run_seeds.assign(seeds.begin(), seeds.end());
  } else {
    run_seeds.push_back(fibonacci_seed());
  }

  const IndexRange p_range = report.primary;
  const IndexRange q_range = report.secondary.value_or(IndexRange{0, 0});
  const std::int64_t m = std::max(max_abs(p_range), max_abs(q_range));
  const std::int64_t reach = spec.reach_factor * m + 8;

  const auto n_seeds = static_cast<std::int64_t>(run_seeds.size());
  std::vector<std::vector<IdentityFailure>> per_seed(run_seeds.size());
  std::vector<std::size_t> points(run_seeds.size(), 0);
  std::exception_ptr error;

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t s = 0; s < n_seeds; ++s) {
    try {
      const Seed& seed = run_seeds[static_cast<std::size_t>(s)];
      const TermTables tables(seed, reach, spec.seeded);
      auto& out = per_seed[static_cast<std::size_t>(s)];
      for (std::int64_t p = p_range.lo; p <= p_range.hi; ++p) {
        for (std::int64_t q = q_range.lo; q <= q_range.hi; ++q) {
          Integer left = spec.lhs(tables, p, q);
          Integer right = spec.rhs(tables, p, q);
          ++points[static_cast<std::size_t>(s)];
          if (left != right) {
            out.push_back({spec.seeded ? std::optional<Seed>(seed) : std::nullopt, p,
                           spec.two_parameter ? std::optional<std::int64_t>(q) : std::nullopt,
                           std::move(left), std::move(right)});
          }
        }
      }
    } catch (...) {
#pragma omp critical(gibsum_identity_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  report.seeds_checked = spec.seeded ? run_seeds.size() : 0;
  for (std::size_t s = 0; s < run_seeds.size(); ++s) {
    report.points_checked += points[s];
    for (auto& f : per_seed[s]) report.failures.push_back(std::move(f));
  }
  return report;
}

IdentityReport verify_identity(IdentityId id, IndexRange primary,
                               std::optional<IndexRange> secondary, std::span<const Seed> seeds) {
  return verify_identity(identity_spec(id), primary, secondary, seeds);
}

}  // namespace gibsum
