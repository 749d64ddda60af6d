#include "gibsum/scan.hpp"

#include <exception>

#include "gibsum/error.hpp"
#include "gibsum/gcdsum.hpp"
#include "gibsum/pisano.hpp"

namespace gibsum::scan {
namespace {

// Runs body(i) for i in [0, n) on the OpenMP team and rethrows the first
// exception once the loop has drained.
template <typename Body>
void parallel_for(std::int64_t n, Body body) {
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(gibsum_scan_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

template <typename Body>
void serial_for(std::int64_t n, Body body) {
  for (std::int64_t i = 0; i < n; ++i) body(i);
}

void check_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 1) throw DomainError("modulus range must start at 1 or above");
  if (lo > hi) throw DomainError("empty modulus range");
}

void check_k_range(std::int64_t lo, std::int64_t hi) {
  if (lo < 1) throw DomainError("k range must start at 1 or above");
  if (lo > hi) throw DomainError("empty k range");
}

std::uint64_t period_or_zero(const Seed& seed, std::uint64_t m) {
  return degenerate_mod(seed, m) ? 0 : pisano_period(seed, m);
}

template <typename For>
std::vector<std::uint64_t> period_table_impl(const Seed& seed, std::uint64_t lo, std::uint64_t hi,
                                             For loop) {
  check_range(lo, hi);
  std::vector<std::uint64_t> out(hi - lo + 1);
  loop(static_cast<std::int64_t>(out.size()), [&](std::int64_t i) {
    out[static_cast<std::size_t>(i)] = period_or_zero(seed, lo + static_cast<std::uint64_t>(i));
  });
  return out;
}

// Points are laid out seed-major so the flattened result order is deterministic.
template <typename For>
TableScan table_conformance_impl(std::span<const Seed> seeds, std::int64_t k_lo, std::int64_t k_hi,
                                 For loop) {
  check_k_range(k_lo, k_hi);
  const std::int64_t width = k_hi - k_lo + 1;
  const auto total = static_cast<std::int64_t>(seeds.size()) * width;
  std::vector<std::optional<Classification>> results(static_cast<std::size_t>(total));
  loop(total, [&](std::int64_t i) {
    const Seed& seed = seeds[static_cast<std::size_t>(i / width)];
    results[static_cast<std::size_t>(i)] = classify(seed, k_lo + i % width);
  });
  TableScan scan;
  scan.points = results.size();
  for (auto& c : results) {
    if (!c->predicted) continue;
    ++scan.applicable;
    if (*c->predicted != c->actual) {
      scan.mismatches.push_back({{c->seed, c->k}, *c->predicted, c->actual});
    }
  }
  return scan;
}

template <typename For>
std::vector<MethodMismatch> closed_vs_bruteforce_impl(std::span<const Seed> seeds,
                                                      std::int64_t k_lo, std::int64_t k_hi,
                                                      std::int64_t windows, For loop) {
  check_k_range(k_lo, k_hi);
  const std::int64_t width = k_hi - k_lo + 1;
  const auto total = static_cast<std::int64_t>(seeds.size()) * width;
  std::vector<std::optional<MethodMismatch>> results(static_cast<std::size_t>(total));
  loop(total, [&](std::int64_t i) {
    const Seed& seed = seeds[static_cast<std::size_t>(i / width)];
    const std::int64_t k = k_lo + i % width;
    Integer closed = gcd_sum(seed, k).value;
    Integer brute = gcd_sum_bruteforce(seed, k, windows).value;
    if (closed != brute) {
      results[static_cast<std::size_t>(i)] = MethodMismatch{{seed, k}, closed, brute};
    }
  });
  std::vector<MethodMismatch> out;
  for (auto& r : results) {
    if (r) out.push_back(std::move(*r));
  }
  return out;
}

template <typename For>
std::vector<BiconditionalViolation> biconditional_impl(std::span<const Seed> seeds,
                                                       std::uint64_t m_lo, std::uint64_t m_hi,
                                                       std::int64_t k_lo, std::int64_t k_hi,
                                                       For loop) {
  check_range(m_lo, m_hi);
  check_k_range(k_lo, k_hi);
  const auto n_seeds = static_cast<std::int64_t>(seeds.size());
  std::vector<std::vector<BiconditionalViolation>> per_seed(seeds.size());
  loop(n_seeds, [&](std::int64_t s) {
    const Seed& seed = seeds[static_cast<std::size_t>(s)];
    std::vector<Integer> sums;
    for (std::int64_t k = k_lo; k <= k_hi; ++k) sums.push_back(gcd_sum(seed, k).value);
    auto& out = per_seed[static_cast<std::size_t>(s)];
    for (std::uint64_t m = m_lo; m <= m_hi; ++m) {
      const std::uint64_t p = period_or_zero(seed, m);
      for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        const bool lhs = p == 0 || static_cast<std::uint64_t>(k) % p == 0;
        const bool rhs = mpz_divisible_ui_p(sums[static_cast<std::size_t>(k - k_lo)].get_mpz_t(),
                                            static_cast<unsigned long>(m)) != 0;
        if (lhs != rhs) out.push_back({seed, m, k, lhs, rhs});
      }
    }
  });
  std::vector<BiconditionalViolation> out;
  for (auto& v : per_seed) {
    for (auto& x : v) out.push_back(std::move(x));
  }
  return out;
}

constexpr auto kParallel = [](std::int64_t n, auto body) { parallel_for(n, body); };
constexpr auto kSerial = [](std::int64_t n, auto body) { serial_for(n, body); };

}  // namespace

std::vector<std::uint64_t> period_table(const Seed& seed, std::uint64_t lo, std::uint64_t hi) {
  return period_table_impl(seed, lo, hi, kParallel);
}
std::vector<std::uint64_t> period_table_serial(const Seed& seed, std::uint64_t lo,
                                               std::uint64_t hi) {
  return period_table_impl(seed, lo, hi, kSerial);
}

TableScan table_conformance(std::span<const Seed> seeds, std::int64_t k_lo, std::int64_t k_hi) {
  return table_conformance_impl(seeds, k_lo, k_hi, kParallel);
}
TableScan table_conformance_serial(std::span<const Seed> seeds, std::int64_t k_lo,
                                   std::int64_t k_hi) {
  return table_conformance_impl(seeds, k_lo, k_hi, kSerial);
}

std::vector<MethodMismatch> closed_vs_bruteforce(std::span<const Seed> seeds, std::int64_t k_lo,
                                                 std::int64_t k_hi, std::int64_t windows) {
  return closed_vs_bruteforce_impl(seeds, k_lo, k_hi, windows, kParallel);
}
std::vector<MethodMismatch> closed_vs_bruteforce_serial(std::span<const Seed> seeds,
                                                        std::int64_t k_lo, std::int64_t k_hi,
                                                        std::int64_t windows) {
  return closed_vs_bruteforce_impl(seeds, k_lo, k_hi, windows, kSerial);
}

std::vector<BiconditionalViolation> biconditional(std::span<const Seed> seeds, std::uint64_t m_lo,
                                                  std::uint64_t m_hi, std::int64_t k_lo,
                                                  std::int64_t k_hi) {
  return biconditional_impl(seeds, m_lo, m_hi, k_lo, k_hi, kParallel);
}
std::vector<BiconditionalViolation> biconditional_serial(std::span<const Seed> seeds,
                                                         std::uint64_t m_lo, std::uint64_t m_hi,
                                                         std::int64_t k_lo, std::int64_t k_hi) {
  return biconditional_impl(seeds, m_lo, m_hi, k_lo, k_hi, kSerial);
}

}  // namespace gibsum::scan
