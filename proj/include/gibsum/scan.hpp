#pragma once

// Grid kernels behind the verification suite. Each kernel has an OpenMP
// version and a `_serial` reference with identical output; tests pin the two
// together and bench/ compares their throughput.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gibsum/integer.hpp"
#include "gibsum/seed.hpp"

namespace gibsum::scan {

// pi(m) for m in [lo, hi] (lo >= 1); 0 marks moduli where the seed is (0,0) mod m.
std::vector<std::uint64_t> period_table(const Seed& seed, std::uint64_t lo, std::uint64_t hi);
std::vector<std::uint64_t> period_table_serial(const Seed& seed, std::uint64_t lo,
                                               std::uint64_t hi);

struct GridPoint {
  Seed seed;
  std::int64_t k = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

// A point where the table prediction and the closed formula disagree.
struct TableMismatch {
  GridPoint point;
  Integer predicted;
  Integer actual;

  friend bool operator==(const TableMismatch&, const TableMismatch&) = default;
};

struct TableScan {
  std::size_t points = 0;
  std::size_t applicable = 0;  // points where the table makes a prediction
  std::vector<TableMismatch> mismatches;

  friend bool operator==(const TableScan&, const TableScan&) = default;
};

// classify() over seeds x [k_lo, k_hi]; seeds must be coprime.
TableScan table_conformance(std::span<const Seed> seeds, std::int64_t k_lo, std::int64_t k_hi);
TableScan table_conformance_serial(std::span<const Seed> seeds, std::int64_t k_lo,
                                   std::int64_t k_hi);

struct MethodMismatch {
  GridPoint point;
  Integer closed;
  Integer other;

  friend bool operator==(const MethodMismatch&, const MethodMismatch&) = default;
};

// closed gcd vs brute force over `windows` window sums.
std::vector<MethodMismatch> closed_vs_bruteforce(std::span<const Seed> seeds, std::int64_t k_lo,
                                                 std::int64_t k_hi, std::int64_t windows);
std::vector<MethodMismatch> closed_vs_bruteforce_serial(std::span<const Seed> seeds,
                                                        std::int64_t k_lo, std::int64_t k_hi,
                                                        std::int64_t windows);

struct BiconditionalViolation {
  Seed seed;
  std::uint64_t m = 0;
  std::int64_t k = 0;
  bool period_divides = false;
  bool m_divides_sum = false;

  friend bool operator==(const BiconditionalViolation&, const BiconditionalViolation&) = default;
};

// pi(m) | k  <=>  m | gcd_sum(seed, k), for m in [m_lo, m_hi], k in [k_lo, k_hi].
// Moduli where the seed degenerates count as period 1 (the zero sequence is
// fixed by every shift); only non-coprime seeds can hit that case.
std::vector<BiconditionalViolation> biconditional(std::span<const Seed> seeds, std::uint64_t m_lo,
                                                  std::uint64_t m_hi, std::int64_t k_lo,
                                                  std::int64_t k_hi);
std::vector<BiconditionalViolation> biconditional_serial(std::span<const Seed> seeds,
                                                         std::uint64_t m_lo, std::uint64_t m_hi,
                                                         std::int64_t k_lo, std::int64_t k_hi);

}  // namespace gibsum::scan
