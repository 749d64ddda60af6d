#include "gibsum/pisano.hpp"

#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gibsum/error.hpp"
#include "gibsum/scan.hpp"

namespace gibsum {
namespace {

// a + b mod m for a, b in [0, m), without overflow for any m.
std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t s = a + b;
  if (s < a || s >= m) s -= m;
  return s;
}

std::uint64_t pair_space(std::uint64_t m) {
  if (m > std::numeric_limits<std::uint32_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return m * m;
}

struct Residues {
  std::uint64_t r0, r1;
};

Residues residues(const Seed& seed, std::uint64_t m) {
  return {mod_u64(seed.g0, m), mod_u64(seed.g1, m)};
}

void require_modulus(std::uint64_t m) {
  if (m == 0) throw DomainError("modulus must be >= 1");
}

Residues checked_residues(const Seed& seed, std::uint64_t m) {
  Residues r = residues(seed, m);
  if (r.r0 == 0 && r.r1 == 0) {
    throw DomainError("seed (" + to_string(seed) + ") is (0,0) modulo " + std::to_string(m) +
                      "; the period is undefined");
  }
  return r;
}

std::uint64_t search_period(Residues start, std::uint64_t m) {
  const std::uint64_t cap = pair_space(m);
  std::uint64_t a = start.r0;
  std::uint64_t b = start.r1;
  for (std::uint64_t r = 1; r <= cap; ++r) {
    const std::uint64_t c = add_mod(a, b, m);
    a = b;
    b = c;
    if (a == start.r0 && b == start.r1) return r;
  }
  // The step map is invertible on (Z/m)^2, so the orbit must close within m^2 steps.
  throw std::logic_error("period search exceeded the pair-space bound for m = " + std::to_string(m));
}

Integer search_period_big(const Seed& seed, const Integer& m) {
  Integer r0, r1;
  mpz_fdiv_r(r0.get_mpz_t(), seed.g0.get_mpz_t(), m.get_mpz_t());
  mpz_fdiv_r(r1.get_mpz_t(), seed.g1.get_mpz_t(), m.get_mpz_t());
  if (sgn(r0) == 0 && sgn(r1) == 0) {
    throw DomainError("seed (" + to_string(seed) + ") is (0,0) modulo " + to_string(m) +
                      "; the period is undefined");
  }
  const Integer cap = m * m;
  Integer a = r0, b = r1, c;
  for (Integer r = 1; r <= cap; ++r) {
    c = a + b;
    if (c >= m) c -= m;
    a.swap(b);
    b.swap(c);
    if (a == r0 && b == r1) return r;
  }
  throw std::logic_error("period search exceeded the pair-space bound for m = " + to_string(m));
}

}  // namespace

std::size_t PeriodCache::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = std::hash<std::uint64_t>{}(k.m);
  h ^= std::hash<std::uint64_t>{}(k.r0) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= std::hash<std::uint64_t>{}(k.r1) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::optional<std::uint64_t> PeriodCache::find(std::uint64_t r0, std::uint64_t r1,
                                               std::uint64_t m) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(Key{r0, r1, m});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void PeriodCache::insert(std::uint64_t r0, std::uint64_t r1, std::uint64_t m,
                         std::uint64_t period) {
  std::unique_lock lock(mutex_);
  entries_.emplace(Key{r0, r1, m}, period);
}

void PeriodCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

std::size_t PeriodCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

PeriodCache& default_period_cache() {
  static PeriodCache cache;
  return cache;
}

bool degenerate_mod(const Seed& seed, std::uint64_t m) {
  require_modulus(m);
  if (m == 1) return false;
  Residues r = residues(seed, m);
  return r.r0 == 0 && r.r1 == 0;
}

std::uint64_t pisano_period_uncached(const Seed& seed, std::uint64_t m) {
  require_modulus(m);
  if (m == 1) return 1;
  return search_period(checked_residues(seed, m), m);
}

std::uint64_t pisano_period(const Seed& seed, std::uint64_t m) {
  require_modulus(m);
  if (m == 1) return 1;
  const Residues r = checked_residues(seed, m);
  PeriodCache& cache = default_period_cache();
  if (auto hit = cache.find(r.r0, r.r1, m)) return *hit;
  const std::uint64_t period = search_period(r, m);
  cache.insert(r.r0, r.r1, m, period);
  return period;
}

Integer pisano_period(const Seed& seed, const Integer& m) {
  if (sgn(m) <= 0) throw DomainError("modulus must be >= 1");
  if (fits_modulus(m)) return from_u64(pisano_period(seed, to_u64(m)));
  return search_period_big(seed, m);
}

PeriodRecord period_record(const Seed& seed, std::uint64_t m) {
  return {seed, m, pisano_period(seed, m)};
}

bool period_divides_k(const Seed& seed, std::uint64_t m, std::uint64_t k) {
  if (m < 2) throw DomainError("period_divides_k requires m >= 2");
  if (k < 1) throw DomainError("period_divides_k requires k >= 1");
  return k % pisano_period(seed, m) == 0;
}

std::uint64_t minimal_window_length(const Seed& seed, std::uint64_t m, std::uint64_t search_cap) {
  if (m < 2) throw DomainError("minimal_window_length requires m >= 2");
  const std::uint64_t period = pisano_period(seed, m);

  // One period of residues G_0 .. G_{period-1}; index arithmetic wraps.
  std::vector<std::uint64_t> res(period);
  Residues r = residues(seed, m);
  std::uint64_t a = r.r0, b = r.r1;
  for (std::uint64_t i = 0; i < period; ++i) {
    res[i] = a;
    const std::uint64_t c = add_mod(a, b, m);
    a = b;
    b = c;
  }

  // window(n, s) = G_{n+s+1} - G_{n+1}; starts n = 1 .. period cover every residue phase.
  for (std::uint64_t s = 1; s <= search_cap; ++s) {
    bool all = true;
    for (std::uint64_t n = 1; n <= period && all; ++n) {
      all = res[(n + s + 1) % period] == res[(n + 1) % period];
    }
    if (all) return s;
  }
  throw DomainError("search cap " + std::to_string(search_cap) +
                    " too small to certify a window length modulo " + std::to_string(m));
}

ParityScanReport parity_scan(const Seed& seed, std::uint64_t m_max) {
  if (m_max < 3) throw DomainError("parity_scan requires m_max >= 3");
  ParityScanReport report{seed, m_max, {}, {}};
  const std::vector<std::uint64_t> periods = scan::period_table(seed, 3, m_max);
  for (std::uint64_t m = 3; m <= m_max; ++m) {
    const std::uint64_t p = periods[m - 3];
    if (p == 0) {
      report.degenerate_moduli.push_back(m);
    } else if (p % 2 == 1) {
      report.odd_period_moduli.push_back({seed, m, p});
    }
  }
  return report;
}

std::optional<std::uint64_t> equivalent_up_to_shift(const Seed& a, const Seed& b,
                                                    std::uint64_t m) {
  if (m < 2) throw DomainError("equivalent_up_to_shift requires m >= 2");
  const std::uint64_t period = pisano_period(a, m);
  if (pisano_period(b, m) != period) return std::nullopt;
  const Residues target = residues(b, m);
  Residues cur = residues(a, m);
  for (std::uint64_t r = 0; r < period; ++r) {
    if (cur.r0 == target.r0 && cur.r1 == target.r1) return r;
    cur = {cur.r1, add_mod(cur.r0, cur.r1, m)};
  }
  return std::nullopt;
}

std::uint64_t period_lcm_compose(const Seed& seed, std::uint64_t m1, std::uint64_t m2) {
  require_modulus(m1);
  require_modulus(m2);
  if (std::gcd(m1, m2) != 1) {
    throw DomainError("period_lcm_compose requires coprime moduli, got " + std::to_string(m1) +
                      " and " + std::to_string(m2));
  }
  if (m1 > std::numeric_limits<std::uint64_t>::max() / m2) {
    throw DomainError("product of moduli overflows 64 bits");
  }
  const std::uint64_t composed = std::lcm(pisano_period(seed, m1), pisano_period(seed, m2));
  const std::uint64_t direct = pisano_period(seed, m1 * m2);
  if (composed != direct) {
    throw std::logic_error("lcm of component periods " + std::to_string(composed) +
                           " differs from the direct period " + std::to_string(direct));
  }
  return composed;
}

}  // namespace gibsum
