#include "gibsum/seed.hpp"

#include <algorithm>

#include "gibsum/error.hpp"

namespace gibsum {

void require_nondegenerate(const Seed& seed) {
  if (seed.is_zero()) throw DomainError("degenerate seed (0,0)");
}

bool is_coprime(const Seed& seed) { return gcd(seed.g0, seed.g1) == 1; }

void require_coprime(const Seed& seed, std::string_view operation) {
  if (!is_coprime(seed)) {
    throw DomainError(std::string(operation) + " requires a coprime seed, got (" + to_string(seed) +
                      ")");
  }
}

std::string to_string(const Seed& seed) { return to_string(seed.g0) + "," + to_string(seed.g1); }

Seed parse_seed(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw DomainError("malformed seed '" + std::string(text) + "', expected g0,g1");
  }
  return Seed(parse_integer(text.substr(0, comma)), parse_integer(text.substr(comma + 1)));
}

std::vector<Seed> coprime_grid(int bound) {
  std::vector<Seed> out;
  for (long a = -bound; a <= bound; ++a) {
    for (long b = -bound; b <= bound; ++b) {
      Seed s(a, b);
      if (is_coprime(s)) out.push_back(std::move(s));
    }
  }
  for (const Seed& must : {fibonacci_seed(), lucas_seed()}) {
    if (std::find(out.begin(), out.end(), must) == out.end()) out.push_back(must);
  }
  return out;
}

std::vector<Seed> identity_grid() {
  std::vector<Seed> out;
  out.reserve(25);
  for (long a = -2; a <= 2; ++a) {
    for (long b = 1; b <= 5; ++b) out.emplace_back(a, b);
  }
  return out;
}

}  // namespace gibsum
