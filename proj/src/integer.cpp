#include "gibsum/integer.hpp"

#include <cctype>
#include <limits>

#include "gibsum/error.hpp"

namespace gibsum {

Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer abs(const Integer& a) {
  Integer out;
  mpz_abs(out.get_mpz_t(), a.get_mpz_t());
  return out;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  if (pos == text.size()) throw DomainError("malformed integer: '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw DomainError("malformed integer: '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

bool fits_modulus(const Integer& value) {
  return sgn(value) >= 0 && mpz_sizeinbase(value.get_mpz_t(), 2) <= 63;
}

std::uint64_t to_u64(const Integer& value) {
  if (sgn(value) < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 64) {
    throw DomainError("integer out of 64-bit unsigned range: " + to_string(value));
  }
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_get_ui(value.get_mpz_t());
}

Integer from_u64(std::uint64_t value) { return Integer(static_cast<unsigned long>(value)); }

Integer from_i64(std::int64_t value) { return Integer(static_cast<long>(value)); }

std::uint64_t mod_u64(const Integer& value, std::uint64_t m) {
  // mpz_fdiv_ui returns the floored remainder, already in [0, m).
  return mpz_fdiv_ui(value.get_mpz_t(), static_cast<unsigned long>(m));
}

}  // namespace gibsum
