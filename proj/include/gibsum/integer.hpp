#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gibsum {

// Arbitrary-precision signed integer. GMP keeps zero canonical (no -0).
using Integer = mpz_class;

// Nonnegative gcd: gcd(0, x) = |x|, gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);

// Nonnegative lcm; lcm(0, x) = 0.
Integer lcm(const Integer& a, const Integer& b);

Integer abs(const Integer& a);

std::string to_string(const Integer& value);

// Parses an optionally signed base-10 integer. Throws DomainError on malformed text.
Integer parse_integer(std::string_view text);

// True when 0 <= value < 2^63, the range where modular pair arithmetic
// in std::uint64_t cannot overflow.
bool fits_modulus(const Integer& value);

std::uint64_t to_u64(const Integer& value);
Integer from_u64(std::uint64_t value);
Integer from_i64(std::int64_t value);

// Floored remainder in [0, m) for m > 0.
std::uint64_t mod_u64(const Integer& value, std::uint64_t m);

}  // namespace gibsum
