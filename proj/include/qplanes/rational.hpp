#pragma once

// Exact scalar type used by every exact code path.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qplanes {

// mpq_class keeps values in lowest terms with a positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

// Parses "a" or "a/b" (optional leading sign). Throws PreconditionError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational &value);

std::size_t hash_value(const Rational &value);

inline int sign(const Rational &value) { return sgn(value); }

// Fits |value| into int64 or throws std::overflow_error.
std::int64_t to_int64(const BigInt &value);

template<std::size_t N>
std::size_t hash_range(const std::array<Rational, N> &values)
{
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto &v : values) {
    h ^= hash_value(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace qplanes
