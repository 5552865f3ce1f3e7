#include "qplanes/rational.hpp"

#include "qplanes/errors.hpp"

#include <cctype>
#include <limits>

namespace qplanes {

namespace {

bool is_integer_literal(std::string_view s)
{
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    ++i;
  }
  if (i == s.size()) {
    return false;
  }
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      return false;
    }
  }
  return true;
}

BigInt parse_integer(std::string_view s)
{
  if (!is_integer_literal(s)) {
    throw PreconditionError("malformed rational field '" + std::string(s) + "'");
  }
  if (s.front() == '+') {
    s.remove_prefix(1);
  }
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text)
{
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  const BigInt num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw PreconditionError("denominator must be unsigned in '" + std::string(text) + "'");
  }
  const BigInt den = parse_integer(den_text);
  if (den == 0) {
    throw PreconditionError("zero denominator in '" + std::string(text) + "'");
  }
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational &value) { return value.get_str(); }

std::size_t hash_value(const Rational &value)
{
  const auto limb_hash = [](mpz_srcptr z) {
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) * 0x100000001b3ULL;
    const std::size_t limbs = mpz_size(z);
    for (std::size_t i = 0; i < limbs; ++i) {
      h = (h ^ static_cast<std::size_t>(mpz_getlimbn(z, i))) * 0x100000001b3ULL;
    }
    return h;
  };
  return limb_hash(value.get_num_mpz_t()) * 31 + limb_hash(value.get_den_mpz_t());
}

std::int64_t to_int64(const BigInt &value)
{
  if (!mpz_fits_slong_p(value.get_mpz_t())) {
    throw std::overflow_error("integer exceeds 64 bits: " + value.get_str());
  }
  return static_cast<std::int64_t>(value.get_si());
}

}  // namespace qplanes
