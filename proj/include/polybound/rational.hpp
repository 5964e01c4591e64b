#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace polybound {

// Exact scalar. mpq_class keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

/// Parses "p/q" or "p". Non-normalized input such as "4/6" or "3/-9" is
/// accepted and reduced. Throws Error(Input) on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// num/den in canonical form.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational dot(const Vector& a, const Vector& b);

inline int sign(const Rational& value) { return sgn(value); }

/// Scales a direction so its first nonzero entry is +1 or -1.
Vector normalize_direction(Vector direction);

bool is_zero(const Vector& v);

}  // namespace polybound
