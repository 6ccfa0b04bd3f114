#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lcgp {

/// Exact rational number; GMP keeps it canonical (den > 0, gcd = 1).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "3", "-1/2" or a plain decimal such as "0.25" exactly.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace lcgp
