#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tilingaf {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "num", "num/den" or a plain decimal like "-0.125" exactly.
Rational parse_rational(const std::string& text);

// Canonical "num/den" form ("num" when den == 1).
std::string rational_str(const Rational& q);

// floor(q) as an integer.
Integer rational_floor(const Rational& q);

Rational rational_abs(const Rational& q);

}  // namespace tilingaf
