#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace autorecon {

using Rational = mpq_class;

/// "n" for integers, "p/q" otherwise, with q > 0 and gcd(p, q) = 1.
std::string to_canonical_string(const Rational& q);

/// Accepts "n", "-n", "p/q"; throws parse_error on anything else or q = 0.
Rational parse_rational(std::string_view text);

}  // namespace autorecon
