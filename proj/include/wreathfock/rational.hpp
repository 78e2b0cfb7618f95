#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wreathfock {

using Integer = mpz_class;
using Rational = mpq_class;

/// Renders a rational as "p/q" with q >= 1 (integers keep the "/1").
std::string to_fraction_string(const Rational& q);

/// Parses "p", "p/q" or "-p/q" and canonicalizes. Throws InputError.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned long n);

}  // namespace wreathfock
