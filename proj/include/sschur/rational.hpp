#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sschur {

using Rational = mpq_class;

// "p/q" or "p", always in lowest terms.
std::string to_string(const Rational& q);

// Accepts an optional sign, digits, and an optional "/digits" denominator.
Rational parse_rational(std::string_view text);

}  // namespace sschur
