#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace agr {

using Rational = mpq_class;

// Accepts "12", "-3", "1.25", "3/4", "2^63".
Rational parse_rational(std::string_view text);

// Canonical text; powers of two from 2^16 upwards print as "2^k".
std::string to_string(const Rational& value);

Rational floor_of(const Rational& value);
Rational ceil_of(const Rational& value);
bool is_integer(const Rational& value);

}  // namespace agr
