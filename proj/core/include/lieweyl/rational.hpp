#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lieweyl {

using Rational = mpq_class;

// Accepts "p" or "p/q" with an optional leading sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

Rational factorial(int n);
Rational binomial(int n, int k);

}  // namespace lieweyl
