#pragma once

#include <gmpxx.h>

#include <string>

namespace ug {

// Exact rational number in lowest terms. GMP keeps the canonical form after
// every arithmetic operation.
using Rational = mpq_class;

// Accepts "num/den" or a bare integer. Throws ParseError on anything else,
// including a zero denominator.
Rational parse_rational(const std::string& text);

// Always "num/den", so 1 prints as "1/1".
std::string to_string(const Rational& r);

double to_double(const Rational& r);

}  // namespace ug
