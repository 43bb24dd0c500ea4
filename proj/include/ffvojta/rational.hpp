#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ffvojta {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact rendering: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q"; throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, long exponent);
Integer binomial(unsigned long n, unsigned long k);

inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace ffvojta
