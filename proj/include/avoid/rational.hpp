#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace avoid {

/// Exact rational with arbitrary-precision numerator and denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Always "num/den", including integers ("3/1").
std::string to_string(const Rational& r);

/// Accepts "a/b", "a", or a finite decimal such as "0.3" or "-1.25e-2",
/// converted exactly (0.3 is 3/10).
Rational parse_rational(std::string_view text);

/// Exact value of a finite double (every double is a dyadic rational).
Rational exact_from_double(double x);

double to_double(const Rational& r);

}  // namespace avoid
