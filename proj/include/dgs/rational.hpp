#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace dgs {

// Exact arbitrary-precision fraction; always reduced, denominator > 0.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p" or "p/q" with optional sign; throws std::invalid_argument
// on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// "p/q", or just "p" when the denominator is 1.
std::string rational_str(const Rational& r);

double rational_to_double(const Rational& r);

}  // namespace dgs
