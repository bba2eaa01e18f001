#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace jacstrat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string rational_to_string(const Rational& q);

// Largest integer <= q.
BigInt rational_floor(const Rational& q);

// q - floor(q), in [0, 1).
Rational fractional_part(const Rational& q);

}  // namespace jacstrat
