#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace artinder {

// All scalar arithmetic in the library is exact. Rationals are GMP-backed
// and always stored canonically (reduced, positive denominator).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Renders "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

}  // namespace artinder
