#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace egr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt ceil(const Rational& r);
BigInt floor(const Rational& r);

// Decimal rendering with the given number of fractional digits, rounded
// half away from zero.
std::string to_decimal(const Rational& r, int digits = 6);

double to_double(const Rational& r);

}  // namespace egr
