#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace rns {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction, kept in lowest terms with positive denominator by the
/// backing type. All arithmetic in the library goes through this alias so
/// nothing ever rounds.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline BigInt den(const Rational& x) { return boost::multiprecision::denominator(x); }

BigInt pow_int(BigInt base, std::size_t exp);

/// "p/q", or just "p" for integers.
std::string to_string(const Rational& x);

/// Truncated decimal expansion with `digits` places after the point.
std::string decimal_string(const Rational& x, int digits);

double to_double(const Rational& x);

/// Natural log of a positive integer that may be far beyond double range.
double log_bigint(const BigInt& x);

}  // namespace rns
