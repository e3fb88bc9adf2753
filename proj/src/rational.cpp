#include "rns/rational.hpp"

#include <boost/multiprecision/integer.hpp>
#include <cmath>
#include <limits>

namespace rns {

BigInt pow_int(BigInt base, std::size_t exp) {
  BigInt acc = 1;
  while (exp > 0) {
    if (exp & 1) acc *= base;
    base *= base;
    exp >>= 1;
  }
  return acc;
}

std::string to_string(const Rational& x) {
  BigInt d = den(x);
  if (d == 1) return num(x).str();
  return num(x).str() + "/" + d.str();
}

std::string decimal_string(const Rational& x, int digits) {
  if (digits < 0) digits = 0;
  BigInt n = num(x);
  BigInt d = den(x);
  std::string sign;
  if (n < 0) {
    sign = "-";
    n = -n;
  }
  BigInt whole = n / d;
  BigInt rem = n % d;
  std::string result = sign + whole.str();
  if (digits == 0) return result;
  result += ".";
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    BigInt digit = rem / d;
    rem %= d;
    result += static_cast<char>('0' + digit.convert_to<int>());
  }
  return result;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

double log_bigint(const BigInt& x) {
  using boost::multiprecision::msb;
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  if (x == 1) return 0.0;
  unsigned bits = msb(x);  // floor(log2 x)
  if (bits <= 52) return std::log(x.convert_to<double>());
  // Keep the top 53 bits and account for the shifted-away magnitude.
  BigInt top = x >> (bits - 52);
  return std::log(top.convert_to<double>()) + static_cast<double>(bits - 52) * std::log(2.0);
}

}  // namespace rns
