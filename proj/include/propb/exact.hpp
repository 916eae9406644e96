#pragma once

// Exact integer / rational arithmetic shared by the bound modules.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace propb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k), zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt ipow(const BigInt& base, std::uint64_t e) {
  BigInt r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r *= base;
  return r;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (q * b != a && ((a > 0) == (b > 0))) q += 1;
  return q;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Decimal rendering of a rational, truncated toward zero after `digits` places.
inline std::string to_decimal(const Rational& r, unsigned digits = 6) {
  BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  const BigInt whole = num / den;
  BigInt rem = num % den;
  std::string frac;
  for (unsigned i = 0; i < digits; ++i) {
    rem *= 10;
    frac += static_cast<char>('0' + static_cast<int>(rem / den));
    rem %= den;
  }
  return sign + whole.str() + (digits ? "." + frac : "");
}

/// Parses "0.3", "3/10" or "1" exactly.
inline BigInt parse_decimal_int(std::string s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
  // A leading zero would select octal in the Boost string constructor.
  const auto nz = s.find_first_not_of('0');
  BigInt v = nz == std::string::npos ? BigInt(0) : BigInt(s.substr(nz).c_str());
  return neg ? BigInt(-v) : v;
}

/// Parses "0.3", "3/10" or "1" exactly.
inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    return Rational(parse_decimal_int(s.substr(0, slash)), parse_decimal_int(s.substr(slash + 1)));
  }
  const auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(parse_decimal_int(s));
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  if (digits == "-" || digits == "+" || digits.empty()) digits += "0";
  return Rational(parse_decimal_int(digits), ipow(10, s.size() - dot - 1));
}

}  // namespace propb
