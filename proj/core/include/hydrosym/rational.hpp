#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hydrosym {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rational(long long num, long long den = 1) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

// Exact integer power; negative exponents allowed for nonzero base.
inline Rational rational_pow(const Rational& base, long long e) {
  if (e == 0) return Rational(1);
  if (base == 0 && e < 0) throw std::domain_error("rational_pow: 0^negative");
  Rational acc(1), b = base;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e)
                               : static_cast<unsigned long long>(e);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  if (e < 0) acc = Rational(1) / acc;
  return acc;
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Requires an integer value that fits a long long.
inline long long to_long(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("to_long: not an integer");
  return numerator(q).convert_to<long long>();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace hydrosym
