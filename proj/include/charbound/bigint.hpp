#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace charbound {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int ipow(Int base, unsigned long exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

// Largest integer <= x.
inline Int rat_floor(const Rat& x) {
  Int n = numerator(x), d = denominator(x);
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

inline Int rat_ceil(const Rat& x) { return -rat_floor(-x); }

// Exact division; throws if the division leaves a remainder.
inline Int exact_div(const Int& a, const Int& b) {
  Int q, r;
  divide_qr(a, b, q, r);
  if (r != 0) throw std::logic_error("exact_div: not divisible");
  return q;
}

inline std::string to_string(const Int& x) { return x.str(); }

}  // namespace charbound
