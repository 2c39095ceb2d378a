#pragma once

#include <gmpxx.h>

#include <string>

namespace fsi {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& v) { return v.get_str(); }

inline BigInt pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace fsi
