#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace fvol {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer integer_pow(std::uint64_t base, std::uint64_t exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
  return result;
}

inline Integer factorial(std::uint64_t n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string numerator_string(const Rational& r) { return r.get_num().get_str(); }
inline std::string denominator_string(const Rational& r) { return r.get_den().get_str(); }

}  // namespace fvol
