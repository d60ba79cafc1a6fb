#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace arbor {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

/// Generalized binomial a(a-1)...(a-b+1)/b! for any integer a; zero when b < 0.
inline Integer binomial(long a, long b) {
  if (b < 0) return 0;
  if (a >= 0) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), Integer(a).get_mpz_t(), static_cast<unsigned long>(b));
    return r;
  }
  // binom(a, b) = (-1)^b binom(b - a - 1, b) for negative a
  Integer r = binomial(b - a - 1, b);
  return (b % 2 == 0) ? r : Integer(-r);
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace arbor
