#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "arbor/rational.hpp"
#include "arbor/unipoly.hpp"

namespace arbor {

/// Raised when a division or substitution that should clear to a
/// polynomial leaves a remainder.
class NonPolynomialError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Sparse Laurent polynomial in two variables A, B.
///
/// The variable names are roles only (X,Y or u,X or E,V). Negative
/// exponents are allowed so intermediate results such as 1 - 1/X can be
/// represented; is_polynomial() tells whether any survived.
class BiPoly {
 public:
  using Exponent = std::pair<int, int>;
  using Terms = std::map<Exponent, Rational>;

  BiPoly() = default;
  BiPoly(const Rational& c);  // NOLINT: implicit constant
  BiPoly(long c) : BiPoly(Rational(c)) {}  // NOLINT

  static BiPoly monomial(const Rational& c, int i, int j);
  static BiPoly A() { return monomial(1, 1, 0); }
  static BiPoly B() { return monomial(1, 0, 1); }
  /// Embeds p(x) as p(A) or p(B).
  static BiPoly from_a(const UniPoly& p);
  static BiPoly from_b(const UniPoly& p);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int i, int j) const;
  void add_term(const Rational& c, int i, int j);

  bool is_polynomial() const;
  int min_a() const;
  int max_a() const;
  int min_b() const;
  int max_b() const;

  Rational operator()(const Rational& a, const Rational& b) const;
  /// Specializes B and returns a polynomial in A (A-exponents must be >= 0).
  UniPoly at_b(const Rational& b) const;
  UniPoly at_a(const Rational& a) const;
  /// Coefficient of B^j as a polynomial in A.
  UniPoly coeff_b(int j) const;

  /// A^da B^db times this.
  BiPoly shifted(int da, int db) const;
  /// Swaps the roles of A and B.
  BiPoly swapped() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }
  friend BiPoly operator*(long c, BiPoly a) { return a *= Rational(c); }
  friend BiPoly operator*(BiPoly a, long c) { return a *= Rational(c); }
  friend BiPoly operator-(BiPoly a) { return a *= Rational(-1); }

  friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

 private:
  Terms terms_;
};

BiPoly pow(const BiPoly& p, unsigned e);

/// num / den with polynomial parts, not reduced.
struct RationalFunction2 {
  BiPoly num;
  BiPoly den = BiPoly(1);
};

/// p(a, b) for rational-function arguments, returned over a single
/// common denominator built from powers of the argument parts.
RationalFunction2 substitute(const BiPoly& p, const RationalFunction2& a,
                             const RationalFunction2& b);

/// Polynomial substitution p(a, b); requires p to have no negative exponents.
BiPoly compose(const BiPoly& p, const BiPoly& a, const BiPoly& b);

/// Exact quotient num / den in the Laurent ring. Throws NonPolynomialError
/// when den does not divide num.
BiPoly divide_exact(const BiPoly& num, const BiPoly& den);

std::string to_string(const BiPoly& p, const std::string& a = "X", const std::string& b = "Y");

}  // namespace arbor
