#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arbor/rational.hpp"

namespace arbor {

/// Dense univariate polynomial with exact rational coefficients.
///
/// Coefficient i multiplies x^i. The coefficient vector never carries a
/// trailing zero, so the zero polynomial has no coefficients and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  explicit UniPoly(const Rational& c) : UniPoly(std::vector<Rational>{c}) {}
  UniPoly(std::initializer_list<long> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  /// The polynomial x.
  static UniPoly variable();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of x^i; zero outside the stored range.
  Rational coeff(int i) const;
  std::span<const Rational> coefficients() const { return coeffs_; }
  Rational leading() const;

  Rational operator()(const Rational& at) const;

  UniPoly derivative() const;
  /// p(inner(x)).
  UniPoly compose(const UniPoly& inner) const;
  /// p(x + shift).
  UniPoly shifted(const Rational& shift) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator-(UniPoly a);

  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UniPoly pow(const UniPoly& p, unsigned e);

/// Euclidean division: a = q * b + r with deg r < deg b.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic greatest common divisor (zero if both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);

/// p / gcd(p, p'), made monic.
UniPoly squarefree_part(const UniPoly& p);

/// binom(a + l - 1, l) = prod_{i=1..l} (a + i - 1) / l!, as a polynomial.
UniPoly binom_poly(const UniPoly& a, unsigned l);

/// Unique polynomial of degree < points.size() through the given nodes.
/// Throws std::invalid_argument on repeated abscissae.
UniPoly lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points);

/// Number of distinct real roots of p in the interval between a and b, with
/// each endpoint included or excluded as requested. Decided exactly with a
/// Sturm chain of the square-free part. Throws on the zero polynomial.
std::size_t sturm_roots_in(const UniPoly& p, const Rational& a, const Rational& b,
                           bool include_a, bool include_b);

std::string to_string(const UniPoly& p, std::string_view var = "x");

}  // namespace arbor
