#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "arbor/bipoly.hpp"
#include "arbor/rational.hpp"
#include "arbor/unipoly.hpp"

namespace arbor {

inline Rational unit_inverse(const Rational& c) {
  if (c == 0) throw std::domain_error("series constant term is not invertible");
  return Rational(1) / c;
}

inline UniPoly unit_inverse(const UniPoly& c) {
  if (c.degree() != 0) throw std::domain_error("series constant term is not a unit");
  return UniPoly::constant(Rational(1) / c.coeff(0));
}

inline BiPoly unit_inverse(const BiPoly& c) {
  if (c.terms().size() != 1 || c.terms().begin()->first != BiPoly::Exponent{0, 0})
    throw std::domain_error("series constant term is not a unit");
  return BiPoly(Rational(1) / c.terms().begin()->second);
}

inline bool is_zero_coeff(const Rational& c) { return c == 0; }
inline bool is_zero_coeff(const UniPoly& c) { return c.is_zero(); }
inline bool is_zero_coeff(const BiPoly& c) { return c.is_zero(); }

/// Power series in s truncated after s^order, over a coefficient ring C
/// (Rational, UniPoly or BiPoly).
template <class C>
class TruncSeries {
 public:
  explicit TruncSeries(int order) : coeffs_(check(order) + 1) {}
  TruncSeries(int order, std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(static_cast<std::size_t>(check(order)) + 1);
  }

  /// c * s^k, truncated.
  static TruncSeries monomial(int order, const C& c, int k) {
    TruncSeries r(order);
    if (k <= order) r.coeffs_[static_cast<std::size_t>(k)] = c;
    return r;
  }
  static TruncSeries constant(int order, const C& c) { return monomial(order, c, 0); }
  static TruncSeries s(int order) { return monomial(order, C(Rational(1)), 1); }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const C& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  C& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<C>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!is_zero_coeff(c)) return false;
    return true;
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    same_order(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    same_order(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  TruncSeries& operator*=(const TruncSeries& o) {
    same_order(o);
    std::vector<C> r(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (is_zero_coeff(coeffs_[i])) continue;
      for (std::size_t j = 0; i + j < coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(r);
    return *this;
  }
  TruncSeries& operator*=(const C& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const TruncSeries& b) { return a *= b; }
  friend TruncSeries operator*(TruncSeries a, const C& c) { return a *= c; }
  friend TruncSeries operator*(const C& c, TruncSeries a) { return a *= c; }
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

  /// Multiplicative inverse; the constant term must be a unit of C.
  TruncSeries inverse() const {
    TruncSeries g(order());
    const C c0inv = unit_inverse(coeffs_[0]);
    g.coeffs_[0] = c0inv;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
      C acc{};
      for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * g.coeffs_[k - j];
      g.coeffs_[k] = -(acc * c0inv);
    }
    return g;
  }

  /// d/ds; the top coefficient is unknown after truncation and set to 0.
  TruncSeries derivative() const {
    TruncSeries d(order());
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d.coeffs_[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    return d;
  }

  /// Antiderivative with zero constant term.
  TruncSeries integral() const {
    TruncSeries r(order());
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
      r.coeffs_[k] = coeffs_[k - 1] * make_rational(1, static_cast<long>(k));
    return r;
  }

  /// exp of a series with zero constant term, from g' = f' g.
  TruncSeries exp() const {
    if (!is_zero_coeff(coeffs_[0])) throw std::domain_error("exp of a series with nonzero constant term");
    TruncSeries g(order());
    g.coeffs_[0] = C(Rational(1));
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
      C acc{};
      for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * g.coeffs_[k - j] * Rational(static_cast<long>(j));
      g.coeffs_[k] = acc * make_rational(1, static_cast<long>(k));
    }
    return g;
  }

 private:
  static int check(int order) {
    if (order < 0) throw std::invalid_argument("negative series order");
    return order;
  }
  void same_order(const TruncSeries& o) const {
    if (o.order() != order()) throw std::invalid_argument("series order mismatch");
  }

  std::vector<C> coeffs_;
};

/// P*(h + h^2) - rhs, the residual of an algebraic equation of that shape.
template <class C>
TruncSeries<C> quadratic_residual(const TruncSeries<C>& p, const TruncSeries<C>& h, const TruncSeries<C>& rhs) {
  return p * (h + h * h) - rhs;
}

}  // namespace arbor
