#pragma once

#include <vector>

#include "arbor/arbor.hpp"
#include "arbor/bipoly.hpp"
#include "arbor/rational.hpp"
#include "arbor/unipoly.hpp"

namespace arbor {

/// Laplace polynomials live in BiPoly with A = E (for e^-v) and B = V (for 1/v).

/// Linear extension of the truncation rule on V^(k+1) E^l. Throws
/// std::invalid_argument on a monomial without V.
BiPoly truncate(const BiPoly& p, int n);

BiPoly laplace_poly(const Arbor& t);

/// One polynomial in h per unit interval [i, i+1], i = 0..n-1; zero elsewhere.
struct PiecewisePoly {
  std::vector<UniPoly> pieces;

  Rational operator()(const Rational& h) const;
  Rational integral() const;
  /// Left and right limits agree at every interior breakpoint.
  bool continuous() const;
};

/// Monomial-wise inverse Laplace transform of L_t. Throws std::logic_error
/// if the part beyond h = n does not vanish.
PiecewisePoly volume_function(const Arbor& t);

/// Coefficient of v^p in L(e^-v, 1/v).
Rational laplace_v_coefficient(const BiPoly& l, int p);

/// Integral of the volume function; the v -> 0 limit route must agree and
/// every negative power of v must vanish, else std::logic_error.
Rational volume(const Arbor& t);

}  // namespace arbor
