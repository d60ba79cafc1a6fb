#pragma once

#include <cstddef>
#include <string>

#include "arbor/arbor.hpp"
#include "arbor/bipoly.hpp"
#include "arbor/unipoly.hpp"

namespace arbor {

/// A two-variable triangle with its size parameter n.
struct Triangle {
  BiPoly poly;
  int size = 0;
  friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// Lattice points of m*Q_t counted by height.
UniPoly f_height_poly(const Arbor& t, int m);

/// E_t(u), interpolated from E(m) = F_{t,m}(1) at m = 0..n.
UniPoly ehrhart(const Arbor& t);

struct RootReport {
  bool pass = false;
  bool roots_ok = false;
  bool coefficients_positive = false;
  int squarefree_degree = 0;
  std::size_t roots_in_interval = 0;
};

/// Distinct real roots of E_t in [-1, 0) against the degree of its
/// square-free part, plus coefficient positivity.
RootReport ehrhart_root_check(const Arbor& t);

/// Refined Zeta as a polynomial in (u, X): A = u, B = X.
BiPoly zeta_refined(const Arbor& t);
UniPoly zeta(const Arbor& t);

/// sum over P_t of X^nz Y^ht.
BiPoly k_poly(const Arbor& t);

/// K(1 - 1/X, XY) expanded monomial by monomial.
Triangle m_triangle(const Arbor& t);
Triangle m_from_k(const BiPoly& k, int size);

/// M((1-Y)/(1-XY), 1-XY), by substitution and exact division.
Triangle transmute(const Triangle& m);
/// K(Y(X-1)/(1-Y), 1-Y), each monomial X^jY^k mapped to Y^j(X-1)^j(1-Y)^(k-j).
Triangle transmuted_m_triangle(const Arbor& t);

UniPoly f_vector(const Arbor& t);
UniPoly h_vector(const Arbor& t);
/// M(1/(1-X), 1-X) as a polynomial in X.
UniPoly h_from_m(const Triangle& m);
/// Coefficients of X^k Y^k, as a polynomial in X.
UniPoly diagonal(const BiPoly& p);

Triangle f_from_m(const Triangle& m);
Triangle m_from_f(const Triangle& f);
Triangle m_from_h(const Triangle& h);
Triangle h_from_m_triangle(const Triangle& m);

/// Rows from the top Y-degree down, entries by X-degree: the usual
/// printed layout with the constant term at the bottom left.
std::string pretty_triangle(const BiPoly& p);

}  // namespace arbor
