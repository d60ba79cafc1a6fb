#pragma once

#include <functional>
#include <string>
#include <vector>

#include "arbor/bipoly.hpp"
#include "arbor/invariants.hpp"
#include "arbor/poset.hpp"
#include "arbor/series.hpp"
#include "arbor/unipoly.hpp"

namespace arbor {

/// prod_{r=2}^{L} alpha(r), extended to L <= 0 as 1 / prod_{r=L+1}^{1} alpha(r)
/// so that L = 1 gives 1 and L = 0 gives 1/alpha(1). Throws
/// std::domain_error on a zero divisor.
Rational guarded_product(const std::function<Rational(int)>& alpha, int L);

/// The same product with polynomial factors, as num / den.
struct PolyFraction {
  UniPoly num;
  UniPoly den;
};
PolyFraction guarded_product(const std::function<UniPoly(int)>& alpha, int L);

// Fuss posets: words a_1..a_{x-1} with m * (a_1 + ... + a_j) < j and sum <= y.

struct FussParams {
  int m = 1, x = 1, y = 0;
};

/// Throws std::invalid_argument unless m >= 1, x >= 1, y >= 0, m*y < x.
void validate(const FussParams& p);
std::vector<LatticePoint> fuss_words(const FussParams& p, std::size_t max_points = 200000);
FinitePoset fuss_elements(const FussParams& p, std::size_t max_points = 200000);
UniPoly fuss_zeta(const FussParams& p);
Triangle fuss_m_triangle(const FussParams& p);
/// M-triangle from the deletion recursion and its two initial conditions.
Triangle fuss_m_recursive(const FussParams& p);

// Type B posets: n-tuples of nonnegative integers with sum <= k.

struct TypeBParams {
  int n = 1, k = 0;
};

std::vector<LatticePoint> typeb_points(const TypeBParams& p, std::size_t max_points = 200000);
FinitePoset typeb_elements(const TypeBParams& p, std::size_t max_points = 200000);
UniPoly typeb_zeta(const TypeBParams& p);
Triangle typeb_m_triangle(const TypeBParams& p);
/// From M_{n,k} = M_{n-1,k} + (1 - 1/X) sum_j (XY)^j M_{n-1,k-j}, M_{0,k} = 1.
Triangle typeb_m_recursive(const TypeBParams& p);
/// Every upper ideal of an element of height j, shifted back by that
/// element, is exactly the point set for (n, k - j).
bool typeb_upper_ideals_ok(const TypeBParams& p);

// Noncrossing partition references.

enum class CoxeterType { A, B };

/// Cluster F-triangles F^A_n and F^B_n.
BiPoly cluster_f_triangle(CoxeterType type, int n);
Triangle nc_m_triangle(CoxeterType type, int n);
/// N(X,Y) == N(1/Y,1/X) (XY)^n.
bool is_self_dual(const Triangle& t);
/// Noncrossing partitions of n+1 points under refinement, n <= 5.
FinitePoset nc_a_lattice(int n);

// Halohedra.

Integer halo_count(int n);
UniPoly halo_h_closed(int n);
UniPoly halo_rev_h_closed(int n);
TruncSeries<UniPoly> halo_series_a(int order);
TruncSeries<UniPoly> halo_series_b(int order);
/// (X-1)^2 s^2 - 2(X+1)s + 1.
TruncSeries<UniPoly> halo_series_p(int order);
/// sum_n h(halo(n)) s^n, with h = 1 + X at n = 1.
TruncSeries<UniPoly> halo_h_series(int order);

struct FamilyLine {
  int n = 0;
  bool pass = true;
  std::string detail;
};

struct FamilyReport {
  bool pass = true;
  std::vector<FamilyLine> lines;
  /// Named findings, e.g. series residual checks.
  std::vector<std::pair<std::string, bool>> findings;
};

FamilyReport halo_checks(int n_max, int series_order = 10);

// Hochschild corollas.

Integer hochschild_count(int n);
UniPoly hochschild_h_closed(int n);
TruncSeries<UniPoly> hochschild_zeta_series(int order);
TruncSeries<BiPoly> hochschild_m_series(int order);
TruncSeries<UniPoly> hochschild_ehrhart_series(int order);
TruncSeries<BiPoly> hochschild_laplace_series(int order);

/// Counts and h-vectors are asserted; the four guessed series are only
/// reported in findings, with the mismatching n listed.
FamilyReport hochschild_checks(int n_max);

// Summation lemmas.

Rational summing_1_lhs(int k, int l, int x);
Rational summing_1_rhs(int k, int l, int x);
Rational summing_2_lhs(int k, int l, int x);
Rational summing_2_rhs(int k, int l, int x);

}  // namespace arbor
