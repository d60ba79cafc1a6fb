#pragma once

#include <cstddef>
#include <vector>

#include "arbor/arbor.hpp"
#include "arbor/bipoly.hpp"
#include "arbor/polytope.hpp"
#include "arbor/rational.hpp"
#include "arbor/unipoly.hpp"

namespace arbor {

/// Finite graded poset with a unique minimum.
///
/// Built either from a down-closed set of integer vectors under
/// coordinatewise order (rank = coordinate sum), or from an explicit
/// order relation (rank = length of the longest chain from the minimum).
/// Elements are stored by increasing rank.
class FinitePoset {
 public:
  /// Throws std::invalid_argument if the set is not down-closed.
  static FinitePoset from_points(std::vector<LatticePoint> points);
  /// leq[i][j] says element i <= element j. Must be a partial order with
  /// a minimum; throws std::invalid_argument otherwise.
  static FinitePoset from_relation(const std::vector<std::vector<bool>>& leq);

  std::size_t size() const { return rank_.size(); }
  int rank(std::size_t i) const { return rank_[i]; }
  int max_rank() const;
  bool leq(std::size_t i, std::size_t j) const;
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return up_[i]; }
  bool has_points() const { return !points_.empty(); }
  const std::vector<LatticePoint>& points() const { return points_; }
  /// Index of a point, or size() if absent.
  std::size_t index_of(const LatticePoint& p) const;

 private:
  FinitePoset() = default;
  void finish_covers();

  std::vector<LatticePoint> points_;
  std::vector<std::vector<bool>> rel_;
  std::vector<int> rank_;
  std::vector<std::vector<std::size_t>> up_;
};

/// P_t. Throws GuardError past max_elements.
FinitePoset build_poset(const Arbor& t, std::size_t max_elements = 200000);

/// Weak chains e_1 <= ... <= e_{m-1}; m = 1 gives 1.
Integer chain_count(const FinitePoset& p, int m);

/// sum over a <= b of mu(a,b) X^rk(a) Y^rk(b), by the defining recursion.
/// Throws GuardError past max_elements.
BiPoly mobius_triangle(const FinitePoset& p, std::size_t max_elements = 5000);

/// Saturated chains from the minimum to a maximal element.
Integer maximal_chain_count(const FinitePoset& p);

/// sum over b of (1+X)^nz(b); requires a point poset.
UniPoly cubical_f_vector(const FinitePoset& p);

/// sum over b of X^rk(b).
UniPoly rank_generating_function(const FinitePoset& p);

}  // namespace arbor
