#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arbor/arbor.hpp"

namespace arbor {

/// Raised when an enumeration would exceed its configured ceiling.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using LatticePoint = std::vector<int>;

int height(const LatticePoint& p);
/// Number of non-zero coordinates.
int nonzero_count(const LatticePoint& p);

/// Index ranges of one vertex in the preorder flattening.
struct VertexSlot {
  VertexAddress address;
  int multiplicity;
  int parent;  // preorder index, -1 for the root
  std::vector<int> children;
  int own_begin, own_end;  // the vertex's own coordinates
  int down_end;            // the subtree block is [own_begin, down_end)
  std::vector<int> up;     // own coordinates of every vertex on the root path

  int down_size() const { return down_end - own_begin; }
};

/// Preorder layout: a vertex's own indices first, then each child block.
class CoordinateLayout {
 public:
  explicit CoordinateLayout(const Arbor& t);

  int dimension() const { return dim_; }
  const std::vector<VertexSlot>& slots() const { return slots_; }

  /// x >= 0 and every subtree sum at most m times the subtree size.
  bool contains(const LatticePoint& p, int m = 1) const;
  /// Slack m*|D(v)| - sum over D(v), per vertex.
  std::vector<int> defects(const LatticePoint& p, int m = 1) const;

 private:
  int dim_ = 0;
  std::vector<VertexSlot> slots_;
};

/// Calls visit on every lattice point of m*Q_t. Subtrees are filled before
/// their parent, so the parent's budget is always known and nothing is
/// ever backtracked.
void for_each_lattice_point(const Arbor& t, int m, const std::function<void(const LatticePoint&)>& visit);

/// Sorted lattice points of m*Q_t. Throws GuardError past max_points.
std::vector<LatticePoint> lattice_points(const Arbor& t, int m = 1, std::size_t max_points = 200000);

/// Vertices of Q_t, sorted, from the fiber recursion.
std::vector<LatticePoint> vertices(const Arbor& t);

struct MinkowskiSummand {
  VertexAddress vertex;
  std::vector<int> support;
  int scale;
};

std::vector<MinkowskiSummand> minkowski_summands(const Arbor& t);

struct CheckReport {
  bool pass = true;
  std::string detail;
  std::size_t checked = 0;
};

/// (a) every choice of one vertex per summand lands in Q_t;
/// (b) every vertex of Q_t is such a sum.
CheckReport check_minkowski(const Arbor& t, std::size_t max_tuples = 2000000);

/// Exponents of prod_v (1 + sum_{e in U(v)} x_e)^{|v|}: all in Q_t, every
/// vertex among them, and (reported in detail) equal to the lattice points.
CheckReport newton_check(const Arbor& t, std::size_t max_points = 200000);

/// Exponent vectors of the Newton polynomial, sorted.
std::vector<LatticePoint> newton_exponents(const Arbor& t, std::size_t max_points = 200000);

}  // namespace arbor
