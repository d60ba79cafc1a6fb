#include "arbor/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace arbor {

int height(const LatticePoint& p) { return std::accumulate(p.begin(), p.end(), 0); }

int nonzero_count(const LatticePoint& p) {
  return static_cast<int>(std::count_if(p.begin(), p.end(), [](int x) { return x != 0; }));
}

CoordinateLayout::CoordinateLayout(const Arbor& t) {
  std::function<int(const Arbor&, VertexAddress&, int, std::vector<int>)> place =
      [&](const Arbor& a, VertexAddress& addr, int parent, std::vector<int> up) -> int {
    const int idx = static_cast<int>(slots_.size());
    slots_.push_back(VertexSlot{addr, a.root_multiplicity(), parent, {}, dim_, dim_ + a.root_multiplicity(), 0, {}});
    for (int i = dim_; i < dim_ + a.root_multiplicity(); ++i) up.push_back(i);
    slots_[static_cast<std::size_t>(idx)].up = up;
    dim_ += a.root_multiplicity();
    for (std::size_t k = 0; k < a.children().size(); ++k) {
      addr.path.push_back(static_cast<int>(k));
      const int child = place(a.children()[k], addr, idx, up);
      addr.path.pop_back();
      slots_[static_cast<std::size_t>(idx)].children.push_back(child);
    }
    slots_[static_cast<std::size_t>(idx)].down_end = dim_;
    return idx;
  };
  VertexAddress root;
  place(t, root, -1, {});
}

std::vector<int> CoordinateLayout::defects(const LatticePoint& p, int m) const {
  std::vector<int> d;
  d.reserve(slots_.size());
  for (const auto& s : slots_) {
    int sum = 0;
    for (int i = s.own_begin; i < s.down_end; ++i) sum += p[static_cast<std::size_t>(i)];
    d.push_back(m * s.down_size() - sum);
  }
  return d;
}

bool CoordinateLayout::contains(const LatticePoint& p, int m) const {
  if (static_cast<int>(p.size()) != dim_) return false;
  if (std::any_of(p.begin(), p.end(), [](int x) { return x < 0; })) return false;
  const auto d = defects(p, m);
  return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}

void for_each_lattice_point(const Arbor& t, int m, const std::function<void(const LatticePoint&)>& visit) {
  if (m < 0) throw std::invalid_argument("negative dilation");
  const CoordinateLayout layout(t);
  const auto& slots = layout.slots();
  LatticePoint x(static_cast<std::size_t>(layout.dimension()), 0);
  std::vector<int> subtree_sum(slots.size(), 0);

  // Reverse preorder visits every child before its parent.
  std::function<void(int)> at_vertex = [&](int k) {
    if (k < 0) {
      visit(x);
      return;
    }
    const auto& s = slots[static_cast<std::size_t>(k)];
    int below = 0;
    for (int c : s.children) below += subtree_sum[static_cast<std::size_t>(c)];
    const int budget = m * s.down_size() - below;
    // Compositions of at most budget into the own coordinates.
    std::function<void(int, int)> fill = [&](int i, int left) {
      if (i == s.own_end) {
        subtree_sum[static_cast<std::size_t>(k)] = below + (budget - left);
        at_vertex(k - 1);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        x[static_cast<std::size_t>(i)] = v;
        fill(i + 1, left - v);
      }
      x[static_cast<std::size_t>(i)] = 0;
    };
    fill(s.own_begin, budget);
  };
  at_vertex(static_cast<int>(slots.size()) - 1);
}

std::vector<LatticePoint> lattice_points(const Arbor& t, int m, std::size_t max_points) {
  std::vector<LatticePoint> pts;
  for_each_lattice_point(t, m, [&](const LatticePoint& p) {
    if (pts.size() >= max_points)
      throw GuardError("lattice point count of " + t.encode() + " exceeds guard " + std::to_string(max_points));
    pts.push_back(p);
  });
  std::sort(pts.begin(), pts.end());
  return pts;
}

namespace {

// Vertices of Q_a in a's own local layout.
std::vector<LatticePoint> local_vertices(const Arbor& a) {
  std::vector<LatticePoint> combos{LatticePoint{}};
  for (const auto& c : a.children()) {
    const auto cv = local_vertices(c);
    std::vector<LatticePoint> next;
    next.reserve(combos.size() * cv.size());
    for (const auto& left : combos)
      for (const auto& right : cv) {
        LatticePoint p = left;
        p.insert(p.end(), right.begin(), right.end());
        next.push_back(std::move(p));
      }
    combos = std::move(next);
  }
  const int r = a.root_multiplicity();
  std::vector<LatticePoint> out;
  out.reserve(combos.size() * static_cast<std::size_t>(r + 1));
  for (const auto& below : combos) {
    // In the fiber either every root coordinate vanishes, or exactly one
    // is non-zero and the root defect is zero.
    const int h = height(below);
    for (int i = -1; i < r; ++i) {
      LatticePoint p(static_cast<std::size_t>(r), 0);
      if (i >= 0) p[static_cast<std::size_t>(i)] = a.size() - h;
      p.insert(p.end(), below.begin(), below.end());
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

std::vector<LatticePoint> vertices(const Arbor& t) {
  auto v = local_vertices(t);
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<MinkowskiSummand> minkowski_summands(const Arbor& t) {
  const CoordinateLayout layout(t);
  std::vector<MinkowskiSummand> out;
  for (const auto& s : layout.slots()) out.push_back({s.address, s.up, s.multiplicity});
  return out;
}

CheckReport check_minkowski(const Arbor& t, std::size_t max_tuples) {
  const CoordinateLayout layout(t);
  const auto summands = minkowski_summands(t);
  const auto n = static_cast<std::size_t>(layout.dimension());
  CheckReport rep;

  std::size_t tuples = 1;
  for (const auto& s : summands) {
    tuples *= s.support.size() + 1;
    if (tuples > max_tuples) throw GuardError("Minkowski tuple count of " + t.encode() + " exceeds guard");
  }

  // (a) all sums of one vertex per summand.
  LatticePoint acc(n, 0);
  std::function<void(std::size_t)> all_sums = [&](std::size_t k) {
    if (!rep.pass) return;
    if (k == summands.size()) {
      ++rep.checked;
      if (!layout.contains(acc)) {
        rep.pass = false;
        rep.detail = "a Minkowski sum point violates the inequalities";
      }
      return;
    }
    all_sums(k + 1);
    for (int e : summands[k].support) {
      acc[static_cast<std::size_t>(e)] += summands[k].scale;
      all_sums(k + 1);
      acc[static_cast<std::size_t>(e)] -= summands[k].scale;
    }
  };
  all_sums(0);
  if (!rep.pass) return rep;

  // (b) each vertex of Q_t as such a sum, pruned by coordinates and height.
  std::vector<int> scale_suffix(summands.size() + 1, 0);
  for (std::size_t k = summands.size(); k-- > 0;) scale_suffix[k] = scale_suffix[k + 1] + summands[k].scale;
  for (const auto& target : vertices(t)) {
    const int goal = height(target);
    std::fill(acc.begin(), acc.end(), 0);
    std::function<bool(std::size_t, int)> reach = [&](std::size_t k, int h) -> bool {
      if (h + scale_suffix[k] < goal) return false;
      if (k == summands.size()) return acc == target;
      if (reach(k + 1, h)) return true;
      for (int e : summands[k].support) {
        const auto i = static_cast<std::size_t>(e);
        if (acc[i] + summands[k].scale > target[i]) continue;
        acc[i] += summands[k].scale;
        const bool ok = reach(k + 1, h + summands[k].scale);
        acc[i] -= summands[k].scale;
        if (ok) return true;
      }
      return false;
    };
    ++rep.checked;
    if (!reach(0, 0)) {
      rep.pass = false;
      rep.detail = "a vertex of Q_t is not a Minkowski sum of summand vertices";
      return rep;
    }
  }
  rep.detail = "all sums inside, all vertices reached";
  return rep;
}

std::vector<LatticePoint> newton_exponents(const Arbor& t, std::size_t max_points) {
  const CoordinateLayout layout(t);
  const auto n = static_cast<std::size_t>(layout.dimension());
  std::set<LatticePoint> cur{LatticePoint(n, 0)};
  for (const auto& s : minkowski_summands(t)) {
    for (int rep = 0; rep < s.scale; ++rep) {
      std::set<LatticePoint> next;
      for (const auto& p : cur) {
        next.insert(p);
        for (int e : s.support) {
          LatticePoint q = p;
          ++q[static_cast<std::size_t>(e)];
          next.insert(std::move(q));
        }
        if (next.size() > max_points) throw GuardError("Newton exponent set of " + t.encode() + " exceeds guard");
      }
      cur = std::move(next);
    }
  }
  return {cur.begin(), cur.end()};
}

CheckReport newton_check(const Arbor& t, std::size_t max_points) {
  const CoordinateLayout layout(t);
  const auto exps = newton_exponents(t, max_points);
  CheckReport rep;
  rep.checked = exps.size();
  for (const auto& e : exps) {
    if (!layout.contains(e)) {
      rep.pass = false;
      rep.detail = "an exponent vector lies outside Q_t";
      return rep;
    }
  }
  for (const auto& v : vertices(t)) {
    if (!std::binary_search(exps.begin(), exps.end(), v)) {
      rep.pass = false;
      rep.detail = "a vertex of Q_t is missing among the exponents";
      return rep;
    }
  }
  const auto pts = lattice_points(t, 1, max_points);
  rep.detail = exps == pts ? "exponents are exactly the lattice points"
                           : "exponents cover the vertices but not every lattice point";
  return rep;
}

}  // namespace arbor
