#include "arbor/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace arbor {

namespace {

bool coordinatewise_leq(const LatticePoint& a, const LatticePoint& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

FinitePoset FinitePoset::from_points(std::vector<LatticePoint> points) {
  if (points.empty()) throw std::invalid_argument("empty poset");
  std::sort(points.begin(), points.end(), [](const LatticePoint& a, const LatticePoint& b) {
    const int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  FinitePoset p;
  p.points_ = std::move(points);
  p.rank_.reserve(p.points_.size());
  for (const auto& x : p.points_) p.rank_.push_back(height(x));
  for (const auto& x : p.points_) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] < 0) throw std::invalid_argument("negative coordinate");
      if (x[i] == 0) continue;
      LatticePoint y = x;
      --y[i];
      if (p.index_of(y) == p.size()) throw std::invalid_argument("point set is not down-closed");
    }
  }
  p.finish_covers();
  return p;
}

FinitePoset FinitePoset::from_relation(const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  if (n == 0) throw std::invalid_argument("empty poset");
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n || !leq[i][i]) throw std::invalid_argument("relation is not reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) throw std::invalid_argument("relation is not antisymmetric");
      for (std::size_t k = 0; k < n; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k]) throw std::invalid_argument("relation is not transitive");
    }
  }
  std::size_t bottom = n;
  for (std::size_t i = 0; i < n && bottom == n; ++i)
    if (std::all_of(leq[i].begin(), leq[i].end(), [](bool b) { return b; })) bottom = i;
  if (bottom == n) throw std::invalid_argument("poset has no minimum");

  // Longest chain length from the minimum, in a linear extension.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> below(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq[j][i]) ++below[i];
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  std::vector<int> rk(n, 0);
  for (std::size_t a : order)
    for (std::size_t c : order)
      if (c != a && leq[c][a]) rk[a] = std::max(rk[a], rk[c] + 1);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rk[a] < rk[b]; });

  FinitePoset p;
  p.rel_.assign(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.rel_[i][j] = leq[order[i]][order[j]];
  for (std::size_t i = 0; i < n; ++i) p.rank_.push_back(rk[order[i]]);
  p.finish_covers();
  return p;
}

void FinitePoset::finish_covers() {
  const std::size_t n = size();
  up_.assign(n, {});
  if (has_points()) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < points_[i].size(); ++c) {
        LatticePoint y = points_[i];
        ++y[c];
        const std::size_t j = index_of(y);
        if (j != n) up_[i].push_back(j);
      }
      std::sort(up_[i].begin(), up_[i].end());
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !rel_[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && rel_[i][k] && rel_[k][j]) cover = false;
      if (cover) up_[i].push_back(j);
    }
}

int FinitePoset::max_rank() const { return *std::max_element(rank_.begin(), rank_.end()); }

bool FinitePoset::leq(std::size_t i, std::size_t j) const {
  if (has_points()) return coordinatewise_leq(points_[i], points_[j]);
  return rel_[i][j];
}

std::size_t FinitePoset::index_of(const LatticePoint& x) const {
  const int h = height(x);
  auto cmp = [&](const LatticePoint& a, const LatticePoint& b) {
    const int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  };
  auto it = std::lower_bound(points_.begin(), points_.end(), x, cmp);
  if (it == points_.end() || *it != x || height(*it) != h) return size();
  return static_cast<std::size_t>(it - points_.begin());
}

FinitePoset build_poset(const Arbor& t, std::size_t max_elements) {
  return FinitePoset::from_points(lattice_points(t, 1, max_elements));
}

Integer chain_count(const FinitePoset& p, int m) {
  if (m < 1) throw std::invalid_argument("chain_count needs m >= 1");
  if (m == 1) return 1;
  const std::size_t n = p.size();
  std::vector<Integer> c(n, 1);
  for (int step = 2; step < m; ++step) {
    std::vector<Integer> next(n, 0);
    if (p.has_points()) {
      // Down-sets are boxes: one prefix-sum pass per coordinate, in an
      // order where b - e_i is always finished before b.
      next = c;
      const auto& pts = p.points();
      const std::size_t dim = pts.front().size();
      std::vector<std::size_t> lex(n);
      std::iota(lex.begin(), lex.end(), 0);
      std::sort(lex.begin(), lex.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
      for (std::size_t d = 0; d < dim; ++d) {
        for (std::size_t b : lex) {
          if (pts[b][d] == 0) continue;
          LatticePoint y = pts[b];
          --y[d];
          next[b] += next[p.index_of(y)];
        }
      }
    } else {
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t a = 0; a < n; ++a)
          if (p.leq(a, b)) next[b] += c[a];
    }
    c = std::move(next);
  }
  return std::accumulate(c.begin(), c.end(), Integer(0));
}

BiPoly mobius_triangle(const FinitePoset& p, std::size_t max_elements) {
  const std::size_t n = p.size();
  if (n > max_elements) throw GuardError("Moebius recursion refused: " + std::to_string(n) + " elements");
  BiPoly m;
  std::vector<long> mu(n, 0);
  std::vector<std::size_t> up, nonzero;
  for (std::size_t a = 0; a < n; ++a) {
    up.clear();
    for (std::size_t b = a; b < n; ++b)
      if (p.leq(a, b)) up.push_back(b);
    // up is in rank order since elements are stored that way.
    nonzero.clear();
    for (std::size_t b : up) {
      long v = 0;
      if (b == a) {
        v = 1;
      } else {
        for (std::size_t c : nonzero)
          if (c != b && p.leq(c, b)) v -= mu[c];
      }
      mu[b] = v;
      if (v != 0) {
        nonzero.push_back(b);
        m.add_term(Rational(v), p.rank(a), p.rank(b));
      }
    }
  }
  return m;
}

Integer maximal_chain_count(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<Integer> paths(n, 0);
  paths[0] = 1;
  Integer total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (p.upper_covers(i).empty()) total += paths[i];
    for (std::size_t j : p.upper_covers(i)) paths[j] += paths[i];
  }
  return total;
}

UniPoly cubical_f_vector(const FinitePoset& p) {
  if (!p.has_points()) throw std::invalid_argument("cubical f-vector needs a point poset");
  std::map<int, Integer> by_nz;
  for (const auto& x : p.points()) ++by_nz[nonzero_count(x)];
  UniPoly f;
  for (const auto& [k, cnt] : by_nz) f += pow(UniPoly{1, 1}, static_cast<unsigned>(k)) * Rational(cnt);
  return f;
}

UniPoly rank_generating_function(const FinitePoset& p) {
  std::vector<Rational> c(static_cast<std::size_t>(p.max_rank()) + 1);
  for (std::size_t i = 0; i < p.size(); ++i) c[static_cast<std::size_t>(p.rank(i))] += 1;
  return UniPoly(std::move(c));
}

}  // namespace arbor
