#include "arbor/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "arbor/arbor.hpp"
#include "arbor/volume.hpp"

namespace arbor {

Rational guarded_product(const std::function<Rational(int)>& alpha, int L) {
  Rational r = 1;
  if (L >= 1) {
    for (int i = 2; i <= L; ++i) r *= alpha(i);
    return r;
  }
  for (int i = L + 1; i <= 1; ++i) {
    const Rational a = alpha(i);
    if (a == 0) throw std::domain_error("guarded product divides by zero");
    r /= a;
  }
  return r;
}

PolyFraction guarded_product(const std::function<UniPoly(int)>& alpha, int L) {
  PolyFraction f{UniPoly::constant(1), UniPoly::constant(1)};
  if (L >= 1) {
    for (int i = 2; i <= L; ++i) f.num *= alpha(i);
  } else {
    for (int i = L + 1; i <= 1; ++i) f.den *= alpha(i);
  }
  return f;
}

namespace {

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw NonPolynomialError("inexact polynomial quotient");
  return q;
}

// u - 1
UniPoly u_minus_1() { return UniPoly{-1, 1}; }

}  // namespace

void validate(const FussParams& p) {
  if (p.m < 1 || p.x < 1 || p.y < 0 || static_cast<long>(p.m) * p.y >= p.x)
    throw std::invalid_argument("Fuss parameters need m >= 1, x >= 1, y >= 0 and m*y < x");
}

std::vector<LatticePoint> fuss_words(const FussParams& p, std::size_t max_points) {
  validate(p);
  const int len = p.x - 1;
  std::vector<LatticePoint> out;
  LatticePoint w(static_cast<std::size_t>(len), 0);
  std::function<void(int, int)> grow = [&](int j, int sum) {
    if (j == len) {
      if (out.size() >= max_points) throw GuardError("Fuss poset exceeds guard");
      out.push_back(w);
      return;
    }
    // position j+1 needs m * (sum + a) < j + 1
    for (int a = 0; sum + a <= p.y && static_cast<long>(p.m) * (sum + a) < j + 1; ++a) {
      w[static_cast<std::size_t>(j)] = a;
      grow(j + 1, sum + a);
    }
    w[static_cast<std::size_t>(j)] = 0;
  };
  grow(0, 0);
  return out;
}

FinitePoset fuss_elements(const FussParams& p, std::size_t max_points) {
  return FinitePoset::from_points(fuss_words(p, max_points));
}

UniPoly fuss_zeta(const FussParams& p) {
  validate(p);
  const auto u1 = u_minus_1();
  const UniPoly lead = u1 * Rational(p.x - static_cast<long>(p.m) * p.y - 1) + UniPoly::constant(1);
  const auto prod = guarded_product(
      [&](int j) { return u1 * Rational(p.x - 1) + UniPoly::constant(j); }, p.y);
  return exact_quotient(lead * prod.num, prod.den) *
         make_rational(1, factorial(static_cast<unsigned long>(p.y)));
}

Triangle fuss_m_triangle(const FussParams& p) {
  validate(p);
  BiPoly out;
  const UniPoly z = UniPoly::variable();  // stands for x
  for (int l = 0; l <= p.y; ++l) {
    for (int k = 0; k <= l; ++k) {
      const auto prod = guarded_product([&](int r) { return z + UniPoly::constant(k - r); }, l);
      const UniPoly num = (z + UniPoly::constant(-1 - static_cast<long>(p.m) * l)) * prod.num;
      auto [q, rem] = divmod(num, prod.den);
      Rational val = rem.is_zero() ? q(p.x) : num(p.x) / prod.den(p.x);
      val *= make_rational(binomial(l, k), factorial(static_cast<unsigned long>(l)));
      if ((k + l) % 2) val = -val;
      out.add_term(val, k, l);
    }
  }
  return {out, p.y};
}

Triangle fuss_m_recursive(const FussParams& p) {
  validate(p);
  std::map<std::tuple<int, int>, BiPoly> memo;
  const BiPoly one_minus_inv_x = BiPoly(1) - BiPoly::monomial(1, -1, 0);
  std::function<BiPoly(int, int)> rec = [&](int x, int y) -> BiPoly {
    if (y == 0) return BiPoly(1);
    auto key = std::make_tuple(x, y);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BiPoly r;
    if (x == p.m * y + 1) {
      r = rec(x, y - 1);
    } else {
      r = rec(x - 1, y);
      BiPoly tail;
      for (int j = 1; j <= y; ++j) tail += BiPoly::monomial(1, j, j) * rec(x - 1, y - j);
      r += one_minus_inv_x * tail;
    }
    memo.emplace(key, r);
    return r;
  };
  return {rec(p.x, p.y), p.y};
}

std::vector<LatticePoint> typeb_points(const TypeBParams& p, std::size_t max_points) {
  if (p.n < 1 || p.k < 0) throw std::invalid_argument("type B parameters need n >= 1, k >= 0");
  std::vector<LatticePoint> out;
  LatticePoint w(static_cast<std::size_t>(p.n), 0);
  std::function<void(int, int)> grow = [&](int i, int left) {
    if (i == p.n) {
      if (out.size() >= max_points) throw GuardError("type B poset exceeds guard");
      out.push_back(w);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      w[static_cast<std::size_t>(i)] = a;
      grow(i + 1, left - a);
    }
    w[static_cast<std::size_t>(i)] = 0;
  };
  grow(0, p.k);
  return out;
}

FinitePoset typeb_elements(const TypeBParams& p, std::size_t max_points) {
  return FinitePoset::from_points(typeb_points(p, max_points));
}

UniPoly typeb_zeta(const TypeBParams& p) {
  // binom(n(u-1) + k, k) = binom(a + k - 1, k) with a = n(u-1) + 1
  return binom_poly(u_minus_1() * Rational(p.n) + UniPoly::constant(1), static_cast<unsigned>(p.k));
}

Triangle typeb_m_triangle(const TypeBParams& p) {
  if (p.n < 1 || p.k < 0) throw std::invalid_argument("type B parameters need n >= 1, k >= 0");
  BiPoly out;
  for (int r = 0; r <= p.k; ++r)
    for (int l = 0; l <= p.k - r; ++l) {
      Rational c(binomial(l + p.n - 1, p.n - 1) * binomial(p.n, r));
      if ((l + l + r) % 2) c = -c;
      out.add_term(c, l, l + r);
    }
  return {out, p.k};
}

Triangle typeb_m_recursive(const TypeBParams& p) {
  const BiPoly one_minus_inv_x = BiPoly(1) - BiPoly::monomial(1, -1, 0);
  // row[k] = M_{n,k} for the current n
  std::vector<BiPoly> row(static_cast<std::size_t>(p.k) + 1, BiPoly(1));
  for (int n = 1; n <= p.n; ++n) {
    std::vector<BiPoly> next(row.size());
    for (int k = 0; k <= p.k; ++k) {
      BiPoly tail;
      for (int j = 1; j <= k; ++j) tail += BiPoly::monomial(1, j, j) * row[static_cast<std::size_t>(k - j)];
      next[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k)] + one_minus_inv_x * tail;
    }
    row = std::move(next);
  }
  return {row[static_cast<std::size_t>(p.k)], p.k};
}

bool typeb_upper_ideals_ok(const TypeBParams& p) {
  const auto pts = typeb_points(p);
  for (const auto& a : pts) {
    std::vector<LatticePoint> shifted;
    for (const auto& b : pts) {
      bool ge = true;
      for (std::size_t i = 0; i < a.size() && ge; ++i) ge = b[i] >= a[i];
      if (!ge) continue;
      LatticePoint d = b;
      for (std::size_t i = 0; i < a.size(); ++i) d[i] -= a[i];
      shifted.push_back(std::move(d));
    }
    std::sort(shifted.begin(), shifted.end());
    auto expect = typeb_points({p.n, p.k - height(a)});
    std::sort(expect.begin(), expect.end());
    if (shifted != expect) return false;
  }
  return true;
}

BiPoly cluster_f_triangle(CoxeterType type, int n) {
  if (n < 1) throw std::invalid_argument("cluster F-triangle needs n >= 1");
  BiPoly f;
  for (int k = 0; k <= n; ++k)
    for (int l = 0; k + l <= n; ++l) {
      if (type == CoxeterType::A)
        f.add_term(make_rational(Integer(l + 1) * binomial(n, k + l) * binomial(n + k, n), k + l + 1), k, l);
      else
        f.add_term(Rational(binomial(n, k + l) * binomial(n + k - 1, n - 1)), k, l);
    }
  return f;
}

Triangle nc_m_triangle(CoxeterType type, int n) { return m_from_f({cluster_f_triangle(type, n), n}); }

bool is_self_dual(const Triangle& t) {
  BiPoly d;
  for (const auto& [e, c] : t.poly.terms()) d.add_term(c, t.size - e.second, t.size - e.first);
  return d == t.poly;
}

FinitePoset nc_a_lattice(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("nc_a_lattice supports 1 <= n <= 5");
  const int pts = n + 1;
  // restricted growth strings give each set partition once
  std::vector<std::vector<int>> parts;
  std::vector<int> rgs(static_cast<std::size_t>(pts), 0);
  std::function<void(int, int)> grow = [&](int i, int maxb) {
    if (i == pts) {
      for (int a = 0; a < pts; ++a)
        for (int b = a + 1; b < pts; ++b)
          for (int c = b + 1; c < pts; ++c)
            for (int d = c + 1; d < pts; ++d)
              if (rgs[a] == rgs[c] && rgs[b] == rgs[d] && rgs[a] != rgs[b]) return;
      parts.push_back(rgs);
      return;
    }
    for (int v = 0; v <= maxb + 1; ++v) {
      rgs[static_cast<std::size_t>(i)] = v;
      grow(i + 1, std::max(maxb, v));
    }
  };
  rgs[0] = 0;
  grow(1, 0);
  // pi <= sigma when every block of pi sits inside a block of sigma.
  const std::size_t cnt = parts.size();
  std::vector<std::vector<bool>> leq(cnt, std::vector<bool>(cnt));
  for (std::size_t i = 0; i < cnt; ++i)
    for (std::size_t j = 0; j < cnt; ++j) {
      bool ok = true;
      for (int a = 0; a < pts && ok; ++a)
        for (int b = a + 1; b < pts && ok; ++b)
          if (parts[i][static_cast<std::size_t>(a)] == parts[i][static_cast<std::size_t>(b)] &&
              parts[j][static_cast<std::size_t>(a)] != parts[j][static_cast<std::size_t>(b)])
            ok = false;
      leq[i][j] = ok;
    }
  return FinitePoset::from_relation(leq);
}

Integer halo_count(int n) {
  const Integer num = Integer(3 * n - 1) * binomial(2 * n - 2, n - 1);
  return num / n;
}

UniPoly halo_h_closed(int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j)
    c[static_cast<std::size_t>(j)] = Rational(binomial(n - 1, j) * binomial(n, j) +
                                              binomial(n - 1, j - 1) * binomial(n - 1, j - 1));
  return UniPoly(std::move(c));
}

UniPoly halo_rev_h_closed(int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j)
    c[static_cast<std::size_t>(j)] = Rational(binomial(n - 1, j) * binomial(n - 1, j) +
                                              binomial(n - 1, j - 1) * binomial(n, j));
  return UniPoly(std::move(c));
}

TruncSeries<UniPoly> halo_series_a(int order) {
  TruncSeries<UniPoly> a(order);
  for (int n = 1; n <= order; ++n) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) c[static_cast<std::size_t>(j)] = Rational(binomial(n - 1, j - 1) * binomial(n - 1, j - 1));
    a[n] = UniPoly(std::move(c));
  }
  return a;
}

TruncSeries<UniPoly> halo_series_b(int order) {
  TruncSeries<UniPoly> b(order);
  for (int n = 1; n <= order; ++n) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) c[static_cast<std::size_t>(j)] = Rational(binomial(n - 1, j) * binomial(n, j));
    b[n] = UniPoly(std::move(c));
  }
  return b;
}

TruncSeries<UniPoly> halo_series_p(int order) {
  const UniPoly xm1 = UniPoly{-1, 1};
  TruncSeries<UniPoly> p(order);
  p[0] = UniPoly::constant(1);
  if (order >= 1) p[1] = UniPoly{-2, -2};
  if (order >= 2) p[2] = xm1 * xm1;
  return p;
}

TruncSeries<UniPoly> halo_h_series(int order) {
  TruncSeries<UniPoly> h(order);
  if (order >= 1) h[1] = h_vector(Arbor(1));
  for (int n = 2; n <= order; ++n) h[n] = h_vector(halo(n));
  return h;
}

FamilyReport halo_checks(int n_max, int series_order) {
  FamilyReport rep;
  for (int n = 2; n <= n_max; ++n) {
    FamilyLine line{n, true, {}};
    const auto expect = halo_count(n);
    const auto e1 = Integer(f_height_poly(halo(n), 1)(1).get_num());
    const auto e2 = Integer(f_height_poly(halo_rev(n), 1)(1).get_num());
    const UniPoly h1 = h_vector(halo(n)), h2 = h_vector(halo_rev(n));
    std::ostringstream os;
    os << "count " << e1.get_str() << "/" << e2.get_str() << " expected " << expect.get_str();
    if (e1 != expect || e2 != expect) line.pass = false;
    if (h1 != h2 || h1 != halo_h_closed(n) || h1 != halo_rev_h_closed(n)) {
      line.pass = false;
      os << "; h mismatch " << to_string(h1, "X") << " vs " << to_string(h2, "X");
    } else {
      os << "; h = " << to_string(h1, "X");
    }
    line.detail = os.str();
    rep.pass = rep.pass && line.pass;
    rep.lines.push_back(std::move(line));
  }
  const int N = series_order;
  const auto P = halo_series_p(N);
  const auto A = halo_series_a(N), B = halo_series_b(N);
  const auto s = TruncSeries<UniPoly>::s(N);
  const auto X = UniPoly::variable();
  const auto resA = P * A * A - TruncSeries<UniPoly>::monomial(N, X * X, 2);
  const auto resB = quadratic_residual(P, B, s);
  const auto rhs = TruncSeries<UniPoly>::monomial(N, X, 2) + TruncSeries<UniPoly>::monomial(N, X, 1) + s;
  const auto resH = quadratic_residual(P, halo_h_series(N), rhs);
  rep.findings = {{"A residual vanishes", resA.is_zero()},
                  {"B residual vanishes", resB.is_zero()},
                  {"h residual vanishes", resH.is_zero()},
                  {"h series equals A + B", halo_h_series(N) == A + B}};
  for (const auto& [name, ok] : rep.findings) rep.pass = rep.pass && ok;
  return rep;
}

Integer hochschild_count(int n) {
  if (n < 2) throw std::invalid_argument("hochschild_count needs n >= 2");
  Integer p = 1;
  p <<= static_cast<unsigned>(n - 2);
  return p * (n + 3);
}

UniPoly hochschild_h_closed(int n) {
  return pow(UniPoly{1, 1}, static_cast<unsigned>(n - 2)) * UniPoly{1, n + 1, 1};
}

TruncSeries<UniPoly> hochschild_zeta_series(int order) {
  using S = TruncSeries<UniPoly>;
  const UniPoly u = UniPoly::variable();
  const S one = S::constant(order, UniPoly::constant(1));
  const S s = S::s(order);
  const S f1 = one - s * u;
  const S f2 = one + s - s * u;
  return ((f1 * f2).inverse() * u).integral().exp();
}

TruncSeries<BiPoly> hochschild_m_series(int order) {
  using S = TruncSeries<BiPoly>;
  const BiPoly xy = BiPoly::monomial(1, 1, 1), y = BiPoly::B();
  const S one = S::constant(order, BiPoly(1));
  const S s = S::s(order);
  const S num = (s * xy - s * y - one) * (s * xy - one);
  const S den = (s * (xy * Rational(2)) - s * y - one) * (s * xy - s * y + s - one);
  return num * den.inverse();
}

TruncSeries<UniPoly> hochschild_ehrhart_series(int order) {
  using S = TruncSeries<UniPoly>;
  const S one = S::constant(order, UniPoly::constant(1));
  const S s = S::s(order);
  const S d = s * UniPoly{1, 1} - one;  // us + s - 1
  const S dinv = d.inverse();
  return (one - s * dinv - (s - one) * dinv * dinv) * UniPoly::constant(make_rational(1, 2));
}

TruncSeries<BiPoly> hochschild_laplace_series(int order) {
  using S = TruncSeries<BiPoly>;
  const BiPoly E = BiPoly::A(), V = BiPoly::B();
  const S one = S::constant(order, BiPoly(1));
  const S s = S::s(order);
  const S first = s * (s * (E * V) - s * V + one).inverse();
  const S second = s * E * (s * E - one).inverse();
  return (first + second) * V;
}

FamilyReport hochschild_checks(int n_max) {
  FamilyReport rep;
  for (int n = 2; n <= n_max; ++n) {
    FamilyLine line{n, true, {}};
    const auto t = hochschild(n);
    const auto count = Integer(f_height_poly(t, 1)(1).get_num());
    const UniPoly h = h_vector(t);
    line.pass = count == hochschild_count(n) && h == hochschild_h_closed(n);
    line.detail = "count " + count.get_str() + " expected " + hochschild_count(n).get_str() + "; h = " +
                  to_string(h, "X");
    rep.pass = rep.pass && line.pass;
    rep.lines.push_back(std::move(line));
  }
  const int N = std::max(n_max, 1);
  const auto zs = hochschild_zeta_series(N);
  const auto ms = hochschild_m_series(N);
  const auto es = hochschild_ehrhart_series(N);
  const auto ls = hochschild_laplace_series(N);
  auto mismatches = [&](auto&& same) {
    std::string bad;
    for (int n = 1; n <= n_max; ++n)
      if (!same(n)) bad += (bad.empty() ? "" : ",") + std::to_string(n);
    return bad;
  };
  const std::pair<std::string, std::string> series[] = {
      {"zeta series", mismatches([&](int n) { return zs[n] == zeta(hochschild(n)) && zs[0] == UniPoly{1}; })},
      {"M-triangle series", mismatches([&](int n) { return ms[n] == m_triangle(hochschild(n)).poly; })},
      {"Ehrhart series", mismatches([&](int n) { return es[n] == ehrhart(hochschild(n)); })},
      {"Laplace series", mismatches([&](int n) { return ls[n] == laplace_poly(hochschild(n)); })},
  };
  for (const auto& [name, bad] : series)
    rep.findings.emplace_back(name + (bad.empty() ? " matches" : " differs at n=" + bad), bad.empty());
  return rep;
}

namespace {

Rational rising_block(int k, int l, int x) {
  Rational r = 1;
  for (int i = 1; i <= l; ++i) r *= x - i + k;
  return r;
}

Rational summing_lhs(int k, int l, int x, bool weighted) {
  Rational acc = 0;
  for (int j = 0; j <= k; ++j) {
    Rational term = guarded_product([&](int r) { return Rational(x - r + k - j); }, l - j);
    term *= make_rational(1, factorial(static_cast<unsigned long>(k - j)));
    if (weighted) term *= l - j;
    acc += term;
  }
  return acc;
}

}  // namespace

Rational summing_1_lhs(int k, int l, int x) { return summing_lhs(k, l, x, false); }

Rational summing_1_rhs(int k, int l, int x) {
  return make_rational(1, factorial(static_cast<unsigned long>(k))) * make_rational(1, x - 1) * rising_block(k, l, x);
}

Rational summing_2_lhs(int k, int l, int x) { return summing_lhs(k, l, x, true); }

Rational summing_2_rhs(int k, int l, int x) {
  return make_rational(1, factorial(static_cast<unsigned long>(k))) *
         make_rational(static_cast<long>(x) * l - k, static_cast<long>(x) * (x - 1)) * rising_block(k, l, x);
}

}  // namespace arbor
