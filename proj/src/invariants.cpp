#include "arbor/invariants.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace arbor {

UniPoly f_height_poly(const Arbor& t, int m) {
  if (m < 0) throw std::invalid_argument("negative dilation");
  if (m == 0) return UniPoly::constant(1);
  UniPoly w = UniPoly::constant(1);
  for (const auto& c : t.children()) w *= f_height_poly(c, m);
  const long r = t.root_multiplicity(), n = t.size();
  std::vector<Rational> out(static_cast<std::size_t>(m * n) + 1);
  for (long j = 0; j <= m * n; ++j) {
    Rational acc = 0;
    for (long l = std::max(0L, j + m * (r - n)); l <= j; ++l) {
      const Rational wj = w.coeff(static_cast<int>(j - l));
      if (wj != 0) acc += Rational(binomial(r + l - 1, l)) * wj;
    }
    out[static_cast<std::size_t>(j)] = acc;
  }
  return UniPoly(std::move(out));
}

UniPoly ehrhart(const Arbor& t) {
  std::vector<std::pair<Rational, Rational>> nodes;
  nodes.emplace_back(0, 1);
  for (int m = 1; m <= t.size(); ++m) nodes.emplace_back(m, f_height_poly(t, m)(1));
  return lagrange_interpolate(nodes);
}

RootReport ehrhart_root_check(const Arbor& t) {
  const UniPoly e = ehrhart(t);
  RootReport rep;
  rep.squarefree_degree = squarefree_part(e).degree();
  rep.roots_in_interval = sturm_roots_in(e, -1, 0, true, false);
  rep.roots_ok = rep.roots_in_interval == static_cast<std::size_t>(rep.squarefree_degree);
  rep.coefficients_positive = true;
  for (const auto& c : e.coefficients())
    if (c <= 0) rep.coefficients_positive = false;
  rep.pass = rep.roots_ok && rep.coefficients_positive;
  return rep;
}

namespace {

// Refined Zeta as coefficients of X^j, each a polynomial in u.
std::vector<UniPoly> zeta_by_height(const Arbor& t) {
  std::vector<UniPoly> w{UniPoly::constant(1)};
  for (const auto& c : t.children()) {
    const auto z = zeta_by_height(c);
    std::vector<UniPoly> prod(w.size() + z.size() - 1);
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j < z.size(); ++j) prod[i + j] += w[i] * z[j];
    w = std::move(prod);
  }
  const long r = t.root_multiplicity(), n = t.size();
  const UniPoly a = UniPoly{-1, 1} * Rational(r);  // r(u - 1)
  std::vector<UniPoly> out(static_cast<std::size_t>(n) + 1);
  for (long j = 0; j <= n; ++j) {
    for (long l = std::max(0L, j - n + r); l <= j; ++l) {
      const auto k = static_cast<std::size_t>(j - l);
      if (k >= w.size() || w[k].is_zero()) continue;
      out[static_cast<std::size_t>(j)] += binom_poly(a, static_cast<unsigned>(l)) * w[k];
    }
  }
  return out;
}

}  // namespace

BiPoly zeta_refined(const Arbor& t) {
  const auto z = zeta_by_height(t);
  BiPoly out;
  for (std::size_t j = 0; j < z.size(); ++j)
    for (int i = 0; i <= z[j].degree(); ++i) out.add_term(z[j].coeff(i), i, static_cast<int>(j));
  return out;
}

UniPoly zeta(const Arbor& t) {
  UniPoly z;
  for (const auto& c : zeta_by_height(t)) z += c;
  return z;
}

BiPoly k_poly(const Arbor& t) {
  BiPoly w(1);
  for (const auto& c : t.children()) w *= k_poly(c);
  const long r = t.root_multiplicity(), n = t.size();
  BiPoly out;
  for (long k = 0; k <= n; ++k)
    for (long j = 0; j <= k; ++j) {
      Rational acc = 0;
      for (long l = std::max(0L, j - n + r); l <= std::min(j, r); ++l)
        for (long mm = std::max(l, k - n + r); mm <= k + l - j; ++mm) {
          const Rational wc = w.coeff(static_cast<int>(j - l), static_cast<int>(k - mm));
          if (wc == 0) continue;
          acc += Rational(binomial(r, l) * binomial(mm - 1, mm - l)) * wc;
        }
      out.add_term(acc, static_cast<int>(j), static_cast<int>(k));
    }
  return out;
}

Triangle m_from_k(const BiPoly& k, int size) {
  BiPoly m;
  for (const auto& [e, c] : k.terms()) {
    const auto [j, kk] = e;
    // (1 - 1/X)^j (XY)^k
    for (int i = 0; i <= j; ++i) {
      if (kk - i < 0) throw std::logic_error("negative X power in M from K");
      Rational term = c * Rational(binomial(j, i));
      if (i % 2) term = -term;
      m.add_term(term, kk - i, kk);
    }
  }
  return {m, size};
}

Triangle m_triangle(const Arbor& t) { return m_from_k(k_poly(t), t.size()); }

namespace {

BiPoly X() { return BiPoly::A(); }
BiPoly Y() { return BiPoly::B(); }

Triangle convert(const Triangle& src, const RationalFunction2& a, const RationalFunction2& b,
                 const BiPoly& factor) {
  const auto r = substitute(src.poly, a, b);
  return {divide_exact(r.num * pow(factor, static_cast<unsigned>(src.size)), r.den), src.size};
}

}  // namespace

Triangle transmute(const Triangle& m) {
  const auto r = substitute(m.poly, {1 - Y(), 1 - X() * Y()}, {1 - X() * Y(), BiPoly(1)});
  return {divide_exact(r.num, r.den), m.size};
}

Triangle transmuted_m_triangle(const Arbor& t) {
  const BiPoly k = k_poly(t);
  const BiPoly xm1 = X() - 1, ym = 1 - Y();
  BiPoly out;
  for (const auto& [e, c] : k.terms()) {
    const auto [j, kk] = e;
    out += c * pow(Y() * xm1, static_cast<unsigned>(j)) * pow(ym, static_cast<unsigned>(kk - j));
  }
  return {out, t.size()};
}

UniPoly f_vector(const Arbor& t) {
  UniPoly f;
  const BiPoly k = k_poly(t);
  for (const auto& [e, c] : k.terms()) f += pow(UniPoly{1, 1}, static_cast<unsigned>(e.first)) * c;
  return f;
}

UniPoly h_vector(const Arbor& t) { return k_poly(t).at_b(1); }

UniPoly h_from_m(const Triangle& m) {
  const auto r = substitute(m.poly, {BiPoly(1), 1 - X()}, {1 - X(), BiPoly(1)});
  const BiPoly q = divide_exact(r.num, r.den);
  return q.at_b(0);
}

UniPoly diagonal(const BiPoly& p) {
  std::vector<Rational> v;
  for (const auto& [e, c] : p.terms()) {
    if (e.first != e.second || e.first < 0) continue;
    if (static_cast<std::size_t>(e.first) >= v.size()) v.resize(static_cast<std::size_t>(e.first) + 1);
    v[static_cast<std::size_t>(e.first)] = c;
  }
  return UniPoly(std::move(v));
}

Triangle f_from_m(const Triangle& m) { return convert(m, {Y(), Y() - X()}, {Y() - X(), 1 + Y()}, 1 + Y()); }

Triangle m_from_f(const Triangle& f) {
  return convert(f, {Y() * (X() - 1), 1 - X() * Y()}, {X() * Y(), 1 - X() * Y()}, 1 - X() * Y());
}

Triangle m_from_h(const Triangle& h) {
  return convert(h, {(X() - 1) * Y(), 1 - Y()}, {X(), X() - 1}, 1 - Y());
}

Triangle h_from_m_triangle(const Triangle& m) {
  const BiPoly d = 1 + (Y() - 1) * X();
  return convert(m, {Y(), Y() - 1}, {(Y() - 1) * X(), d}, d);
}

std::string pretty_triangle(const BiPoly& p) {
  if (p.is_zero()) return "0\n";
  std::ostringstream os;
  for (int j = p.max_b(); j >= p.min_b(); --j) {
    bool first = true;
    for (int i = p.min_a(); i <= p.max_a(); ++i) {
      const Rational c = p.coeff(i, j);
      if (i > j && c == 0) continue;
      if (!first) os << ' ';
      os << c.get_str();
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace arbor
