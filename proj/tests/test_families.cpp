#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arbor/families.hpp"
#include "arbor/parse.hpp"
#include "arbor/polytope.hpp"
#include "oracles.hpp"

using namespace arbor;

namespace {

std::vector<oracle::Point> fuss_scan(int m, int x, int y) {
  std::vector<oracle::Point> out;
  const int len = x - 1;
  oracle::Point w(static_cast<std::size_t>(len), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == len) {
      int s = 0;
      for (int j = 0; j < len; ++j) {
        s += w[static_cast<std::size_t>(j)];
        if (m * s >= j + 1) return;
      }
      if (s <= y) out.push_back(w);
      return;
    }
    for (int a = 0; a <= y; ++a) {
      w[static_cast<std::size_t>(i)] = a;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<oracle::Point> typeb_scan(int n, int k) {
  std::vector<oracle::Point> out;
  oracle::Point w(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (oracle::height(w) <= k) out.push_back(w);
      return;
    }
    for (int a = 0; a <= k; ++a) {
      w[static_cast<std::size_t>(i)] = a;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticePoint> sorted(std::vector<LatticePoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

UniPoly u() { return UniPoly::variable(); }

}  // namespace

TEST_CASE("guarded product convention") {
  auto alpha = [](int r) { return Rational(r + 3); };
  CHECK(guarded_product(alpha, 1) == 1);
  CHECK(guarded_product(alpha, 0) == make_rational(1, 4));
  CHECK(guarded_product(alpha, 3) == 5 * 6);
  CHECK(guarded_product(alpha, -1) == make_rational(1, 3 * 4));
  CHECK_THROWS_AS(guarded_product([](int r) { return Rational(r); }, -1), std::domain_error);
  const auto pf = guarded_product([](int r) { return UniPoly{r, 1}; }, 0);
  CHECK(pf.num == UniPoly{1});
  CHECK(pf.den == UniPoly{1, 1});
}

TEST_CASE("Fuss words") {
  CHECK(fuss_words({1, 4, 2}) == std::vector<LatticePoint>{{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 1, 0}, {0, 1, 1}});
  CHECK(fuss_zeta({1, 4, 2}) == parse_unipoly("u(3u-1)/2", 'u'));
  CHECK_THROWS_AS(validate(FussParams{1, 3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(validate(FussParams{0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(fuss_words({2, 20, 9}, 100), GuardError);
}

TEST_CASE("Fuss closed forms against brute force, m <= 3, x <= 8") {
  for (int m = 1; m <= 3; ++m)
    for (int x = 1; x <= 8; ++x)
      for (int y = 0; m * y < x; ++y) {
        CAPTURE(m);
        CAPTURE(x);
        CAPTURE(y);
        const FussParams p{m, x, y};
        const auto words = fuss_scan(m, x, y);
        CHECK(sorted(fuss_words(p)) == words);
        const UniPoly z = fuss_zeta(p);
        for (int q = 2; q <= 4; ++q) CHECK(z(Rational(q)) == Rational(oracle::multichains(words, q)));
        const Triangle mt = fuss_m_triangle(p);
        if (words.size() <= 300) CHECK(mt.poly == oracle::mobius(words));
        CHECK(fuss_m_recursive(p) == mt);
        if (x == m * y + 1 && y >= 1) {
          CHECK(z == fuss_zeta({m, x, y - 1}));
        } else if (x >= 2) {
          UniPoly rhs;
          for (int j = 0; j <= y; ++j)
            if (m * (y - j) < x - 1) rhs += fuss_zeta({m, x - 1, y - j}) * binom_poly(u() - UniPoly{1}, static_cast<unsigned>(j));
          CHECK(z == rhs);
        }
      }
}

TEST_CASE("Fuss type A specialization") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    const FussParams p{1, n + 2, n};
    UniPoly want{1};
    for (int j = 0; j < n; ++j) want *= UniPoly{-j, n + 1};
    // zeta is prod_{j<n} ((n+1)u - j) / (n+1)!
    CHECK(fuss_zeta(p) * Rational(n + 1) == want * make_rational(1, factorial(static_cast<unsigned long>(n))));
    CHECK(fuss_words(p).size() == static_cast<std::size_t>(oracle::binomial(2 * n + 2, n + 1).get_si() / (n + 2)));
    CHECK(fuss_m_triangle(p) == m_triangle(type_a(n)));
    CHECK(fuss_zeta(p) == zeta(type_a(n)));
    BiPoly ma;
    for (int l = 0; l <= n; ++l)
      for (int k = 0; k <= l; ++k) {
        Rational c = make_rational(n + 1 - l, n + k - l + 1) * Rational(oracle::binomial(n + k, n) * oracle::binomial(n, l - k));
        if ((k + l) % 2) c = -c;
        ma.add_term(c, k, l);
      }
    CHECK(fuss_m_triangle(p).poly == ma);
  }
  CHECK(fuss_m_triangle({1, 5, 3}).poly == m_triangle(type_a(3)).poly);
  CHECK(fuss_m_triangle({2, 7, 3}).poly == mobius_triangle(fuss_elements({2, 7, 3})));
}

TEST_CASE("type B closed forms against brute force, n <= 6") {
  CHECK(typeb_zeta({1, 1}) == u());
  CHECK(typeb_zeta({2, 2}) == UniPoly{0, -1, 2});
  CHECK(typeb_points({2, 2}).size() == 6);
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= 6 && oracle::binomial(n + k, k) <= 924; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const TypeBParams p{n, k};
      const auto pts = typeb_scan(n, k);
      CHECK(sorted(typeb_points(p)) == pts);
      const UniPoly z = typeb_zeta(p);
      for (int q = 2; q <= 4; ++q) {
        CHECK(z(Rational(q)) == Rational(oracle::multichains(pts, q)));
        CHECK(z(Rational(q)) == Rational(oracle::binomial(n * (q - 1) + k, k)));
      }
      if (pts.size() <= 300) CHECK(typeb_m_triangle(p).poly == oracle::mobius(pts));
      CHECK(typeb_m_recursive(p) == typeb_m_triangle(p));
      CHECK(typeb_upper_ideals_ok(p));
    }
  for (int n = 1; n <= 5; ++n) {
    CHECK(typeb_m_triangle({n, n}) == m_triangle(type_b(n)));
    CHECK(sorted(typeb_points({n, n})) == sorted(lattice_points(type_b(n))));
  }
}

TEST_CASE("noncrossing partitions and transmuted partners, n <= 6") {
  CHECK(nc_m_triangle(CoxeterType::A, 3).poly ==
        parse_bipoly("-5Y^3 + 10XY^3 - 6X^2Y^3 + X^3Y^3 + 10Y^2 - 16XY^2 + 6X^2Y^2 - 6Y + 6XY + 1", 'X', 'Y'));
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const Triangle a = nc_m_triangle(CoxeterType::A, n), b = nc_m_triangle(CoxeterType::B, n);
    CHECK(is_self_dual(a));
    CHECK(is_self_dual(b));
    CHECK(a == transmute(m_triangle(type_a(n))));
    CHECK(b == transmute(m_triangle(type_b(n))));
    for (int q = 2; q <= 4; ++q) CHECK(zeta(type_b(n))(Rational(q)) == Rational(oracle::binomial(n * q, n)));
  }
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const FinitePoset nc = nc_a_lattice(n);
    CHECK(mobius_triangle(nc) == nc_m_triangle(CoxeterType::A, n).poly);
    for (int q = 2; q <= 4; ++q) CHECK(chain_count(nc, q) == chain_count(build_poset(type_a(n)), q));
  }
  CHECK(!is_self_dual(m_triangle(type_a(3))));
}

TEST_CASE("halohedra") {
  CHECK(halo_count(2) == 5);
  CHECK(h_vector(halo(2)) == UniPoly{1, 3, 1});
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(oracle::points(halo(n)).size() == halo_count(n).get_ui());
    CHECK(oracle::points(halo_rev(n)).size() == halo_count(n).get_ui());
    CHECK(halo_count(n) * n == (3 * n - 1) * oracle::binomial(2 * n - 2, n - 1));
  }
  const auto rep = halo_checks(8, 10);
  CHECK(rep.pass);
  CHECK(rep.lines.size() == 7);
  for (const auto& [name, ok] : rep.findings) {
    CAPTURE(name);
    CHECK(ok);
  }
}

TEST_CASE("Hochschild corollas") {
  CHECK(hochschild_count(2) == 5);
  CHECK(hochschild_count(4) == 28);
  CHECK(hochschild_h_closed(2) == UniPoly{1, 3, 1});
  for (int n = 2; n <= 6; ++n) CHECK(oracle::points(hochschild(n)).size() == hochschild_count(n).get_ui());
  CHECK(hochschild_m_series(3)[3] == m_triangle(hochschild(3)).poly);
  const auto rep = hochschild_checks(8);
  CHECK(rep.pass);
  CHECK(rep.findings.size() == 4);
  for (const auto& [name, ok] : rep.findings) {
    const std::string msg = name + (ok ? "" : " (finding)");
    MESSAGE(msg);
  }
}

TEST_CASE("summation lemmas on the full grid") {
  for (int k = 1; k <= 6; ++k)
    for (int l = 1; l <= 6; ++l)
      for (int x = 2; x <= 8; ++x) {
        CAPTURE(k);
        CAPTURE(l);
        CAPTURE(x);
        CHECK(summing_1_lhs(k, l, x) == summing_1_rhs(k, l, x));
        CHECK(summing_2_lhs(k, l, x) == summing_2_rhs(k, l, x));
      }
}
