#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arbor/bipoly.hpp"
#include "arbor/parse.hpp"
#include "arbor/rational.hpp"
#include "arbor/series.hpp"
#include "arbor/unipoly.hpp"

using namespace arbor;

namespace {
BiPoly X() { return BiPoly::A(); }
BiPoly Y() { return BiPoly::B(); }
UniPoly u() { return UniPoly::variable(); }

UniPoly random_poly(std::mt19937& g, int deg) {
  std::uniform_int_distribution<long> d(-9, 9);
  std::vector<Rational> c;
  for (int i = 0; i <= deg; ++i) c.push_back(make_rational(d(g), 1 + (d(g) + 9) % 4));
  return UniPoly(std::move(c));
}
}  // namespace

TEST_CASE("rational basics") {
  CHECK(make_rational(6, -4) == make_rational(-3, 2));
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
  CHECK(factorial(6) == 720);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-2, 3) == -4);  // (-2)(-3)(-4)/6
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(2, 5) == 0);
}

TEST_CASE("unipoly arithmetic and printing") {
  const UniPoly p{1, 2, 1};
  CHECK(p == pow(UniPoly{1, 1}, 2));
  CHECK(p.degree() == 2);
  CHECK(UniPoly{}.degree() == -1);
  CHECK(UniPoly{0, 0}.is_zero());
  CHECK(p(Rational(3)) == 16);
  CHECK(p.derivative() == UniPoly{2, 2});
  CHECK(p.shifted(-1) == UniPoly{0, 0, 1});
  CHECK(p.compose(UniPoly{0, 2}) == UniPoly{1, 4, 4});
  CHECK(to_string(UniPoly{-1, 0, 3}, "u") == "3*u^2 - 1");
  CHECK(to_string(UniPoly{}) == "0");
}

TEST_CASE("divmod and gcd on random inputs") {
  std::mt19937 g(7);
  for (int trial = 0; trial < 40; ++trial) {
    const UniPoly a = random_poly(g, 5), b = random_poly(g, 3);
    if (b.is_zero()) continue;
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    const UniPoly c = random_poly(g, 2);
    if (c.degree() < 1) continue;
    const UniPoly d = gcd(a * c, b * c);
    CHECK(divmod(d, gcd(c, c)).second.is_zero());
    CHECK(d.leading() == 1);
  }
  CHECK_THROWS(divmod(UniPoly{1, 1}, UniPoly{}));
}

TEST_CASE("square-free part and Sturm counting") {
  // (u+1)^3 (2u+1) (u-2)^2
  const UniPoly p = pow(UniPoly{1, 1}, 3) * UniPoly{1, 2} * pow(UniPoly{-2, 1}, 2);
  CHECK(squarefree_part(p) == UniPoly{1, 1} * UniPoly(std::vector<Rational>{make_rational(1, 2), 1}) * UniPoly{-2, 1});
  CHECK(sturm_roots_in(p, -1, 0, true, false) == 2);
  CHECK(sturm_roots_in(p, -1, 0, false, false) == 1);
  CHECK(sturm_roots_in(p, -5, 5, true, true) == 3);
  CHECK(sturm_roots_in(p, 2, 3, false, true) == 0);
  CHECK(sturm_roots_in(p, 2, 3, true, true) == 1);
  CHECK_THROWS(sturm_roots_in(UniPoly{}, 0, 1, true, true));
}

TEST_CASE("binom_poly") {
  // binom(2(u-1) + 1, 2) at u = 2 is binom(3, 2)
  CHECK(binom_poly(UniPoly{-2, 2}, 2)(Rational(2)) == 3);
  CHECK(binom_poly(u(), 0) == UniPoly{1});
  for (long a = 0; a < 8; ++a)
    for (unsigned l = 0; l < 6; ++l) CHECK(binom_poly(u(), l)(Rational(a)) == Rational(binomial(a + l - 1, l)));
}

TEST_CASE("interpolation recovers the polynomial") {
  std::mt19937 g(11);
  for (int trial = 0; trial < 10; ++trial) {
    const UniPoly p = random_poly(g, 6);
    std::vector<std::pair<Rational, Rational>> pts;
    for (int m = 0; m <= 6; ++m) pts.emplace_back(m, p(Rational(m)));
    CHECK(lagrange_interpolate(pts) == p);
  }
  std::vector<std::pair<Rational, Rational>> dup{{1, 2}, {1, 3}};
  CHECK_THROWS_AS(lagrange_interpolate(dup), std::invalid_argument);
}

TEST_CASE("bipoly Laurent arithmetic") {
  const BiPoly one_minus = 1 - BiPoly::monomial(1, -1, 0);
  CHECK(!one_minus.is_polynomial());
  CHECK((one_minus * X()).is_polynomial());
  CHECK(one_minus * X() == X() - 1);
  CHECK(pow(X() + Y(), 3).coeff(1, 2) == 3);
  CHECK((X() * Y()).swapped() == X() * Y());
  CHECK((X() * Y() * Y()).swapped() == X() * X() * Y());
  const BiPoly p = 1 + 2 * X() * Y() + X() * Y() * Y();
  CHECK(p.at_b(1) == UniPoly{1, 3});
  CHECK(p.coeff_b(2) == UniPoly{0, 1});
  CHECK(p(2, 3) == 1 + 12 + 18);
  CHECK(p.max_b() == 2);
  CHECK(p.min_a() == 0);
}

TEST_CASE("exact division") {
  const BiPoly a = 1 + X() * Y() - 3 * Y(), b = X() - Y() * Y() + 2;
  CHECK(divide_exact(a * b, b) == a);
  CHECK(divide_exact(a * b * X().shifted(-3, 0), a) == b * X().shifted(-3, 0));
  CHECK_THROWS_AS(divide_exact(a + 1, b), NonPolynomialError);
}

TEST_CASE("substitution and composition agree") {
  const BiPoly p = 3 + X() * Y() - 2 * X() * X() * Y() * Y() * Y();
  const BiPoly a = 1 - X(), b = X() * Y() + 2;
  const auto r = substitute(p, {a, 1}, {b, 1});
  CHECK(divide_exact(r.num, r.den) == compose(p, a, b));
  // p(1/(1-X), Y) * (1-X)^2 is a polynomial
  const auto s = substitute(p, {1, 1 - X()}, {Y(), 1});
  CHECK(divide_exact(s.num * pow(1 - X(), 2), s.den).is_polynomial());
}

TEST_CASE("truncated series") {
  using S = TruncSeries<Rational>;
  const S s = S::s(8);
  const S one = S::constant(8, 1);
  const S geo = (one - s).inverse();
  for (int k = 0; k <= 8; ++k) CHECK(geo[k] == 1);
  const S e = s.exp();
  for (int k = 0; k <= 8; ++k) CHECK(e[k] == make_rational(1, factorial(static_cast<unsigned long>(k))));
  CHECK(e.derivative()[3] == e[3]);
  CHECK((e * (s * Rational(-1)).exp() - one).is_zero());
  CHECK_THROWS(S(3) + S(4));
  CHECK_THROWS(S::constant(4, 0).inverse());
}

TEST_CASE("quadratic residual vanishes on the Catalan series") {
  using S = TruncSeries<Rational>;
  const int n = 10;
  std::vector<Rational> c;
  for (int k = 0; k <= n; ++k) c.push_back(Rational(binomial(2 * k, k)) / (k + 1));
  const S C(n, c);
  const S s = S::s(n);
  const S one = S::constant(n, 1);
  CHECK((C - one - s * C * C).is_zero());
  // h = C - 1 solves h = s (1 + h)^2, so s (h + h^2) = h - s - s h
  const S h = C - one;
  CHECK(quadratic_residual(s, h, h - s - s * h).is_zero());
  CHECK(!quadratic_residual(s, h, h - s).is_zero());
}

TEST_CASE("parser") {
  CHECK(parse_unipoly("(1/12)(2u+1)(u+1)^3", 'u') == make_rational(1, 12) * UniPoly{1, 2} * pow(UniPoly{1, 1}, 3));
  CHECK(parse_unipoly("u/60(2u-1)", 'u') == make_rational(1, 60) * UniPoly{0, -1, 2});
  CHECK(parse_unipoly("-u^2 + 3", 'u') == UniPoly{3, 0, -1});
  CHECK(parse_bipoly("-V^6E^4+2V^6E^3-(22/3)VE^6", 'E', 'V') ==
        -BiPoly::monomial(1, 4, 6) + BiPoly::monomial(2, 3, 6) - BiPoly::monomial(make_rational(22, 3), 6, 1));
  CHECK(parse_bipoly("2*X*Y + X^2Y^2", 'X', 'Y') == 2 * X() * Y() + X() * X() * Y() * Y());
  CHECK_THROWS_AS(parse_unipoly("u +", 'u'), std::invalid_argument);
  CHECK_THROWS_AS(parse_unipoly("w", 'u'), std::invalid_argument);
  CHECK_THROWS_AS(parse_unipoly("1/u", 'u'), std::invalid_argument);
  CHECK_THROWS_AS(parse_unipoly("(u", 'u'), std::invalid_argument);
}
