#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arbor/harness.hpp"
#include "arbor/invariants.hpp"
#include "arbor/parse.hpp"
#include "arbor/poset.hpp"
#include "oracles.hpp"

using namespace arbor;

namespace {
BiPoly X() { return BiPoly::A(); }
BiPoly Y() { return BiPoly::B(); }
}  // namespace

TEST_CASE("two-vertex arbor") {
  const Arbor t = parse_arbor("(1 (1))");
  CHECK(k_poly(t) == parse_bipoly("1+2XY+XY^2+X^2Y^2", 'X', 'Y'));
  CHECK(h_vector(t) == UniPoly{1, 3, 1});
  CHECK(f_vector(t) == UniPoly{5, 5, 1});
  CHECK(ehrhart(t) == parse_unipoly("(3/2)u^2 + (5/2)u + 1", 'u'));
  CHECK(zeta(t)(Rational(2)) == 5);
  CHECK(zeta(t)(Rational(3)) == 12);
  CHECK(f_height_poly(t, 1) == UniPoly{1, 2, 2});
}

TEST_CASE("recursions against the oracle, size <= 6") {
  for (const auto& t : arbors_up_to(6)) {
    CAPTURE(t.encode());
    const auto pts = oracle::points(t);
    for (int m = 1; m <= 3; ++m) {
      const UniPoly hist = oracle::height_histogram(t, m);
      CHECK(f_height_poly(t, m) == hist);
      CHECK(ehrhart(t)(Rational(m)) == hist(Rational(1)));
    }
    CHECK(ehrhart(t)(Rational(0)) == 1);
    const UniPoly z = zeta(t);
    for (int q = 2; q <= 4; ++q) CHECK(z(Rational(q)) == Rational(oracle::multichains(pts, q)));
    CHECK(k_poly(t) == oracle::nz_height_histogram(t));
    CHECK(zeta_refined(t).at_b(1) == z);
  }
}

TEST_CASE("M-triangle equals the Moebius recursion, size <= 6") {
  for (const auto& t : arbors_up_to(6)) {
    CAPTURE(t.encode());
    const Triangle m = m_triangle(t);
    CHECK(m.size == t.size());
    CHECK(m.poly.is_polynomial());
    CHECK(mobius_triangle(build_poset(t)) == m.poly);
    CHECK(m_from_k(k_poly(t), t.size()) == m);
  }
}

TEST_CASE("transmutation and triangle conversions") {
  for (const auto& t : arbors_up_to(5)) {
    CAPTURE(t.encode());
    const Triangle m = m_triangle(t);
    const Triangle tm = transmute(m);
    CHECK(transmute(tm) == m);
    CHECK(tm == transmuted_m_triangle(t));
    CHECK(diagonal(tm.poly) == h_vector(t));
    CHECK(h_from_m(m) == h_vector(t));
    CHECK(m_from_f(f_from_m(m)) == m);
    CHECK(m_from_h(h_from_m_triangle(m)) == m);
    CHECK(f_vector(t) == h_vector(t).compose(UniPoly{1, 1}));
  }
}

TEST_CASE("transmute rejects non-triangles") {
  CHECK_THROWS_AS(transmute(Triangle{X() + 3, 1}), NonPolynomialError);
}

TEST_CASE("Ehrhart roots and positivity, size <= 6") {
  for (const auto& t : arbors_up_to(6)) {
    CAPTURE(t.encode());
    const auto r = ehrhart_root_check(t);
    CHECK(r.pass);
    CHECK(r.roots_in_interval == static_cast<std::size_t>(r.squarefree_degree));
  }
}

TEST_CASE("pretty triangle layout") {
  const std::string s = pretty_triangle(m_triangle(type_a(2)).poly);
  // top row is the highest Y-degree, the constant sits bottom left
  CHECK(s.substr(s.rfind('\n', s.size() - 2) + 1) == "1\n");
  CHECK(pretty_triangle(BiPoly{}) == "0\n");
  CHECK(pretty_triangle(1 + X() * Y()) == "0 1\n1\n");
}
