#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arbor/harness.hpp"
#include "arbor/invariants.hpp"
#include "arbor/poset.hpp"
#include "oracles.hpp"

using namespace arbor;

TEST_CASE("two-vertex poset") {
  const FinitePoset p = build_poset(parse_arbor("(1 (1))"));
  CHECK(p.size() == 5);
  CHECK(p.max_rank() == 2);
  CHECK(chain_count(p, 1) == 1);
  CHECK(chain_count(p, 2) == 5);
  CHECK(chain_count(p, 3) == 12);
  CHECK(maximal_chain_count(p) == 3);
  CHECK(rank_generating_function(p) == UniPoly{1, 2, 2});
  CHECK(cubical_f_vector(p) == UniPoly{5, 5, 1});
  CHECK(p.index_of({1, 1}) < p.size());
  CHECK(p.index_of({2, 2}) == p.size());
  CHECK(p.leq(p.index_of({0, 0}), p.index_of({1, 1})));
  CHECK(!p.leq(p.index_of({2, 0}), p.index_of({1, 1})));
}

TEST_CASE("from_points validates") {
  CHECK_THROWS_AS(FinitePoset::from_points({{0, 0}, {1, 1}}), std::invalid_argument);
  const auto p = FinitePoset::from_points({{1, 0}, {0, 0}, {0, 1}});
  CHECK(p.size() == 3);
  CHECK(p.rank(0) == 0);
}

TEST_CASE("from_relation validates and ranks") {
  // a diamond 0 < 1, 2 < 3
  std::vector<std::vector<bool>> leq = {
      {true, true, true, true}, {false, true, false, true}, {false, false, true, true}, {false, false, false, true}};
  const auto p = FinitePoset::from_relation(leq);
  CHECK(p.max_rank() == 2);
  CHECK(mobius_triangle(p) == BiPoly::monomial(1, 0, 0) - 2 * BiPoly::monomial(1, 0, 1) + BiPoly::monomial(1, 0, 2) +
                                  2 * BiPoly::monomial(1, 1, 1) - 2 * BiPoly::monomial(1, 1, 2) + BiPoly::monomial(1, 2, 2));
  auto bad = leq;
  bad[1][0] = true;  // antisymmetry fails
  CHECK_THROWS_AS(FinitePoset::from_relation(bad), std::invalid_argument);
  std::vector<std::vector<bool>> no_min = {{true, false}, {false, true}};
  CHECK_THROWS_AS(FinitePoset::from_relation(no_min), std::invalid_argument);
}

TEST_CASE("chains, Moebius and f-vectors against the oracle, size <= 6") {
  for (const auto& t : arbors_up_to(6)) {
    CAPTURE(t.encode());
    const FinitePoset p = build_poset(t);
    const auto pts = oracle::points(t);
    for (int q = 2; q <= 4; ++q) CHECK(chain_count(p, q) == oracle::multichains(pts, q));
    if (pts.size() <= 200) CHECK(mobius_triangle(p) == oracle::mobius(pts));
    UniPoly f;
    for (const auto& x : pts) f += pow(UniPoly{1, 1}, static_cast<unsigned>(oracle::nonzero(x)));
    CHECK(cubical_f_vector(p) == f);
  }
}

TEST_CASE("maximal chains of the linear pair") {
  const Arbor t = parse_arbor("(2 (2 (1 (1))))");
  CHECK(maximal_chain_count(build_poset(t)) == 21552);
  CHECK(maximal_chain_count(build_poset(reverse_linear(t))) == 20167);
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(build_poset(parse_arbor("(2 (2) (1) (1))"), 50), GuardError);
  CHECK_THROWS_AS(mobius_triangle(build_poset(parse_arbor("(2 (2) (1) (1))")), 100), GuardError);
}
