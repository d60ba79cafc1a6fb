#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arbor/arbor.hpp"
#include "oracles.hpp"

using namespace arbor;

TEST_CASE("parse and canonical encoding") {
  const Arbor t = parse_arbor("(2 (2) (1) (1))");
  CHECK(t.size() == 6);
  CHECK(t.vertex_count() == 4);
  CHECK(t.encode() == "(2 (1) (1) (2))");
  CHECK(parse_arbor("  (2(1)(2)(1)) ") == t);
  CHECK(canonicalize(t) == t);
  CHECK(parse_arbor(t.encode()).encode() == t.encode());
  CHECK_THROWS_AS(parse_arbor("(0)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_arbor("(1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_arbor("(1) (1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_arbor("()"), std::invalid_argument);
  CHECK_THROWS_AS(parse_arbor("(x)"), std::invalid_argument);
  CHECK_THROWS_AS(Arbor(0), std::invalid_argument);
}

TEST_CASE("enumeration against labeled-tree brute force") {
  CHECK(enumerate_arbors(3).size() == 5);
  for (int n = 1; n <= 7; ++n) {
    std::set<std::string> got;
    for (const auto& t : enumerate_arbors(n)) {
      CHECK(t.size() == n);
      got.insert(t.encode());
    }
    CHECK(got.size() == enumerate_arbors(n).size());
    CHECK(got == oracle::arbor_encodings(n));
  }
}

TEST_CASE("linear arbors and reversal") {
  const Arbor t = parse_arbor("(2 (2 (1 (1))))");
  CHECK(t.is_linear());
  CHECK(linear_multiplicities(t) == std::vector<int>{2, 2, 1, 1});
  CHECK(reverse_linear(t).encode() == "(1 (1 (2 (2))))");
  CHECK(reverse_linear(reverse_linear(t)) == t);
  CHECK(linear_from_multiplicities({3, 1}) == parse_arbor("(3 (1))"));
  CHECK(!parse_arbor("(1 (1) (1))").is_linear());
  CHECK_THROWS_AS(reverse_linear(parse_arbor("(1 (1) (1))")), std::invalid_argument);
}

TEST_CASE("named families") {
  CHECK(type_a(3) == parse_arbor("(1 (1 (1)))"));
  CHECK(type_b(3) == parse_arbor("(3)"));
  CHECK(hochschild(4) == parse_arbor("(1 (1) (1) (1))"));
  CHECK_THROWS_AS(halo(1), std::invalid_argument);
  for (int n = 1; n <= 6; ++n) {
    CHECK(type_a(n).size() == n);
    if (n >= 2) {
      CHECK(halo(n).size() == n);
      CHECK(halo_rev(n).size() == n);
    }
    CHECK(hochschild(n).size() == n);
  }
}

TEST_CASE("vertex addresses") {
  const Arbor t = parse_arbor("(1 (1) (1 (1)))");
  const auto addrs = vertex_addresses(t);
  REQUIRE(addrs.size() == 4);
  CHECK(addrs.front().path.empty());
  for (const auto& a : addrs) CHECK(subtree_at(t, a).size() >= 1);
  // "(1 (1))" sorts before "(1)"
  CHECK(subtree_at(t, VertexAddress{{0}}).size() == 2);
  CHECK(subtree_at(t, VertexAddress{{1}}).size() == 1);
  CHECK_THROWS_AS(subtree_at(t, VertexAddress{{5}}), std::out_of_range);
}
