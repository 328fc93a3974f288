#include <random>

#include "doctest.h"
#include "skbounds/errors.hpp"
#include "support.hpp"

using namespace skbounds;
using namespace skbounds::testing;

TEST_SUITE_BEGIN("hypergraph");

TEST_CASE("entropy on the four-terminal example") {
  const auto hg = example1();
  CHECK(hg.entropy(mask_of({1, 2, 3, 4})) == Rational(5));
  CHECK(hg.entropy(0) == Rational(0));
  // {2,3} and {3,4} meet vertex 3.
  CHECK(hg.entropy(mask_of({3})) == Rational(2));
  CHECK(hg.total_entropy() == Rational(5));
}

TEST_CASE("conditional entropy sums edges inside the subset") {
  const auto hg = example1();
  CHECK(hg.conditional_entropy(mask_of({1, 2})) == Rational(2));
  CHECK(hg.conditional_entropy(hg.full_mask()) == hg.total_entropy());
  for (int i = 1; i <= 4; ++i) CHECK(hg.conditional_entropy(mask_of({i})) == Rational(0));
}

TEST_CASE("out-of-range subsets and bad edges are rejected") {
  auto hg = example1();
  CHECK_THROWS_AS(hg.entropy(mask_of({5})), std::out_of_range);
  CHECK_THROWS_AS(hg.conditional_entropy(mask_of({1, 6})), std::out_of_range);
  CHECK_THROWS_AS(hg.add_edge({1, 5}, 1), std::invalid_argument);
  CHECK_THROWS_AS(hg.add_edge(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(hg.add_edge({1, 2}, 0), std::invalid_argument);
  CHECK_THROWS_AS(hg.add_edge({1, 2}, Rational(-1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(WeightedHypergraph(1), std::invalid_argument);
  CHECK_THROWS_AS(WeightedHypergraph(21), CapExceeded);
  CHECK_NOTHROW(WeightedHypergraph(20));
}

TEST_CASE("duplicate edges merge and singletons are carried") {
  WeightedHypergraph hg(3);
  hg.add_edge({1, 2}, 1);
  hg.add_edge({2, 1}, Rational(1, 2));
  hg.add_edge({3}, 2);
  CHECK(hg.edge_count() == 2);
  CHECK(hg.weight(mask_of({1, 2})) == Rational(3, 2));
  CHECK(hg.is_graphical());
  CHECK_FALSE(hg.is_graph());
  CHECK(hg.has_singleton_edges());
  CHECK(hg.entropy(mask_of({3})) == Rational(2));
  CHECK(hg.conditional_entropy(mask_of({3})) == Rational(2));
}

TEST_CASE("restrict") {
  const auto hg = example1();

  SUBCASE("x = w is the identity") { CHECK(hg.restrict(hg.full_packing()) == hg); }

  SUBCASE("fractional removal on {1,2}") {
    auto x = hg.full_packing().entries();
    x[mask_of({1, 2})] = Rational(3, 2);
    const auto reduced = hg.restrict(FractionalPacking(x));
    CHECK(reduced.total_entropy() == Rational(9, 2));
    CHECK(reduced.weight(mask_of({1, 2})) == Rational(3, 2));
  }

  SUBCASE("zero packing empties the support") {
    EdgeWeights x;
    for (const auto& [e, w] : hg.edges()) x[e] = 0;
    const auto reduced = hg.restrict(FractionalPacking(x));
    CHECK(reduced.edge_count() == 0);
    CHECK(reduced.total_entropy() == Rational(0));
  }

  SUBCASE("malformed packings") {
    auto x = hg.full_packing().entries();
    x[mask_of({1, 2})] = 3;
    CHECK_THROWS_AS(hg.restrict(FractionalPacking(x)), std::invalid_argument);
    x[mask_of({1, 2})] = -1;
    CHECK_THROWS_AS(hg.restrict(FractionalPacking(x)), std::invalid_argument);
    x.erase(mask_of({1, 2}));
    CHECK_THROWS_AS(hg.restrict(FractionalPacking(x)), std::invalid_argument);
    x[mask_of({1, 3})] = 1;
    CHECK_THROWS_AS(hg.restrict(FractionalPacking(x)), std::invalid_argument);
  }
}

TEST_CASE("entropy is monotone and submodular with the complement identity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + trial % 5;
    const auto hg = random_hypergraph(rng, m, 8);
    const VertexMask full = hg.full_mask();
    for (VertexMask a = 0; a <= full; ++a) {
      CHECK(hg.conditional_entropy(a) == hg.total_entropy() - hg.entropy(full & ~a));
      for (VertexMask b = 0; b <= full; ++b) {
        if ((a & ~b) == 0) CHECK(hg.entropy(a) <= hg.entropy(b));
        CHECK(hg.entropy(a) + hg.entropy(b) >= hg.entropy(a | b) + hg.entropy(a & b));
      }
    }
  }
}

TEST_CASE("set helpers") {
  CHECK(format_set(mask_of({3, 1})) == "{1,3}");
  CHECK(format_set(0) == "{}");
  CHECK(vertices_of(mask_of({2, 5})) == std::vector<int>{2, 5});
  CHECK(popcount(mask_of({1, 2, 7})) == 3);
}

TEST_SUITE_END();
