#include <random>
#include <set>

#include "doctest.h"
#include "skbounds/errors.hpp"
#include "skbounds/partition.hpp"
#include "support.hpp"

using namespace skbounds;
using namespace skbounds::testing;

TEST_SUITE_BEGIN("partition");

TEST_CASE("enumeration yields Bell(m) - 1 distinct partitions") {
  const auto bell = oracle::bell_numbers(9);
  CHECK(bell[3] == 5);
  CHECK(bell[4] == 15);
  CHECK(enumerate_partitions(2).size() == 1);
  CHECK(enumerate_partitions(2).front().to_string() == "{{1},{2}}");
  CHECK(enumerate_partitions(3).size() == 4);
  CHECK(enumerate_partitions(4).size() == 14);
  for (int m = 2; m <= 9; ++m) {
    CAPTURE(m);
    std::set<std::string> seen;
    std::size_t count = 0;
    for_each_partition(m, [&](const Partition& p) {
      ++count;
      CHECK(p.size() >= 2);
      seen.insert(p.to_string());
    });
    CHECK(count == bell[m] - 1);
    CHECK(seen.size() == count);
  }
  CHECK_THROWS_AS(enumerate_partitions(13), CapExceeded);
  CHECK_THROWS_AS(enumerate_partitions(1), std::invalid_argument);
}

TEST_CASE("partition construction validates and canonicalizes") {
  const Partition p({mask_of({3}), mask_of({4}), mask_of({1, 2})}, 4);
  CHECK(p.to_string() == "{{1,2},{3},{4}}");
  CHECK(Partition::singleton(3).to_string() == "{{1},{2},{3}}");
  CHECK_THROWS_AS(Partition({mask_of({1, 2}), mask_of({2, 3})}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Partition({mask_of({1, 2})}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Partition({mask_of({1, 2}), 0, mask_of({3})}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Partition({mask_of({1, 2}), mask_of({3, 4})}, 3), std::invalid_argument);
  CHECK(Partition::singleton(4).refines(p));
  CHECK_FALSE(p.refines(Partition::singleton(4)));
}

TEST_CASE("partition_mi examples") {
  CHECK(partition_mi(example1(), Partition({mask_of({1, 2}), mask_of({3}), mask_of({4})}, 4)) == Rational(3, 2));
  CHECK(partition_mi(example2(), Partition({mask_of({1, 2, 3}), mask_of({4})}, 4)) == Rational(1));
  CHECK(partition_mi(two_terminal(Rational(5, 3)), Partition::singleton(2)) == Rational(5, 3));
  CHECK_THROWS_AS(partition_mi(example1(), Partition({mask_of({1, 2, 3, 4})}, 4)), std::invalid_argument);
  CHECK_THROWS_AS(partition_mi(example1(), Partition::singleton(3)), std::invalid_argument);
}

TEST_CASE("mmi on the two reference instances") {
  const auto r1 = mmi(example1());
  CHECK(r1.value == Rational(3, 2));
  CHECK(r1.fundamental.to_string() == "{{1,2},{3},{4}}");

  const auto r2 = mmi(example2());
  CHECK(r2.value == Rational(1));
  CHECK(r2.fundamental.to_string() == "{{1,2,3},{4}}");
}

TEST_CASE("path 1-2-3: three minimizers, the finest wins") {
  const auto brute = oracle::brute_mmi(path3());
  CHECK(brute.value == Rational(1));
  CHECK(brute.minimizers == 3);

  const auto r = mmi(path3());
  CHECK(r.value == Rational(1));
  CHECK(r.fundamental.to_string() == "{{1},{2},{3}}");
  REQUIRE(r.all_minimizers.size() == 3);
  std::set<std::string> names;
  for (const auto& p : r.all_minimizers) names.insert(p.to_string());
  CHECK(names == std::set<std::string>{"{{1},{2},{3}}", "{{1,2},{3}}", "{{1},{2,3}}"});
  CHECK(is_type_s(path3()));
}

TEST_CASE("Type S classification") {
  CHECK(is_type_s(triangle()));
  CHECK(mmi(triangle()).value == Rational(3, 2));
  CHECK(oracle::brute_mmi(triangle()).value == Rational(3, 2));
  CHECK_FALSE(is_type_s(example1()));
  CHECK_FALSE(is_type_s(example2()));
}

TEST_CASE("cross edges") {
  const auto c2 = cross_edges(example2(), Partition({mask_of({1, 2, 3}), mask_of({4})}, 4));
  CHECK(c2.edges == std::vector<VertexMask>{mask_of({3, 4})});
  CHECK(c2.weight == Rational(1));

  const auto c1 = cross_edges(example1(), Partition({mask_of({1, 2}), mask_of({3}), mask_of({4})}, 4));
  CHECK(c1.edges == std::vector<VertexMask>{mask_of({2, 3}), mask_of({1, 4}), mask_of({3, 4})});
  CHECK(c1.weight == Rational(3));

  WeightedHypergraph hg(3);
  hg.add_edge({1, 2, 3}, 2);
  hg.add_edge({2}, 5);
  hg.add_edge({1, 3}, Rational(1, 2));
  CHECK(cross_edges(hg, Partition::singleton(3)).weight == Rational(5, 2));
}

TEST_CASE("graphical sources: I_P equals the cross-edge form on every partition") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 2 + trial % 5;
    const auto hg = random_graph(rng, m, 9);
    for_each_partition(m, [&](const Partition& p) {
      const auto cross = cross_edges(hg, p);
      CHECK(partition_mi(hg, p) == cross.weight / Rational(static_cast<long>(p.size()) - 1));
    });
  }
}

TEST_CASE("mmi is the minimum and matches the brute-force oracle") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + trial % 4;
    const auto hg = random_hypergraph(rng, m, 8);
    const auto r = mmi(hg);
    const auto brute = oracle::brute_mmi(hg);
    CHECK(r.value == brute.value);
    CHECK(r.fundamental.to_string() == brute.finest);
    CHECK(r.all_minimizers.size() == brute.minimizers);
    for_each_partition(m, [&](const Partition& p) { CHECK(r.value <= partition_mi(hg, p)); });
    for (const auto& p : r.all_minimizers) {
      CHECK(partition_mi(hg, p) == r.value);
      CHECK(r.fundamental.refines(p));
    }
  }
}

TEST_CASE("scaling weights scales I and keeps P*") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto hg = random_hypergraph(rng, 3 + trial % 4, 8);
    const Rational c = random_weight(rng);
    WeightedHypergraph scaled(hg.vertex_count());
    for (const auto& [e, w] : hg.edges()) scaled.add_edge(e, w * c);
    const auto a = mmi(hg);
    const auto b = mmi(scaled);
    CHECK(b.value == a.value * c);
    CHECK(b.fundamental == a.fundamental);
  }
}

TEST_CASE("removing randomness never raises I") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto hg = random_hypergraph(rng, 3 + trial % 3, 7);
    EdgeWeights x;
    std::uniform_int_distribution<long> keep(0, 4);
    for (const auto& [e, w] : hg.edges()) x[e] = w * Rational(keep(rng), 4);
    CHECK(mmi(hg.restrict(FractionalPacking(x))).value <= mmi(hg).value);
  }
}

TEST_CASE("two terminals: I equals the shared edge weight") {
  CHECK(mmi(two_terminal(Rational(5, 3))).value == Rational(5, 3));
  WeightedHypergraph hg(2);
  hg.add_edge({1, 2}, 2);
  hg.add_edge({1}, 7);
  CHECK(mmi(hg).value == Rational(2));
}

TEST_CASE("empty support: I = 0 and the singleton partition is finest") {
  WeightedHypergraph hg(4);
  const auto r = mmi(hg);
  CHECK(r.value == Rational(0));
  CHECK(r.fundamental == Partition::singleton(4));
  CHECK(r.all_minimizers.size() == 14);
}

TEST_CASE("large weights take the exact rational path") {
  WeightedHypergraph small(4), big(4);
  const Rational huge = Rational::parse("123456789012345678901234567890/7");
  const auto base = example1();
  for (const auto& [e, w] : base.edges()) {
    small.add_edge(e, w);
    big.add_edge(e, w * huge);
  }
  const auto a = mmi(small);
  const auto b = mmi(big);
  CHECK(b.value == a.value * huge);
  CHECK(b.fundamental == a.fundamental);
}

TEST_CASE("mmi refuses m above the enumeration cap") {
  WeightedHypergraph hg(13);
  hg.add_edge({1, 2}, 1);
  CHECK_THROWS_AS(mmi(hg), CapExceeded);
}

TEST_SUITE_END();
