#pragma once

// Shared fixtures, random corpus and an independent brute-force oracle for the
// test binaries. Nothing here calls into the partition engine.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "skbounds/hypergraph.hpp"
#include "skbounds/rational.hpp"

namespace skbounds::testing {

inline Rational q(const char* text) { return Rational::parse(text); }

inline WeightedHypergraph example1() {
  WeightedHypergraph hg(4);
  hg.add_edge({1, 4}, 1);
  hg.add_edge({2, 3}, 1);
  hg.add_edge({3, 4}, 1);
  hg.add_edge({1, 2}, 2);
  return hg;
}

inline WeightedHypergraph example2() {
  WeightedHypergraph hg(4);
  hg.add_edge({1, 2}, 1);
  hg.add_edge({1, 3}, 1);
  hg.add_edge({2, 3}, 1);
  hg.add_edge({3, 4}, 1);
  return hg;
}

inline WeightedHypergraph triangle() {
  WeightedHypergraph hg(3);
  hg.add_edge({1, 2}, 1);
  hg.add_edge({1, 3}, 1);
  hg.add_edge({2, 3}, 1);
  return hg;
}

inline WeightedHypergraph path3() {
  WeightedHypergraph hg(3);
  hg.add_edge({1, 2}, 1);
  hg.add_edge({2, 3}, 1);
  return hg;
}

inline WeightedHypergraph two_terminal(const Rational& weight) {
  WeightedHypergraph hg(2);
  hg.add_edge({1, 2}, weight);
  return hg;
}

inline Rational random_weight(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(1, 6);
  std::uniform_int_distribution<long> den(1, 4);
  return Rational(num(rng), den(rng));
}

/// Random hyperedges on m vertices: sizes >= 2, with an occasional singleton
/// when `allow_singletons` is set.
inline WeightedHypergraph random_hypergraph(std::mt19937& rng, int m, int max_edges, bool allow_singletons = true) {
  WeightedHypergraph hg(m);
  std::uniform_int_distribution<int> edge_count(1, max_edges);
  std::uniform_int_distribution<VertexMask> subset(1, (VertexMask{1} << m) - 1);
  std::bernoulli_distribution singleton(0.1);
  const int edges = edge_count(rng);
  for (int k = 0; k < edges; ++k) {
    VertexMask e = subset(rng);
    if (popcount(e) == 1 && !(allow_singletons && singleton(rng))) {
      --k;
      continue;
    }
    hg.add_edge(e, random_weight(rng));
  }
  return hg;
}

/// Random simple graph: every edge has exactly two vertices.
inline WeightedHypergraph random_graph(std::mt19937& rng, int m, int max_edges) {
  WeightedHypergraph hg(m);
  std::uniform_int_distribution<int> edge_count(1, max_edges);
  std::uniform_int_distribution<int> vertex(1, m);
  const int edges = edge_count(rng);
  for (int k = 0; k < edges; ++k) {
    const int a = vertex(rng);
    const int b = vertex(rng);
    if (a == b) {
      --k;
      continue;
    }
    hg.add_edge({a, b}, random_weight(rng));
  }
  return hg;
}

/// Fixed-seed corpus of general hypergraphs, m in 3..7, at most 10 edges.
inline std::vector<WeightedHypergraph> random_corpus(std::size_t count, unsigned seed = 20161016U) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> m_dist(3, 7);
  std::vector<WeightedHypergraph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_hypergraph(rng, m_dist(rng), 10));
  return out;
}

inline std::vector<WeightedHypergraph> random_graph_corpus(std::size_t count, unsigned seed = 4242U) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> m_dist(3, 7);
  std::vector<WeightedHypergraph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_graph(rng, m_dist(rng), 10));
  return out;
}

namespace oracle {

using Block = std::vector<int>;
using SetPartition = std::vector<Block>;

/// All set partitions of {1..m} (including the one-block partition), built by
/// inserting each vertex into an existing block or a new one.
inline std::vector<SetPartition> all_set_partitions(int m) {
  std::vector<SetPartition> out{{}};
  for (int v = 1; v <= m; ++v) {
    std::vector<SetPartition> next;
    for (const auto& p : out) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        auto copy = p;
        copy[b].push_back(v);
        next.push_back(std::move(copy));
      }
      auto copy = p;
      copy.push_back({v});
      next.push_back(std::move(copy));
    }
    out = std::move(next);
  }
  return out;
}

/// Bell numbers by the Bell triangle.
inline std::vector<unsigned long long> bell_numbers(int up_to) {
  std::vector<unsigned long long> bell{1};
  std::vector<unsigned long long> row{1};
  for (int n = 1; n <= up_to; ++n) {
    std::vector<unsigned long long> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    bell.push_back(row.back());
    row = std::move(next);
  }
  return bell;
}

/// H(X_A) straight from the edge list: weights of edges sharing a vertex with A.
inline Rational entropy(const WeightedHypergraph& hg, const Block& block) {
  const std::set<int> a(block.begin(), block.end());
  Rational sum;
  for (const auto& [edge, w] : hg.edges()) {
    const auto vs = vertices_of(edge);
    if (std::any_of(vs.begin(), vs.end(), [&](int v) { return a.count(v) > 0; })) sum += w;
  }
  return sum;
}

inline Rational partition_value(const WeightedHypergraph& hg, const SetPartition& p) {
  Block everything;
  for (int v = 1; v <= hg.vertex_count(); ++v) everything.push_back(v);
  Rational sum;
  for (const auto& block : p) sum += entropy(hg, block);
  sum -= entropy(hg, everything);
  return sum / Rational(static_cast<long>(p.size()) - 1);
}

inline std::string render(SetPartition p) {
  for (auto& b : p) std::sort(b.begin(), b.end());
  std::sort(p.begin(), p.end());
  std::string out = "{";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += '{';
    for (std::size_t j = 0; j < p[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(p[i][j]);
    }
    out += '}';
  }
  return out + "}";
}

struct BruteMmi {
  Rational value;
  std::string finest;
  std::size_t minimizers = 0;
};

inline BruteMmi brute_mmi(const WeightedHypergraph& hg) {
  BruteMmi best;
  bool have = false;
  std::size_t finest_cells = 0;
  for (const auto& p : all_set_partitions(hg.vertex_count())) {
    if (p.size() < 2) continue;
    const Rational v = partition_value(hg, p);
    if (!have || v < best.value) {
      best = {v, render(p), 1};
      finest_cells = p.size();
      have = true;
    } else if (v == best.value) {
      ++best.minimizers;
      if (p.size() > finest_cells) {
        finest_cells = p.size();
        best.finest = render(p);
      }
    }
  }
  return best;
}

}  // namespace oracle

}  // namespace skbounds::testing
