#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skbounds/rational.hpp"

namespace skbounds {

/// Subset of {1..m}; bit i-1 stands for vertex i.
using VertexMask = std::uint32_t;

inline constexpr int kMaxVertices = 20;

VertexMask mask_of(std::span<const int> vertices);
VertexMask mask_of(std::initializer_list<int> vertices);
std::vector<int> vertices_of(VertexMask mask);
int popcount(VertexMask mask);

/// "{1,2,4}"; the empty set prints as "{}".
std::string format_set(VertexMask mask);

using EdgeWeights = std::map<VertexMask, Rational>;

/// Vector indexed by the hyperedges of a source, 0 <= x(e) <= w(e).
class FractionalPacking {
public:
  FractionalPacking() = default;
  explicit FractionalPacking(EdgeWeights entries) : entries_(std::move(entries)) {}

  const EdgeWeights& entries() const { return entries_; }
  const Rational& at(VertexMask edge) const { return entries_.at(edge); }
  Rational total() const;

  friend bool operator==(const FractionalPacking&, const FractionalPacking&) = default;

private:
  EdgeWeights entries_;
};

/// Hypergraphical source on terminals {1..m}: every hyperedge e carries an
/// independent component of entropy w(e) > 0 observed by the terminals in e.
/// Zero-weight hyperedges are never stored.
class WeightedHypergraph {
public:
  /// Throws std::invalid_argument unless 2 <= m, CapExceeded if m > kMaxVertices.
  explicit WeightedHypergraph(int m);

  /// Adds weight to a hyperedge, summing into an existing entry.
  /// Throws std::invalid_argument for empty/out-of-range edges or weight <= 0.
  void add_edge(VertexMask edge, const Rational& weight);
  void add_edge(std::initializer_list<int> vertices, const Rational& weight) {
    add_edge(mask_of(vertices), weight);
  }

  int vertex_count() const { return m_; }
  VertexMask full_mask() const { return full_; }
  const EdgeWeights& edges() const { return weights_; }
  std::size_t edge_count() const { return weights_.size(); }

  /// w(e), zero for edges outside the support.
  Rational weight(VertexMask edge) const;

  /// Every hyperedge has at most two vertices.
  bool is_graphical() const;
  /// Every hyperedge has exactly two vertices.
  bool is_graph() const;
  bool has_singleton_edges() const;

  /// H(X_A) = sum of w(e) over hyperedges meeting A.
  Rational entropy(VertexMask subset) const;
  /// H(X_A | X_{A^c}) = sum of w(e) over hyperedges inside A.
  Rational conditional_entropy(VertexMask subset) const;
  /// H(X_M).
  Rational total_entropy() const;

  /// Source on (M, x). Entries of x must cover exactly this support and
  /// satisfy 0 <= x(e) <= w(e); zero entries drop out of the result.
  WeightedHypergraph restrict(const FractionalPacking& packing) const;

  /// The packing x = w.
  FractionalPacking full_packing() const { return FractionalPacking(weights_); }

  friend bool operator==(const WeightedHypergraph&, const WeightedHypergraph&) = default;

private:
  void check_subset(VertexMask subset) const;

  int m_ = 0;
  VertexMask full_ = 0;
  EdgeWeights weights_;
};

}  // namespace skbounds
