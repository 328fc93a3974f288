#pragma once

#include <functional>
#include <string>
#include <vector>

#include "skbounds/hypergraph.hpp"
#include "skbounds/rational.hpp"

namespace skbounds {

/// Largest m for which partitions of {1..m} are enumerated (Bell(12) = 4213597).
inline constexpr int kPartitionCap = 12;

/// Set partition of {1..m}; cells are kept sorted by their smallest vertex.
class Partition {
public:
  Partition() = default;

  /// Validates disjointness, nonemptiness and coverage of {1..m}.
  Partition(std::vector<VertexMask> cells, int m);

  /// {{1},{2},...,{m}}
  static Partition singleton(int m);

  const std::vector<VertexMask>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  int vertex_count() const { return m_; }

  /// Every cell of *this lies inside some cell of `coarser`.
  bool refines(const Partition& coarser) const;

  /// "{{1,2},{3},{4}}"
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::vector<VertexMask> cells_;
  int m_ = 0;
};

/// Calls `visit` once for every partition of {1..m} with at least two cells,
/// in restricted-growth-string order. Throws CapExceeded above kPartitionCap.
void for_each_partition(int m, const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_partitions(int m);

/// I_P(X_M) = (sum_{A in P} H(X_A) - H(X_M)) / (|P| - 1).
Rational partition_mi(const WeightedHypergraph& hg, const Partition& partition);

struct MmiResult {
  Rational value;                      // I(X_M)
  Partition fundamental;               // finest minimizer P*
  std::vector<Partition> all_minimizers;
};

/// Exhaustive minimum of I_P over all partitions with >= 2 cells.
/// Throws InvariantViolation if the finest minimizer is not unique or does not
/// refine every other minimizer.
MmiResult mmi(const WeightedHypergraph& hg);

/// P* is the singleton partition.
bool is_type_s(const WeightedHypergraph& hg);

struct CrossEdges {
  std::vector<VertexMask> edges;  // ascending mask order
  Rational weight;
};

/// Hyperedges not contained in any single cell of the partition.
CrossEdges cross_edges(const WeightedHypergraph& hg, const Partition& partition);

}  // namespace skbounds
