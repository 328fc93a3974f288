#include "skbounds/partition.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "skbounds/errors.hpp"

namespace skbounds {

namespace {

using CellArray = std::array<VertexMask, kPartitionCap>;

void check_cap(int m) {
  if (m < 2) throw std::invalid_argument("partitions need m >= 2, got " + std::to_string(m));
  if (m > kPartitionCap) {
    throw CapExceeded("m = " + std::to_string(m) + " exceeds the partition enumeration cap " +
                      std::to_string(kPartitionCap));
  }
}

// Restricted growth strings: vertex i joins one of the blocks opened by
// vertices < i, or opens the next one. Blocks come out ordered by their
// smallest vertex.
template <class Visit>
void assign_vertex(int vertex, int m, int blocks, CellArray& cells, Visit& visit) {
  if (vertex == m) {
    if (blocks >= 2) visit(cells, blocks);
    return;
  }
  const VertexMask bit = VertexMask{1} << vertex;
  for (int b = 0; b <= blocks && b < m; ++b) {
    cells[b] |= bit;
    assign_vertex(vertex + 1, m, std::max(blocks, b + 1), cells, visit);
    cells[b] &= ~bit;
  }
}

template <class Visit>
void visit_rgs(int m, Visit&& visit) {
  CellArray cells{};
  assign_vertex(0, m, 0, cells, visit);
}

Partition make_partition(const CellArray& cells, int count, int m) {
  return Partition(std::vector<VertexMask>(cells.begin(), cells.begin() + count), m);
}

// Per cell count k, the minimum of sum_{A in P} H(X_A) and every partition
// attaining it. For fixed k this sum orders partitions exactly like I_P.
template <class Sum>
struct CellCountBest {
  std::optional<Sum> sum;
  std::vector<std::vector<VertexMask>> partitions;
};

template <class Sum>
std::vector<CellCountBest<Sum>> scan_partitions(int m, const std::vector<Sum>& entropy_table) {
  std::vector<CellCountBest<Sum>> best(static_cast<std::size_t>(m) + 1);
  visit_rgs(m, [&](const CellArray& cells, int count) {
    Sum sum{};
    for (int i = 0; i < count; ++i) sum += entropy_table[cells[i]];
    auto& slot = best[count];
    if (!slot.sum || sum < *slot.sum) {
      slot.sum = sum;
      slot.partitions.clear();
    } else if (sum != *slot.sum) {
      return;
    }
    slot.partitions.emplace_back(cells.begin(), cells.begin() + count);
  });
  return best;
}

// Scaled integer entropies: H(X_A) * L where L is the lcm of all weight
// denominators. Empty when some value would not fit in an int64 sum.
struct ScaledEntropies {
  std::vector<long long> table;
  long long total = 0;
  long long scale = 1;
};

std::optional<ScaledEntropies> scaled_entropies(const WeightedHypergraph& hg) {
  constexpr __int128 kLimit = __int128{1} << 61;
  const int m = hg.vertex_count();
  __int128 scale = 1;
  std::vector<std::pair<VertexMask, std::pair<long, long>>> parts;
  for (const auto& [edge, w] : hg.edges()) {
    const auto p = w.small_parts();
    if (!p) return std::nullopt;
    parts.emplace_back(edge, *p);
    const __int128 g = std::gcd(static_cast<long long>(scale), static_cast<long long>(p->second));
    scale = scale / g * p->second;
    if (scale > kLimit) return std::nullopt;
  }
  ScaledEntropies out;
  out.scale = static_cast<long long>(scale);
  // contained[B] = sum of scaled w(e) over e inside B (subset-sum transform).
  std::vector<__int128> contained(std::size_t{1} << m, 0);
  __int128 total = 0;
  for (const auto& [edge, p] : parts) {
    const __int128 scaled = static_cast<__int128>(p.first) * (scale / p.second);
    contained[edge] += scaled;
    total += scaled;
    if (total * (m + 1) > kLimit) return std::nullopt;
  }
  for (int bit = 0; bit < m; ++bit) {
    for (std::size_t mask = 0; mask < contained.size(); ++mask) {
      if (mask & (std::size_t{1} << bit)) contained[mask] += contained[mask ^ (std::size_t{1} << bit)];
    }
  }
  const auto full = static_cast<std::size_t>(hg.full_mask());
  out.table.resize(contained.size());
  for (std::size_t mask = 0; mask < contained.size(); ++mask) {
    out.table[mask] = static_cast<long long>(total - contained[full & ~mask]);
  }
  out.total = static_cast<long long>(total);
  return out;
}

struct Candidate {
  Rational value;
  int cells;
  const std::vector<std::vector<VertexMask>>* partitions;
};

MmiResult finish(int m, std::vector<Candidate> candidates) {
  Rational best = candidates.front().value;
  for (const auto& c : candidates) best = std::min(best, c.value);

  MmiResult result{best, Partition::singleton(m), {}};
  int finest_cells = 0;
  int finest_count = 0;
  for (const auto& c : candidates) {
    if (c.value != best) continue;
    for (const auto& cells : *c.partitions) result.all_minimizers.emplace_back(cells, m);
    if (c.cells > finest_cells) {
      finest_cells = c.cells;
      finest_count = static_cast<int>(c.partitions->size());
    }
  }
  if (finest_count != 1) {
    throw InvariantViolation("finest minimizer is not unique: " + std::to_string(finest_count) +
                             " minimizers with " + std::to_string(finest_cells) + " cells");
  }
  for (const auto& p : result.all_minimizers) {
    if (static_cast<int>(p.size()) == finest_cells) result.fundamental = p;
  }
  for (const auto& p : result.all_minimizers) {
    if (!result.fundamental.refines(p)) {
      throw InvariantViolation("minimizer " + p.to_string() + " is not a coarsening of " +
                               result.fundamental.to_string());
    }
  }
  return result;
}

}  // namespace

Partition::Partition(std::vector<VertexMask> cells, int m) : cells_(std::move(cells)), m_(m) {
  if (m < 1 || m > kMaxVertices) throw std::invalid_argument("partition over invalid m = " + std::to_string(m));
  const auto full = static_cast<VertexMask>((std::uint64_t{1} << m) - 1);
  VertexMask seen = 0;
  for (VertexMask cell : cells_) {
    if (cell == 0) throw std::invalid_argument("partition has an empty cell");
    if ((cell & ~full) != 0) throw std::invalid_argument("cell " + format_set(cell) + " leaves {1.." + std::to_string(m) + "}");
    if ((cell & seen) != 0) throw std::invalid_argument("cell " + format_set(cell) + " overlaps another cell");
    seen |= cell;
  }
  if (seen != full) throw std::invalid_argument("cells do not cover {1.." + std::to_string(m) + "}");
  // Lowest set bit is the smallest vertex.
  std::sort(cells_.begin(), cells_.end(), [](VertexMask a, VertexMask b) { return (a & -a) < (b & -b); });
}

Partition Partition::singleton(int m) {
  std::vector<VertexMask> cells;
  for (int i = 0; i < m; ++i) cells.push_back(VertexMask{1} << i);
  return Partition(std::move(cells), m);
}

bool Partition::refines(const Partition& coarser) const {
  if (m_ != coarser.m_) return false;
  return std::all_of(cells_.begin(), cells_.end(), [&](VertexMask cell) {
    return std::any_of(coarser.cells_.begin(), coarser.cells_.end(),
                       [cell](VertexMask outer) { return (cell & ~outer) == 0; });
  });
}

std::string Partition::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (i) out += ',';
    out += format_set(cells_[i]);
  }
  return out + "}";
}

void for_each_partition(int m, const std::function<void(const Partition&)>& visit) {
  check_cap(m);
  visit_rgs(m, [&](const CellArray& cells, int count) { visit(make_partition(cells, count, m)); });
}

std::vector<Partition> enumerate_partitions(int m) {
  std::vector<Partition> out;
  for_each_partition(m, [&](const Partition& p) { out.push_back(p); });
  return out;
}

Rational partition_mi(const WeightedHypergraph& hg, const Partition& partition) {
  if (partition.vertex_count() != hg.vertex_count()) {
    throw std::invalid_argument("partition is over " + std::to_string(partition.vertex_count()) +
                                " vertices, source has " + std::to_string(hg.vertex_count()));
  }
  if (partition.size() < 2) throw std::invalid_argument("I_P needs a partition with at least 2 cells");
  Rational sum;
  for (VertexMask cell : partition.cells()) sum += hg.entropy(cell);
  sum -= hg.total_entropy();
  return sum / Rational(static_cast<long>(partition.size()) - 1);
}

MmiResult mmi(const WeightedHypergraph& hg) {
  const int m = hg.vertex_count();
  check_cap(m);

  if (auto scaled = scaled_entropies(hg)) {
    const auto best = scan_partitions<long long>(m, scaled->table);
    std::vector<Candidate> candidates;
    for (int k = 2; k <= m; ++k) {
      const Rational value = Rational(*best[k].sum - scaled->total, scaled->scale) / Rational(k - 1);
      candidates.push_back({value, k, &best[k].partitions});
    }
    return finish(m, std::move(candidates));
  }

  std::vector<Rational> table(std::size_t{1} << m);
  for (std::size_t mask = 0; mask < table.size(); ++mask) table[mask] = hg.entropy(static_cast<VertexMask>(mask));
  const Rational total = hg.total_entropy();
  const auto best = scan_partitions<Rational>(m, table);
  std::vector<Candidate> candidates;
  for (int k = 2; k <= m; ++k) {
    candidates.push_back({(*best[k].sum - total) / Rational(k - 1), k, &best[k].partitions});
  }
  return finish(m, std::move(candidates));
}

bool is_type_s(const WeightedHypergraph& hg) {
  return static_cast<int>(mmi(hg).fundamental.size()) == hg.vertex_count();
}

CrossEdges cross_edges(const WeightedHypergraph& hg, const Partition& partition) {
  if (partition.vertex_count() != hg.vertex_count()) {
    throw std::invalid_argument("partition and source disagree on m");
  }
  CrossEdges out;
  for (const auto& [edge, w] : hg.edges()) {
    const bool inside = std::any_of(partition.cells().begin(), partition.cells().end(),
                                    [edge](VertexMask cell) { return (edge & ~cell) == 0; });
    if (!inside) {
      out.edges.push_back(edge);
      out.weight += w;
    }
  }
  return out;
}

}  // namespace skbounds
