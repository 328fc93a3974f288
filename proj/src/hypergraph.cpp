#include "skbounds/hypergraph.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "skbounds/errors.hpp"

namespace skbounds {

VertexMask mask_of(std::span<const int> vertices) {
  VertexMask mask = 0;
  for (int v : vertices) {
    if (v < 1 || v > kMaxVertices) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " outside 1.." +
                                  std::to_string(kMaxVertices));
    }
    mask |= VertexMask{1} << (v - 1);
  }
  return mask;
}

VertexMask mask_of(std::initializer_list<int> vertices) {
  return mask_of(std::span<const int>(vertices.begin(), vertices.size()));
}

std::vector<int> vertices_of(VertexMask mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) out.push_back(i + 1);
  }
  return out;
}

int popcount(VertexMask mask) { return std::popcount(mask); }

std::string format_set(VertexMask mask) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : vertices_of(mask)) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

Rational FractionalPacking::total() const {
  Rational sum;
  for (const auto& [edge, value] : entries_) sum += value;
  return sum;
}

WeightedHypergraph::WeightedHypergraph(int m) : m_(m) {
  if (m < 2) throw std::invalid_argument("a source needs at least 2 terminals, got " + std::to_string(m));
  if (m > kMaxVertices) {
    throw CapExceeded("m = " + std::to_string(m) + " exceeds the vertex cap " + std::to_string(kMaxVertices));
  }
  full_ = static_cast<VertexMask>((std::uint64_t{1} << m) - 1);
}

void WeightedHypergraph::check_subset(VertexMask subset) const {
  if ((subset & ~full_) != 0) {
    throw std::out_of_range("subset " + format_set(subset) + " is not inside {1.." + std::to_string(m_) + "}");
  }
}

void WeightedHypergraph::add_edge(VertexMask edge, const Rational& weight) {
  if (edge == 0) throw std::invalid_argument("empty hyperedge");
  if ((edge & ~full_) != 0) {
    throw std::invalid_argument("hyperedge " + format_set(edge) + " has a vertex outside 1.." + std::to_string(m_));
  }
  if (weight.sign() <= 0) {
    throw std::invalid_argument("hyperedge " + format_set(edge) + " has nonpositive weight " + weight.to_string());
  }
  weights_[edge] += weight;
}

Rational WeightedHypergraph::weight(VertexMask edge) const {
  const auto it = weights_.find(edge);
  return it == weights_.end() ? Rational{} : it->second;
}

bool WeightedHypergraph::is_graphical() const {
  for (const auto& [edge, w] : weights_) {
    if (popcount(edge) > 2) return false;
  }
  return true;
}

bool WeightedHypergraph::is_graph() const {
  for (const auto& [edge, w] : weights_) {
    if (popcount(edge) != 2) return false;
  }
  return true;
}

bool WeightedHypergraph::has_singleton_edges() const {
  for (const auto& [edge, w] : weights_) {
    if (popcount(edge) == 1) return true;
  }
  return false;
}

Rational WeightedHypergraph::entropy(VertexMask subset) const {
  check_subset(subset);
  Rational sum;
  for (const auto& [edge, w] : weights_) {
    if ((edge & subset) != 0) sum += w;
  }
  return sum;
}

Rational WeightedHypergraph::conditional_entropy(VertexMask subset) const {
  check_subset(subset);
  Rational sum;
  for (const auto& [edge, w] : weights_) {
    if ((edge & ~subset) == 0) sum += w;
  }
  return sum;
}

Rational WeightedHypergraph::total_entropy() const {
  Rational sum;
  for (const auto& [edge, w] : weights_) sum += w;
  return sum;
}

WeightedHypergraph WeightedHypergraph::restrict(const FractionalPacking& packing) const {
  const auto& x = packing.entries();
  if (x.size() != weights_.size()) {
    throw std::invalid_argument("packing has " + std::to_string(x.size()) + " entries, source has " +
                                std::to_string(weights_.size()) + " hyperedges");
  }
  WeightedHypergraph out(m_);
  for (const auto& [edge, value] : x) {
    const auto it = weights_.find(edge);
    if (it == weights_.end()) {
      throw std::invalid_argument("packing entry " + format_set(edge) + " is not a hyperedge of the source");
    }
    if (value.sign() < 0) {
      throw std::invalid_argument("packing entry " + format_set(edge) + " is negative: " + value.to_string());
    }
    if (value > it->second) {
      throw std::invalid_argument("packing entry " + format_set(edge) + " = " + value.to_string() +
                                  " exceeds w(e) = " + it->second.to_string());
    }
    if (!value.is_zero()) out.weights_.emplace(edge, value);
  }
  return out;
}

}  // namespace skbounds
