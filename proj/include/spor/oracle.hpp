#pragma once

#include <concepts>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "spor/graph.hpp"

namespace spor {

/// Frozen edge-membership oracle for an implicit subgraph H of g. Answers
/// depend only on the oracle and (u, v), never on query order.
template <typename O>
concept AdjacencyOracle = requires(const O& o, const Graph& g, NodeId u, NodeId v) {
  { o.query(g, u, v) } -> std::convertible_to<bool>;
};

/// Every edge of g the oracle answers YES to, in canonical order. Costs m
/// queries, so it is only for verification and reporting.
template <AdjacencyOracle O>
std::vector<Edge> enumerate_yes_edges(const O& oracle, const Graph& g) {
  std::vector<Edge> out;
  g.for_each_edge([&](NodeId u, NodeId v) {
    if (oracle.query(g, u, v)) out.push_back({u, v});
  });
  return out;
}

template <AdjacencyOracle O>
std::size_t count_yes_edges(const O& oracle, const Graph& g) {
  std::size_t count = 0;
  g.for_each_edge([&](NodeId u, NodeId v) { count += oracle.query(g, u, v) ? 1 : 0; });
  return count;
}

/// Set of undirected edges with O(1) expected insert and lookup. Keeps
/// insertion order for reporting.
class EdgeSet {
 public:
  bool insert(NodeId u, NodeId v) {
    if (!keys_.insert(edge_key(u, v)).second) return false;
    order_.push_back(Edge::canonical(u, v));
    return true;
  }
  bool contains(NodeId u, NodeId v) const { return keys_.contains(edge_key(u, v)); }
  std::size_t size() const { return order_.size(); }
  const std::vector<Edge>& edges() const { return order_; }

 private:
  std::unordered_set<std::uint64_t> keys_;
  std::vector<Edge> order_;
};

/// Set of ordered (a, b) id pairs.
class PairSet {
 public:
  static std::uint64_t key(NodeId a, NodeId b) { return (static_cast<std::uint64_t>(a) << 32) | b; }
  bool insert(NodeId a, NodeId b) { return keys_.insert(key(a, b)).second; }
  bool contains(NodeId a, NodeId b) const { return keys_.contains(key(a, b)); }
  std::size_t size() const { return keys_.size(); }

 private:
  std::unordered_set<std::uint64_t> keys_;
};

}  // namespace spor
