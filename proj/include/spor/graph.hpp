#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spor/rng.hpp"

namespace spor {

using NodeId = std::uint32_t;

/// Undirected edge, canonical when u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  static Edge canonical(NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Edge whose first endpoint is meaningful (e.g. the endpoint that was sampled from).
struct OrientedEdge {
  NodeId from = 0;
  NodeId to = 0;

  Edge undirected() const { return Edge::canonical(from, to); }
  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

inline std::uint64_t edge_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

inline std::uint64_t edge_key(const Edge& e) { return edge_key(e.u, e.v); }

inline Edge edge_from_key(std::uint64_t key) {
  return Edge{static_cast<NodeId>(key >> 32), static_cast<NodeId>(key & 0xffffffffULL)};
}

/// ceil(log2 n), with log of 0 and 1 taken as 0.
inline unsigned ceil_log2(std::uint64_t n) {
  return n <= 1 ? 0U : static_cast<unsigned>(std::bit_width(n - 1));
}

inline unsigned floor_log2(std::uint64_t n) {
  return n == 0 ? 0U : static_cast<unsigned>(std::bit_width(n) - 1);
}

class GraphError : public std::runtime_error {
 public:
  enum class Kind { DuplicateEdge, SelfLoop, EndpointOutOfRange, IsolatedNode, BadSize, Parse, Io };

  GraphError(Kind kind, const std::string& what, Edge edge = {})
      : std::runtime_error(what), kind_(kind), edge_(edge) {}

  Kind kind() const { return kind_; }
  Edge edge() const { return edge_; }

 private:
  Kind kind_;
  Edge edge_;
};

/// Immutable simple undirected graph in compressed adjacency form. Neighbor
/// lists are sorted, so membership is a binary search.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges) {
    if (n > 0xffffffffULL) throw GraphError(GraphError::Kind::BadSize, "node count exceeds 32-bit ids");
    std::vector<std::uint64_t> degree(n, 0);
    for (const Edge& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw GraphError(GraphError::Kind::EndpointOutOfRange,
                         "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") has an endpoint >= n=" + std::to_string(n),
                         e);
      }
      if (e.u == e.v) {
        throw GraphError(GraphError::Kind::SelfLoop,
                         "self-loop at node " + std::to_string(e.u), e);
      }
      ++degree[e.u];
      ++degree[e.v];
    }
    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    g.neighbors_.resize(g.offsets_[n]);
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : edges) {
      g.neighbors_[cursor[e.u]++] = e.v;
      g.neighbors_[cursor[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < n; ++v) {
      auto first = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
      auto last = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
      std::sort(first, last);
      auto dup = std::adjacent_find(first, last);
      if (dup != last) {
        Edge e = Edge::canonical(static_cast<NodeId>(v), *dup);
        throw GraphError(GraphError::Kind::DuplicateEdge,
                         "duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")",
                         e);
      }
    }
    g.m_ = edges.size();
    return g;
  }

  /// Builds from a prevalidated CSR layout (binary reader). Validates the layout.
  static Graph from_csr(std::vector<std::uint64_t> offsets, std::vector<NodeId> neighbors) {
    if (offsets.empty() || offsets.front() != 0 || offsets.back() != neighbors.size()) {
      throw GraphError(GraphError::Kind::Parse, "inconsistent offsets array");
    }
    Graph g;
    g.offsets_ = std::move(offsets);
    g.neighbors_ = std::move(neighbors);
    const std::size_t n = g.num_nodes();
    for (std::size_t v = 0; v < n; ++v) {
      if (g.offsets_[v + 1] < g.offsets_[v]) throw GraphError(GraphError::Kind::Parse, "offsets not monotone");
      auto nb = g.neighbors(static_cast<NodeId>(v));
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (nb[i] >= n) throw GraphError(GraphError::Kind::EndpointOutOfRange, "neighbor id out of range");
        if (nb[i] == v) throw GraphError(GraphError::Kind::SelfLoop, "self-loop", Edge{nb[i], nb[i]});
        if (i > 0 && nb[i - 1] >= nb[i]) {
          throw GraphError(GraphError::Kind::Parse, "neighbor list not strictly sorted");
        }
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      for (NodeId w : g.neighbors(static_cast<NodeId>(v))) {
        if (!g.has_edge(w, static_cast<NodeId>(v))) {
          throw GraphError(GraphError::Kind::Parse, "asymmetric adjacency");
        }
      }
    }
    g.m_ = g.neighbors_.size() / 2;
    return g;
  }

  std::size_t num_nodes() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return m_; }

  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {neighbors_.data() + offsets_[v], degree(v)};
  }

  NodeId neighbor(NodeId v, std::size_t i) const { return neighbors_[offsets_[v] + i]; }

  /// Unchecked membership test; u, v must be < n.
  bool contains_edge(NodeId u, NodeId v) const {
    if (u == v) return false;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  bool has_edge(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    return contains_edge(u, v);
  }

  void check_node(NodeId v) const {
    if (v >= num_nodes()) {
      throw GraphError(GraphError::Kind::EndpointOutOfRange,
                       "node " + std::to_string(v) + " out of range (n=" +
                           std::to_string(num_nodes()) + ")");
    }
  }

  /// All edges in canonical (u < v) lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for_each_edge([&](NodeId u, NodeId v) { out.push_back({u, v}); });
    return out;
  }

  template <typename F>
  void for_each_edge(F&& f) const {
    const std::size_t n = num_nodes();
    for (std::size_t u = 0; u < n; ++u) {
      for (NodeId v : neighbors(static_cast<NodeId>(u))) {
        if (u < v) f(static_cast<NodeId>(u), v);
      }
    }
  }

  const std::vector<std::uint64_t>& offsets() const { return offsets_; }
  const std::vector<NodeId>& adjacency() const { return neighbors_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_;
  }

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<NodeId> neighbors_;
  std::size_t m_ = 0;
};

/// Uniformly random neighbor of v, returned as the oriented edge (v, w).
inline OrientedEdge sample_incident_edge(const Graph& g, NodeId v, Rng& rng) {
  g.check_node(v);
  const std::size_t d = g.degree(v);
  if (d == 0) {
    throw GraphError(GraphError::Kind::IsolatedNode, "node " + std::to_string(v) + " has no neighbors");
  }
  return {v, g.neighbor(v, rng.below(d))};
}

}  // namespace spor
