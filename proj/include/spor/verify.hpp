#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "spor/components.hpp"
#include "spor/graph.hpp"

namespace spor {

class VerifyError : public std::runtime_error {
 public:
  explicit VerifyError(const std::string& what, Edge edge)
      : std::runtime_error(what), edge_(edge) {}
  Edge edge() const { return edge_; }

 private:
  Edge edge_;
};

struct VerificationReport {
  std::string property;
  bool pass = true;
  std::vector<Edge> witnesses;  // violating edges or node pairs (u < v)
  std::size_t h_edges = 0;
  std::size_t g_components = 0;
  std::size_t h_components = 0;
  std::size_t max_stretch = 0;  // largest dist_H over G-edges, bound + 1 when exceeded

  void add_witness(Edge e) {
    witnesses.push_back(e);
    pass = false;
  }
};

/// Builds H as a graph on g's node set, rejecting edges outside E(G).
inline Graph subgraph_of(const Graph& g, std::span<const Edge> h_edges) {
  for (const Edge& e : h_edges) {
    if (e.u >= g.num_nodes() || e.v >= g.num_nodes() || !g.contains_edge(e.u, e.v)) {
      throw VerifyError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") is not an edge of G",
                        e);
    }
  }
  return Graph::from_edge_list(g.num_nodes(), h_edges);
}

inline std::size_t count_components(const Graph& g) {
  ComponentForest f(g.num_nodes());
  g.for_each_edge([&](NodeId u, NodeId v) { f.unite(u, v); });
  return f.num_components();
}

/// H spans G iff no G-edge joins two H-components.
inline VerificationReport check_spanning(std::span<const Edge> h_edges, const Graph& g) {
  const Graph h = subgraph_of(g, h_edges);
  VerificationReport rep;
  rep.property = "spanning";
  rep.h_edges = h.num_edges();
  ComponentForest f(g.num_nodes());
  h.for_each_edge([&](NodeId u, NodeId v) { f.unite(u, v); });
  rep.h_components = f.num_components();
  rep.g_components = count_components(g);
  g.for_each_edge([&](NodeId u, NodeId v) {
    if (!f.same(u, v)) rep.add_witness({u, v});
  });
  return rep;
}

/// Local edge connectivity by unit-capacity augmenting paths, stopping once
/// the flow reaches `cap`.
class UnitFlow {
 public:
  explicit UnitFlow(const Graph& g) : g_(g), flow_(g.adjacency().size(), 0), reverse_(g.adjacency().size()) {
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      auto nb = g.neighbors(u);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        auto back = g.neighbors(nb[i]);
        const auto j = static_cast<std::size_t>(std::lower_bound(back.begin(), back.end(), u) - back.begin());
        reverse_[g.offsets()[u] + i] = g.offsets()[nb[i]] + j;
      }
    }
  }

  std::size_t max_flow(NodeId s, NodeId t, std::size_t cap = std::numeric_limits<std::size_t>::max()) {
    std::fill(flow_.begin(), flow_.end(), 0);
    if (s == t) return cap;
    const std::size_t n = g_.num_nodes();
    constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> via(n);
    std::deque<NodeId> queue;
    std::size_t value = 0;
    while (value < cap) {
      std::fill(via.begin(), via.end(), kNone);
      via[s] = kNone - 1;
      queue.assign(1, s);
      while (!queue.empty() && via[t] == kNone) {
        const NodeId u = queue.front();
        queue.pop_front();
        const std::uint64_t base = g_.offsets()[u];
        auto nb = g_.neighbors(u);
        for (std::size_t i = 0; i < nb.size(); ++i) {
          if (via[nb[i]] != kNone || flow_[base + i] >= 1) continue;
          via[nb[i]] = base + i;
          queue.push_back(nb[i]);
        }
      }
      if (via[t] == kNone) break;
      for (NodeId x = t; x != s;) {
        const std::uint64_t arc = via[x];
        ++flow_[arc];
        --flow_[reverse_[arc]];
        x = g_.adjacency()[reverse_[arc]];
      }
      ++value;
    }
    return value;
  }

 private:
  const Graph& g_;
  std::vector<std::int8_t> flow_;
  std::vector<std::uint64_t> reverse_;
};

inline std::size_t local_edge_connectivity(const Graph& g, NodeId s, NodeId t) {
  return UnitFlow(g).max_flow(s, t);
}

/// For every pair s < t: lambda_H(s,t) >= min(k, lambda_G(s,t)).
inline VerificationReport check_k_certificate(std::span<const Edge> h_edges, const Graph& g,
                                              std::size_t k) {
  const Graph h = subgraph_of(g, h_edges);
  VerificationReport rep;
  rep.property = "k-certificate";
  rep.h_edges = h.num_edges();
  rep.g_components = count_components(g);
  rep.h_components = count_components(h);
  ComponentForest gf(g.num_nodes());
  g.for_each_edge([&](NodeId u, NodeId v) { gf.unite(u, v); });
  UnitFlow gflow(g);
  UnitFlow hflow(h);
  const std::size_t n = g.num_nodes();
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId t = s + 1; t < n; ++t) {
      if (!gf.same(s, t)) continue;
      const std::size_t need = gflow.max_flow(s, t, k);
      if (need == 0) continue;
      if (hflow.max_flow(s, t, need) < need) rep.add_witness({s, t});
    }
  }
  return rep;
}

/// dist_H(u, v) <= bound for every (u, v) in E(G). One BFS per node u,
/// truncated at depth `bound` and stopped early once all of u's larger
/// G-neighbors are reached. No bound means plain reachability.
inline VerificationReport check_stretch(std::span<const Edge> h_edges, const Graph& g,
                                        std::optional<std::size_t> bound) {
  const Graph h = subgraph_of(g, h_edges);
  VerificationReport rep;
  rep.property = "stretch";
  rep.h_edges = h.num_edges();
  const std::size_t n = g.num_nodes();
  const std::size_t limit = bound.value_or(std::numeric_limits<std::size_t>::max());
  constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();

  std::vector<std::size_t> dist(n, kFar);
  std::vector<NodeId> touched;
  std::vector<NodeId> frontier;
  std::vector<NodeId> next;
  std::vector<char> target(n, 0);

  for (NodeId u = 0; u < n; ++u) {
    std::size_t pending = 0;
    for (NodeId v : g.neighbors(u)) {
      if (v > u) {
        target[v] = 1;
        ++pending;
      }
    }
    if (pending == 0) continue;
    dist[u] = 0;
    touched.assign(1, u);
    frontier.assign(1, u);
    for (std::size_t depth = 1; depth <= limit && pending > 0 && !frontier.empty(); ++depth) {
      next.clear();
      for (NodeId x : frontier) {
        for (NodeId y : h.neighbors(x)) {
          if (dist[y] != kFar) continue;
          dist[y] = depth;
          touched.push_back(y);
          next.push_back(y);
          if (target[y]) --pending;
        }
      }
      frontier.swap(next);
    }
    for (NodeId v : g.neighbors(u)) {
      if (v <= u) continue;
      if (dist[v] == kFar) {
        rep.add_witness({u, v});
        rep.max_stretch = std::max(rep.max_stretch, bound ? limit + 1 : kFar);
      } else {
        rep.max_stretch = std::max(rep.max_stretch, dist[v]);
      }
      target[v] = 0;
    }
    for (NodeId x : touched) dist[x] = kFar;
  }
  return rep;
}

/// Classical certificate: k rounds of "take a BFS spanning forest of the
/// remaining edges, then delete it".
inline std::vector<Edge> baseline_sparse_certificate(const Graph& g, std::size_t k) {
  const std::size_t n = g.num_nodes();
  std::unordered_set<std::uint64_t> taken;
  std::vector<Edge> out;
  std::vector<char> seen(n);
  std::deque<NodeId> queue;
  for (std::size_t round = 0; round < k; ++round) {
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<Edge> forest;
    for (NodeId root = 0; root < n; ++root) {
      if (seen[root]) continue;
      seen[root] = 1;
      queue.assign(1, root);
      while (!queue.empty()) {
        const NodeId x = queue.front();
        queue.pop_front();
        for (NodeId y : g.neighbors(x)) {
          if (seen[y] || taken.contains(edge_key(x, y))) continue;
          seen[y] = 1;
          forest.push_back(Edge::canonical(x, y));
          queue.push_back(y);
        }
      }
    }
    if (forest.empty()) break;
    for (const Edge& e : forest) taken.insert(edge_key(e));
    out.insert(out.end(), forest.begin(), forest.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace spor
