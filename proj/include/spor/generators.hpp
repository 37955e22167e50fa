#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "spor/graph.hpp"
#include "spor/rng.hpp"

namespace spor {

inline Graph gen_complete(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n - (n > 0)) / 2);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edge_list(n, edges);
}

inline Graph gen_path(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return Graph::from_edge_list(n, edges);
}

/// Node 0 joined to every other node.
inline Graph gen_star(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph::from_edge_list(n, edges);
}

/// Random recursive tree: node v > 0 attaches to a uniform earlier node.
inline Graph gen_random_tree(std::size_t n, Rng& rng) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v < n; ++v) edges.push_back({static_cast<NodeId>(rng.below(v)), v});
  return Graph::from_edge_list(n, edges);
}

inline Graph gen_gnp(std::size_t n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw GraphError(GraphError::Kind::BadSize, "edge probability must lie in [0,1]");
  }
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.push_back({u, v});
  return Graph::from_edge_list(n, edges);
}

/// Disjoint union; part i's node ids are shifted by the total size of parts 0..i-1.
inline Graph gen_disjoint_union(std::span<const Graph> parts) {
  std::vector<Edge> edges;
  std::size_t offset = 0;
  for (const Graph& part : parts) {
    part.for_each_edge([&](NodeId u, NodeId v) {
      edges.push_back({static_cast<NodeId>(u + offset), static_cast<NodeId>(v + offset)});
    });
    offset += part.num_nodes();
  }
  return Graph::from_edge_list(offset, edges);
}

struct TwoCliques {
  Graph graph;
  Edge cut_edge;
  std::vector<NodeId> side;  // side[v] in {0, 1}
};

/// Two disjoint n/2-cliques over a uniformly random halving of the nodes,
/// joined by one uniformly random cross edge.
inline TwoCliques gen_two_cliques_cut_edge(std::size_t n, Rng& rng) {
  if (n < 4 || n % 2 != 0) {
    throw GraphError(GraphError::Kind::BadSize,
                     "two-cliques instance needs an even n >= 4, got " + std::to_string(n));
  }
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), NodeId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  const std::size_t half = n / 2;
  std::vector<NodeId> side(n);
  for (std::size_t i = 0; i < n; ++i) side[perm[i]] = i < half ? 0 : 1;

  std::vector<Edge> edges;
  edges.reserve(2 * (half * (half - 1) / 2) + 1);
  for (int s = 0; s < 2; ++s) {
    const std::size_t base = s == 0 ? 0 : half;
    for (std::size_t i = 0; i < half; ++i)
      for (std::size_t j = i + 1; j < half; ++j)
        edges.push_back(Edge::canonical(perm[base + i], perm[base + j]));
  }
  const Edge cut = Edge::canonical(perm[rng.below(half)], perm[half + rng.below(half)]);
  edges.push_back(cut);
  return {Graph::from_edge_list(n, edges), cut, std::move(side)};
}

}  // namespace spor
