#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "spor/graph.hpp"

namespace spor {

/// Union-find over [0, n) with union by size (ties toward the smaller root
/// id) and path compression. Each component also threads its members on a
/// circular list, so a whole component can be walked in time linear in its size.
class ComponentForest {
 public:
  struct Merge {
    NodeId root;
    NodeId absorbed;
  };

  explicit ComponentForest(std::size_t n = 0, bool keep_merge_log = false)
      : parent_(n), size_(n, 1), next_(n), components_(n), keep_log_(keep_merge_log) {
    std::iota(parent_.begin(), parent_.end(), NodeId{0});
    std::iota(next_.begin(), next_.end(), NodeId{0});
  }

  std::size_t num_nodes() const { return parent_.size(); }
  std::size_t num_components() const { return components_; }

  NodeId find(NodeId v) {
    NodeId root = v;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[v] != root) v = std::exchange(parent_[v], root);
    return root;
  }

  /// Non-mutating find, safe for concurrent readers once construction is over.
  NodeId find_const(NodeId v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  bool same(NodeId u, NodeId v) { return find(u) == find(v); }

  bool unite(NodeId u, NodeId v) {
    NodeId a = find(u);
    NodeId b = find(v);
    if (a == b) return false;
    if (size_[a] < size_[b] || (size_[a] == size_[b] && b < a)) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    std::swap(next_[a], next_[b]);
    --components_;
    if (keep_log_) log_.push_back({a, b});
    return true;
  }

  std::size_t component_size(NodeId v) { return size_[find(v)]; }
  std::size_t component_size_const(NodeId v) const { return size_[find_const(v)]; }

  /// floor(log2 |C_v|): v is in bucket b iff 2^b <= |C_v| < 2^(b+1).
  unsigned bucket(NodeId v) { return floor_log2(component_size(v)); }
  unsigned bucket_const(NodeId v) const { return floor_log2(component_size_const(v)); }

  /// Calls f(w) for every w in v's component.
  template <typename F>
  void for_each_member(NodeId v, F&& f) const {
    NodeId w = v;
    do {
      f(w);
      w = next_[w];
    } while (w != v);
  }

  /// Compresses every path so find_const is a single hop.
  void compress_all() {
    for (NodeId v = 0; v < parent_.size(); ++v) find(v);
  }

  const std::vector<Merge>& merge_log() const { return log_; }

 private:
  std::vector<NodeId> parent_;
  std::vector<std::size_t> size_;
  std::vector<NodeId> next_;
  std::size_t components_;
  bool keep_log_;
  std::vector<Merge> log_;
};

}  // namespace spor
