#pragma once

#include <stdexcept>
#include <vector>

#include "spor/sss_oracle.hpp"

namespace spor {

/// k-connectivity certificate oracle: the OR of k sequentially built
/// spanning layers, where layer i treats edges that layers 1..i-1 already
/// answer YES to as deleted.
class KccOracle {
 public:
  bool query(const Graph& g, NodeId u, NodeId v) const {
    g.check_node(u);
    g.check_node(v);
    if (u == v || !g.contains_edge(u, v)) return false;
    for (const SssOracle& layer : layers_) {
      if (layer.query(g, u, v)) return true;
    }
    return false;
  }

  /// Index (0-based) of the first layer answering YES, or k when none does.
  std::size_t first_yes_layer(const Graph& g, NodeId u, NodeId v) const {
    for (std::size_t i = 0; i < layers_.size(); ++i) {
      if (layers_[i].query(g, u, v)) return i;
    }
    return layers_.size();
  }

  std::size_t k() const { return layers_.size(); }
  const std::vector<SssOracle>& layers() const { return layers_; }

 private:
  friend KccOracle build_kcc(const Graph&, std::size_t, const SssBuildParams&);
  std::vector<SssOracle> layers_;
};

inline KccOracle build_kcc(const Graph& g, std::size_t k, const SssBuildParams& p) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  KccOracle out;
  out.layers_.reserve(k);
  for (std::size_t i = 1; i <= k; ++i) {
    out.layers_.push_back(build_sss_layer(g, p, static_cast<unsigned>(i), out.layers_));
  }
  return out;
}

/// Per-layer counts of edges answered YES by that layer and NO by every earlier one.
inline std::vector<std::size_t> incremental_yes_counts(const KccOracle& o, const Graph& g) {
  std::vector<std::size_t> counts(o.k(), 0);
  g.for_each_edge([&](NodeId u, NodeId v) {
    const std::size_t i = o.first_yes_layer(g, u, v);
    if (i < counts.size()) ++counts[i];
  });
  return counts;
}

}  // namespace spor
