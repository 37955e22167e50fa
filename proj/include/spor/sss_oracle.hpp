#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "spor/components.hpp"
#include "spor/edge_sampler.hpp"
#include "spor/graph.hpp"
#include "spor/oracle.hpp"
#include "spor/rng.hpp"

namespace spor {

struct SssBuildParams {
  double epsilon = 0.25;
  double c = 4.0;  // failure-run constant
  std::uint64_t seed = 0;

  void validate() const {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0,1)");
    if (!(c >= 1.0)) throw std::invalid_argument("c must be >= 1");
  }
};

struct BucketStats {
  unsigned bucket = 0;
  std::uint64_t threshold = 0;  // consecutive failures that close the bucket
  std::uint64_t samples = 0;
  std::uint64_t successes = 0;
  std::uint64_t failures = 0;
  std::uint64_t deleted = 0;     // failures caused by an earlier layer answering YES
  std::uint64_t run_length = 0;  // consecutive failures when the bucket closed
  bool exhausted = false;        // E_b became empty before the run completed
};

struct SssBuildStats {
  std::vector<BucketStats> buckets;
  std::uint64_t total_samples() const {
    std::uint64_t s = 0;
    for (const auto& b : buckets) s += b.samples;
    return s;
  }
};

/// Observer invoked just before the build advances past bucket b.
using BucketEndHook = std::function<void(unsigned b, ComponentForest& forest)>;

/// Sparse spanning subgraph oracle: YES on recorded forest edges and on
/// every edge between distinct frozen components.
class SssOracle {
 public:
  bool query(const Graph& g, NodeId u, NodeId v) const {
    g.check_node(u);
    g.check_node(v);
    if (u == v || !g.contains_edge(u, v)) return false;
    if (recorded_.contains(u, v)) return true;
    return root_[u] != root_[v];
  }

  bool is_recorded(NodeId u, NodeId v) const { return recorded_.contains(u, v); }
  const std::vector<Edge>& recorded_edges() const { return recorded_.edges(); }
  NodeId component(NodeId v) const { return root_[v]; }
  const SssBuildStats& stats() const { return stats_; }

 private:
  friend SssOracle build_sss_layer(const Graph&, const SssBuildParams&, unsigned,
                                   std::span<const SssOracle>, const BucketEndHook&);

  EdgeSet recorded_;
  std::vector<NodeId> root_;
  SssBuildStats stats_;
};

/// Run length for bucket b of layer i: c * i * 2^b * log^2 n / epsilon.
inline std::uint64_t failure_run_threshold(const SssBuildParams& p, unsigned layer, unsigned b,
                                           std::size_t n) {
  const double logn = ceil_log2(n);
  return static_cast<std::uint64_t>(
      std::ceil(p.c * layer * std::ldexp(1.0, static_cast<int>(b)) * logn * logn / p.epsilon));
}

/// Builds layer `layer` (1-based) of the spanning construction. A sampled
/// edge that any earlier layer answers YES to counts as a failure.
inline SssOracle build_sss_layer(const Graph& g, const SssBuildParams& p, unsigned layer,
                                 std::span<const SssOracle> previous,
                                 const BucketEndHook& on_bucket_end = {}) {
  p.validate();
  const std::size_t n = g.num_nodes();
  const unsigned logn = ceil_log2(n);
  Rng rng = Rng::derive(p.seed, "sss-layer", layer);
  ComponentForest forest(n);
  SssOracle out;

  for (unsigned b = 0; b < logn; ++b) {
    BucketStats st;
    st.bucket = b;
    st.threshold = failure_run_threshold(p, layer, b, n);
    auto in_bucket = [&](NodeId v) { return forest.bucket(v) == b; };
    BucketEdgeSampler sampler = BucketEdgeSampler::from_predicate(g, in_bucket);

    std::uint64_t run = 0;
    while (run < st.threshold) {
      auto drawn = sampler.sample(g, in_bucket, rng);
      if (!drawn) {
        st.exhausted = true;
        break;
      }
      ++st.samples;
      // The sampler orients edges away from a bucket-b endpoint. When both
      // ends are in bucket b the roles are symmetric.
      const NodeId u = drawn->from;
      const NodeId w = drawn->to;
      bool success = !forest.same(u, w) && forest.bucket(w) >= b;
      if (success) {
        for (const SssOracle& earlier : previous) {
          if (earlier.query(g, u, w)) {
            success = false;
            ++st.deleted;
            break;
          }
        }
      }
      if (!success) {
        ++st.failures;
        ++run;
        continue;
      }
      ++st.successes;
      run = 0;
      out.recorded_.insert(u, w);
      forest.unite(u, w);
      if (forest.bucket(u) != b) {
        forest.for_each_member(u, [&](NodeId x) {
          if (sampler.contains(x)) sampler.remove_node(x);
        });
      }
    }
    st.run_length = run;
    if (on_bucket_end) on_bucket_end(b, forest);
    out.stats_.buckets.push_back(st);
  }

  forest.compress_all();
  out.root_.resize(n);
  for (NodeId v = 0; v < n; ++v) out.root_[v] = forest.find_const(v);
  return out;
}

inline SssOracle build_sss(const Graph& g, const SssBuildParams& p,
                           const BucketEndHook& on_bucket_end = {}) {
  return build_sss_layer(g, p, 1, {}, on_bucket_end);
}

}  // namespace spor
