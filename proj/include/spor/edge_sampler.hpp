#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spor/components.hpp"
#include "spor/graph.hpp"
#include "spor/rng.hpp"

namespace spor {

class SamplerError : public std::runtime_error {
 public:
  enum class Kind { NodeAbsent, SamplerStuck };
  SamplerError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Uniform sampling from E_b, the edges with at least one endpoint in the
/// active bucket, under removal of nodes from the bucket.
///
/// Nodes of the bucket are split into degree groups, group i holding degrees
/// in [2^i, 2^(i+1)). A sample picks a group proportionally to its degree
/// sum, a node in the group by rejection (accept with deg(u) / 2^(i+1)), and
/// a uniform incident edge (u, w). When w is also in the bucket the edge has
/// two orientations in play, so it is kept only with probability 1/2 and the
/// whole draw restarts otherwise.
///
/// Bucket membership of the far endpoint is always read from the caller's
/// predicate at sample time, never cached.
class BucketEdgeSampler {
 public:
  static constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

  BucketEdgeSampler() = default;

  /// Groups every node with in_bucket(v) and degree >= 1.
  template <typename InBucket>
  static BucketEdgeSampler from_predicate(const Graph& g, InBucket&& in_bucket) {
    BucketEdgeSampler s;
    const std::size_t n = g.num_nodes();
    s.slot_.assign(n, kAbsent);
    s.groups_.resize(floor_log2(n > 1 ? n : 1) + 1);
    s.group_degree_.assign(s.groups_.size(), 0);
    s.retry_cap_ = 64ULL * std::max(1U, ceil_log2(n));
    for (NodeId v = 0; v < n; ++v) {
      const std::size_t d = g.degree(v);
      if (d == 0 || !in_bucket(v)) continue;
      const unsigned i = floor_log2(d);
      s.slot_[v] = static_cast<std::uint32_t>(s.groups_[i].size());
      s.groups_[i].push_back(v);
      s.group_degree_[i] += d;
      s.total_degree_ += d;
      ++s.size_;
    }
    s.graph_ = &g;
    return s;
  }

  static BucketEdgeSampler for_bucket(const Graph& g, ComponentForest& forest, unsigned b) {
    return from_predicate(g, [&](NodeId v) { return forest.bucket(v) == b; });
  }

  bool contains(NodeId v) const { return v < slot_.size() && slot_[v] != kAbsent; }
  bool empty() const { return total_degree_ == 0; }
  std::size_t size() const { return size_; }
  std::uint64_t total_degree() const { return total_degree_; }
  std::size_t num_groups() const { return groups_.size(); }
  const std::vector<NodeId>& group(std::size_t i) const { return groups_[i]; }
  std::uint64_t group_degree(std::size_t i) const { return group_degree_[i]; }

  /// O(1) removal by swapping with the group's last member.
  void remove_node(NodeId v) {
    if (!contains(v)) {
      throw SamplerError(SamplerError::Kind::NodeAbsent,
                         "node " + std::to_string(v) + " is not in the sampler");
    }
    const std::size_t d = graph_->degree(v);
    const unsigned i = floor_log2(d);
    auto& grp = groups_[i];
    const std::uint32_t pos = slot_[v];
    const NodeId last = grp.back();
    grp[pos] = last;
    slot_[last] = pos;
    grp.pop_back();
    slot_[v] = kAbsent;
    group_degree_[i] -= d;
    total_degree_ -= d;
    --size_;
  }

  /// Uniform edge of E_b oriented away from its bucket-side endpoint, or
  /// nullopt when E_b is empty. Throws SamplerStuck past the retry cap.
  template <typename InBucket>
  std::optional<OrientedEdge> sample(const Graph& g, InBucket&& in_bucket, Rng& rng) const {
    if (total_degree_ == 0) return std::nullopt;
    std::uint64_t draws = 0;
    for (;;) {
      // Stage 1: group proportional to its degree sum.
      std::uint64_t x = rng.below(total_degree_);
      std::size_t i = 0;
      while (x >= group_degree_[i]) x -= group_degree_[i++];
      const auto& grp = groups_[i];
      const std::uint64_t cap = std::uint64_t{2} << i;

      // Stage 2: node in the group, accepted with probability deg(u) / 2^(i+1).
      NodeId u = 0;
      for (;;) {
        if (++draws > retry_cap_) {
          throw SamplerError(SamplerError::Kind::SamplerStuck,
                             "edge sampler exceeded " + std::to_string(retry_cap_) + " draws");
        }
        u = grp[rng.below(grp.size())];
        if (rng.below(cap) < g.degree(u)) break;
      }

      // Stage 3: uniform incident edge; halve edges with both ends in the bucket.
      const NodeId w = g.neighbor(u, rng.below(g.degree(u)));
      if (!in_bucket(w) || rng.below(2) == 0) return OrientedEdge{u, w};
    }
  }

  std::optional<OrientedEdge> sample(const Graph& g, ComponentForest& forest, unsigned b,
                                     Rng& rng) const {
    return sample(g, [&](NodeId v) { return forest.bucket(v) == b; }, rng);
  }

 private:
  std::vector<std::vector<NodeId>> groups_;
  std::vector<std::uint64_t> group_degree_;
  std::vector<std::uint32_t> slot_;
  std::uint64_t total_degree_ = 0;
  std::size_t size_ = 0;
  std::uint64_t retry_cap_ = 64;
  const Graph* graph_ = nullptr;
};

}  // namespace spor
