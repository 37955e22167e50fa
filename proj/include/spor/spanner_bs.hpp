#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spor/cluster_spanner.hpp"
#include "spor/graph.hpp"
#include "spor/oracle.hpp"
#include "spor/rng.hpp"

namespace spor {

struct BsParams {
  unsigned k = 2;
  double rho = 1.0;
  double c = 6.0;
  std::uint64_t seed = 0;

  void validate() const {
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    if (!(rho >= 1.0)) throw std::invalid_argument("rho must be >= 1");
    if (!(c > 0.0)) throw std::invalid_argument("c must be positive");
  }
};

struct BsRoundStats {
  unsigned round = 0;
  std::size_t live_clusters = 0;
  std::size_t selected_clusters = 0;
  std::size_t reclustered = 0;
  std::size_t finalized = 0;
  std::size_t recorded_edges = 0;  // edges newly recorded this round
};

/// An edge recorded when `node` joined the cluster of `via` in `round`.
struct ReclusterEdge {
  NodeId node;
  NodeId via;
  unsigned round;
};

/// Adjacency oracle for a (2k-1)-spanner from k-1 rounds of sampled cluster
/// growth plus a closing finalization round. Cluster ids are center node ids.
class BsOracle {
 public:
  bool query(const Graph& g, NodeId s, NodeId t) const {
    g.check_node(s);
    g.check_node(t);
    if (s == t || !g.contains_edge(s, t)) return false;
    if (recorded_.contains(s, t)) return true;
    const unsigned fs = finalized_round_[s];
    const unsigned ft = finalized_round_[t];
    if (fs < ft) return !no_case(s, t, fs);
    if (ft < fs) return !no_case(t, s, ft);
    // Same round: either orientation may justify the NO.
    return !(no_case(s, t, fs) || no_case(t, s, fs));
  }

  unsigned k() const { return k_; }
  std::size_t num_nodes() const { return finalized_round_.size(); }

  /// Cluster of v at the start of round r (1..k); kUnclustered once v was
  /// finalized before r.
  NodeId cluster_at(NodeId v, unsigned r) const { return cluster_at_[(r - 1) * num_nodes() + v]; }
  unsigned finalized_round(NodeId v) const { return finalized_round_[v]; }
  bool recorded_adjacent(NodeId v, NodeId cluster) const { return adjacent_.contains(v, cluster); }
  bool is_recorded(NodeId u, NodeId v) const { return recorded_.contains(u, v); }
  const std::vector<Edge>& recorded_edges() const { return recorded_.edges(); }
  const std::vector<ReclusterEdge>& recluster_edges() const { return recluster_; }
  const std::vector<BsRoundStats>& stats() const { return stats_; }

  static BsOracle build(const Graph& g, const BsParams& p) {
    p.validate();
    const std::size_t n = g.num_nodes();
    const unsigned logn = std::max(1U, ceil_log2(n));
    BsOracle o;
    o.k_ = p.k;
    o.cluster_at_.assign(static_cast<std::size_t>(p.k) * n, kUnclustered);
    o.finalized_round_.assign(n, 0);
    Rng rng = Rng::derive(p.seed, "spanner-bs", 0);

    const double select_prob =
        n <= 1 ? 1.0 : std::clamp(std::pow(static_cast<double>(n), -1.0 / p.k), 1e-12, 1.0);
    auto budget = [&](NodeId v) {
      return static_cast<std::uint64_t>(std::ceil(p.c * g.degree(v) * logn / p.rho));
    };

    std::vector<NodeId> cluster(n);
    for (NodeId v = 0; v < n; ++v) cluster[v] = v;
    std::vector<NodeId> sampled;
    std::vector<char> live(n);
    std::vector<char> selected(n);

    auto finalize = [&](NodeId v, unsigned r) {
      for (NodeId w : sampled) {
        const unsigned fw = o.finalized_round_[w];
        if (fw != 0 && fw < r) continue;
        const NodeId cw = cluster[w];
        if (cw == cluster[v]) continue;
        if (o.adjacent_.insert(v, cw)) o.recorded_.insert(v, w);
      }
      o.finalized_round_[v] = r;
    };

    for (unsigned r = 1; r <= p.k; ++r) {
      BsRoundStats st;
      st.round = r;
      const std::size_t recorded_before = o.recorded_.size();
      std::fill(live.begin(), live.end(), 0);
      for (NodeId v = 0; v < n; ++v) {
        if (o.finalized_round_[v] != 0) continue;
        o.cluster_at_[(r - 1) * n + v] = cluster[v];
        live[cluster[v]] = 1;
      }
      st.live_clusters = static_cast<std::size_t>(std::count(live.begin(), live.end(), 1));

      if (r == p.k) {
        for (NodeId v = 0; v < n; ++v) {
          if (o.finalized_round_[v] != 0) continue;
          collect_samples(g, v, budget(v), rng, sampled);
          finalize(v, r);
          ++st.finalized;
        }
      } else {
        for (NodeId id = 0; id < n; ++id) selected[id] = live[id] && rng.bernoulli(select_prob);
        st.selected_clusters = static_cast<std::size_t>(std::count(selected.begin(), selected.end(), 1));
        for (NodeId v = 0; v < n; ++v) {
          if (o.finalized_round_[v] != 0) continue;
          const NodeId start_v = o.cluster_at_[(r - 1) * n + v];
          if (selected[start_v]) continue;
          collect_samples(g, v, budget(v), rng, sampled);
          bool joined = false;
          for (NodeId w : sampled) {
            // Membership as of the round start, so same-round joins never chain.
            if (o.finalized_round_[w] != 0) continue;
            const NodeId start_w = o.cluster_at_[(r - 1) * n + w];
            if (!selected[start_w]) continue;
            cluster[v] = start_w;
            o.recorded_.insert(v, w);
            o.recluster_.push_back({v, w, r});
            ++st.reclustered;
            joined = true;
            break;
          }
          if (!joined) {
            finalize(v, r);
            ++st.finalized;
          }
        }
      }
      st.recorded_edges = o.recorded_.size() - recorded_before;
      o.stats_.push_back(st);
    }
    return o;
  }

 private:
  bool no_case(NodeId s, NodeId t, unsigned r0) const {
    const NodeId cs = cluster_at(s, r0);
    const NodeId ct = cluster_at(t, r0);
    return cs == ct || adjacent_.contains(s, ct);
  }

  static void collect_samples(const Graph& g, NodeId v, std::uint64_t budget, Rng& rng,
                              std::vector<NodeId>& out) {
    out.clear();
    detail::for_each_sampled_neighbor(g, v, budget, rng, [&](NodeId w) { out.push_back(w); });
  }

  unsigned k_ = 2;
  EdgeSet recorded_;
  std::vector<NodeId> cluster_at_;
  std::vector<unsigned> finalized_round_;
  PairSet adjacent_;
  std::vector<ReclusterEdge> recluster_;
  std::vector<BsRoundStats> stats_;
};

inline BsOracle build_bs(const Graph& g, const BsParams& p) { return BsOracle::build(g, p); }

}  // namespace spor
