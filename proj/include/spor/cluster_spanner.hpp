#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "spor/graph.hpp"
#include "spor/oracle.hpp"
#include "spor/rng.hpp"

namespace spor {

inline constexpr NodeId kUnclustered = std::numeric_limits<NodeId>::max();

/// What the edge-sampling step remembers about an inter-cluster edge.
enum class RecordRule {
  VertexCluster,  // one edge per (vertex, foreign cluster): stretch 3
  ClusterPair,    // one edge per unordered pair of clusters: stretch 5
};

/// Degree thresholds of the form 2^j * n^(1/root), compared exactly in integers.
class DegreeScale {
 public:
  DegreeScale(std::size_t n, unsigned root) : n_(n), root_(root) {
    const unsigned logn = ceil_log2(n);
    // ceil(logn / 2) buckets for square roots, ceil(2 logn / 3) for cube roots.
    num_buckets_ = root == 2 ? (logn + 1) / 2 : (2 * logn + 2) / 3;
  }

  std::size_t n() const { return n_; }
  unsigned root() const { return root_; }
  unsigned num_buckets() const { return num_buckets_; }

  /// deg < n^(1/root) over the reals.
  bool below_threshold(std::size_t deg) const { return power(deg) < n_; }

  /// deg >= 2^j * n^(1/root).
  bool at_least(std::size_t deg, unsigned j) const {
    return power(deg) >= (static_cast<unsigned __int128>(n_) << (j * root_));
  }

  /// deg > 2 * (2^j * n^(1/root)).
  bool above_twice(std::size_t deg, unsigned j) const {
    return power(deg) > (static_cast<unsigned __int128>(n_) << ((j + 1) * root_));
  }

  /// Bucket index of a degree that is not below the threshold; the top
  /// bucket absorbs everything above it.
  unsigned bucket_of(std::size_t deg) const {
    unsigned j = 0;
    while (j + 1 < num_buckets_ && at_least(deg, j + 1)) ++j;
    return j;
  }

  double threshold() const { return std::pow(static_cast<double>(n_), 1.0 / root_); }
  double lower_bound(unsigned j) const { return std::ldexp(threshold(), static_cast<int>(j)); }

 private:
  unsigned __int128 power(std::size_t deg) const {
    unsigned __int128 p = 1;
    for (unsigned i = 0; i < root_; ++i) p *= deg;
    return p;
  }

  std::size_t n_;
  unsigned root_;
  unsigned num_buckets_;
};

struct SpannerParams {
  /// Approximately regular configuration: one structure with lower bound
  /// D / C, no degree rules, sampling C times more edges.
  struct Regular {
    double degree_scale = 1.0;  // D
    double regularity = 1.0;    // C
  };

  double r = 1.0;
  double c = 6.0;
  std::uint64_t seed = 0;
  std::optional<Regular> regular;

  void validate() const {
    if (!(r >= 1.0)) throw std::invalid_argument("r must be >= 1");
    if (!(c > 0.0)) throw std::invalid_argument("c must be positive");
    if (regular && !(regular->degree_scale > 0.0 && regular->regularity >= 1.0)) {
      throw std::invalid_argument("regular configuration needs D > 0 and C >= 1");
    }
  }
};

using Spanner3Params = SpannerParams;

/// Cluster membership of one structure. center[v] is v's cluster center or
/// kUnclustered; centers are members of their own cluster.
struct ClusterState {
  std::vector<NodeId> center;
  std::vector<NodeId> centers;
  std::vector<Edge> assignment_edges;

  bool clustered(NodeId v) const { return center[v] != kUnclustered; }
  bool is_center(NodeId v) const { return center[v] == v; }
};

struct ClusterStructureStats {
  unsigned index = 0;
  double lower = 0.0;
  std::size_t centers = 0;
  std::size_t clustered = 0;
  std::size_t recorded_edges = 0;
  std::size_t adjacency_records = 0;
  bool scanned_centers = true;  // false when nodes probed random neighbors instead
};

/// One degree-bucket structure. For VertexCluster the adjacency key is
/// (vertex, center); for ClusterPair it is (smaller center, larger center).
/// Each key maps to the edge recorded for it.
struct ClusterStructure {
  unsigned index = 0;
  double lower = 0.0;
  ClusterState clusters;
  EdgeSet recorded;
  std::unordered_map<std::uint64_t, Edge> adjacency;

  ClusterStructureStats stats() const {
    ClusterStructureStats s;
    s.index = index;
    s.lower = lower;
    s.centers = clusters.centers.size();
    s.clustered = static_cast<std::size_t>(
        std::count_if(clusters.center.begin(), clusters.center.end(),
                      [](NodeId c) { return c != kUnclustered; }));
    s.recorded_edges = recorded.size();
    s.adjacency_records = adjacency.size();
    s.scanned_centers = scanned_centers;
    return s;
  }

  bool scanned_centers = true;
};

namespace detail {

inline std::uint64_t sample_budget(double c, double r, unsigned logn) {
  return static_cast<std::uint64_t>(std::ceil(c * r * std::max(1U, logn)));
}

/// Calls f(w) for `budget` uniform neighbors of v drawn with replacement,
/// or once per neighbor in list order when the budget covers the whole list.
template <typename F>
void for_each_sampled_neighbor(const Graph& g, NodeId v, std::uint64_t budget, Rng& rng, F&& f) {
  const std::size_t d = g.degree(v);
  if (d == 0) return;
  if (budget >= d) {
    for (NodeId w : g.neighbors(v)) f(w);
    return;
  }
  for (std::uint64_t i = 0; i < budget; ++i) f(g.neighbor(v, rng.below(d)));
}

/// Samples centers with probability c log n / lower, then assigns nodes to
/// clusters: by scanning center adjacency lists when lower >= sqrt(D), or by
/// probing random neighbors of each node otherwise.
inline void assign_clusters(const Graph& g, ClusterStructure& s, double c, unsigned logn,
                            double avg_degree, Rng& rng) {
  const std::size_t n = g.num_nodes();
  ClusterState& cs = s.clusters;
  cs.center.assign(n, kUnclustered);
  const double prob = std::min(1.0, c * std::max(1U, logn) / s.lower);
  for (NodeId v = 0; v < n; ++v) {
    if (rng.bernoulli(prob)) {
      cs.center[v] = v;
      cs.centers.push_back(v);
    }
  }

  s.scanned_centers = s.lower * s.lower >= avg_degree;
  if (s.scanned_centers) {
    for (NodeId ctr : cs.centers) {
      for (NodeId w : g.neighbors(ctr)) {
        if (cs.center[w] != kUnclustered) continue;
        cs.center[w] = ctr;
        cs.assignment_edges.push_back(Edge::canonical(ctr, w));
        s.recorded.insert(ctr, w);
      }
    }
    return;
  }

  const auto probe_cap =
      static_cast<std::uint64_t>(std::ceil(c * s.lower * std::max(1U, logn)));
  for (NodeId v = 0; v < n; ++v) {
    if (cs.center[v] != kUnclustered) continue;
    const std::size_t d = g.degree(v);
    if (d == 0) continue;
    auto try_assign = [&](NodeId w) {
      if (cs.center[w] != w) return false;
      cs.center[v] = w;
      cs.assignment_edges.push_back(Edge::canonical(v, w));
      s.recorded.insert(v, w);
      return true;
    };
    if (probe_cap >= d) {
      // Whole list, cyclically from a random offset.
      const std::size_t start = rng.below(d);
      for (std::size_t i = 0; i < d; ++i) {
        if (try_assign(g.neighbor(v, (start + i) % d))) break;
      }
    } else {
      for (std::uint64_t i = 0; i < probe_cap; ++i) {
        if (try_assign(g.neighbor(v, rng.below(d)))) break;
      }
    }
  }
}

inline std::uint64_t pair_key(NodeId a, NodeId b) { return PairSet::key(a, b); }

}  // namespace detail

/// Adjacency oracle for a 3-spanner (VertexCluster) or 5-spanner
/// (ClusterPair) built from one clustered structure per degree bucket.
template <RecordRule Rule>
class ClusterSpannerOracle {
 public:
  static constexpr unsigned kStretch = Rule == RecordRule::VertexCluster ? 3 : 5;
  static constexpr unsigned kRoot = Rule == RecordRule::VertexCluster ? 2 : 3;

  bool query(const Graph& g, NodeId s, NodeId t) const {
    g.check_node(s);
    g.check_node(t);
    if (s == t || !g.contains_edge(s, t)) return false;
    if (pass_through_) return true;
    const std::size_t min_deg = std::min(degree_[s], degree_[t]);
    if (!regular_ && scale_.below_threshold(min_deg)) return true;
    for (const ClusterStructure& st : structures_) {
      if (structure_says_yes(st, s, t, min_deg)) return true;
    }
    return false;
  }

  /// Answer of a single structure, excluding the global low-degree rule.
  bool structure_says_yes(const ClusterStructure& st, NodeId s, NodeId t,
                          std::size_t min_deg) const {
    if (st.recorded.contains(s, t)) return true;
    const NodeId cs = st.clusters.center[s];
    const NodeId ct = st.clusters.center[t];
    if (cs == kUnclustered || ct == kUnclustered) return false;
    if (!regular_ && scale_.above_twice(min_deg, st.index)) return false;
    if (cs == ct) return false;
    if constexpr (Rule == RecordRule::VertexCluster) {
      if (st.adjacency.contains(detail::pair_key(s, ct)) ||
          st.adjacency.contains(detail::pair_key(t, cs))) {
        return false;
      }
    } else {
      if (st.adjacency.contains(detail::pair_key(std::min(cs, ct), std::max(cs, ct)))) return false;
    }
    return true;
  }

  bool pass_through() const { return pass_through_; }
  bool regular() const { return regular_; }
  const DegreeScale& scale() const { return scale_; }
  const std::vector<ClusterStructure>& structures() const { return structures_; }
  std::size_t degree(NodeId v) const { return degree_[v]; }

  std::vector<ClusterStructureStats> stats() const {
    std::vector<ClusterStructureStats> out;
    for (const auto& st : structures_) out.push_back(st.stats());
    return out;
  }

  static ClusterSpannerOracle build(const Graph& g, const SpannerParams& p) {
    p.validate();
    ClusterSpannerOracle o(g.num_nodes());
    const std::size_t n = g.num_nodes();
    const unsigned logn = ceil_log2(n);
    o.degree_.resize(n);
    for (NodeId v = 0; v < n; ++v) o.degree_[v] = g.degree(v);
    const double avg_degree = n == 0 ? 0.0 : 2.0 * static_cast<double>(g.num_edges()) / n;

    if (p.regular) {
      o.regular_ = true;
      ClusterStructure st;
      st.index = 0;
      st.lower = p.regular->degree_scale / p.regular->regularity;
      Rng rng = Rng::derive(p.seed, label(), 0);
      detail::assign_clusters(g, st, p.c, logn, avg_degree, rng);
      sample_edges(g, st, detail::sample_budget(p.c * p.regular->regularity, p.r, logn), rng);
      o.structures_.push_back(std::move(st));
      return o;
    }

    // D < n^(1/root): the graph is already sparse enough.
    const long double lhs = std::pow(static_cast<long double>(avg_degree), kRoot);
    if (n == 0 || lhs < static_cast<long double>(n)) {
      o.pass_through_ = true;
      return o;
    }

    std::vector<bool> live(o.scale_.num_buckets(), false);
    for (NodeId v = 0; v < n; ++v) {
      if (!o.scale_.below_threshold(o.degree_[v])) live[o.scale_.bucket_of(o.degree_[v])] = true;
    }
    for (unsigned j = 0; j < o.scale_.num_buckets(); ++j) {
      if (!live[j]) continue;
      ClusterStructure st;
      st.index = j;
      st.lower = o.scale_.lower_bound(j);
      Rng rng = Rng::derive(p.seed, label(), j);
      detail::assign_clusters(g, st, p.c, logn, avg_degree, rng);
      sample_edges(g, st, detail::sample_budget(p.c, p.r, logn), rng);
      o.structures_.push_back(std::move(st));
    }
    return o;
  }

 private:
  explicit ClusterSpannerOracle(std::size_t n) : scale_(n, kRoot) {}

  static const char* label() { return Rule == RecordRule::VertexCluster ? "spanner3" : "spanner5"; }

  static void sample_edges(const Graph& g, ClusterStructure& st, std::uint64_t budget, Rng& rng) {
    const auto& center = st.clusters.center;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      detail::for_each_sampled_neighbor(g, v, budget, rng, [&](NodeId w) {
        const NodeId cw = center[w];
        const NodeId cv = center[v];
        if (cw == kUnclustered || cw == cv) return;
        std::uint64_t key = 0;
        if constexpr (Rule == RecordRule::VertexCluster) {
          key = detail::pair_key(v, cw);
        } else {
          if (cv == kUnclustered) return;
          key = detail::pair_key(std::min(cv, cw), std::max(cv, cw));
        }
        if (st.adjacency.try_emplace(key, Edge::canonical(v, w)).second) st.recorded.insert(v, w);
      });
    }
  }

  DegreeScale scale_;
  bool pass_through_ = false;
  bool regular_ = false;
  std::vector<std::size_t> degree_;
  std::vector<ClusterStructure> structures_;
};

using Spanner3Oracle = ClusterSpannerOracle<RecordRule::VertexCluster>;
using Spanner5Oracle = ClusterSpannerOracle<RecordRule::ClusterPair>;

inline Spanner3Oracle build_spanner3(const Graph& g, const SpannerParams& p) {
  return Spanner3Oracle::build(g, p);
}

inline Spanner5Oracle build_spanner5(const Graph& g, const SpannerParams& p) {
  return Spanner5Oracle::build(g, p);
}

}  // namespace spor
