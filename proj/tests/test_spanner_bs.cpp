#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "spor/generators.hpp"
#include "spor/spanner_bs.hpp"
#include "spor/verify.hpp"

using namespace spor;

namespace {

BsParams params(unsigned k, double rho, std::uint64_t seed, double c = 6.0) {
  BsParams p;
  p.k = k;
  p.rho = rho;
  p.c = c;
  p.seed = seed;
  return p;
}

}  // namespace

TEST(BsSpanner, OneRoundFullScanIsThreeSpanner) {
  Rng gen(1);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Graph g = gen_gnp(300, 0.2, gen);
    BsOracle o = build_bs(g, params(2, 1, seed, 1000.0));
    auto rep = check_stretch(enumerate_yes_edges(o, g), g, 3);
    EXPECT_TRUE(rep.pass) << "seed " << seed;
  }
}

TEST(BsSpanner, CompleteGraphStretchSeven) {
  Graph g = gen_complete(256);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    BsOracle o = build_bs(g, params(4, 4, seed));
    EXPECT_TRUE(check_stretch(enumerate_yes_edges(o, g), g, 7).pass) << "seed " << seed;
  }
}

TEST(BsSpanner, StretchUnderSparseSampling) {
  Rng gen(2);
  for (unsigned k = 2; k <= 4; ++k) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      Graph g = gen_gnp(400, 0.3, gen);
      BsOracle o = build_bs(g, params(k, 2, seed, 0.05));
      EXPECT_TRUE(check_stretch(enumerate_yes_edges(o, g), g, 2 * k - 1).pass)
          << "k " << k << " seed " << seed;
    }
  }
}

TEST(BsSpanner, ReclusteringBoundedPerNode) {
  Rng gen(3);
  for (unsigned k = 2; k <= 4; ++k) {
    Graph g = gen_gnp(300, 0.2, gen);
    BsOracle o = build_bs(g, params(k, 1, k));
    std::vector<unsigned> per_node(g.num_nodes(), 0);
    for (const auto& e : o.recluster_edges()) ++per_node[e.node];
    for (unsigned c : per_node) EXPECT_LE(c, k - 1);
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      EXPECT_GE(o.finalized_round(v), 1u);
      EXPECT_LE(o.finalized_round(v), k);
    }
  }
}

// Each re-clustering edge lands on a member of the target cluster as of the
// round start, and every live node reaches its center in at most r-1 hops.
TEST(BsSpanner, ClusterDiameterInvariant) {
  Rng gen(4);
  for (unsigned k = 2; k <= 4; ++k) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      Graph g = gen_gnp(300, 0.15, gen);
      BsOracle o = build_bs(g, params(k, 1 + seed, seed, 0.3));
      std::vector<std::vector<const ReclusterEdge*>> joins(g.num_nodes());
      for (const auto& e : o.recluster_edges()) {
        EXPECT_TRUE(g.has_edge(e.node, e.via));
        EXPECT_TRUE(o.is_recorded(e.node, e.via));
        EXPECT_EQ(o.cluster_at(e.via, e.round), o.cluster_at(e.node, e.round + 1));
        joins[e.node].push_back(&e);
      }
      for (unsigned r = 1; r <= k; ++r) {
        for (NodeId v = 0; v < g.num_nodes(); ++v) {
          if (o.cluster_at(v, r) == kUnclustered) continue;
          const int hops = brute::bs_hops_to_center(o, joins, v, r);
          EXPECT_GE(hops, 0) << "v " << v << " r " << r;
          EXPECT_LE(hops, static_cast<int>(r) - 1) << "v " << v << " r " << r;
        }
      }
    }
  }
}

TEST(BsSpanner, QueryRules) {
  Graph g = gen_complete(64);
  BsOracle o = build_bs(g, params(3, 1, 5));
  EXPECT_FALSE(o.query(g, 3, 3));
  EXPECT_THROW(o.query(g, 64, 1), GraphError);
  for (const Edge& e : o.recorded_edges()) EXPECT_TRUE(o.query(g, e.u, e.v));
  std::size_t same_cluster_no = 0;
  g.for_each_edge([&](NodeId s, NodeId t) {
    if (o.is_recorded(s, t)) return;
    const unsigned r0 = std::min(o.finalized_round(s), o.finalized_round(t));
    if (o.cluster_at(s, r0) != kUnclustered && o.cluster_at(s, r0) == o.cluster_at(t, r0)) {
      EXPECT_FALSE(o.query(g, s, t));
      ++same_cluster_no;
    }
  });
  Graph path = gen_path(5);
  EXPECT_FALSE(build_bs(path, params(2, 1, 0)).query(path, 0, 4));
}

TEST(BsSpanner, HistoryIndependence) {
  Rng gen(6);
  Graph g = gen_gnp(300, 0.3, gen);
  BsOracle o = build_bs(g, params(3, 2, 6, 0.2));
  auto edges = g.edges();
  std::vector<bool> a;
  for (const Edge& e : edges) a.push_back(o.query(g, e.u, e.v));
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), gen);
  for (std::size_t i : order) EXPECT_EQ(o.query(g, edges[i].v, edges[i].u), a[i]);
}

TEST(BsSpanner, RoundStatsAddUp) {
  Rng gen(7);
  Graph g = gen_gnp(200, 0.2, gen);
  BsOracle o = build_bs(g, params(3, 1, 7));
  ASSERT_EQ(o.stats().size(), 3u);
  std::size_t finalized = 0;
  std::size_t recorded = 0;
  for (const auto& r : o.stats()) {
    finalized += r.finalized;
    recorded += r.recorded_edges;
  }
  EXPECT_EQ(finalized, g.num_nodes());
  EXPECT_EQ(recorded, o.recorded_edges().size());
  EXPECT_EQ(o.stats()[0].live_clusters, g.num_nodes());
}

TEST(BsSpanner, RejectsBadParams) {
  Graph g = gen_path(4);
  EXPECT_THROW(build_bs(g, params(1, 1, 0)), std::invalid_argument);
  EXPECT_THROW(build_bs(g, params(2, 0.5, 0)), std::invalid_argument);
  EXPECT_THROW(build_bs(g, params(2, 1, 0, 0.0)), std::invalid_argument);
}
