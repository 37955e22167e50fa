#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "spor/components.hpp"
#include "spor/edge_sampler.hpp"
#include "spor/generators.hpp"

using namespace spor;

namespace {

// Counts draws per undirected edge and returns the total variation distance
// from uniform over the brute-force E_b.
template <typename InBucket>
double tv_from_uniform(const Graph& g, InBucket in_bucket, int draws, Rng& rng) {
  std::vector<Edge> eb;
  g.for_each_edge([&](NodeId u, NodeId v) {
    if (in_bucket(u) || in_bucket(v)) eb.push_back({u, v});
  });
  auto sampler = BucketEdgeSampler::from_predicate(g, in_bucket);
  std::map<Edge, int> hits;
  for (int i = 0; i < draws; ++i) {
    auto e = sampler.sample(g, in_bucket, rng);
    EXPECT_TRUE(e.has_value());
    EXPECT_TRUE(in_bucket(e->from));
    ++hits[e->undirected()];
  }
  double tv = 0.0;
  for (const Edge& e : eb) tv += std::abs(hits[e] / static_cast<double>(draws) - 1.0 / eb.size());
  for (const auto& [e, c] : hits) {
    if (!std::binary_search(eb.begin(), eb.end(), e)) tv += c / static_cast<double>(draws);
  }
  return tv / 2.0;
}

}  // namespace

TEST(EdgeSampler, CompleteK4FreshForest) {
  Graph g = gen_complete(4);
  ComponentForest f(4);
  auto s = BucketEdgeSampler::for_bucket(g, f, 0);
  EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(s.group(1).size(), 4u);
  EXPECT_EQ(s.group_degree(1), 12u);
  EXPECT_EQ(s.total_degree(), 12u);
  EXPECT_TRUE(s.group(0).empty());
}

TEST(EdgeSampler, EmptyWhenBucketUnpopulated) {
  Graph g = gen_complete(10);
  ComponentForest f(10);
  for (NodeId v = 1; v < 10; ++v) f.unite(0, v);
  auto s = BucketEdgeSampler::for_bucket(g, f, 5);
  EXPECT_TRUE(s.empty());
  Rng rng(1);
  EXPECT_FALSE(s.sample(g, f, 5, rng).has_value());
}

TEST(EdgeSampler, PathGroupsByDegree) {
  Graph g = gen_path(5);
  ComponentForest f(5);
  auto s = BucketEdgeSampler::for_bucket(g, f, 0);
  auto ends = s.group(0);
  std::sort(ends.begin(), ends.end());
  EXPECT_EQ(ends, (std::vector<NodeId>{0, 4}));
  auto mid = s.group(1);
  std::sort(mid.begin(), mid.end());
  EXPECT_EQ(mid, (std::vector<NodeId>{1, 2, 3}));
  EXPECT_EQ(s.group_degree(0), 2u);
  EXPECT_EQ(s.group_degree(1), 6u);
}

TEST(EdgeSampler, DegreeZeroNodesExcluded) {
  Graph g = Graph::from_edge_list(4, std::vector<Edge>{{0, 1}});
  auto s = BucketEdgeSampler::from_predicate(g, [](NodeId) { return true; });
  EXPECT_EQ(s.size(), 2u);
  EXPECT_FALSE(s.contains(3));
}

TEST(EdgeSampler, RemoveNode) {
  Graph g = Graph::from_edge_list(2, std::vector<Edge>{{0, 1}});
  auto only0 = [](NodeId v) { return v == 0; };
  auto s = BucketEdgeSampler::from_predicate(g, only0);
  s.remove_node(0);
  EXPECT_TRUE(s.empty());
  try {
    s.remove_node(0);
    FAIL() << "expected NodeAbsent";
  } catch (const SamplerError& e) {
    EXPECT_EQ(e.kind(), SamplerError::Kind::NodeAbsent);
  }

  Graph k = gen_complete(6);
  auto all = [](NodeId) { return true; };
  auto t = BucketEdgeSampler::from_predicate(k, all);
  t.remove_node(2);
  EXPECT_EQ(t.total_degree(), 25u);
  Rng rng(4);
  for (int i = 0; i < 2000; ++i) EXPECT_NE(t.sample(k, all, rng)->from, 2u);
}

TEST(EdgeSampler, SingleSidedEdgeAlwaysReturned) {
  Graph g = Graph::from_edge_list(2, std::vector<Edge>{{0, 1}});
  auto only0 = [](NodeId v) { return v == 0; };
  auto s = BucketEdgeSampler::from_predicate(g, only0);
  Rng rng(9);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(*s.sample(g, only0, rng), (OrientedEdge{0, 1}));
}

TEST(EdgeSampler, TriangleIsUniform) {
  Graph g = gen_complete(3);
  auto all = [](NodeId) { return true; };
  auto s = BucketEdgeSampler::from_predicate(g, all);
  Rng rng(21);
  std::map<Edge, int> hits;
  constexpr int kDraws = 300000;
  for (int i = 0; i < kDraws; ++i) ++hits[s.sample(g, all, rng)->undirected()];
  ASSERT_EQ(hits.size(), 3u);
  for (const auto& [e, c] : hits) EXPECT_NEAR(c / static_cast<double>(kDraws), 1.0 / 3.0, 0.01);
}

// A star with the center outside the bucket next to a clique inside it: the
// single-sided and double-sided edges must come out at the same rate.
TEST(EdgeSampler, OrientationCorrection) {
  std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {4, 5}, {4, 6}, {5, 6}};
  Graph g = Graph::from_edge_list(7, edges);
  auto in_bucket = [](NodeId v) { return v != 0; };
  Rng rng(5);
  EXPECT_LT(tv_from_uniform(g, in_bucket, 100000, rng), 0.02);
}

TEST(EdgeSampler, RandomSmallInstancesAreUniform) {
  Rng rng(77);
  for (int trial = 0; trial < 8; ++trial) {
    Graph g = gen_gnp(30, 0.1 + 0.15 * rng.uniform(), rng);
    std::vector<char> mark(30);
    for (auto& m : mark) m = rng.bernoulli(0.5);
    auto in_bucket = [&](NodeId v) { return mark[v] != 0; };
    bool any = false;
    g.for_each_edge([&](NodeId u, NodeId v) { any |= in_bucket(u) || in_bucket(v); });
    if (!any) continue;
    EXPECT_LT(tv_from_uniform(g, in_bucket, 100000, rng), 0.02) << "trial " << trial;
  }
}

TEST(EdgeSampler, FarEndpointReadLive) {
  // 0-1 edge; both start in bucket 0. Once the predicate drops node 1 the
  // sampler must stop halving the edge without being rebuilt.
  Graph g = Graph::from_edge_list(2, std::vector<Edge>{{0, 1}});
  std::vector<char> mark{1, 1};
  auto in_bucket = [&](NodeId v) { return mark[v] != 0; };
  auto s = BucketEdgeSampler::from_predicate(g, in_bucket);
  s.remove_node(1);
  mark[1] = 0;
  Rng rng(3);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(*s.sample(g, in_bucket, rng), (OrientedEdge{0, 1}));
}

TEST(EdgeSampler, StuckSignalsBrokenInvariant) {
  // Stage 2 can only spin forever if group degrees disagree with the graph.
  // Force that by sampling against a graph where the grouped node is isolated.
  Graph big = gen_star(64);
  Graph tiny = Graph::from_edge_list(64, std::vector<Edge>{{1, 2}});
  auto only0 = [](NodeId v) { return v == 0; };
  auto s = BucketEdgeSampler::from_predicate(big, only0);
  Rng rng(1);
  try {
    s.sample(tiny, only0, rng);
    FAIL() << "expected SamplerStuck";
  } catch (const SamplerError& e) {
    EXPECT_EQ(e.kind(), SamplerError::Kind::SamplerStuck);
  }
}
