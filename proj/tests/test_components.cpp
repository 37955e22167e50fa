#include <gtest/gtest.h>

#include <chrono>

#include "brute_force.hpp"
#include "spor/components.hpp"
#include "spor/rng.hpp"

using namespace spor;

TEST(ComponentForest, FreshAndSimpleUnions) {
  ComponentForest f(10);
  for (NodeId v = 0; v < 10; ++v) EXPECT_EQ(f.find(v), v);
  EXPECT_FALSE(f.unite(4, 4));
  EXPECT_TRUE(f.unite(0, 1));
  EXPECT_EQ(f.find(0), f.find(1));
  EXPECT_FALSE(f.unite(1, 0));
  for (NodeId v = 1; v < 10; ++v) f.unite(v - 1, v);
  for (NodeId v = 0; v < 10; ++v) EXPECT_EQ(f.find(v), f.find(0));
  EXPECT_EQ(f.component_size(7), 10u);
  EXPECT_EQ(f.num_components(), 1u);
}

TEST(ComponentForest, TiesGoToSmallerRootId) {
  ComponentForest f(4);
  f.unite(3, 2);
  EXPECT_EQ(f.find(3), 2u);
  f.unite(1, 0);
  f.unite(2, 0);
  EXPECT_EQ(f.find(3), 0u);
}

TEST(ComponentForest, BucketsFollowSizes) {
  ComponentForest f(8);
  EXPECT_EQ(f.bucket(0), 0u);
  f.unite(0, 1);
  f.unite(1, 2);  // size 3
  for (NodeId v = 4; v < 8; ++v) f.unite(3, v);  // size 5
  EXPECT_EQ(f.bucket(0), 1u);
  EXPECT_EQ(f.bucket(3), 2u);
  EXPECT_TRUE(f.unite(2, 7));
  EXPECT_EQ(f.component_size(0), 8u);
  EXPECT_EQ(f.bucket(5), 3u);

  ComponentForest g(8);
  for (NodeId v = 1; v < 7; ++v) g.unite(0, v);
  EXPECT_EQ(g.bucket(0), 2u);  // size 7
  g.unite(0, 7);
  EXPECT_EQ(g.bucket(0), 3u);  // size 8
}

TEST(ComponentForest, MembersListCoversComponent) {
  ComponentForest f(6);
  f.unite(0, 3);
  f.unite(5, 3);
  std::vector<NodeId> members;
  f.for_each_member(3, [&](NodeId v) { members.push_back(v); });
  std::sort(members.begin(), members.end());
  EXPECT_EQ(members, (std::vector<NodeId>{0, 3, 5}));
}

TEST(ComponentForest, MergeLogOnlyWhenRequested) {
  ComponentForest quiet(4);
  quiet.unite(0, 1);
  EXPECT_TRUE(quiet.merge_log().empty());
  ComponentForest loud(4, true);
  loud.unite(0, 1);
  loud.unite(0, 1);
  ASSERT_EQ(loud.merge_log().size(), 1u);
  EXPECT_EQ(loud.merge_log()[0].root, 0u);
  EXPECT_EQ(loud.merge_log()[0].absorbed, 1u);
}

TEST(ComponentForest, PartitionMatchesBfs) {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(200);
    ComponentForest f(n);
    std::vector<Edge> unions;
    const std::size_t ops = rng.below(2 * n);
    for (std::size_t i = 0; i < ops; ++i) {
      auto a = static_cast<NodeId>(rng.below(n));
      auto b = static_cast<NodeId>(rng.below(n));
      f.unite(a, b);
      if (a != b) unions.push_back(Edge::canonical(a, b));
    }
    std::vector<int> uf_label(n);
    std::size_t size_sum = 0;
    for (NodeId v = 0; v < n; ++v) {
      uf_label[v] = static_cast<int>(f.find(v));
      EXPECT_EQ(f.find(f.find(v)), f.find(v));
      if (f.find(v) == v) size_sum += f.component_size(v);
    }
    EXPECT_EQ(size_sum, n);
    EXPECT_TRUE(brute::same_partition(uf_label, brute::bfs_labels(n, unions)));
    f.compress_all();
    for (NodeId v = 0; v < n; ++v) EXPECT_EQ(f.find_const(v), f.find(v));
  }
}

TEST(ComponentForest, MillionOpsAreFast) {
  constexpr std::size_t n = 100000;
  ComponentForest f(n);
  Rng rng(1);
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t sink = 0;
  for (int i = 0; i < 1000000; ++i) {
    auto a = static_cast<NodeId>(rng.below(n));
    auto b = static_cast<NodeId>(rng.below(n));
    if (i % 2) {
      f.unite(a, b);
    } else {
      sink += f.find(a);
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_LT(secs, 1.0) << "sink " << sink;
}
