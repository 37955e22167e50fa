#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "spor/generators.hpp"
#include "spor/verify.hpp"

using namespace spor;

TEST(CheckSpanning, Examples) {
  Graph k5 = gen_complete(5);
  EXPECT_TRUE(check_spanning(k5.edges(), k5).pass);

  Graph pair = gen_path(2);
  auto rep = check_spanning(std::vector<Edge>{}, pair);
  EXPECT_FALSE(rep.pass);
  ASSERT_EQ(rep.witnesses.size(), 1u);
  EXPECT_EQ(rep.witnesses[0], (Edge{0, 1}));

  std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  rep = check_spanning(star, k5);
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.h_edges, 4u);
  EXPECT_EQ(rep.h_components, 1u);
}

TEST(CheckSpanning, RejectsForeignEdges) {
  Graph g = gen_path(3);
  try {
    check_spanning(std::vector<Edge>{{0, 2}}, g);
    FAIL() << "expected VerifyError";
  } catch (const VerifyError& e) {
    EXPECT_EQ(e.edge(), (Edge{0, 2}));
  }
}

TEST(CheckKCertificate, Examples) {
  Graph k4 = gen_complete(4);
  for (std::size_t k = 1; k <= 4; ++k) EXPECT_TRUE(check_k_certificate(k4.edges(), k4, k).pass);
  std::vector<Edge> tree{{0, 1}, {1, 2}, {2, 3}};
  EXPECT_FALSE(check_k_certificate(tree, k4, 2).pass);
  std::vector<Edge> minus_one{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  EXPECT_TRUE(check_k_certificate(minus_one, k4, 2).pass);
}

TEST(CheckKCertificate, OneCertificateMatchesSpanning) {
  Rng rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = gen_gnp(15, 0.3, rng);
    std::vector<Edge> h;
    for (const Edge& e : g.edges())
      if (rng.bernoulli(0.6)) h.push_back(e);
    EXPECT_EQ(check_k_certificate(h, g, 1).pass, check_spanning(h, g).pass);
  }
}

TEST(CheckStretch, Examples) {
  Graph tri = gen_complete(3);
  EXPECT_TRUE(check_stretch(tri.edges(), tri, 1).pass);
  std::vector<Edge> two{{0, 1}, {1, 2}};
  EXPECT_TRUE(check_stretch(two, tri, 2).pass);
  auto rep = check_stretch(two, tri, 1);
  EXPECT_FALSE(rep.pass);
  ASSERT_EQ(rep.witnesses.size(), 1u);
  EXPECT_EQ(rep.witnesses[0], (Edge{0, 2}));
  EXPECT_EQ(rep.max_stretch, 2u);
}

TEST(CheckStretch, UnboundedMatchesSpanning) {
  Rng rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = gen_gnp(40, 0.1, rng);
    std::vector<Edge> h;
    for (const Edge& e : g.edges())
      if (rng.bernoulli(0.5)) h.push_back(e);
    EXPECT_EQ(check_stretch(h, g, std::nullopt).pass, check_spanning(h, g).pass);
  }
}

TEST(CheckStretch, MatchesPerEdgeBfs) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = gen_gnp(30, 0.25, rng);
    std::vector<Edge> h;
    for (const Edge& e : g.edges())
      if (rng.bernoulli(0.5)) h.push_back(e);
    const std::size_t t = 1 + rng.below(4);
    std::size_t violations = 0;
    for (const Edge& e : g.edges()) {
      const int d = brute::bfs_distance(30, h, e.u, e.v);
      violations += d < 0 || static_cast<std::size_t>(d) > t;
    }
    EXPECT_EQ(check_stretch(h, g, t).witnesses.size(), violations);
  }
}

TEST(UnitFlow, MatchesCutEnumeration) {
  Rng rng(4);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 4 + rng.below(9);
    Graph g = gen_gnp(n, 0.2 + 0.6 * rng.uniform(), rng);
    UnitFlow flow(g);
    auto edges = g.edges();
    for (NodeId s = 0; s < n; ++s) {
      for (NodeId t = s + 1; t < n; ++t) {
        EXPECT_EQ(flow.max_flow(s, t), brute::min_st_cut(n, edges, s, t));
      }
    }
  }
}

TEST(UnitFlow, CapStopsEarly) {
  Graph g = gen_complete(10);
  EXPECT_EQ(local_edge_connectivity(g, 0, 9), 9u);
  EXPECT_EQ(UnitFlow(g).max_flow(0, 9, 3), 3u);
}

TEST(Baseline, Examples) {
  Graph g = gen_complete(6);
  auto one = baseline_sparse_certificate(g, 1);
  EXPECT_EQ(one.size(), 5u);
  EXPECT_TRUE(check_spanning(one, g).pass);

  Rng rng(5);
  Graph tree = gen_random_tree(30, rng);
  EXPECT_EQ(baseline_sparse_certificate(tree, 2).size(), 29u);

  Graph k4 = gen_complete(4);
  auto two = baseline_sparse_certificate(k4, 2);
  EXPECT_GE(two.size(), 5u);
  EXPECT_LE(two.size(), 6u);
  EXPECT_TRUE(check_k_certificate(two, k4, 2).pass);
}

TEST(Baseline, AlwaysACertificate) {
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = gen_gnp(25, 0.3, rng);
    for (std::size_t k = 1; k <= 3; ++k) {
      auto h = baseline_sparse_certificate(g, k);
      EXPECT_LE(h.size(), k * 24);
      EXPECT_TRUE(check_k_certificate(h, g, k).pass);
    }
  }
}
