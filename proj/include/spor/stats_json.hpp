#pragma once

#include <json.hpp>

#include "spor/cluster_spanner.hpp"
#include "spor/kcc_oracle.hpp"
#include "spor/spanner_bs.hpp"
#include "spor/sss_oracle.hpp"
#include "spor/verify.hpp"

namespace spor {

inline constexpr int kStatsSchema = 1;

inline nlohmann::json edge_json(const Edge& e) { return nlohmann::json::array({e.u, e.v}); }

inline nlohmann::json to_json(const BucketStats& s) {
  return {{"bucket", s.bucket},         {"threshold", s.threshold}, {"samples", s.samples},
          {"successes", s.successes},   {"failures", s.failures},   {"deleted", s.deleted},
          {"run_length", s.run_length}, {"exhausted", s.exhausted}};
}

inline nlohmann::json to_json(const SssOracle& o) {
  nlohmann::json buckets = nlohmann::json::array();
  for (const auto& b : o.stats().buckets) buckets.push_back(to_json(b));
  return {{"buckets", buckets}, {"recorded_edges", o.recorded_edges().size()}};
}

inline nlohmann::json to_json(const KccOracle& o) {
  nlohmann::json layers = nlohmann::json::array();
  for (const auto& layer : o.layers()) layers.push_back(to_json(layer));
  return {{"k", o.k()}, {"layers", layers}};
}

template <RecordRule Rule>
nlohmann::json to_json(const ClusterSpannerOracle<Rule>& o) {
  nlohmann::json buckets = nlohmann::json::array();
  for (const auto& s : o.stats()) {
    buckets.push_back({{"index", s.index},
                       {"lower", s.lower},
                       {"centers", s.centers},
                       {"clustered", s.clustered},
                       {"recorded_edges", s.recorded_edges},
                       {Rule == RecordRule::VertexCluster ? "adjacency_records" : "cluster_pair_records",
                        s.adjacency_records},
                       {"assignment", s.scanned_centers ? "center-scan" : "neighbor-probe"}});
  }
  return {{"pass_through", o.pass_through()}, {"stretch", o.kStretch}, {"buckets", buckets}};
}

inline nlohmann::json to_json(const BsOracle& o) {
  nlohmann::json rounds = nlohmann::json::array();
  for (const auto& r : o.stats()) {
    rounds.push_back({{"round", r.round},
                      {"live_clusters", r.live_clusters},
                      {"selected_clusters", r.selected_clusters},
                      {"reclustered", r.reclustered},
                      {"finalized", r.finalized},
                      {"recorded_edges", r.recorded_edges}});
  }
  return {{"k", o.k()}, {"stretch", 2 * o.k() - 1}, {"rounds", rounds},
          {"recorded_edges", o.recorded_edges().size()}};
}

inline nlohmann::json to_json(const VerificationReport& r, std::size_t max_witnesses = 20) {
  nlohmann::json w = nlohmann::json::array();
  for (std::size_t i = 0; i < r.witnesses.size() && i < max_witnesses; ++i) {
    w.push_back(edge_json(r.witnesses[i]));
  }
  return {{"property", r.property},         {"pass", r.pass},
          {"witness_count", r.witnesses.size()}, {"witnesses", w},
          {"h_edges", r.h_edges},           {"g_components", r.g_components},
          {"h_components", r.h_components}, {"max_stretch", r.max_stretch}};
}

}  // namespace spor
