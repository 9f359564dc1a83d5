#pragma once

// Fuzz campaign: random arrangements satisfying every hypothesis, each checked
// analytically and against the tagged-clipping oracle.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tsing/intersection.hpp"
#include "tsing/json_io.hpp"
#include "tsing/oracle.hpp"
#include "tsing/random.hpp"

namespace tsing {

inline constexpr double kOracleVertexTolerance = 1e-3;

struct TrialRecord {
  std::size_t index = 0;
  std::string digest;
  json arrangement;
  std::size_t n = 0;
  std::size_t vertex_count = 0;
  std::size_t oracle_count = 0;
  double oracle_distance = INFINITY;
  double normal_margin = INFINITY;   // min over vertices, distance from {0, pi}
  double pair_margin = INFINITY;     // min outside measure minus pi
  double edge_margin = INFINITY;     // min pi minus edge measure
  double partition_residual = INFINITY;
  bool theorem_pass = false;
  bool oracle_pass = false;
  std::vector<std::string> flags;
  std::string error;
  bool pass = false;
};

struct FuzzSummary {
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::size_t theorem_passes = 0;
  std::size_t oracle_passes = 0;
  double min_normal_margin = INFINITY;
  double min_pair_margin = INFINITY;
  double min_edge_margin = INFINITY;
  double max_partition_residual = 0.0;
  double max_oracle_distance = 0.0;
};

struct FuzzReport {
  FuzzConfig config;
  std::vector<TrialRecord> records;
  FuzzSummary summary;

  bool all_pass() const { return summary.passes == summary.trials; }
};

inline TrialRecord run_trial(const FuzzConfig& cfg, std::size_t index) {
  TrialRecord rec;
  rec.index = index;
  SplitMix64 rng = SplitMix64::stream(cfg.seed, index);
  try {
    const SupportBody body = random_body(rng, cfg);
    const Arrangement arr = random_arrangement(rng, cfg, body);
    rec.arrangement = to_json(arr);
    rec.digest = digest(rec.arrangement);
    rec.n = arr.size();

    IntersectionShape shape;
    const VerificationReport rep = verify_theorem(arr, true, &shape);
    rec.vertex_count = rep.vertex_count;
    rec.normal_margin = rep.min_normal_margin();
    rec.pair_margin = rep.min_pair_margin();
    rec.edge_margin = rep.min_edge_margin();
    rec.partition_residual = rep.partition_residual;
    rec.flags = rep.flags;
    rec.theorem_pass = rep.pass;

    const std::vector<Vec2> oracle = oracle_singularities(oracle_intersection(arr.bodies()));
    std::vector<Vec2> analytic;
    for (const auto& v : shape.vertices) analytic.push_back(v.point);
    rec.oracle_count = oracle.size();
    rec.oracle_distance = hausdorff(analytic, oracle);
    rec.oracle_pass = oracle.size() == analytic.size() && rec.oracle_distance < kOracleVertexTolerance;
  } catch (const GeometryError& e) {
    rec.error = e.what();
  }
  rec.pass = rec.error.empty() && rec.theorem_pass && rec.oracle_pass && rec.flags.empty();
  return rec;
}

inline FuzzReport run_fuzz(const FuzzConfig& cfg) {
  cfg.check();
  FuzzReport report;
  report.config = cfg;
  FuzzSummary& s = report.summary;
  for (int i = 0; i < cfg.trials; ++i) {
    TrialRecord rec = run_trial(cfg, static_cast<std::size_t>(i));
    ++s.trials;
    s.passes += rec.pass;
    s.theorem_passes += rec.theorem_pass;
    s.oracle_passes += rec.oracle_pass;
    s.min_normal_margin = std::min(s.min_normal_margin, rec.normal_margin);
    s.min_pair_margin = std::min(s.min_pair_margin, rec.pair_margin);
    s.min_edge_margin = std::min(s.min_edge_margin, rec.edge_margin);
    if (std::isfinite(rec.partition_residual)) {
      s.max_partition_residual = std::max(s.max_partition_residual, rec.partition_residual);
    }
    if (std::isfinite(rec.oracle_distance)) {
      s.max_oracle_distance = std::max(s.max_oracle_distance, rec.oracle_distance);
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

inline json to_json(const FuzzConfig& c) {
  return {{"seed", c.seed},
          {"trials", c.trials},
          {"n_range", json::array({c.n_min, c.n_max})},
          {"max_harmonic", c.max_harmonic},
          {"coefficient_cap", c.coefficient_cap},
          {"rho_floor", c.rho_floor},
          {"min_feature_measure", c.min_feature_measure}};
}

inline json to_json(const FuzzReport& r) {
  json trials = json::array();
  for (const auto& t : r.records) {
    json j = {{"index", t.index},
              {"digest", t.digest},
              {"n", t.n},
              {"vertex_count", t.vertex_count},
              {"oracle_count", t.oracle_count},
              {"margins",
               {{"normal", finite_or_null(t.normal_margin)},
                {"outside_measure", finite_or_null(t.pair_margin)},
                {"edge_measure", finite_or_null(t.edge_margin)},
                {"partition_residual", finite_or_null(t.partition_residual)},
                {"oracle_distance", finite_or_null(t.oracle_distance)}}},
              {"flags", t.flags},
              {"pass", t.pass}};
    if (!t.pass) {
      j["arrangement"] = t.arrangement;
      if (!t.error.empty()) j["error"] = t.error;
    }
    trials.push_back(std::move(j));
  }
  const FuzzSummary& s = r.summary;
  return {{"schema", 1},
          {"config", to_json(r.config)},
          {"trials", trials},
          {"summary",
           {{"trials", s.trials},
            {"passes", s.passes},
            {"failures", s.trials - s.passes},
            {"theorem_passes", s.theorem_passes},
            {"oracle_passes", s.oracle_passes},
            {"min_normal_margin", finite_or_null(s.min_normal_margin)},
            {"min_outside_measure_margin", finite_or_null(s.min_pair_margin)},
            {"min_edge_measure_margin", finite_or_null(s.min_edge_margin)},
            {"max_partition_residual", s.max_partition_residual},
            {"max_oracle_distance", s.max_oracle_distance}}}};
}

}  // namespace tsing
