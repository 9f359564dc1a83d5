// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "tsing/cli.hpp"
#include "tsing/tsing.hpp"

using namespace tsing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(const char* name, const Outcome& o) {
  std::printf("%s  %-28s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
  std::fflush(stdout);
  failures += !o.pass;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

SupportBody body_for(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 rng = SplitMix64::stream(seed, index);
  return random_body(rng, FuzzConfig{});
}

const double kRoot3Half = std::sqrt(3.0) / 2;

Outcome main_count(const FuzzReport& rep, double seconds) {
  int exact = 0;
  for (const auto& t : rep.records) exact += t.error.empty() && t.vertex_count == t.n;
  const bool pass = exact == 200 && rep.records.size() == 200 && seconds < 120.0;
  return {pass, fmt("%.0f/%.0f trials with |sing| = n, %.1f s", exact, static_cast<double>(rep.records.size()),
                    seconds)};
}

Outcome pair_base_case() {
  int good = 0;
  double worst = 0.0;
  SplitMix64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const SupportBody b1 = body_for(2, static_cast<std::uint64_t>(i));
    const double phi = rng.uniform(0.0, kTwoPi);
    const double eta = max_chord(b1, Angle(phi + kPi / 2)).eta;
    const SupportBody b2 = b1.translated(rng.uniform(0.02, 0.98) * eta * unit(phi));
    const PairCrossing c = pair_boundary_points(b1, b2);
    if (c.kind != PairKind::TwoPoints) continue;
    double g = 0.0;
    for (Vec2 p : c.points) g = std::max({g, std::abs(b1.contains(p).gap), std::abs(b2.contains(p).gap)});
    worst = std::max(worst, g);
    good += g <= 1e-8;
  }
  const PairCrossing d = pair_boundary_points(SupportBody::disk(1.0), SupportBody::disk(1.0, {1.0, 0.0}));
  const double disk_err = hausdorff({d.points[0], d.points[1]}, {{0.5, kRoot3Half}, {0.5, -kRoot3Half}});
  return {good == 100 && disk_err <= 1e-9,
          fmt("%.0f/100 pairs, worst gap %.2e, disk error %.2e", good, worst, disk_err)};
}

Outcome two_chords() {
  int good = 0;
  double worst = 0.0;
  SplitMix64 rng(4008);
  for (int i = 0; i < 100; ++i) {
    const SupportBody b = body_for(3, static_cast<std::uint64_t>(i));
    const Angle w(rng.uniform(0.0, kTwoPi));
    const ChordProfile prof = max_chord(b, w);
    const double r = rng.uniform(0.02, 0.98) * prof.eta;
    const auto [c1, c2] = chords_of_length(prof, r);
    const double err = std::max(std::abs(c1.length - r), std::abs(c2.length - r));
    worst = std::max(worst, err);
    const std::vector<OracleChord> scan = oracle_chords(polygonize(b, kDefaultOracleResolution), w, 100000);
    int crossings = 0;
    for (std::size_t k = 1; k < scan.size(); ++k) {
      crossings += (scan[k - 1].length - r) * (scan[k].length - r) < 0.0;
    }
    good += err < 1e-9 && crossings == 2;
  }
  return {good == 100, fmt("%.0f/100 triples, worst |length - r| %.2e", good, worst)};
}

Outcome unimodal_profiles() {
  int good = 0;
  SplitMix64 rng(4067);
  for (int i = 0; i < 100; ++i) {
    const ChordProfile prof = max_chord(body_for(4, static_cast<std::uint64_t>(i)), Angle(rng.uniform(0.0, kTwoPi)));
    const auto s = chord_profile_samples(prof, 1001);
    int maxima = 0, flats = 0;
    for (std::size_t k = 1; k + 1 < s.size(); ++k) {
      maxima += s[k].length > s[k - 1].length && s[k].length > s[k + 1].length;
    }
    for (std::size_t k = 1; k < s.size(); ++k) flats += s[k].length == s[k - 1].length;
    good += maxima == 1 && flats == 0;
  }
  double disk_err = 0.0;
  for (const auto& x : chord_profile_samples(max_chord(SupportBody::disk(1.0), Angle(0.0)), 1001)) {
    const double s = 1.0 - 2.0 * x.t;
    disk_err = std::max(disk_err, std::abs(x.length - 2.0 * std::sqrt(std::max(0.0, 1.0 - s * s))));
  }
  return {good == 100 && disk_err <= 1e-6, fmt("%.0f/100 profiles, disk error %.2e", good, disk_err)};
}

Outcome margins(const FuzzReport& rep) {
  bool all = rep.records.size() == 200;
  for (const auto& t : rep.records) {
    all = all && t.error.empty() && t.normal_margin > kNormalAngleTolerance && t.pair_margin > kMeasureMargin &&
          t.edge_margin > kMeasureMargin;
  }
  const double disk =
      outside_gauss_measure(SupportBody::disk(1.0), SupportBody::disk(1.0, {1.0, 0.0})) - 4 * kPi / 3;
  const auto& s = rep.summary;
  return {all && std::abs(disk) <= 1e-9,
          fmt("normal %.3f, outside measure %.3f, edge %.3f, disk %.1e", s.min_normal_margin, s.min_pair_margin,
              s.min_edge_margin, std::abs(disk))};
}

Outcome partition(const FuzzReport& rep) {
  bool all = rep.records.size() == 200;
  for (const auto& t : rep.records) all = all && t.partition_residual <= kPartitionTolerance;
  return {all, fmt("max residual %.2e", rep.summary.max_partition_residual)};
}

Outcome oracle_equivalence(const FuzzReport& rep) {
  int good = 0;
  for (const auto& t : rep.records) {
    good += t.oracle_count == t.vertex_count && t.oracle_distance < kOracleVertexTolerance;
  }
  return {good == 200, fmt("%.0f/200 trials, max distance %.2e", good, rep.summary.max_oracle_distance)};
}

Outcome gallery() {
  const std::vector<std::pair<std::string, int>> counts = {
      {"ideal_three_disks", 3}, {"non_strict_shift", 0}, {"non_smooth_triangles", 3},
      {"non_smooth_squares", 4}, {"tangent_disks", 1},   {"redundant_disks", 2}};
  bool ok = true;
  std::string detail;
  for (const auto& r : run_gallery()) {
    int want = -1;
    for (const auto& [name, count] : counts) {
      if (name == r.name) want = count;
    }
    if (r.name == "rotated_isometry") {
      const Scenario s = scenario(r.name);
      const int recomputed = static_cast<int>(oracle_singularities(clip_all(scenario_polygons(s))).size());
      ok = ok && r.actual == kRotatedIsometryOracleCount && recomputed == kRotatedIsometryOracleCount &&
           r.actual != 2 && r.pass;
    } else {
      ok = ok && r.actual == want && r.pass;
    }
    detail += r.name + "=" + std::to_string(r.actual) + " ";
  }
  return {ok, detail};
}

Outcome determinism(const FuzzReport& rep) {
  auto run = [] {
    const char* argv[] = {"tsing", "fuzz", "--seed", "1", "--trials", "200"};
    std::ostringstream out, err;
    const int code = cli::run(6, argv, out, err);
    return std::pair{code, out.str()};
  };
  const auto [code_a, a] = run();
  const auto [code_b, b] = run();
  const bool same = a == b;
  const bool matches_library = a == to_json(rep).dump(2) + "\n";
  return {code_a == 0 && code_b == 0 && same && matches_library,
          fmt("%.0f bytes, identical %.0f, equals in-process report %.0f", static_cast<double>(a.size()), same,
              matches_library)};
}

}  // namespace

int main() {
  FuzzConfig cfg;
  cfg.seed = 1;
  cfg.trials = 200;
  const auto t0 = std::chrono::steady_clock::now();
  const FuzzReport rep = run_fuzz(cfg);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  report("main_count_fuzz", main_count(rep, seconds));
  report("pair_base_case", pair_base_case());
  report("two_chords_of_given_length", two_chords());
  report("chord_profile_unimodal", unimodal_profiles());
  report("normal_and_measure_margins", margins(rep));
  report("gauss_partition", partition(rep));
  report("oracle_equivalence", oracle_equivalence(rep));
  report("gallery_counts", gallery());
  report("fuzz_determinism", determinism(rep));
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
