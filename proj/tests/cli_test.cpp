#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tsing/cli.hpp"

namespace tsing {
namespace {

namespace fs = std::filesystem;

std::string data(const std::string& name) { return std::string(TSING_DATA_DIR) + "/" + name; }

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "tsing");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::current_path() / "cli_scratch" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(RandomBody, NoHarmonicsGivesDisk) {
  FuzzConfig cfg;
  cfg.max_harmonic = 0;
  SplitMix64 rng(3);
  const SupportBody b = random_body(rng, cfg);
  EXPECT_TRUE(b.shape().harmonics.empty());
  EXPECT_DOUBLE_EQ(b.rho_min(), b.shape().a0);
  for (int k = 0; k < 16; ++k) EXPECT_DOUBLE_EQ(b.support(0.4 * k), b.shape().a0);
}

TEST(RandomBody, RespectsCurvatureFloor) {
  for (double floor : {0.05, 0.1, 0.5}) {
    FuzzConfig cfg;
    cfg.rho_floor = floor;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      SplitMix64 rng(seed);
      const SupportBody b = random_body(rng, cfg);
      EXPECT_GE(validate(b.shape()), floor - 1e-12);
    }
  }
}

TEST(RandomBody, SeedReplaysBytes) {
  FuzzConfig cfg;
  SplitMix64 a(42), b(42);
  EXPECT_EQ(to_json(random_body(a, cfg)).dump(), to_json(random_body(b, cfg)).dump());
}

TEST(RandomArrangement, SmallPairOverlaps) {
  FuzzConfig cfg;
  cfg.n_min = cfg.n_max = 2;
  SplitMix64 rng(5);
  const SupportBody body = random_body(rng, cfg);
  const Arrangement arr = random_arrangement(rng, cfg, body);
  EXPECT_EQ(arr.size(), 2u);
  EXPECT_EQ(intersect(arr).status, IntersectionStatus::ProperBody);
}

TEST(RandomArrangement, AcceptedDrawsSatisfyHypotheses) {
  FuzzConfig cfg;
  for (std::uint64_t t = 0; t < 20; ++t) {
    SplitMix64 rng = SplitMix64::stream(77, t);
    const SupportBody body = random_body(rng, cfg);
    const Arrangement arr = random_arrangement(rng, cfg, body);
    EXPECT_GE(arr.size(), static_cast<std::size_t>(cfg.n_min));
    EXPECT_LE(arr.size(), static_cast<std::size_t>(cfg.n_max));
    EXPECT_NO_THROW(verify_theorem(arr, true));
  }
}

TEST(RandomArrangement, SeedReplaysBytes) {
  FuzzConfig cfg;
  auto draw = [&] {
    SplitMix64 rng(9);
    const SupportBody body = random_body(rng, cfg);
    return to_json(random_arrangement(rng, cfg, body)).dump();
  };
  EXPECT_EQ(draw(), draw());
}

TEST(FuzzConfig, RejectsBadRanges) {
  FuzzConfig cfg;
  cfg.n_min = 1;
  EXPECT_THROW(cfg.check(), GeometryError);
  cfg = {};
  cfg.n_min = 5;
  cfg.n_max = 3;
  EXPECT_THROW(cfg.check(), GeometryError);
  cfg = {};
  cfg.rho_floor = 0.0;
  EXPECT_THROW(cfg.check(), GeometryError);
}

TEST(Json, BodyRoundTrip) {
  const SupportBody b(SupportFunction{1.3, {{0.01, -0.02}, {0.1, 0.05}}}, {0.25, -1.5}, Angle(0.7));
  const SupportBody back = body_from_json(json::parse(to_json(b).dump()));
  EXPECT_EQ(back.shape(), b.shape());
  EXPECT_EQ(back.center(), b.center());
  EXPECT_EQ(back.rotation(), b.rotation());
}

TEST(Json, ArrangementRoundTrip) {
  const Arrangement arr = arrangement_from_json(cli::read_json_file(data("pentagon_of_ovals.json")));
  const Arrangement back = arrangement_from_json(json::parse(to_json(arr).dump()));
  EXPECT_EQ(back.shape(), arr.shape());
  EXPECT_EQ(back.translations(), arr.translations());
  EXPECT_EQ(back.rotation(), arr.rotation());
}

TEST(Json, ArrangementBodyMustNotCarryCenter) {
  const json j = {{"body", {{"a0", 1.0}, {"center", {1.0, 0.0}}}}, {"translations", {{0, 0}, {1, 0}}}};
  EXPECT_THROW(arrangement_from_json(j), GeometryError);
}

TEST(Json, MalformedInput) {
  EXPECT_THROW(body_from_json(json::array()), GeometryError);
  EXPECT_THROW(body_from_json({{"harmonics", json::array()}}), GeometryError);
  EXPECT_THROW(body_from_json({{"a0", 1.0}, {"harmonics", {{1.0}}}}), GeometryError);
  EXPECT_THROW(body_from_json({{"a0", "one"}}), GeometryError);
}

TEST(Json, ReportSchema) {
  const VerificationReport r = verify_theorem(arrangement_from_json(cli::read_json_file(data("reuleaux.json"))), true);
  const json j = to_json(r);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["vertex_count"], 3);
  EXPECT_EQ(j["status"], "ProperBody");
  EXPECT_EQ(j["vertices"].size(), 3u);
  EXPECT_EQ(j["edges"].size(), 3u);
  EXPECT_EQ(j["pairs"].size(), 6u);
  EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(Cli, VerifyReuleaux) {
  const CliRun r = run_cli({"verify", data("reuleaux.json")});
  EXPECT_EQ(r.code, cli::kExitPass) << r.err;
  EXPECT_TRUE(json::parse(r.out)["pass"].get<bool>());
}

TEST(Cli, VerifyDemoArrangement) {
  const CliRun r = run_cli({"verify", data("pentagon_of_ovals.json")});
  EXPECT_EQ(r.code, cli::kExitPass) << r.err << r.out;
  EXPECT_EQ(json::parse(r.out)["vertex_count"], 5);
}

TEST(Cli, VerifyRedundantFails) {
  const CliRun r = run_cli({"verify", data("redundant_disks.json")});
  EXPECT_EQ(r.code, cli::kExitFail);
  const json j = json::parse(r.out);
  EXPECT_FALSE(j["pass"].get<bool>());
  const std::string error = j["error"];
  EXPECT_NE(error.find("HypothesisViolated"), std::string::npos) << error;
  EXPECT_NE(error.find("redundant"), std::string::npos) << error;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"verify"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"verify", "/nonexistent/arrangement.json"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"fuzz", "--n-range", "1", "3"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"chords", data("oval.json")}).code, cli::kExitUsage);
}

TEST(Cli, FuzzSmallCampaignIsDeterministic) {
  const CliRun a = run_cli({"fuzz", "--seed", "3", "--trials", "5"});
  const CliRun b = run_cli({"fuzz", "--seed", "3", "--trials", "5"});
  ASSERT_EQ(a.code, cli::kExitPass) << a.err;
  EXPECT_EQ(a.out, b.out);
  const json j = json::parse(a.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["summary"]["passes"], 5);
  EXPECT_EQ(j["trials"].size(), 5u);
  EXPECT_EQ(j["config"]["seed"], 3);
}

TEST(Cli, FuzzWritesReportFile) {
  const fs::path dir = scratch("fuzz");
  const CliRun r = run_cli({"fuzz", "--seed", "4", "--trials", "3", "--n-range", "2", "3", "--out",
                            (dir / "report.json").string()});
  EXPECT_EQ(r.code, cli::kExitPass) << r.err;
  EXPECT_EQ(r.out, "3/3 trials pass\n");
  const json j = json::parse(slurp(dir / "report.json"));
  for (const auto& t : j["trials"]) {
    EXPECT_GE(t["n"].get<int>(), 2);
    EXPECT_LE(t["n"].get<int>(), 3);
  }
}

TEST(Cli, Chords) {
  const fs::path dir = scratch("chords");
  const CliRun r =
      run_cli({"chords", data("oval.json"), "--w", "0", "--samples", "11", "--svg", (dir / "c.svg").string()});
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["samples"].size(), 11u);
  // the oval's widest chord perpendicular to w = 0 is its vertical axis through the center
  EXPECT_NEAR(j["t_max"].get<double>(), 0.5, 1e-8);
  EXPECT_NEAR(j["eta"].get<double>(), 2.0 * (1.5 - 0.3), 1e-9);
  const std::string svg = slurp(dir / "c.svg");
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Cli, Plot) {
  const fs::path dir = scratch("plot");
  const CliRun r = run_cli({"plot", data("reuleaux.json"), "--out", (dir / "r.svg").string()});
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  const std::string svg = slurp(dir / "r.svg");
  std::size_t markers = 0;
  for (std::size_t at = svg.find("<circle"); at != std::string::npos; at = svg.find("<circle", at + 1)) ++markers;
  EXPECT_EQ(markers, 3u);
}

TEST(Cli, Gallery) {
  const fs::path dir = scratch("gallery");
  const CliRun r = run_cli({"gallery", "--out", dir.string()});
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  std::size_t svgs = 0;
  for (const auto& e : fs::directory_iterator(dir)) svgs += e.path().extension() == ".svg";
  EXPECT_EQ(svgs, 7u);
  const json summary = json::parse(slurp(dir / "summary.json"));
  ASSERT_EQ(summary["scenarios"].size(), 7u);
  for (const auto& s : summary["scenarios"]) EXPECT_TRUE(s["pass"].get<bool>()) << s.dump();
}

TEST(Svg, WellFormedShape) {
  SvgFigure fig;
  fig.outline({{0, 0}, {1, 0}, {0, 1}}, "#000");
  fig.marker({0.5, 0.5}, "#f00");
  fig.label({0, 0}, "a<b & c");
  const std::string s = fig.str();
  EXPECT_NE(s.find("viewBox"), std::string::npos);
  EXPECT_NE(s.find("a&lt;b &amp; c"), std::string::npos);
  EXPECT_EQ(s.find("nan"), std::string::npos);
}

}  // namespace
}  // namespace tsing
