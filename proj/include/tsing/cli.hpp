#pragma once

// Command-line front end. Exit codes: 0 all requested checks pass, 1 a check
// failed, 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tsing/chords.hpp"
#include "tsing/fuzz.hpp"
#include "tsing/gallery.hpp"
#include "tsing/intersection.hpp"
#include "tsing/json_io.hpp"
#include "tsing/oracle.hpp"
#include "tsing/svg.hpp"

namespace tsing::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kFigureResolution = 512;
inline const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                       "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

inline const char* color(std::size_t i) { return kPalette[i % std::size(kPalette)]; }

inline std::string arrangement_svg(const Arrangement& arr, const IntersectionShape& shape) {
  SvgFigure fig;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    fig.outline(polygonize(arr.body(i), kFigureResolution).vertices, color(i));
  }
  const TaggedPolygon inter = oracle_intersection(arr.bodies(), kFigureResolution);
  if (!inter.empty()) fig.filled(inter.vertices, "#444444");
  for (const auto& v : shape.vertices) fig.marker(v.point, "#d62728");
  if (shape.single_point) fig.marker(*shape.single_point, "#d62728");
  return fig.str();
}

inline std::string scenario_svg(const Scenario& s, const ScenarioResult& r) {
  SvgFigure fig;
  const std::vector<TaggedPolygon> polys = scenario_polygons(s, kFigureResolution);
  for (std::size_t i = 0; i < polys.size(); ++i) fig.outline(polys[i].vertices, color(i));
  const TaggedPolygon inter = clip_all(polys);
  if (!inter.empty()) fig.filled(inter.vertices, "#444444");
  for (Vec2 p : r.points) fig.marker(p, "#d62728");
  return fig.str();
}

inline std::string chord_svg(const ChordProfile& prof, const std::vector<ChordSample>& samples) {
  SvgFigure fig;
  const double width = 2.0 * prof.eta;  // t in [0, 1] drawn over twice the peak height
  std::vector<Vec2> graph;
  for (const auto& s : samples) graph.push_back({s.t * width, s.length});
  fig.polyline({{0.0, 0.0}, {width, 0.0}}, "#7f7f7f");
  fig.polyline({{0.0, 0.0}, {0.0, 1.05 * prof.eta}}, "#7f7f7f");
  fig.polyline(graph, "#1f77b4");
  fig.marker({prof.t_max * width, prof.eta}, "#d62728");
  return fig.str();
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GeometryError(ErrorCode::BadInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw GeometryError(ErrorCode::BadInput, path + ": " + e.what());
  }
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GeometryError(ErrorCode::BadInput, "cannot write " + path.string());
  out << text;
}

inline int cmd_verify(const std::string& path, std::ostream& out) {
  const Arrangement arr = arrangement_from_json(read_json_file(path));
  try {
    const VerificationReport rep = verify_theorem(arr, true);
    out << to_json(rep).dump(2) << '\n';
    return rep.pass ? kExitPass : kExitFail;
  } catch (const GeometryError& e) {
    if (e.code() != ErrorCode::HypothesisViolated) throw;
    out << json{{"schema", 1}, {"pass", false}, {"error", e.what()}}.dump(2) << '\n';
    return kExitFail;
  }
}

inline int cmd_fuzz(const FuzzConfig& cfg, const std::string& out_path, std::ostream& out) {
  const FuzzReport report = run_fuzz(cfg);
  const std::string text = to_json(report).dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
    const auto& s = report.summary;
    out << s.passes << "/" << s.trials << " trials pass\n";
  }
  return report.all_pass() ? kExitPass : kExitFail;
}

inline int cmd_gallery(const std::string& dir, std::ostream& out) {
  json summary = json::array();
  bool all = true;
  for (auto name : kScenarioNames) {
    const Scenario s = scenario(name);
    const ScenarioResult r = run_scenario(s);
    write_file(std::filesystem::path(dir) / (s.name + ".svg"), scenario_svg(s, r));
    json points = json::array();
    for (Vec2 p : r.points) points.push_back(to_json(p));
    summary.push_back({{"scenario", r.name},
                       {"violated", to_string(r.declared)},
                       {"expected", r.expected},
                       {"actual", r.actual},
                       {"oracle", r.oracle >= 0 ? json(r.oracle) : json(nullptr)},
                       {"analytic", r.analytic >= 0 ? json(r.analytic) : json(nullptr)},
                       {"points", points},
                       {"flags", r.flags},
                       {"pass", r.pass}});
    all = all && r.pass;
  }
  const std::string text = json{{"schema", 1}, {"scenarios", summary}}.dump(2) + "\n";
  write_file(std::filesystem::path(dir) / "summary.json", text);
  out << text;
  return all ? kExitPass : kExitFail;
}

inline int cmd_chords(const std::string& path, double w, int samples, const std::string& svg_path,
                      std::ostream& out) {
  const SupportBody body = body_from_json(read_json_file(path));
  const ChordProfile prof = max_chord(body, Angle(w));
  const std::vector<ChordSample> pts = chord_profile_samples(prof, samples);
  json arr = json::array();
  for (const auto& s : pts) arr.push_back(json::array({s.t, s.length}));
  out << json{{"w", prof.w.radians()}, {"t_max", prof.t_max}, {"eta", prof.eta}, {"samples", arr}}.dump(2)
      << '\n';
  if (!svg_path.empty()) write_file(svg_path, chord_svg(prof, pts));
  return kExitPass;
}

inline int cmd_plot(const std::string& path, const std::string& svg_path, std::ostream& out) {
  const Arrangement arr = arrangement_from_json(read_json_file(path));
  const IntersectionShape shape = intersect(arr);
  write_file(svg_path, arrangement_svg(arr, shape));
  out << "wrote " << svg_path << " (" << shape.vertices.size() << " singular points)\n";
  return kExitPass;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"Singularities of intersections of translates of a smooth strictly convex body"};
  app.require_subcommand(1);

  std::string input;
  auto* verify = app.add_subcommand("verify", "check the singularity count on an arrangement");
  verify->add_option("arrangement", input, "arrangement JSON")->required();

  FuzzConfig cfg;
  std::string fuzz_out;
  std::vector<int> n_range{cfg.n_min, cfg.n_max};
  auto* fuzz = app.add_subcommand("fuzz", "random campaign, JSON report");
  fuzz->add_option("--seed", cfg.seed, "campaign seed");
  fuzz->add_option("--trials", cfg.trials, "number of arrangements");
  fuzz->add_option("--n-range", n_range, "min and max translate count")->expected(2);
  fuzz->add_option("--max-harmonic", cfg.max_harmonic, "highest Fourier order");
  fuzz->add_option("--rho-floor", cfg.rho_floor, "certified curvature floor");
  fuzz->add_option("--out", fuzz_out, "write the report here instead of stdout");

  std::string gallery_dir = "gallery";
  auto* gallery = app.add_subcommand("gallery", "run the counterexample gallery");
  gallery->add_option("--out", gallery_dir, "output directory for SVGs and summary.json");

  double w = 0.0;
  int samples = 201;
  std::string chord_svg_path = "chords.svg";
  auto* chords = app.add_subcommand("chords", "chord-length profile perpendicular to w");
  chords->add_option("body", input, "body JSON")->required();
  chords->add_option("--w", w, "direction angle in radians")->required();
  chords->add_option("--samples", samples, "number of samples")->check(CLI::Range(2, 1000000));
  chords->add_option("--svg", chord_svg_path, "SVG output path (empty to skip)");

  std::string plot_path = "plot.svg";
  auto* plot = app.add_subcommand("plot", "SVG of an arrangement and its singular points");
  plot->add_option("arrangement", input, "arrangement JSON")->required();
  plot->add_option("--out", plot_path, "SVG output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(input, out);
    if (*fuzz) {
      cfg.n_min = n_range[0];
      cfg.n_max = n_range[1];
      return cmd_fuzz(cfg, fuzz_out, out);
    }
    if (*gallery) return cmd_gallery(gallery_dir, out);
    if (*chords) return cmd_chords(input, w, samples, chord_svg_path, out);
    if (*plot) return cmd_plot(input, plot_path, out);
  } catch (const GeometryError& e) {
    err << e.what() << '\n';
    return e.code() == ErrorCode::BadInput || e.code() == ErrorCode::InvalidArrangement ||
                   e.code() == ErrorCode::NotStrictlyConvexOrNotSmooth ||
                   e.code() == ErrorCode::OriginNotInterior
               ? kExitUsage
               : kExitFail;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tsing::cli
