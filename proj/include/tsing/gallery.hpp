#pragma once

// The sharpness gallery: one configuration per hypothesis of the singularity
// count, each breaking exactly that hypothesis, plus the ideal three-disk case.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsing/arc_body.hpp"
#include "tsing/body.hpp"
#include "tsing/error.hpp"
#include "tsing/intersection.hpp"
#include "tsing/oracle.hpp"

namespace tsing {

enum class Assumption { None, NotTranslates, NotStrictlyConvex, NotSmooth, EmptyInterior, Redundant };

inline const char* to_string(Assumption a) {
  switch (a) {
    case Assumption::None: return "None";
    case Assumption::NotTranslates: return "NotTranslates";
    case Assumption::NotStrictlyConvex: return "NotStrictlyConvex";
    case Assumption::NotSmooth: return "NotSmooth";
    case Assumption::EmptyInterior: return "EmptyInterior";
    case Assumption::Redundant: return "Redundant";
  }
  return "?";
}

inline constexpr std::array<std::string_view, 7> kScenarioNames = {
    "ideal_three_disks", "rotated_isometry", "non_strict_shift", "non_smooth_triangles",
    "non_smooth_squares", "tangent_disks", "redundant_disks"};

// Singularity count of the rotated-isometry configuration, measured once with
// the tagged-clipping oracle at the default resolution and frozen here.
inline constexpr int kRotatedIsometryOracleCount = 4;

inline constexpr double kBulgeSagitta = 0.05;

struct Scenario {
  std::string name;
  std::vector<ArcBody> arc_bodies;          // empty for rotated_isometry
  std::vector<SupportBody> support_bodies;  // filled whenever the bodies are smooth and strictly convex
  Assumption violated = Assumption::None;
  std::optional<int> expected;              // nullopt: derived from the oracle
  int derived_expected = -1;
};

inline std::vector<SupportBody> unit_disks(const std::vector<Vec2>& centers) {
  std::vector<SupportBody> out;
  for (Vec2 c : centers) out.push_back(SupportBody::disk(1.0, c));
  return out;
}

inline std::vector<ArcBody> unit_circles(const std::vector<Vec2>& centers) {
  std::vector<ArcBody> out;
  for (Vec2 c : centers) out.push_back(ArcBody::circle(c, 1.0));
  return out;
}

inline Scenario scenario(std::string_view name) {
  Scenario s;
  s.name = std::string(name);
  if (name == "ideal_three_disks") {
    const std::vector<Vec2> c = {{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}};
    s.arc_bodies = unit_circles(c);
    s.support_bodies = unit_disks(c);
    s.violated = Assumption::None;
    s.expected = 3;
  } else if (name == "rotated_isometry") {
    const SupportBody oval(SupportFunction{1.5, {{0.0, 0.0}, {0.3, 0.0}}});
    s.support_bodies = {oval, oval.rotated(0.5 * kPi).moved_to({0.4, 0.0})};
    s.violated = Assumption::NotTranslates;
    s.derived_expected = kRotatedIsometryOracleCount;
  } else if (name == "non_strict_shift") {
    const ArcBody sq = ArcBody::rounded_square(2.0, 0.25);
    s.arc_bodies = {sq, sq.translated({0.5, 0.0})};
    s.violated = Assumption::NotStrictlyConvex;
    s.expected = 0;
  } else if (name == "non_smooth_triangles") {
    const std::vector<Vec2> tri = {{0.0, 0.0}, {2.0, 0.0}, {1.0, std::sqrt(3.0)}};
    const ArcBody t = ArcBody::bulged_polygon(tri, kBulgeSagitta);
    s.arc_bodies = {t, t.translated({0.3, 0.2})};
    s.violated = Assumption::NotSmooth;
    s.expected = 3;
  } else if (name == "non_smooth_squares") {
    const std::vector<Vec2> sq = {{-1.0, -1.0}, {1.0, -1.0}, {1.0, 1.0}, {-1.0, 1.0}};
    const ArcBody b = ArcBody::bulged_polygon(sq, kBulgeSagitta);
    s.arc_bodies = {b, b.translated({0.3, 0.2})};
    s.violated = Assumption::NotSmooth;
    s.expected = 4;
  } else if (name == "tangent_disks") {
    const std::vector<Vec2> c = {{0.0, 0.0}, {2.0, 0.0}};
    s.arc_bodies = unit_circles(c);
    s.support_bodies = unit_disks(c);
    s.violated = Assumption::EmptyInterior;
    s.expected = 1;
  } else if (name == "redundant_disks") {
    const std::vector<Vec2> c = {{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.0}};
    s.arc_bodies = unit_circles(c);
    s.support_bodies = unit_disks(c);
    s.violated = Assumption::Redundant;
    s.expected = 2;
  } else {
    throw GeometryError(ErrorCode::UnknownScenario, "unknown scenario '" + std::string(name) + "'");
  }
  return s;
}

inline int expected_count(const Scenario& s) { return s.expected ? *s.expected : s.derived_expected; }

// Polygons of every body in the scenario, each tagged with its index.
inline std::vector<TaggedPolygon> scenario_polygons(const Scenario& s, int m = kDefaultOracleResolution) {
  std::vector<TaggedPolygon> out;
  if (!s.arc_bodies.empty()) {
    for (std::size_t i = 0; i < s.arc_bodies.size(); ++i) {
      out.push_back(s.arc_bodies[i].sample(m, static_cast<int>(i)));
    }
  } else {
    for (std::size_t i = 0; i < s.support_bodies.size(); ++i) {
      out.push_back(polygonize(s.support_bodies[i], m, static_cast<int>(i)));
    }
  }
  return out;
}

inline TaggedPolygon clip_all(const std::vector<TaggedPolygon>& polys, std::size_t skip = SIZE_MAX) {
  TaggedPolygon acc;
  bool first = true;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i == skip) continue;
    if (first) {
      acc = polys[i];
      first = false;
    } else {
      acc = clip(acc, polys[i], polys[i].tags.empty() ? static_cast<int>(i) : polys[i].tags[0]);
    }
  }
  return acc;
}

struct AssumptionReport {
  bool translates = false;
  bool strictly_convex = false;
  bool smooth = false;
  bool nonempty_interior = false;
  bool non_redundant = false;

  // The single assumption that fails, or None; several failing is reported as the first.
  Assumption violated() const {
    if (!translates) return Assumption::NotTranslates;
    if (!strictly_convex) return Assumption::NotStrictlyConvex;
    if (!smooth) return Assumption::NotSmooth;
    if (!nonempty_interior) return Assumption::EmptyInterior;
    if (!non_redundant) return Assumption::Redundant;
    return Assumption::None;
  }
  int failures() const {
    return !translates + !strictly_convex + !smooth + !nonempty_interior + !non_redundant;
  }
};

// Checks each hypothesis independently: curvature certificates and piece
// structure for smoothness and strict convexity, polygon areas for interior
// and redundancy.
inline AssumptionReport check_assumptions(const Scenario& s) {
  AssumptionReport r;
  if (!s.arc_bodies.empty()) {
    const auto& bodies = s.arc_bodies;
    r.translates = std::all_of(bodies.begin(), bodies.end(),
                               [&](const ArcBody& b) { return bodies[0].is_translate_of(b); });
    r.strictly_convex = std::none_of(bodies.begin(), bodies.end(),
                                     [](const ArcBody& b) { return b.has_flat_stretch(); });
    r.smooth = std::all_of(bodies.begin(), bodies.end(),
                           [](const ArcBody& b) { return b.corners().empty(); });
  } else {
    const auto& bodies = s.support_bodies;
    r.translates = std::all_of(bodies.begin(), bodies.end(),
                               [&](const SupportBody& b) { return bodies[0].is_translate_of(b); });
    // construction already certified rho_min > 0
    r.strictly_convex = r.smooth = std::all_of(bodies.begin(), bodies.end(),
                                               [](const SupportBody& b) { return b.rho_min() > 0.0; });
  }
  const std::vector<TaggedPolygon> polys = scenario_polygons(s);
  double scale = 0.0;
  for (const auto& p : polys) scale = std::max(scale, p.extent());
  const double area_eps = 1e-9 * scale * scale;
  const TaggedPolygon all = clip_all(polys);
  const double area = all.empty() ? 0.0 : all.area();
  r.nonempty_interior = area > area_eps;
  r.non_redundant = true;
  for (std::size_t j = 0; j < polys.size() && polys.size() > 1; ++j) {
    const TaggedPolygon rest = clip_all(polys, j);
    const double rest_area = rest.empty() ? 0.0 : rest.area();
    if (rest_area <= area + area_eps) r.non_redundant = false;
  }
  return r;
}

// Crossings of two smooth strictly convex bodies that need not be translates:
// sign changes of b2's gap along bd(b1), refined by bisection.
inline std::vector<Vec2> support_crossings(const SupportBody& b1, const SupportBody& b2,
                                           int samples = 2048) {
  std::vector<Vec2> out;
  auto gap = [&](double t) { return b2.contains(b1.boundary_point(t)).gap; };
  double prev_t = 0.0, prev_g = gap(0.0);
  for (int i = 1; i <= samples; ++i) {
    const double t = kTwoPi * i / samples;
    const double g = gap(t);
    if ((prev_g < 0.0) != (g < 0.0)) out.push_back(b1.boundary_point(detail::bisect(gap, prev_t, t, 80)));
    prev_t = t;
    prev_g = g;
  }
  return out;
}

struct ScenarioResult {
  std::string name;
  int expected = -1;
  int actual = -1;          // from the arc pipeline, or the crossing scan for rotated_isometry
  int oracle = -1;          // tagged-clipping count, -1 when not meaningful
  int analytic = -1;        // translate pipeline, only for disk scenarios
  std::vector<Vec2> points;
  std::vector<std::string> flags;
  Assumption declared = Assumption::None;
  AssumptionReport assumptions;
  bool pass = false;
};

inline ScenarioResult run_scenario(const Scenario& s) {
  ScenarioResult r;
  r.name = s.name;
  r.expected = expected_count(s);
  r.declared = s.violated;
  r.assumptions = check_assumptions(s);

  if (!s.arc_bodies.empty()) {
    const ArcSingularities sing = arc_intersect_singularities(s.arc_bodies);
    r.actual = static_cast<int>(sing.count);
    r.points = sing.points;
    r.flags = sing.flags;
  } else {
    r.points = support_crossings(s.support_bodies[0], s.support_bodies[1]);
    r.actual = static_cast<int>(r.points.size());
  }

  const TaggedPolygon clipped = clip_all(scenario_polygons(s));
  const bool oracle_meaningful = r.assumptions.smooth && r.assumptions.strictly_convex &&
                                 r.assumptions.nonempty_interior;
  if (oracle_meaningful) r.oracle = static_cast<int>(oracle_singularities(clipped).size());

  if (!s.support_bodies.empty() && r.assumptions.translates) {
    std::vector<Vec2> translations;
    for (const auto& b : s.support_bodies) translations.push_back(b.center());
    const Arrangement arr(s.support_bodies[0].shape(), s.support_bodies[0].rotation(), translations);
    const IntersectionShape shape = intersect(arr);
    r.analytic = shape.status == IntersectionStatus::SinglePoint ? 1
                                                                 : static_cast<int>(shape.vertices.size());
  }

  const bool exactly_one = r.assumptions.failures() == (s.violated == Assumption::None ? 0 : 1) &&
                           r.assumptions.violated() == s.violated;
  const bool count_ok = r.actual == r.expected && (r.oracle < 0 || r.oracle == r.expected) &&
                        (r.analytic < 0 || r.analytic == r.expected);
  r.pass = count_ok && exactly_one;
  return r;
}

inline std::vector<ScenarioResult> run_gallery() {
  std::vector<ScenarioResult> out;
  for (auto name : kScenarioNames) out.push_back(run_scenario(scenario(name)));
  return out;
}

}  // namespace tsing
