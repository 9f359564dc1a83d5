#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "tsing/gallery.hpp"

namespace tsing {
namespace {

bool has_flag(const std::vector<std::string>& flags, const std::string& f) {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

TEST(ArcCrossings, UnitCircles) {
  const CrossingSet cs = arc_boundary_crossings(ArcBody::circle({0, 0}, 1.0), ArcBody::circle({1, 0}, 1.0));
  ASSERT_EQ(cs.points.size(), 2u);
  EXPECT_TRUE(cs.overlaps.empty());
  EXPECT_LT(hausdorff(cs.points, {{0.5, std::sqrt(3.0) / 2}, {0.5, -std::sqrt(3.0) / 2}}), 1e-12);
}

TEST(ArcCrossings, TangentCircles) {
  const CrossingSet cs = arc_boundary_crossings(ArcBody::circle({0, 0}, 1.0), ArcBody::circle({2, 0}, 1.0));
  ASSERT_EQ(cs.points.size(), 1u);
  EXPECT_LT(distance(cs.points[0], {1.0, 0.0}), 1e-12);
}

TEST(ArcCrossings, RoundedSquareShiftHasNoTransversalPoint) {
  const ArcBody sq = ArcBody::rounded_square(2.0, 0.25);
  const ArcBody moved = sq.translated({0.5, 0.0});
  const CrossingSet cs = arc_boundary_crossings(sq, moved);
  EXPECT_EQ(cs.overlaps.size(), 2u);
  for (Vec2 p : cs.points) {
    const auto a = sq.normal_cone(p);
    const auto b = moved.normal_cone(p);
    ASSERT_TRUE(a && b);
    EXPECT_LT(angular_distance(a->start, b->start), kCornerThreshold) << p.x << "," << p.y;
  }
  EXPECT_EQ(arc_intersect_singularities({sq, moved}).count, 0u);
}

TEST(ArcBody, ConstructionChecks) {
  EXPECT_TRUE(ArcBody::circle({0, 0}, 1.0).corners().empty());
  EXPECT_FALSE(ArcBody::circle({0, 0}, 1.0).has_flat_stretch());
  EXPECT_TRUE(ArcBody::rounded_square(2.0, 0.25).corners().empty());
  EXPECT_TRUE(ArcBody::rounded_square(2.0, 0.25).has_flat_stretch());
  const ArcBody tri = ArcBody::bulged_polygon({{0, 0}, {2, 0}, {1, std::sqrt(3.0)}}, kBulgeSagitta);
  EXPECT_EQ(tri.corners().size(), 3u);
  EXPECT_FALSE(tri.has_flat_stretch());
  EXPECT_THROW(ArcBody::circle({0, 0}, -1.0), GeometryError);
}

TEST(ArcIntersect, PaperCounts) {
  EXPECT_EQ(arc_intersect_singularities(scenario("tangent_disks").arc_bodies).count, 1u);
  EXPECT_EQ(arc_intersect_singularities(scenario("non_smooth_triangles").arc_bodies).count, 3u);
  EXPECT_EQ(arc_intersect_singularities(scenario("non_smooth_squares").arc_bodies).count, 4u);
  EXPECT_EQ(arc_intersect_singularities(scenario("redundant_disks").arc_bodies).count, 2u);
}

TEST(ArcIntersect, EmptyIntersectionThrows) {
  try {
    arc_intersect_singularities({ArcBody::circle({0, 0}, 1.0), ArcBody::circle({3, 0}, 1.0)});
    FAIL() << "expected EmptyIntersection";
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyIntersection);
  }
}

TEST(Scenario, UnknownName) {
  try {
    scenario("does_not_exist");
    FAIL() << "expected UnknownScenario";
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownScenario);
  }
}

TEST(Scenario, NonStrictShiftFlagsOverlaps) {
  const ScenarioResult r = run_scenario(scenario("non_strict_shift"));
  EXPECT_EQ(r.actual, 0);
  EXPECT_TRUE(has_flag(r.flags, "OverlappingCongruentPieces"));
}

TEST(Scenario, IdealDisksThreePipelines) {
  const ScenarioResult r = run_scenario(scenario("ideal_three_disks"));
  EXPECT_EQ(r.actual, 3);
  EXPECT_EQ(r.analytic, 3);
  EXPECT_EQ(r.oracle, 3);
}

TEST(Scenario, DiskScenariosAgreeAcrossPipelines) {
  for (const char* name : {"ideal_three_disks", "redundant_disks", "tangent_disks"}) {
    const ScenarioResult r = run_scenario(scenario(name));
    EXPECT_EQ(r.actual, r.analytic) << name;
    if (r.oracle >= 0) {
      EXPECT_EQ(r.actual, r.oracle) << name;
    }
  }
}

TEST(Scenario, RotatedIsometryMatchesFrozenOracle) {
  const Scenario s = scenario("rotated_isometry");
  const ScenarioResult r = run_scenario(s);
  const int recomputed = static_cast<int>(oracle_singularities(clip_all(scenario_polygons(s))).size());
  EXPECT_EQ(recomputed, kRotatedIsometryOracleCount);
  EXPECT_EQ(r.actual, kRotatedIsometryOracleCount);
  EXPECT_EQ(r.oracle, kRotatedIsometryOracleCount);
  EXPECT_NE(r.actual, 2);
}

class GalleryScenario : public ::testing::TestWithParam<std::string_view> {};

TEST_P(GalleryScenario, CountAndDeclaredAssumption) {
  const Scenario s = scenario(GetParam());
  const ScenarioResult r = run_scenario(s);
  EXPECT_EQ(r.actual, r.expected);
  EXPECT_EQ(r.assumptions.violated(), s.violated);
  EXPECT_EQ(r.assumptions.failures(), s.violated == Assumption::None ? 0 : 1);
  EXPECT_TRUE(r.pass);
}

INSTANTIATE_TEST_SUITE_P(All, GalleryScenario, ::testing::ValuesIn(kScenarioNames),
                         [](const auto& info) { return std::string(info.param); });

TEST(Gallery, PaperCounts) {
  const std::vector<std::pair<std::string_view, int>> expected = {
      {"ideal_three_disks", 3}, {"non_strict_shift", 0}, {"non_smooth_triangles", 3},
      {"non_smooth_squares", 4}, {"tangent_disks", 1},   {"redundant_disks", 2}};
  for (const auto& [name, count] : expected) EXPECT_EQ(run_scenario(scenario(name)).actual, count) << name;
}

}  // namespace
}  // namespace tsing
