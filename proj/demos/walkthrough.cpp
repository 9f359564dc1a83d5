// Builds a random arrangement, counts its singular points and compares them
// with the polygon oracle. Usage: walkthrough [seed] [n]

#include <cstdio>
#include <cstdlib>

#include "tsing/tsing.hpp"

int main(int argc, char** argv) {
  using namespace tsing;
  FuzzConfig cfg;
  cfg.seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 7;
  if (argc > 2) cfg.n_min = cfg.n_max = std::atoi(argv[2]);
  cfg.check();

  SplitMix64 rng(cfg.seed);
  const SupportBody body = random_body(rng, cfg);
  const Arrangement arr = random_arrangement(rng, cfg, body);
  std::printf("body: a0 = %.4f, %zu harmonics, certified rho_min = %.4f\n", body.shape().a0,
              body.shape().harmonics.size(), body.rho_min());

  IntersectionShape shape;
  const VerificationReport rep = verify_theorem(arr, true, &shape);
  std::printf("%zu translates, %zu singular points\n", arr.size(), rep.vertex_count);
  for (std::size_t i = 0; i < shape.vertices.size(); ++i) {
    const SingularVertex& v = shape.vertices[i];
    std::printf("  (%+.6f, %+.6f)  between translates %d and %d, normal cone %.4f rad\n", v.point.x, v.point.y,
                v.pair.first, v.pair.second, v.normal_cone.measure);
  }
  for (const Edge& e : shape.edges) {
    std::printf("  edge of translate %d spans %.4f rad of normals\n", e.owner, e.gauss_interval.measure);
  }

  std::vector<Vec2> analytic;
  for (const auto& v : shape.vertices) analytic.push_back(v.point);
  const std::vector<Vec2> oracle = oracle_singularities(oracle_intersection(arr.bodies()));
  std::printf("oracle finds %zu points, Hausdorff distance %.2e\n", oracle.size(), hausdorff(analytic, oracle));
  std::printf("%s\n", rep.pass ? "count equals n" : "count differs from n");
  return rep.pass ? 0 : 1;
}
