#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "tsing/body.hpp"
#include "tsing/random.hpp"

namespace tsing::testing {

inline SupportBody random_test_body(std::uint64_t seed, std::uint64_t index, int max_harmonic = 6) {
  FuzzConfig cfg;
  cfg.max_harmonic = max_harmonic;
  SplitMix64 rng = SplitMix64::stream(seed, index);
  return random_body(rng, cfg);
}

// Andrew's monotone chain; collinear points are dropped.
inline std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  if (pts.size() < 3) return pts;
  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i - 1] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  return hull;
}

// Area enclosed by a support function: (1/2) * integral of h^2 - h'^2, by the
// trapezoid rule, which is spectrally accurate for trigonometric polynomials.
inline double support_area(const SupportFunction& sf, int samples = 4096) {
  double sum = 0.0;
  for (int i = 0; i < samples; ++i) {
    const SupportValue v = sf.eval(kTwoPi * i / samples);
    sum += v.h * v.h - v.dh * v.dh;
  }
  return 0.5 * sum * kTwoPi / samples;
}

}  // namespace tsing::testing
