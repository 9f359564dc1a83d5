#pragma once

// Seeded instance generation. The generator is SplitMix64 (Steele, Lea and
// Flood); trial t of a campaign with seed S draws from a fresh SplitMix64
// seeded with mix(S + (t + 1) * 0x9E3779B97F4A7C15), and doubles are formed
// from the top 53 bits. Nothing here depends on <random> distributions, so a
// seed replays identically on any platform.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "tsing/body.hpp"
#include "tsing/error.hpp"
#include "tsing/intersection.hpp"

namespace tsing {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform in [lo, hi]
  int integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(next() % span);
  }

  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix(seed + (index + 1) * 0x9E3779B97F4A7C15ull));
  }

 private:
  std::uint64_t state_;
};

struct FuzzConfig {
  std::uint64_t seed = 1;
  int trials = 200;
  int n_min = 2;
  int n_max = 7;
  int max_harmonic = 6;          // highest Fourier order drawn
  double coefficient_cap = 0.3;  // |a_k|, |b_k| <= cap / k before rescaling
  double rho_floor = 0.1;        // certified minimum radius of curvature
  // Smallest Gauss measure of any edge or vertex cone in an accepted
  // arrangement; keeps every feature resolvable by the 4096-gon oracle.
  double min_feature_measure = 0.05;
  int max_rejections = 1000;

  void check() const {
    if (n_min < 2 || n_max > 16 || n_min > n_max) {
      throw GeometryError(ErrorCode::BadInput, "n range must satisfy 2 <= min <= max <= 16");
    }
    if (!(rho_floor > 0.0)) throw GeometryError(ErrorCode::BadInput, "rho_floor must be positive");
    if (max_harmonic < 0 || max_harmonic > 16) {
      throw GeometryError(ErrorCode::BadInput, "max_harmonic must lie in [0, 16]");
    }
    if (trials < 0) throw GeometryError(ErrorCode::BadInput, "trials must be non-negative");
  }
};

// Random coefficients, then the harmonics are scaled toward the disk by the
// largest factor whose certificate still gives rho_min >= rho_floor. The
// certified bound is affine in that factor, so the factor is closed-form.
inline SupportBody random_body(SplitMix64& rng, const FuzzConfig& cfg) {
  SupportFunction sf;
  sf.a0 = rng.uniform(1.0, 1.5);
  if (cfg.max_harmonic >= 2) sf.harmonics.resize(static_cast<std::size_t>(cfg.max_harmonic));
  for (int k = 2; k <= cfg.max_harmonic; ++k) {
    const double bound = cfg.coefficient_cap / k;
    sf.harmonics[static_cast<std::size_t>(k - 1)] = {rng.uniform(-bound, bound),
                                                     rng.uniform(-bound, bound)};
  }
  if (sf.harmonics.empty()) return SupportBody(sf);

  SupportFunction variation = sf;
  variation.a0 = 0.0;
  const CurvatureCertificate c = certify(variation);
  const double half_step = kPi / kCertificateSamples;
  const double rho_slope = c.rho_sampled_min - variation.curvature_lipschitz() * half_step;
  const double h_slope = c.h_sampled_min - variation.support_lipschitz() * half_step;
  const double h_floor = 1e-3 * sf.a0;
  double scale = 1.0;
  if (rho_slope < 0.0) scale = std::min(scale, (sf.a0 - cfg.rho_floor) / -rho_slope);
  if (h_slope < 0.0) scale = std::min(scale, (sf.a0 - h_floor) / -h_slope);
  scale *= 1.0 - 1e-9;
  for (auto& hk : sf.harmonics) {
    hk.a *= scale;
    hk.b *= scale;
  }
  return SupportBody(sf);
}

struct GenerationStats {
  int rejections = 0;
};

inline bool acceptable(const Arrangement& arr, const IntersectionShape& shape, const FuzzConfig& cfg) {
  if (shape.status != IntersectionStatus::ProperBody || !shape.flags.empty()) return false;
  if (std::any_of(shape.redundant.begin(), shape.redundant.end(), [](bool r) { return r; })) return false;
  for (const auto& e : shape.edges) {
    if (e.gauss_interval.measure < cfg.min_feature_measure) return false;
  }
  for (const auto& v : shape.vertices) {
    if (v.normal_cone.measure < cfg.min_feature_measure) return false;
  }
  (void)arr;
  return true;
}

// Centers spread around a circle of radius below the body's inradius about its
// origin, so every translate contains the origin; accepted draws satisfy all
// hypotheses of the singularity count.
inline Arrangement random_arrangement(SplitMix64& rng, const FuzzConfig& cfg, const SupportBody& body,
                                      GenerationStats* stats = nullptr) {
  const double inradius = certify(body.shape()).h_min;
  for (int attempt = 0; attempt < cfg.max_rejections; ++attempt) {
    const int n = rng.integer(cfg.n_min, cfg.n_max);
    const double radius = rng.uniform(0.2, 0.9) * inradius;
    const double phase = rng.uniform(0.0, kTwoPi);
    std::vector<Vec2> translations;
    for (int i = 0; i < n; ++i) {
      const double angle = phase + kTwoPi * (i + rng.uniform(-0.3, 0.3)) / n;
      translations.push_back(rng.uniform(0.6, 1.0) * radius * unit(angle));
    }
    Arrangement arr(body.shape(), body.rotation(), std::move(translations));
    if (acceptable(arr, intersect(arr), cfg)) return arr;
    if (stats) ++stats->rejections;
  }
  throw GeometryError(ErrorCode::GenerationExhausted,
                      "no acceptable arrangement after " + std::to_string(cfg.max_rejections) +
                          " draws");
}

}  // namespace tsing
