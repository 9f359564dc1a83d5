#pragma once

// Chords perpendicular to a direction w: the lines {x : <x, u(w)> = s} swept
// from the support point h_w (t = 0) to the opposite support point h_{-w}
// (t = 1). For strictly convex bodies the chord length is strictly unimodal in
// t, so a given length below the maximum is attained exactly twice.

#include <cmath>
#include <utility>
#include <vector>

#include "tsing/body.hpp"
#include "tsing/error.hpp"
#include "tsing/geometry.hpp"

namespace tsing {

struct Chord {
  Vec2 p;             // endpoint on the branch with Gauss parameter in (w, w + pi)
  Vec2 q;             // endpoint on the branch with Gauss parameter in (w + pi, w + 2pi)
  Angle w;            // normal of the carrier line
  double s = 0.0;     // carrier line is <x, u(w)> = s
  double t = 0.0;     // position between h_w and h_{-w}
  double length = 0.0;
};

struct ChordProfile {
  SupportBody body;
  Angle w;
  Vec2 h_w;
  Vec2 h_neg_w;
  double t_max = 0.5;
  double eta = 0.0;

  double offset_at(double t) const {
    const Vec2 n = w.unit();
    return (1.0 - t) * dot(h_w, n) + t * dot(h_neg_w, n);
  }
};

inline ChordProfile make_profile(const SupportBody& body, Angle w) {
  ChordProfile prof{body, w, body.boundary_point(w), body.boundary_point(w + kPi), 0.5, 0.0};
  return prof;
}

inline Chord chord_at(const ChordProfile& prof, double t) {
  Chord c;
  c.w = prof.w;
  c.t = t;
  c.s = prof.offset_at(t);
  if (t <= 0.0 || t >= 1.0) {
    c.p = c.q = t <= 0.0 ? prof.h_w : prof.h_neg_w;
    c.t = t <= 0.0 ? 0.0 : 1.0;
    c.s = prof.offset_at(c.t);
    return c;
  }
  const double w = prof.w.radians();
  const Vec2 n = prof.w.unit();
  auto level = [&](double theta) { return dot(prof.body.boundary_point(theta), n) - c.s; };
  // projection decreases on (w, w + pi) and increases on (w + pi, w + 2pi)
  c.p = prof.body.boundary_point(detail::bisect(level, w, w + kPi));
  c.q = prof.body.boundary_point(detail::bisect(level, w + kPi, w + kTwoPi));
  c.length = distance(c.p, c.q);
  return c;
}

inline constexpr int kTernaryIterations = 200;

inline ChordProfile max_chord(const SupportBody& body, Angle w) {
  ChordProfile prof = make_profile(body, w);
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < kTernaryIterations; ++i) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (m1 >= m2) break;
    if (chord_at(prof, m1).length < chord_at(prof, m2).length) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  prof.t_max = 0.5 * (lo + hi);
  prof.eta = chord_at(prof, prof.t_max).length;
  return prof;
}

inline constexpr double kChordLengthTolerance = 1e-11;

// The two chords of length r, ordered by t; r must lie in (0, eta).
inline std::pair<Chord, Chord> chords_of_length(const ChordProfile& prof, double r) {
  if (!(r > 0.0) || !(r < prof.eta)) {
    throw GeometryError(ErrorCode::LengthOutOfRange,
                        "chord length " + std::to_string(r) + " outside (0, " +
                            std::to_string(prof.eta) + ")");
  }
  auto solve = [&](double lo, double hi, bool increasing) {
    Chord best = chord_at(prof, 0.5 * (lo + hi));
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      best = chord_at(prof, mid);
      const double diff = best.length - r;
      if (std::abs(diff) < kChordLengthTolerance || mid <= lo || mid >= hi) break;
      if ((diff < 0.0) == increasing) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return best;
  };
  return {solve(0.0, prof.t_max, true), solve(prof.t_max, 1.0, false)};
}

struct ChordSample {
  double t = 0.0;
  double length = 0.0;
};

inline std::vector<ChordSample> chord_profile_samples(const ChordProfile& prof, int m) {
  if (m < 2) throw GeometryError(ErrorCode::BadInput, "chord_profile_samples needs m >= 2");
  std::vector<ChordSample> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const double t = static_cast<double>(i) / (m - 1);
    out.push_back({t, chord_at(prof, t).length});
  }
  return out;
}

}  // namespace tsing
