#pragma once

// Brute-force cross-checks that never touch the analytic pipeline beyond
// sampling boundary points: inscribed polygons, convex clipping that remembers
// which body every edge came from, and scan-line chord lengths.

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <utility>
#include <vector>

#include "tsing/body.hpp"
#include "tsing/error.hpp"
#include "tsing/geometry.hpp"

namespace tsing {

inline constexpr int kUntagged = -1;
inline constexpr int kDefaultOracleResolution = 4096;

// Counterclockwise convex polygon; edge i runs from vertices[i] to vertices[i+1]
// and came from the body named by tags[i].
struct TaggedPolygon {
  std::vector<Vec2> vertices;
  std::vector<int> tags;

  bool empty() const { return vertices.size() < 3; }
  std::size_t size() const { return vertices.size(); }

  Vec2 edge_start(std::size_t i) const { return vertices[i]; }
  Vec2 edge_end(std::size_t i) const { return vertices[(i + 1) % vertices.size()]; }

  double area() const {
    double a = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i) a += cross(edge_start(i), edge_end(i));
    return 0.5 * a;
  }

  double perimeter() const {
    double p = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i) p += distance(edge_start(i), edge_end(i));
    return p;
  }

  double extent() const {
    if (vertices.empty()) return 0.0;
    double lo_x = vertices[0].x, hi_x = lo_x, lo_y = vertices[0].y, hi_y = lo_y;
    for (Vec2 v : vertices) {
      lo_x = std::min(lo_x, v.x);
      hi_x = std::max(hi_x, v.x);
      lo_y = std::min(lo_y, v.y);
      hi_y = std::max(hi_y, v.y);
    }
    return std::max(hi_x - lo_x, hi_y - lo_y);
  }

  bool is_convex(double slack = 1e-12) const {
    const std::size_t m = vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Vec2 a = vertices[i], b = vertices[(i + 1) % m], c = vertices[(i + 2) % m];
      if (cross(b - a, c - b) < -slack) return false;
    }
    return true;
  }

  bool contains(Vec2 p, double slack = 0.0) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const Vec2 d = edge_end(i) - edge_start(i);
      if (cross(d, p - edge_start(i)) < -slack * norm(d)) return false;
    }
    return !empty();
  }
};

inline TaggedPolygon with_tag(TaggedPolygon p, int tag) {
  std::fill(p.tags.begin(), p.tags.end(), tag);
  return p;
}

// Inscribed polygon through the boundary points with normals 2 pi k / m.
inline TaggedPolygon polygonize(const SupportBody& b, int m, int tag = kUntagged) {
  if (m < 3) throw GeometryError(ErrorCode::BadInput, "polygonize needs m >= 3");
  TaggedPolygon p;
  p.vertices.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) p.vertices.push_back(b.boundary_point(kTwoPi * k / m));
  p.tags.assign(static_cast<std::size_t>(m), tag);
  return p;
}

namespace detail {

struct HalfPlane {
  Vec2 point;
  Vec2 dir;  // unit; the kept side is to the left
  double angle = 0.0;
  int tag = kUntagged;
  int order = 0;  // subject edges sort before clipper edges on exact ties

  bool excludes(Vec2 r, double eps) const { return cross(dir, r - point) < -eps; }
};

inline Vec2 line_intersection(const HalfPlane& s, const HalfPlane& t) {
  const double alpha = cross(t.point - s.point, t.dir) / cross(s.dir, t.dir);
  return s.point + alpha * s.dir;
}

inline void append_half_planes(const TaggedPolygon& poly, std::vector<HalfPlane>& out,
                               std::function<int(std::size_t)> tag_of, int order) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2 d = poly.edge_end(i) - poly.edge_start(i);
    const double len = norm(d);
    if (len == 0.0) continue;
    const Vec2 u = d / len;
    out.push_back({poly.edge_start(i), u, std::atan2(u.y, u.x), tag_of(i), order});
  }
}

// Sorted half-plane intersection; each output edge keeps its half-plane's tag.
inline TaggedPolygon intersect_half_planes(std::vector<HalfPlane> planes, double scale) {
  const double eps = 1e-12 * scale;
  constexpr double parallel_eps = 1e-12;
  std::stable_sort(planes.begin(), planes.end(), [](const HalfPlane& a, const HalfPlane& b) {
    return a.angle != b.angle ? a.angle < b.angle : a.order < b.order;
  });
  std::deque<HalfPlane> dq;
  for (const HalfPlane& h : planes) {
    while (dq.size() > 1 && h.excludes(line_intersection(dq[dq.size() - 1], dq[dq.size() - 2]), eps)) {
      dq.pop_back();
    }
    while (dq.size() > 1 && h.excludes(line_intersection(dq[0], dq[1]), eps)) dq.pop_front();
    if (!dq.empty() && std::abs(cross(h.dir, dq.back().dir)) < parallel_eps) {
      if (dot(h.dir, dq.back().dir) < 0.0) return {};
      if (h.excludes(dq.back().point, eps)) {
        dq.pop_back();
      } else {
        continue;
      }
    }
    dq.push_back(h);
  }
  while (dq.size() > 2 && dq[0].excludes(line_intersection(dq[dq.size() - 1], dq[dq.size() - 2]), eps)) {
    dq.pop_back();
  }
  while (dq.size() > 2 && dq.back().excludes(line_intersection(dq[0], dq[1]), eps)) dq.pop_front();
  if (dq.size() < 3) return {};

  // vertex j joins half-planes j-1 and j; edge j lies on half-plane j
  const std::size_t m = dq.size();
  std::vector<Vec2> verts(m);
  for (std::size_t j = 0; j < m; ++j) verts[j] = line_intersection(dq[(j + m - 1) % m], dq[j]);
  TaggedPolygon out;
  const double min_edge = 1e-13 * scale;
  for (std::size_t j = 0; j < m; ++j) {
    if (distance(verts[j], verts[(j + 1) % m]) <= min_edge) continue;
    out.vertices.push_back(verts[j]);
    out.tags.push_back(dq[j].tag);
  }
  if (out.vertices.size() < 3 || out.area() <= eps * scale) return {};
  return out;
}

}  // namespace detail

// Convex intersection. Subject edges keep their tags; clipper edges get `tag`.
inline TaggedPolygon clip(const TaggedPolygon& subject, const TaggedPolygon& clipper, int tag) {
  if (subject.empty() || clipper.empty()) return {};
  std::vector<detail::HalfPlane> planes;
  planes.reserve(subject.size() + clipper.size());
  detail::append_half_planes(subject, planes, [&](std::size_t i) { return subject.tags[i]; }, 0);
  detail::append_half_planes(clipper, planes, [&](std::size_t) { return tag; }, 1);
  const double scale = std::max({subject.extent(), clipper.extent(), 1e-300});
  return detail::intersect_half_planes(std::move(planes), scale);
}

// Tagged intersection of the given bodies; edges are tagged by body index.
inline TaggedPolygon oracle_intersection(const std::vector<SupportBody>& bodies,
                                         int m = kDefaultOracleResolution) {
  if (bodies.empty()) return {};
  TaggedPolygon acc = polygonize(bodies[0], m, 0);
  for (std::size_t i = 1; i < bodies.size(); ++i) {
    acc = clip(acc, polygonize(bodies[i], m), static_cast<int>(i));
    if (acc.empty()) break;
  }
  return acc;
}

struct TagChange {
  Vec2 point;
  int incoming = kUntagged;
  int outgoing = kUntagged;
};

// Vertices whose incident edges come from different bodies.
inline std::vector<TagChange> oracle_tag_changes(const TaggedPolygon& p) {
  std::vector<TagChange> out;
  const std::size_t m = p.size();
  if (m < 3) return out;
  for (std::size_t j = 0; j < m; ++j) {
    const int in = p.tags[(j + m - 1) % m];
    const int outgoing = p.tags[j];
    if (in != outgoing) out.push_back({p.vertices[j], in, outgoing});
  }
  // a sliver edge produces two changes a -> b -> a at one spot
  const double eps = 1e-9 * std::max(p.extent(), 1e-300);
  if (out.size() >= 2) {
    std::vector<bool> drop(out.size(), false);
    for (std::size_t i = 0; i < out.size(); ++i) {
      const std::size_t next = (i + 1) % out.size();
      if (drop[i] || drop[next] || next == i) continue;
      if (distance(out[i].point, out[next].point) <= eps && out[i].incoming == out[next].outgoing) {
        drop[i] = drop[next] = true;
      }
    }
    std::vector<TagChange> kept;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (!drop[i]) kept.push_back(out[i]);
    }
    out = std::move(kept);
  }
  return out;
}

inline std::vector<Vec2> oracle_singularities(const TaggedPolygon& p) {
  std::vector<Vec2> out;
  for (const auto& c : oracle_tag_changes(p)) out.push_back(c.point);
  return out;
}

struct OracleChord {
  double s = 0.0;
  double length = 0.0;
};

// Length of the polygon's chord on the line <x, u(w)> = s.
inline double oracle_chord_length(const TaggedPolygon& p, Angle w, double s) {
  const Vec2 n = w.unit();
  std::vector<Vec2> hits;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vec2 a = p.edge_start(i), b = p.edge_end(i);
    const double fa = dot(a, n) - s, fb = dot(b, n) - s;
    if ((fa <= 0.0 && fb >= 0.0) || (fa >= 0.0 && fb <= 0.0)) {
      if (fa == fb) {
        hits.push_back(a);
        hits.push_back(b);
      } else {
        hits.push_back(lerp(a, b, fa / (fa - fb)));
      }
    }
  }
  double best = 0.0;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    for (std::size_t j = i + 1; j < hits.size(); ++j) best = std::max(best, distance(hits[i], hits[j]));
  }
  return best;
}

// Chord lengths on `offsets` equally spaced lines spanning the polygon's
// extent along u(w), endpoints included. Linear-time two-chain sweep.
inline std::vector<OracleChord> oracle_chords(const TaggedPolygon& p, Angle w, int offsets) {
  if (offsets < 2) throw GeometryError(ErrorCode::BadInput, "oracle_chords needs >= 2 offsets");
  const std::size_t m = p.size();
  std::vector<OracleChord> out;
  if (m < 3) return out;
  const Vec2 n = w.unit();
  std::vector<double> proj(m);
  for (std::size_t i = 0; i < m; ++i) proj[i] = dot(p.vertices[i], n);
  const std::size_t lo = static_cast<std::size_t>(std::min_element(proj.begin(), proj.end()) - proj.begin());
  const std::size_t hi = static_cast<std::size_t>(std::max_element(proj.begin(), proj.end()) - proj.begin());

  // Both chains run from the lowest to the highest vertex with
  // non-decreasing projection.
  auto chain = [&](int step) {
    std::vector<std::size_t> idx{lo};
    std::size_t i = lo;
    while (i != hi) {
      i = step > 0 ? (i + 1) % m : (i + m - 1) % m;
      idx.push_back(i);
    }
    return idx;
  };
  const std::vector<std::size_t> forward = chain(1);
  const std::vector<std::size_t> backward = chain(-1);

  struct Cursor {
    const std::vector<std::size_t>& idx;
    std::size_t at = 0;
  };
  auto point_on = [&](Cursor& c, double s) {
    while (c.at + 2 < c.idx.size() && proj[c.idx[c.at + 1]] < s) ++c.at;
    const std::size_t a = c.idx[c.at];
    const std::size_t b = c.idx[std::min(c.at + 1, c.idx.size() - 1)];
    const double pa = proj[a], pb = proj[b];
    if (pb <= pa) return p.vertices[a];
    const double t = std::clamp((s - pa) / (pb - pa), 0.0, 1.0);
    return lerp(p.vertices[a], p.vertices[b], t);
  };

  Cursor cf{forward}, cb{backward};
  const double smin = proj[lo], smax = proj[hi];
  out.reserve(static_cast<std::size_t>(offsets));
  for (int k = 0; k < offsets; ++k) {
    const double s = smin + (smax - smin) * k / (offsets - 1);
    out.push_back({s, distance(point_on(cf, s), point_on(cb, s))});
  }
  return out;
}

// Symmetric Hausdorff distance between finite point sets.
inline double hausdorff(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty() ? 0.0 : INFINITY;
  auto directed = [](const std::vector<Vec2>& from, const std::vector<Vec2>& to) {
    double worst = 0.0;
    for (Vec2 p : from) {
      double best = INFINITY;
      for (Vec2 q : to) best = std::min(best, distance(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace tsing
