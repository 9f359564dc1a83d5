#pragma once

// Convex bodies bounded by circular arcs and straight segments. They exist to
// build configurations that deliberately break smoothness (corners) or strict
// convexity (flat stretches), so every crossing stays closed-form.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tsing/error.hpp"
#include "tsing/geometry.hpp"
#include "tsing/oracle.hpp"

namespace tsing {

// Counterclockwise arc of the circle (center, radius) from angle start to end;
// start <= end <= start + 2pi.
struct ArcPiece {
  Vec2 center;
  double radius = 1.0;
  double start = 0.0;
  double end = kTwoPi;

  Vec2 point(double angle) const { return center + radius * unit(angle); }
  Vec2 first() const { return point(start); }
  Vec2 last() const { return point(end); }
  double first_normal() const { return start; }
  double last_normal() const { return end; }
  bool full_circle() const { return end - start >= kTwoPi - 1e-15; }

  // angle of p about the center, lifted into [start, start + 2pi)
  double lift(Vec2 p) const {
    return start + Angle::normalize(std::atan2(p.y - center.y, p.x - center.x) - start);
  }
  bool covers(double angle, double slack) const {
    if (full_circle()) return true;
    const double a = start + Angle::normalize(angle - start);
    return a <= end + slack || a >= start + kTwoPi - slack;
  }
};

struct SegmentPiece {
  Vec2 a;
  Vec2 b;

  Vec2 first() const { return a; }
  Vec2 last() const { return b; }
  double normal() const {
    const Vec2 d = b - a;
    return Angle::normalize(std::atan2(-d.x, d.y));
  }
  double first_normal() const { return normal(); }
  double last_normal() const { return normal(); }
};

using Piece = std::variant<ArcPiece, SegmentPiece>;

inline Vec2 piece_first(const Piece& p) { return std::visit([](const auto& x) { return x.first(); }, p); }
inline Vec2 piece_last(const Piece& p) { return std::visit([](const auto& x) { return x.last(); }, p); }
inline double piece_first_normal(const Piece& p) {
  return std::visit([](const auto& x) { return x.first_normal(); }, p);
}
inline double piece_last_normal(const Piece& p) {
  return std::visit([](const auto& x) { return x.last_normal(); }, p);
}

inline constexpr double kCornerThreshold = 1e-6;  // radians

class ArcBody {
 public:
  ArcBody() = default;
  explicit ArcBody(std::vector<Piece> pieces) : pieces_(std::move(pieces)) { check(); }

  static ArcBody circle(Vec2 center, double radius) {
    return ArcBody({ArcPiece{center, radius, 0.0, kTwoPi}});
  }

  // Square of the given side centered at `center`, corners replaced by
  // quarter circles: smooth, but with four flat stretches.
  static ArcBody rounded_square(double side, double corner_radius, Vec2 center = {}) {
    const double h = 0.5 * side, c = h - corner_radius;
    std::vector<Piece> p;
    p.push_back(SegmentPiece{center + Vec2{h, -c}, center + Vec2{h, c}});
    p.push_back(ArcPiece{center + Vec2{c, c}, corner_radius, 0.0, 0.5 * kPi});
    p.push_back(SegmentPiece{center + Vec2{c, h}, center + Vec2{-c, h}});
    p.push_back(ArcPiece{center + Vec2{-c, c}, corner_radius, 0.5 * kPi, kPi});
    p.push_back(SegmentPiece{center + Vec2{-h, c}, center + Vec2{-h, -c}});
    p.push_back(ArcPiece{center + Vec2{-c, -c}, corner_radius, kPi, 1.5 * kPi});
    p.push_back(SegmentPiece{center + Vec2{-c, -h}, center + Vec2{c, -h}});
    p.push_back(ArcPiece{center + Vec2{c, -c}, corner_radius, 1.5 * kPi, kTwoPi});
    return ArcBody(std::move(p));
  }

  // Convex polygon (counterclockwise) whose edges bulge outward as circular
  // arcs with sagitta `sagitta_ratio` times the edge length: strictly convex,
  // corners kept.
  static ArcBody bulged_polygon(const std::vector<Vec2>& corners, double sagitta_ratio) {
    std::vector<Piece> p;
    const std::size_t m = corners.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Vec2 a = corners[i], b = corners[(i + 1) % m];
      const double len = distance(a, b);
      const double sag = sagitta_ratio * len;
      const double radius = (0.25 * len * len + sag * sag) / (2.0 * sag);
      const Vec2 d = (b - a) / len;
      const Vec2 outward{d.y, -d.x};
      const Vec2 center = 0.5 * (a + b) - (radius - sag) * outward;
      const double start = Angle::normalize(std::atan2(a.y - center.y, a.x - center.x));
      const double sweep = Angle::normalize(std::atan2(b.y - center.y, b.x - center.x) - start);
      p.push_back(ArcPiece{center, radius, start, start + sweep});
    }
    return ArcBody(std::move(p));
  }

  const std::vector<Piece>& pieces() const { return pieces_; }

  ArcBody translated(Vec2 v) const {
    std::vector<Piece> moved = pieces_;
    for (auto& piece : moved) {
      std::visit(
          [&](auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, ArcPiece>) {
              x.center += v;
            } else {
              x.a += v;
              x.b += v;
            }
          },
          piece);
    }
    return ArcBody(std::move(moved));
  }

  bool is_translate_of(const ArcBody& other, double eps = 1e-12) const {
    if (pieces_.size() != other.pieces_.size() || pieces_.empty()) return false;
    const Vec2 shift = piece_first(other.pieces_[0]) - piece_first(pieces_[0]);
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      const Piece& a = pieces_[i];
      const Piece& b = other.pieces_[i];
      if (a.index() != b.index()) return false;
      if (distance(piece_first(a) + shift, piece_first(b)) > eps) return false;
      if (distance(piece_last(a) + shift, piece_last(b)) > eps) return false;
      if (const auto* arc = std::get_if<ArcPiece>(&a)) {
        const auto& other_arc = std::get<ArcPiece>(b);
        if (std::abs(arc->radius - other_arc.radius) > eps) return false;
      }
    }
    return true;
  }

  // Normal jumps between consecutive pieces above the corner threshold.
  std::vector<Vec2> corners() const {
    std::vector<Vec2> out;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      const Piece& cur = pieces_[i];
      const Piece& next = pieces_[(i + 1) % pieces_.size()];
      const double jump = ccw_distance(Angle(piece_last_normal(cur)), Angle(piece_first_normal(next)));
      if (jump > kCornerThreshold && jump < kTwoPi - kCornerThreshold) out.push_back(piece_last(cur));
    }
    return out;
  }

  bool has_flat_stretch() const {
    return std::any_of(pieces_.begin(), pieces_.end(),
                       [](const Piece& p) { return std::holds_alternative<SegmentPiece>(p); });
  }

  Vec2 reference() const {
    Vec2 sum{};
    int count = 0;
    for (const auto& p : pieces_) {
      if (const auto* arc = std::get_if<ArcPiece>(&p)) {
        for (int k = 0; k < 4; ++k) {
          sum += arc->point(arc->start + (arc->end - arc->start) * (k + 0.5) / 4.0);
          ++count;
        }
      } else {
        sum += piece_first(p);
        ++count;
      }
    }
    return sum / static_cast<double>(count);
  }

  double scale() const {
    double s = 0.0;
    const Vec2 ref = reference();
    for (Vec2 v : sample(16).vertices) s = std::max(s, distance(v, ref));
    return 2.0 * s;
  }

  // Distance along the ray from the reference point to the boundary.
  double radial_extent(Vec2 dir) const {
    const Vec2 o = reference();
    double best = -1.0;
    for (const auto& piece : pieces_) {
      if (const auto* arc = std::get_if<ArcPiece>(&piece)) {
        const Vec2 f = o - arc->center;
        const double b = dot(f, dir);
        const double c = dot(f, f) - arc->radius * arc->radius;
        const double disc = b * b - c;
        if (disc < 0.0) continue;
        const double sq = std::sqrt(disc);
        for (double lambda : {-b - sq, -b + sq}) {
          if (lambda <= 0.0) continue;
          const Vec2 hit = o + lambda * dir;
          if (arc->covers(std::atan2(hit.y - arc->center.y, hit.x - arc->center.x), 1e-12)) {
            best = std::max(best, lambda);
          }
        }
      } else {
        const auto& seg = std::get<SegmentPiece>(piece);
        const Vec2 e = seg.b - seg.a;
        const double denom = cross(dir, e);
        if (denom == 0.0) continue;
        const double lambda = cross(seg.a - o, e) / denom;
        const double s = cross(seg.a - o, dir) / denom;
        if (lambda > 0.0 && s >= -1e-12 && s <= 1.0 + 1e-12) best = std::max(best, lambda);
      }
    }
    return best;
  }

  // Positive outside, negative inside, measured radially from the reference.
  double gap(Vec2 p) const {
    const Vec2 d = p - reference();
    const double r = norm(d);
    if (r == 0.0) return -radial_extent({1.0, 0.0});
    return r - radial_extent(d / r);
  }

  // Normal cone at a boundary point as a counterclockwise arc of normals;
  // nullopt if p is not on the boundary.
  std::optional<Arc> normal_cone(Vec2 p, double eps = 1e-9) const {
    const std::size_t m = pieces_.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Piece& cur = pieces_[i];
      const Piece& next = pieces_[(i + 1) % m];
      if (distance(piece_last(cur), p) <= eps) {
        return Arc::between(Angle(piece_last_normal(cur)), Angle(piece_first_normal(next)));
      }
    }
    for (const auto& piece : pieces_) {
      if (const auto* arc = std::get_if<ArcPiece>(&piece)) {
        const double angle = std::atan2(p.y - arc->center.y, p.x - arc->center.x);
        if (std::abs(distance(p, arc->center) - arc->radius) <= eps && arc->covers(angle, 1e-12)) {
          return Arc{Angle(angle), 0.0};
        }
      } else {
        const auto& seg = std::get<SegmentPiece>(piece);
        const Vec2 e = seg.b - seg.a;
        const double len = norm(e);
        const double along = dot(p - seg.a, e) / len;
        if (std::abs(cross(e, p - seg.a)) / len <= eps && along >= -eps && along <= len + eps) {
          return Arc{Angle(seg.normal()), 0.0};
        }
      }
    }
    return std::nullopt;
  }

  // Boundary polyline; arcs get up to `per_arc` points, segments their endpoints.
  TaggedPolygon sample(int per_arc, int tag = kUntagged) const {
    TaggedPolygon poly;
    for (const auto& piece : pieces_) {
      if (const auto* arc = std::get_if<ArcPiece>(&piece)) {
        const double sweep = arc->end - arc->start;
        const int k = std::max(1, static_cast<int>(std::ceil(per_arc * sweep / kTwoPi)));
        for (int i = 0; i < k; ++i) poly.vertices.push_back(arc->point(arc->start + sweep * i / k));
      } else {
        poly.vertices.push_back(std::get<SegmentPiece>(piece).a);
      }
    }
    poly.tags.assign(poly.vertices.size(), tag);
    return poly;
  }

 private:
  void check() const {
    if (pieces_.empty()) throw GeometryError(ErrorCode::InvalidArcBody, "no pieces");
    double turning = 0.0;
    const std::size_t m = pieces_.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Piece& cur = pieces_[i];
      const Piece& next = pieces_[(i + 1) % m];
      if (const auto* arc = std::get_if<ArcPiece>(&cur)) {
        if (!(arc->radius > 0.0) || arc->end < arc->start || arc->end - arc->start > kTwoPi + 1e-12) {
          throw GeometryError(ErrorCode::InvalidArcBody, "bad arc piece");
        }
        turning += arc->end - arc->start;
      }
      const double scale = std::max(1.0, norm(piece_last(cur)));
      if (distance(piece_last(cur), piece_first(next)) > 1e-12 * scale) {
        throw GeometryError(ErrorCode::InvalidArcBody,
                            "piece " + std::to_string(i) + " does not meet its successor");
      }
      const double jump = ccw_distance(Angle(piece_last_normal(cur)), Angle(piece_first_normal(next)));
      if (jump < kTwoPi - 1e-9) turning += jump;
      if (jump >= kPi && jump < kTwoPi - 1e-9) {
        throw GeometryError(ErrorCode::InvalidArcBody, "reflex corner");
      }
    }
    if (std::abs(turning - kTwoPi) > 1e-9) {
      throw GeometryError(ErrorCode::InvalidArcBody,
                          "normals turn by " + std::to_string(turning) + ", not 2pi");
    }
  }

  std::vector<Piece> pieces_;
};

struct Overlap {
  Vec2 from;
  Vec2 to;
};

struct CrossingSet {
  std::vector<Vec2> points;
  std::vector<Overlap> overlaps;  // coincident stretches of positive length
};

namespace detail {

inline constexpr double kCrossingDedupe = 1e-9;
inline constexpr double kTangentSlack = 1e-12;

inline void push_unique(std::vector<Vec2>& pts, Vec2 p) {
  for (Vec2 q : pts) {
    if (distance(p, q) <= kCrossingDedupe) return;
  }
  pts.push_back(p);
}

inline void cross_arcs(const ArcPiece& a, const ArcPiece& b, CrossingSet& out) {
  const Vec2 d = b.center - a.center;
  const double dist = norm(d);
  const double scale = std::max(a.radius, b.radius);
  if (dist <= kTangentSlack * scale && std::abs(a.radius - b.radius) <= kTangentSlack * scale) {
    // same circle: overlap of the two angular ranges
    const double width_b = b.end - b.start;
    const double shifted = a.start + Angle::normalize(b.start - a.start);
    for (double lo_b : {shifted - kTwoPi, shifted}) {
      const double lo = std::max(a.start, lo_b);
      const double hi = std::min(a.end, lo_b + width_b);
      if (hi - lo > 1e-12) {
        out.overlaps.push_back({a.point(lo), a.point(hi)});
      } else if (hi >= lo - 1e-12) {
        push_unique(out.points, a.point(lo));
      }
    }
    return;
  }
  if (dist > a.radius + b.radius + kTangentSlack * scale) return;
  if (dist < std::abs(a.radius - b.radius) - kTangentSlack * scale) return;
  const double along = (dist * dist + a.radius * a.radius - b.radius * b.radius) / (2.0 * dist);
  const double h2 = a.radius * a.radius - along * along;
  const double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
  const Vec2 u = d / dist;
  const Vec2 base = a.center + along * u;
  const Vec2 candidates[2] = {base + h * perp(u), base - h * perp(u)};
  for (const Vec2& p : candidates) {
    const double ta = std::atan2(p.y - a.center.y, p.x - a.center.x);
    const double tb = std::atan2(p.y - b.center.y, p.x - b.center.x);
    if (a.covers(ta, 1e-12) && b.covers(tb, 1e-12)) push_unique(out.points, p);
  }
}

inline void cross_arc_segment(const ArcPiece& a, const SegmentPiece& s, CrossingSet& out) {
  const Vec2 e = s.b - s.a;
  const double len2 = dot(e, e);
  const Vec2 f = s.a - a.center;
  const double b = dot(f, e) / len2;
  const double c = (dot(f, f) - a.radius * a.radius) / len2;
  double disc = b * b - c;
  if (disc < -kTangentSlack) return;
  disc = std::max(disc, 0.0);
  const double sq = std::sqrt(disc);
  for (double t : {-b - sq, -b + sq}) {
    if (t < -1e-12 || t > 1.0 + 1e-12) continue;
    const Vec2 p = s.a + t * e;
    if (a.covers(std::atan2(p.y - a.center.y, p.x - a.center.x), 1e-12)) push_unique(out.points, p);
  }
}

inline void cross_segments(const SegmentPiece& s1, const SegmentPiece& s2, CrossingSet& out) {
  const Vec2 e1 = s1.b - s1.a, e2 = s2.b - s2.a;
  const double denom = cross(e1, e2);
  const double len1 = norm(e1);
  if (std::abs(denom) <= 1e-14 * len1 * norm(e2)) {
    if (std::abs(cross(e1, s2.a - s1.a)) / len1 > 1e-12) return;  // parallel, distinct lines
    const double t0 = dot(s2.a - s1.a, e1) / (len1 * len1);
    const double t1 = dot(s2.b - s1.a, e1) / (len1 * len1);
    const double lo = std::max(0.0, std::min(t0, t1));
    const double hi = std::min(1.0, std::max(t0, t1));
    if (hi - lo > 1e-12) {
      out.overlaps.push_back({s1.a + lo * e1, s1.a + hi * e1});
    } else if (hi >= lo - 1e-12) {
      push_unique(out.points, s1.a + lo * e1);
    }
    return;
  }
  const double t = cross(s2.a - s1.a, e2) / denom;
  const double u = cross(s2.a - s1.a, e1) / denom;
  if (t >= -1e-12 && t <= 1.0 + 1e-12 && u >= -1e-12 && u <= 1.0 + 1e-12) {
    push_unique(out.points, s1.a + t * e1);
  }
}

}  // namespace detail

// All points of bd(b1) and bd(b2) in common; coincident stretches are
// reported as overlaps instead of points.
inline CrossingSet arc_boundary_crossings(const ArcBody& b1, const ArcBody& b2) {
  CrossingSet out;
  for (const auto& p1 : b1.pieces()) {
    for (const auto& p2 : b2.pieces()) {
      std::visit(
          [&](const auto& x, const auto& y) {
            using X = std::decay_t<decltype(x)>;
            using Y = std::decay_t<decltype(y)>;
            if constexpr (std::is_same_v<X, ArcPiece> && std::is_same_v<Y, ArcPiece>) {
              detail::cross_arcs(x, y, out);
            } else if constexpr (std::is_same_v<X, ArcPiece>) {
              detail::cross_arc_segment(x, y, out);
            } else if constexpr (std::is_same_v<Y, ArcPiece>) {
              detail::cross_arc_segment(y, x, out);
            } else {
              detail::cross_segments(x, y, out);
            }
          },
          p1, p2);
    }
  }
  return out;
}

struct ArcSingularities {
  std::size_t count = 0;
  std::vector<Vec2> points;
  std::vector<std::string> flags;
};

// Singular points of the intersection: crossings of two boundaries and
// corners of a single boundary that lie in every body and where the combined
// normal cone has positive measure.
inline ArcSingularities arc_intersect_singularities(const std::vector<ArcBody>& bodies) {
  ArcSingularities out;
  auto add_flag = [&](const std::string& f) {
    if (std::find(out.flags.begin(), out.flags.end(), f) == out.flags.end()) out.flags.push_back(f);
  };
  std::vector<Vec2> candidates;
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    for (Vec2 c : bodies[i].corners()) detail::push_unique(candidates, c);
    for (std::size_t j = i + 1; j < bodies.size(); ++j) {
      const CrossingSet cs = arc_boundary_crossings(bodies[i], bodies[j]);
      for (Vec2 p : cs.points) detail::push_unique(candidates, p);
      for (const auto& o : cs.overlaps) {
        add_flag("OverlappingCongruentPieces");
        detail::push_unique(candidates, o.from);
        detail::push_unique(candidates, o.to);
      }
    }
  }

  constexpr double eps = 1e-9;
  bool any_inside = false;
  for (Vec2 p : candidates) {
    bool inside = true;
    for (const auto& b : bodies) inside = inside && b.gap(p) <= eps;
    if (!inside) continue;
    any_inside = true;
    std::vector<Arc> cones;
    for (const auto& b : bodies) {
      if (auto cone = b.normal_cone(p, eps)) cones.push_back(*cone);
    }
    // the combined cone is degenerate iff every normal involved is one direction
    bool spread = false;
    bool opposite = false;
    for (const auto& c : cones) spread = spread || c.measure > kCornerThreshold;
    for (std::size_t i = 0; i < cones.size(); ++i) {
      for (std::size_t j = i + 1; j < cones.size(); ++j) {
        const double d = angular_distance(cones[i].start, cones[j].start);
        if (d > kCornerThreshold) spread = true;
        if (std::abs(d - kPi) <= kCornerThreshold) opposite = true;
        if (d <= kCornerThreshold && cones[i].measure <= kCornerThreshold &&
            cones[j].measure <= kCornerThreshold) {
          add_flag("tangential_contact");
        }
      }
    }
    if (opposite) add_flag("opposite_normals");
    if (spread) out.points.push_back(p);
  }
  if (!any_inside) {
    // no boundary event inside every body: either empty or one body inside all others
    bool some_inside = false;
    for (const auto& b : bodies) {
      bool all = true;
      for (const auto& other : bodies) all = all && other.gap(b.reference()) < 0.0;
      some_inside = some_inside || all;
    }
    if (!some_inside) throw GeometryError(ErrorCode::EmptyIntersection, "bodies have no common point");
  }
  out.count = out.points.size();
  return out;
}

}  // namespace tsing
