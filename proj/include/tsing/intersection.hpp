#pragma once

// Intersection of n translates of one smooth strictly convex body: boundary
// crossings of translate pairs, the singular vertices that survive in every
// translate, owned edges between them, and the Gauss-measure bookkeeping that
// ties vertices and edges into a partition of the circle.

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsing/body.hpp"
#include "tsing/chords.hpp"
#include "tsing/error.hpp"
#include "tsing/geometry.hpp"

namespace tsing {

inline constexpr double kTangencyWindow = 1e-9;       // relative to diameter
inline constexpr double kNormalAngleTolerance = 1e-6;  // radians
inline constexpr double kMeasureMargin = 1e-9;         // radians
inline constexpr double kPartitionTolerance = 1e-7;    // radians

enum class PairKind { TwoPoints, Tangent, Disjoint, Identical };

inline const char* to_string(PairKind k) {
  switch (k) {
    case PairKind::TwoPoints: return "TwoPoints";
    case PairKind::Tangent: return "Tangent";
    case PairKind::Disjoint: return "Disjoint";
    case PairKind::Identical: return "Identical";
  }
  return "?";
}

struct PairCrossing {
  PairKind kind = PairKind::Disjoint;
  std::array<Vec2, 2> points{};  // TwoPoints uses both, Tangent uses points[0]
  double distance = 0.0;         // translation length r
  double eta = 0.0;              // maximum chord of b1 parallel to the translation
};

// Endpoint, in direction `dir`, of the longest chord of b parallel to dir.
// Its ends carry opposite normals psi + pi and psi, and along psi in
// (a, a + pi), a = angle(dir) + pi/2, the cross term below increases strictly,
// so bisection is exact to rounding. The chord-length maximum itself is flat
// and pins its location only to about the square root of the rounding error.
inline Vec2 tangent_point(const SupportBody& b, Vec2 dir) {
  const double a = Angle::of(perp(dir)).radians();
  const Vec2 n = unit(a);
  auto across = [&](double psi) { return dot(b.boundary_point(psi + kPi) - b.boundary_point(psi), n); };
  const double psi = detail::bisect(across, a, a + kPi);
  const Vec2 p = b.boundary_point(psi), q = b.boundary_point(psi + kPi);
  return dot(q - p, dir) >= 0.0 ? q : p;
}

// bd(b1) and bd(b2) meet where a chord of b1 parallel to the translation has
// exactly the translation's length: its far endpoint q satisfies q - t in bd(b1).
inline PairCrossing pair_boundary_points(const SupportBody& b1, const SupportBody& b2) {
  if (!b1.is_translate_of(b2)) {
    throw GeometryError(ErrorCode::ShapeMismatch, "bodies are not translates of each other");
  }
  PairCrossing out;
  const Vec2 t = b2.center() - b1.center();
  out.distance = norm(t);
  if (out.distance <= 1e-14 * b1.diameter()) {
    out.kind = PairKind::Identical;
    return out;
  }
  const Vec2 dir = t / out.distance;
  const Angle w = Angle::of(perp(dir));
  const ChordProfile prof = max_chord(b1, w);
  out.eta = prof.eta;
  auto far_end = [&](const Chord& c) { return dot(c.q - c.p, dir) >= 0.0 ? c.q : c.p; };

  if (std::abs(out.distance - prof.eta) <= kTangencyWindow * b1.diameter()) {
    out.kind = PairKind::Tangent;
    out.points[0] = tangent_point(b1, dir);
  } else if (out.distance > prof.eta) {
    out.kind = PairKind::Disjoint;
  } else {
    const auto [c1, c2] = chords_of_length(prof, out.distance);
    out.kind = PairKind::TwoPoints;
    out.points = {far_end(c1), far_end(c2)};
  }
  return out;
}

struct NormalPair {
  Angle first;
  Angle second;
  double margin = 0.0;  // distance of the angle between normals from {0, pi}
};

inline NormalPair normal_pair(const SupportBody& b1, const SupportBody& b2, Vec2 p) {
  NormalPair np{b1.gauss_map(p), b2.gauss_map(p), 0.0};
  const double d = angular_distance(np.first, np.second);
  np.margin = std::min(d, kPi - d);
  return np;
}

// Throws ParallelNormals when the two outward normals at p are equal or opposite.
inline NormalPair verify_nonparallel_normals(const SupportBody& b1, const SupportBody& b2, Vec2 p) {
  const NormalPair np = normal_pair(b1, b2, p);
  if (!(np.margin > kNormalAngleTolerance)) {
    throw GeometryError(ErrorCode::ParallelNormals,
                        "normals " + std::to_string(np.first.radians()) + " and " +
                            std::to_string(np.second.radians()) + " are parallel");
  }
  return np;
}

// A shared body with n >= 2 pairwise distinct translations.
class Arrangement {
 public:
  Arrangement(SupportFunction shape, Angle rotation, std::vector<Vec2> translations)
      : base_(std::move(shape), {}, rotation), translations_(std::move(translations)) {
    if (translations_.size() < 2) {
      throw GeometryError(ErrorCode::InvalidArrangement, "an arrangement needs n >= 2 translates");
    }
    for (std::size_t i = 0; i < translations_.size(); ++i) {
      if (!is_finite(translations_[i])) {
        throw GeometryError(ErrorCode::InvalidArrangement, "non-finite translation");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (translations_[i] == translations_[j]) {
          throw GeometryError(ErrorCode::InvalidArrangement,
                              "translations " + std::to_string(j) + " and " + std::to_string(i) +
                                  " coincide");
        }
      }
    }
    bodies_.reserve(translations_.size());
    for (Vec2 t : translations_) bodies_.push_back(base_.moved_to(t));
  }

  std::size_t size() const { return translations_.size(); }
  const SupportFunction& shape() const { return base_.shape(); }
  Angle rotation() const { return base_.rotation(); }
  const SupportBody& base() const { return base_; }
  const std::vector<Vec2>& translations() const { return translations_; }
  const SupportBody& body(std::size_t i) const { return bodies_.at(i); }
  const std::vector<SupportBody>& bodies() const { return bodies_; }
  double diameter() const { return base_.diameter(); }
  double tolerance() const { return base_.tolerance(); }

  Arrangement without(std::size_t j) const {
    std::vector<Vec2> rest;
    for (std::size_t i = 0; i < translations_.size(); ++i) {
      if (i != j) rest.push_back(translations_[i]);
    }
    return Arrangement(base_, std::move(rest));
  }

  Arrangement prefix(std::size_t count) const {
    return Arrangement(base_, {translations_.begin(), translations_.begin() + count});
  }

 private:
  Arrangement(const SupportBody& base, std::vector<Vec2> translations)
      : base_(base), translations_(std::move(translations)) {
    if (translations_.size() < 2) {
      throw GeometryError(ErrorCode::InvalidArrangement, "an arrangement needs n >= 2 translates");
    }
    for (Vec2 t : translations_) bodies_.push_back(base_.moved_to(t));
  }

  SupportBody base_;
  std::vector<Vec2> translations_;
  std::vector<SupportBody> bodies_;
};

enum class IntersectionStatus { ProperBody, SinglePoint, Empty };

inline const char* to_string(IntersectionStatus s) {
  switch (s) {
    case IntersectionStatus::ProperBody: return "ProperBody";
    case IntersectionStatus::SinglePoint: return "SinglePoint";
    case IntersectionStatus::Empty: return "Empty";
  }
  return "?";
}

struct SingularVertex {
  Vec2 point;
  std::pair<int, int> pair{-1, -1};  // (owner of incoming edge, owner of outgoing edge)
  Arc normal_cone;
};

struct Edge {
  int owner = -1;
  Arc gauss_interval;
  Vec2 from;
  Vec2 to;
};

struct PairRecord {
  int j = 0;
  int k = 0;
  PairCrossing crossing;
};

struct IntersectionShape {
  IntersectionStatus status = IntersectionStatus::Empty;
  std::vector<SingularVertex> vertices;  // counterclockwise; edge i follows vertex i
  std::vector<Edge> edges;
  std::vector<bool> redundant;
  Vec2 reference;                        // interior point used for ordering
  std::optional<Vec2> single_point;
  std::vector<PairRecord> pairs;
  std::vector<std::string> flags;        // degeneracies; empty for generic input
};

namespace detail {

struct Candidate {
  Vec2 point;
  int j = 0;
  int k = 0;
  bool tangent = false;
};

inline double max_gap(const Arrangement& arr, Vec2 p) {
  double worst = -INFINITY;
  for (const auto& b : arr.bodies()) worst = std::max(worst, b.contains(p).gap);
  return worst;
}

inline void add_flag(IntersectionShape& s, std::string flag) {
  if (std::find(s.flags.begin(), s.flags.end(), flag) == s.flags.end()) {
    s.flags.push_back(std::move(flag));
  }
}

// Owner of the boundary along the ray from the reference at angle alpha: the
// translate whose boundary is hit first, i.e. the largest gap at that probe.
struct OwnerProbe {
  int owner = -1;
  bool tie = false;
};

inline OwnerProbe probe_owner(const Arrangement& arr, Vec2 ref, double alpha) {
  Vec2 probe;
  double nearest = INFINITY;
  for (const auto& b : arr.bodies()) {
    const Vec2 hit = b.radial_boundary(ref, Angle(alpha));
    const double d = distance(hit, ref);
    if (d < nearest) {
      nearest = d;
      probe = hit;
    }
  }
  double best = -INFINITY, second = -INFINITY;
  OwnerProbe out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const double g = arr.body(i).contains(probe).gap;
    if (g > best) {
      second = best;
      best = g;
      out.owner = static_cast<int>(i);
    } else if (g > second) {
      second = g;
    }
  }
  out.tie = best - second <= arr.tolerance();
  return out;
}

inline IntersectionShape intersect_geometry(const Arrangement& arr) {
  IntersectionShape shape;
  const int n = static_cast<int>(arr.size());
  const double tol = arr.tolerance();

  std::vector<Candidate> candidates;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      PairRecord rec{j, k, pair_boundary_points(arr.body(j), arr.body(k))};
      if (rec.crossing.kind == PairKind::TwoPoints) {
        for (Vec2 p : rec.crossing.points) candidates.push_back({p, j, k, false});
      } else if (rec.crossing.kind == PairKind::Tangent) {
        candidates.push_back({rec.crossing.points[0], j, k, true});
      }
      shape.pairs.push_back(rec);
    }
  }

  // A crossing of bd(phi_j) and bd(phi_k) is singular iff it lies in every translate.
  std::vector<Candidate> survivors;
  for (const auto& c : candidates) {
    bool inside = true;
    for (int i = 0; i < n && inside; ++i) {
      if (i == c.j || i == c.k) continue;
      const Containment ct = arr.body(i).contains(c.point);
      if (ct.location == Location::Exterior) inside = false;
      if (ct.location == Location::Boundary) add_flag(shape, "concurrent_boundaries");
    }
    if (!inside) continue;
    const bool duplicate = std::any_of(survivors.begin(), survivors.end(), [&](const Candidate& s) {
      return distance(s.point, c.point) <= 10.0 * tol;
    });
    if (duplicate) {
      add_flag(shape, "concurrent_boundaries");
      continue;
    }
    survivors.push_back(c);
  }

  const bool any_tangent = std::any_of(survivors.begin(), survivors.end(),
                                       [](const Candidate& c) { return c.tangent; });
  if (any_tangent) {
    shape.status = IntersectionStatus::SinglePoint;
    for (const auto& c : survivors) {
      if (c.tangent) shape.single_point = c.point;
    }
    return shape;
  }
  if (survivors.empty()) {
    shape.status = IntersectionStatus::Empty;
    return shape;
  }

  // Interior reference: the most interior of the centers, the crossing
  // candidates and their centroid.
  std::vector<Vec2> seeds = arr.translations();
  Vec2 centroid{};
  for (const auto& c : survivors) {
    seeds.push_back(c.point);
    centroid += c.point;
  }
  seeds.push_back(centroid / static_cast<double>(survivors.size()));
  double best_gap = INFINITY;
  for (Vec2 s : seeds) {
    const double g = max_gap(arr, s);
    if (g < best_gap) {
      best_gap = g;
      shape.reference = s;
    }
  }
  if (best_gap >= -tol || survivors.size() < 2) {
    shape.status = IntersectionStatus::SinglePoint;
    shape.single_point = survivors.front().point;
    add_flag(shape, "empty_interior");
    return shape;
  }
  shape.status = IntersectionStatus::ProperBody;

  const Vec2 ref = shape.reference;
  auto polar = [&](Vec2 p) { return Angle::of(p - ref).radians(); };
  std::sort(survivors.begin(), survivors.end(),
            [&](const Candidate& a, const Candidate& b) { return polar(a.point) < polar(b.point); });

  const std::size_t m = survivors.size();
  shape.edges.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2 a = survivors[i].point;
    const Vec2 b = survivors[(i + 1) % m].point;
    const double start = polar(a);
    const double span = ccw_distance(Angle(start), Angle(polar(b)));
    OwnerProbe probe = probe_owner(arr, ref, start + 0.5 * span);
    if (probe.tie) {
      const OwnerProbe q1 = probe_owner(arr, ref, start + 0.25 * span);
      const OwnerProbe q3 = probe_owner(arr, ref, start + 0.75 * span);
      if (!q1.tie) {
        probe = q1;
      } else if (!q3.tie) {
        probe = q3;
      } else {
        add_flag(shape, "edge_owner_tie");
      }
    }
    Edge& e = shape.edges[i];
    e.owner = probe.owner;
    e.from = a;
    e.to = b;
    const SupportBody& owner = arr.body(static_cast<std::size_t>(e.owner));
    e.gauss_interval = Arc::between(owner.gauss_map(a), owner.gauss_map(b));
  }

  shape.vertices.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Edge& in = shape.edges[(i + m - 1) % m];
    const Edge& out = shape.edges[i];
    SingularVertex& v = shape.vertices[i];
    v.point = survivors[i].point;
    v.pair = {in.owner, out.owner};
    v.normal_cone = Arc::between(in.gauss_interval.end(), out.gauss_interval.start);
    const bool crossing_matches = (in.owner == survivors[i].j && out.owner == survivors[i].k) ||
                                  (in.owner == survivors[i].k && out.owner == survivors[i].j);
    if (!crossing_matches) add_flag(shape, "vertex_owner_mismatch");
  }
  return shape;
}

}  // namespace detail

inline bool is_redundant(const Arrangement& arr, std::size_t j);

// Singular vertices, owned edges and redundancy of the intersection.
inline IntersectionShape intersect(const Arrangement& arr) {
  IntersectionShape shape = detail::intersect_geometry(arr);
  shape.redundant.assign(arr.size(), false);
  if (shape.status != IntersectionStatus::ProperBody) return shape;
  std::vector<bool> owns(arr.size(), false);
  for (const auto& e : shape.edges) owns[static_cast<std::size_t>(e.owner)] = true;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (owns[i]) continue;
    if (is_redundant(arr, i)) {
      shape.redundant[i] = true;
    } else {
      detail::add_flag(shape, "unowned_translate_not_redundant");
    }
  }
  return shape;
}

// phi_j is redundant iff the intersection of the others already lies in phi_j.
inline bool is_redundant(const Arrangement& arr, std::size_t j) {
  const SupportBody& target = arr.body(j);
  auto inside = [&](Vec2 p) { return target.contains(p).location != Location::Exterior; };
  constexpr int samples = 64;

  if (arr.size() == 2) {
    const SupportBody& other = arr.body(1 - j);
    for (int s = 0; s < samples; ++s) {
      if (!inside(other.boundary_point(kTwoPi * s / samples))) return false;
    }
    return true;
  }

  const Arrangement reduced = arr.without(j);
  const IntersectionShape rest = detail::intersect_geometry(reduced);
  switch (rest.status) {
    case IntersectionStatus::Empty:
      throw GeometryError(ErrorCode::EmptyIntersection,
                          "intersection without translate " + std::to_string(j) + " is empty");
    case IntersectionStatus::SinglePoint:
      return rest.single_point && inside(*rest.single_point);
    case IntersectionStatus::ProperBody:
      break;
  }
  for (const auto& v : rest.vertices) {
    if (!inside(v.point)) return false;
  }
  for (const auto& e : rest.edges) {
    const SupportBody& owner = reduced.body(static_cast<std::size_t>(e.owner));
    for (int s = 0; s < samples; ++s) {
      const double theta = e.gauss_interval.start.radians() +
                           e.gauss_interval.measure * (s + 0.5) / samples;
      if (!inside(owner.boundary_point(theta))) return false;
    }
  }
  return true;
}

// Gauss measure of bd(b1) outside b2, given their two boundary crossings.
inline double outside_gauss_measure(const SupportBody& b1, const SupportBody& b2,
                                    const PairCrossing& crossing) {
  if (crossing.kind != PairKind::TwoPoints) {
    throw GeometryError(ErrorCode::NoProperOverlap,
                        std::string("pair is ") + to_string(crossing.kind));
  }
  const Angle t1 = b1.gauss_map(crossing.points[0]);
  const Angle t2 = b1.gauss_map(crossing.points[1]);
  const Arc first = Arc::between(t1, t2);
  const Arc second = Arc::between(t2, t1);
  const Vec2 mid = b1.boundary_point(first.start.radians() + 0.5 * first.measure);
  const Arc& inside = b2.contains(mid).location == Location::Interior ? first : second;
  return kTwoPi - inside.measure;
}

inline double outside_gauss_measure(const SupportBody& b1, const SupportBody& b2) {
  return outside_gauss_measure(b1, b2, pair_boundary_points(b1, b2));
}

struct VertexCheck {
  Vec2 point;
  int j = -1;
  int k = -1;
  double normal_margin = 0.0;
  bool pass = false;
};

struct EdgeCheck {
  int owner = -1;
  double measure = 0.0;
  double margin = 0.0;  // pi - measure
  bool pass = false;
};

struct PairCheck {
  int j = -1;
  int k = -1;
  double outside_measure = 0.0;
  double margin = 0.0;  // outside_measure - pi
  bool pass = false;
};

struct VerificationReport {
  std::size_t n = 0;
  std::size_t vertex_count = 0;
  IntersectionStatus status = IntersectionStatus::Empty;
  bool count_pass = false;
  std::vector<int> redundant;
  std::vector<VertexCheck> vertices;
  std::vector<EdgeCheck> edges;
  std::vector<PairCheck> pairs;
  double partition_residual = INFINITY;
  bool partition_pass = false;
  std::vector<std::string> flags;
  bool pass = false;

  double min_normal_margin() const {
    double m = INFINITY;
    for (const auto& v : vertices) m = std::min(m, v.normal_margin);
    return m;
  }
  double min_edge_margin() const {
    double m = INFINITY;
    for (const auto& e : edges) m = std::min(m, e.margin);
    return m;
  }
  double min_pair_margin() const {
    double m = INFINITY;
    for (const auto& p : pairs) m = std::min(m, p.margin);
    return m;
  }
};

// Checks |sing| = n together with the supporting lemmas on one arrangement.
// In strict mode an arrangement outside the theorem's hypotheses throws
// HypothesisViolated instead of producing a failing report.
inline VerificationReport verify_theorem(const Arrangement& arr, bool strict,
                                         IntersectionShape* shape_out = nullptr) {
  const IntersectionShape shape = intersect(arr);
  VerificationReport rep;
  rep.n = arr.size();
  rep.status = shape.status;
  rep.vertex_count = shape.vertices.size();
  rep.flags = shape.flags;
  for (std::size_t i = 0; i < shape.redundant.size(); ++i) {
    if (shape.redundant[i]) rep.redundant.push_back(static_cast<int>(i));
  }

  if (strict) {
    if (shape.status != IntersectionStatus::ProperBody) {
      throw GeometryError(ErrorCode::HypothesisViolated,
                          std::string("empty interior (intersection is ") +
                              to_string(shape.status) + ")");
    }
    if (!rep.redundant.empty()) {
      throw GeometryError(ErrorCode::HypothesisViolated,
                          "redundant translate " + std::to_string(rep.redundant.front() + 1));
    }
  }

  rep.count_pass = shape.status == IntersectionStatus::ProperBody && rep.redundant.empty() &&
                   rep.vertex_count == rep.n;

  double total = 0.0;
  for (const auto& v : shape.vertices) {
    VertexCheck vc{v.point, v.pair.first, v.pair.second, 0.0, false};
    if (v.pair.first >= 0 && v.pair.second >= 0 && v.pair.first != v.pair.second) {
      const NormalPair np = normal_pair(arr.body(static_cast<std::size_t>(v.pair.first)),
                                        arr.body(static_cast<std::size_t>(v.pair.second)), v.point);
      vc.normal_margin = np.margin;
      vc.pass = np.margin > kNormalAngleTolerance;
    }
    rep.vertices.push_back(vc);
    total += v.normal_cone.measure;
  }
  for (const auto& e : shape.edges) {
    EdgeCheck ec{e.owner, e.gauss_interval.measure, kPi - e.gauss_interval.measure, false};
    ec.pass = ec.margin > kMeasureMargin && ec.measure > 0.0;
    rep.edges.push_back(ec);
    total += e.gauss_interval.measure;
  }
  for (const auto& rec : shape.pairs) {
    if (rec.crossing.kind != PairKind::TwoPoints) continue;
    const SupportBody& bj = arr.body(static_cast<std::size_t>(rec.j));
    const SupportBody& bk = arr.body(static_cast<std::size_t>(rec.k));
    for (int side = 0; side < 2; ++side) {
      PairCheck pc;
      pc.j = side == 0 ? rec.j : rec.k;
      pc.k = side == 0 ? rec.k : rec.j;
      pc.outside_measure = side == 0 ? outside_gauss_measure(bj, bk, rec.crossing)
                                     : outside_gauss_measure(bk, bj, rec.crossing);
      pc.margin = pc.outside_measure - kPi;
      pc.pass = pc.margin > kMeasureMargin;
      rep.pairs.push_back(pc);
    }
  }
  if (shape.status == IntersectionStatus::ProperBody) {
    rep.partition_residual = std::abs(kTwoPi - total);
    rep.partition_pass = rep.partition_residual <= kPartitionTolerance;
  }

  const bool lemmas = std::all_of(rep.vertices.begin(), rep.vertices.end(),
                                  [](const VertexCheck& v) { return v.pass; }) &&
                      std::all_of(rep.edges.begin(), rep.edges.end(),
                                  [](const EdgeCheck& e) { return e.pass; }) &&
                      std::all_of(rep.pairs.begin(), rep.pairs.end(),
                                  [](const PairCheck& p) { return p.pass; });
  rep.pass = rep.count_pass && lemmas && rep.partition_pass && rep.flags.empty();
  if (shape_out) *shape_out = shape;
  return rep;
}

}  // namespace tsing
