#pragma once

// Smooth, strictly convex planar bodies described by a truncated Fourier
// support function. The outward normal angle theta parameterizes the boundary
// (Gauss parameter); positivity of the radius of curvature h + h'' is what
// makes that parameterization a bijection.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "tsing/error.hpp"
#include "tsing/geometry.hpp"

namespace tsing {

struct Harmonic {
  double a = 0.0;  // cosine coefficient
  double b = 0.0;  // sine coefficient
  friend bool operator==(const Harmonic&, const Harmonic&) = default;
};

struct SupportValue {
  double h = 0.0;
  double dh = 0.0;
  double d2h = 0.0;
};

// h(theta) = a0 + sum_k a_k cos(k theta) + b_k sin(k theta); harmonics[k-1] holds order k.
struct SupportFunction {
  double a0 = 1.0;
  std::vector<Harmonic> harmonics;

  friend bool operator==(const SupportFunction&, const SupportFunction&) = default;

  static SupportFunction disk(double radius) { return {radius, {}}; }

  SupportValue eval(double theta) const {
    SupportValue v{a0, 0.0, 0.0};
    const double c1 = std::cos(theta), s1 = std::sin(theta);
    double ck = c1, sk = s1;
    for (std::size_t i = 0; i < harmonics.size(); ++i) {
      const double k = static_cast<double>(i + 1);
      const auto [a, b] = harmonics[i];
      v.h += a * ck + b * sk;
      v.dh += k * (b * ck - a * sk);
      v.d2h -= k * k * (a * ck + b * sk);
      const double next_c = ck * c1 - sk * s1;
      sk = sk * c1 + ck * s1;
      ck = next_c;
    }
    return v;
  }

  double radius_of_curvature(double theta) const {
    const SupportValue v = eval(theta);
    return v.h + v.d2h;
  }

  // Lipschitz bound of rho = h + h'' used by the certificate.
  double curvature_lipschitz() const {
    double l = 0.0;
    for (std::size_t i = 0; i < harmonics.size(); ++i) {
      const double k = static_cast<double>(i + 1);
      l += k * (1.0 + k * k) * (std::abs(harmonics[i].a) + std::abs(harmonics[i].b));
    }
    return l;
  }

  double support_lipschitz() const {
    double l = 0.0;
    for (std::size_t i = 0; i < harmonics.size(); ++i) {
      l += static_cast<double>(i + 1) * (std::abs(harmonics[i].a) + std::abs(harmonics[i].b));
    }
    return l;
  }
};

inline SupportValue eval_support(const SupportFunction& sf, Angle theta) {
  return sf.eval(theta.radians());
}

inline constexpr int kCertificateSamples = 4096;

struct CurvatureCertificate {
  double rho_min = 0.0;  // certified lower bound of h + h''
  double h_min = 0.0;    // certified lower bound of h
  double rho_sampled_min = 0.0;
  double h_sampled_min = 0.0;
};

// Sampled minima minus a Lipschitz slack over the half sample spacing.
inline CurvatureCertificate certify(const SupportFunction& sf) {
  CurvatureCertificate c;
  c.rho_sampled_min = INFINITY;
  c.h_sampled_min = INFINITY;
  for (int i = 0; i < kCertificateSamples; ++i) {
    const SupportValue v = sf.eval(kTwoPi * i / kCertificateSamples);
    c.rho_sampled_min = std::min(c.rho_sampled_min, v.h + v.d2h);
    c.h_sampled_min = std::min(c.h_sampled_min, v.h);
  }
  const double half_step = kPi / kCertificateSamples;
  c.rho_min = c.rho_sampled_min - sf.curvature_lipschitz() * half_step;
  c.h_min = c.h_sampled_min - sf.support_lipschitz() * half_step;
  return c;
}

// Returns the certified lower bound on the radius of curvature, or throws.
inline double validate(const SupportFunction& sf) {
  if (!std::isfinite(sf.a0)) throw GeometryError(ErrorCode::BadInput, "non-finite a0");
  for (const auto& hk : sf.harmonics) {
    if (!std::isfinite(hk.a) || !std::isfinite(hk.b)) {
      throw GeometryError(ErrorCode::BadInput, "non-finite harmonic coefficient");
    }
  }
  const CurvatureCertificate c = certify(sf);
  if (c.rho_min <= 0.0) {
    throw GeometryError(ErrorCode::NotStrictlyConvexOrNotSmooth,
                        "certified radius of curvature " + std::to_string(c.rho_min) + " <= 0");
  }
  if (c.h_min <= 0.0) {
    throw GeometryError(ErrorCode::OriginNotInterior,
                        "certified minimum support " + std::to_string(c.h_min) + " <= 0");
  }
  return c.rho_min;
}

// Relative boundary tolerance. TRANSLATE_SING_TOL overrides it (tests only).
inline double relative_boundary_tolerance() {
  static const double tol = [] {
    if (const char* env = std::getenv("TRANSLATE_SING_TOL")) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end != env && v > 0.0 && std::isfinite(v)) return v;
    }
    return 1e-7;
  }();
  return tol;
}

enum class Location { Interior, Boundary, Exterior };

inline const char* to_string(Location l) {
  switch (l) {
    case Location::Interior: return "Interior";
    case Location::Boundary: return "Boundary";
    case Location::Exterior: return "Exterior";
  }
  return "?";
}

struct Containment {
  Location location = Location::Exterior;
  double gap = 0.0;           // max over normals of <p, u> - support; negative inside
  double maximizer = 0.0;     // normal angle attaining the gap
};

namespace detail {

// Golden-section maximization of f on [lo, hi].
template <typename F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, int iterations) {
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iterations; ++i) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  return f1 >= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

// Bisection for a sign change of f on [lo, hi]; f(lo) and f(hi) must differ in sign.
template <typename F>
double bisect(F&& f, double lo, double hi, int iterations = 200) {
  double flo = f(lo);
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

class SupportBody {
 public:
  SupportBody() : SupportBody(SupportFunction::disk(1.0)) {}

  explicit SupportBody(SupportFunction shape, Vec2 center = {}, Angle rotation = {})
      : shape_(std::move(shape)), center_(center), rotation_(rotation) {
    if (!is_finite(center_)) throw GeometryError(ErrorCode::BadInput, "non-finite center");
    rho_min_ = validate(shape_);
    diameter_ = 0.0;
    constexpr int samples = 1024;
    for (int i = 0; i < samples / 2; ++i) {
      const double t = kTwoPi * i / samples;
      diameter_ = std::max(diameter_, shape_.eval(t).h + shape_.eval(t + kPi).h);
    }
  }

  static SupportBody disk(double radius, Vec2 center = {}) {
    return SupportBody(SupportFunction::disk(radius), center);
  }

  const SupportFunction& shape() const { return shape_; }
  Vec2 center() const { return center_; }
  Angle rotation() const { return rotation_; }
  double rho_min() const { return rho_min_; }
  double diameter() const { return diameter_; }
  double tolerance() const { return relative_boundary_tolerance() * diameter_; }

  SupportBody translated(Vec2 offset) const {
    SupportBody copy = *this;
    copy.center_ = center_ + offset;
    return copy;
  }

  SupportBody moved_to(Vec2 center) const {
    SupportBody copy = *this;
    copy.center_ = center;
    return copy;
  }

  SupportBody rotated(double radians) const {
    SupportBody copy = *this;
    copy.rotation_ = rotation_ + radians;
    return copy;
  }

  bool is_translate_of(const SupportBody& other) const {
    return shape_ == other.shape_ && rotation_ == other.rotation_;
  }

  // Support function of the placed body.
  double support(double theta) const {
    return shape_.eval(theta - rotation_.radians()).h + dot(center_, unit(theta));
  }

  // Inverse Gauss map: the boundary point with outward normal u(theta).
  Vec2 boundary_point(double theta) const {
    const SupportValue v = shape_.eval(theta - rotation_.radians());
    return center_ + v.h * unit(theta) + v.dh * unit_perp(theta);
  }
  Vec2 boundary_point(Angle theta) const { return boundary_point(theta.radians()); }

  double radius_of_curvature(double theta) const {
    return shape_.radius_of_curvature(theta - rotation_.radians());
  }

  // <p, u(theta)> - support(theta)
  double gap_at(Vec2 p, double theta) const {
    return dot(p - center_, unit(theta)) - shape_.eval(theta - rotation_.radians()).h;
  }

  Containment contains(Vec2 p) const {
    constexpr int coarse = 64;
    constexpr int refine_iterations = 60;
    constexpr int brackets = 3;
    std::array<double, coarse> values{};
    for (int i = 0; i < coarse; ++i) values[i] = gap_at(p, kTwoPi * i / coarse);

    // Refine the few best coarse local maxima; the objective is smooth with
    // isolated maxima, and the best one is all that matters near the boundary.
    std::vector<int> peaks;
    for (int i = 0; i < coarse; ++i) {
      const double prev = values[(i + coarse - 1) % coarse];
      const double next = values[(i + 1) % coarse];
      if (values[i] >= prev && values[i] >= next) peaks.push_back(i);
    }
    std::sort(peaks.begin(), peaks.end(), [&](int a, int b) { return values[a] > values[b]; });
    if (peaks.size() > brackets) peaks.resize(brackets);

    Containment best;
    best.gap = -INFINITY;
    const double step = kTwoPi / coarse;
    auto f = [&](double t) { return gap_at(p, t); };
    for (int i : peaks) {
      const double mid = step * i;
      auto [arg, val] = detail::golden_max(f, mid - step, mid + step, refine_iterations);
      if (val > best.gap) {
        best.gap = val;
        best.maximizer = Angle::normalize(arg);
      }
    }
    const double tol = tolerance();
    best.location = best.gap < -tol  ? Location::Interior
                    : best.gap > tol ? Location::Exterior
                                     : Location::Boundary;
    return best;
  }

  // Gauss map of a boundary point; throws NotOnBoundary outside the tolerance band.
  Angle gauss_map(Vec2 p) const {
    const Containment c = contains(p);
    if (c.location != Location::Boundary) {
      throw GeometryError(ErrorCode::NotOnBoundary,
                          "point is off the boundary by " + std::to_string(c.gap));
    }
    return Angle(refine_normal(p, c.maximizer));
  }

  struct SupportLine {
    Vec2 point;
    Vec2 tangent;
  };

  SupportLine support_line(Angle theta) const {
    return {boundary_point(theta), theta.unit_perp()};
  }

  // The boundary point on the ray from the interior point `origin` in direction alpha.
  Vec2 radial_boundary(Vec2 origin, Angle alpha) const {
    auto offset = [&](double theta) {
      const Vec2 d = boundary_point(theta) - origin;
      return signed_difference(alpha.radians(), std::atan2(d.y, d.x));
    };
    constexpr int coarse = 64;
    const double step = kTwoPi / coarse;
    const double start = alpha.radians();
    double prev_t = start - kPi, prev_v = offset(prev_t);
    for (int i = 1; i <= coarse; ++i) {
      const double t = start - kPi + step * i;
      const double v = offset(t);
      if (prev_v <= 0.0 && v >= 0.0 && v - prev_v < kPi) {
        return boundary_point(detail::bisect(offset, prev_t, t));
      }
      prev_t = t;
      prev_v = v;
    }
    throw GeometryError(ErrorCode::BadInput, "radial_boundary: origin is not interior");
  }

 private:
  // Root of d/dpsi gap(p, psi) = <p - c, u_perp(psi)> - h'(psi - rot) near the coarse maximizer.
  double refine_normal(Vec2 p, double guess) const {
    const double rot = rotation_.radians();
    auto slope = [&](double t) {
      return dot(p - center_, unit_perp(t)) - shape_.eval(t - rot).dh;
    };
    for (double width = 1e-4; width < kPi; width *= 8.0) {
      const double lo = guess - width, hi = guess + width;
      if (slope(lo) >= 0.0 && slope(hi) <= 0.0) {
        return Angle::normalize(detail::bisect(slope, lo, hi));
      }
    }
    return guess;
  }

  SupportFunction shape_;
  Vec2 center_;
  Angle rotation_;
  double rho_min_ = 0.0;
  double diameter_ = 0.0;
};

inline Vec2 boundary_point(const SupportBody& b, Angle theta) { return b.boundary_point(theta); }
inline Angle gauss_map(const SupportBody& b, Vec2 p) { return b.gauss_map(p); }
inline Containment contains(const SupportBody& b, Vec2 p) { return b.contains(p); }
inline Vec2 radial_boundary(const SupportBody& b, Vec2 origin, Angle alpha) {
  return b.radial_boundary(origin, alpha);
}

}  // namespace tsing
