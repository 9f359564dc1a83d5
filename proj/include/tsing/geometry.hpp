#pragma once

#include <cmath>
#include <numbers>

namespace tsing {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
  constexpr Vec2& operator*=(double s) { x *= s; y *= s; return *this; }

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }
// Counterclockwise quarter turn.
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }
inline Vec2 lerp(Vec2 a, Vec2 b, double t) { return (1.0 - t) * a + t * b; }
inline bool is_finite(Vec2 a) { return std::isfinite(a.x) && std::isfinite(a.y); }

inline Vec2 rotate(Vec2 a, double radians) {
  const double c = std::cos(radians), s = std::sin(radians);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}

// A point of the unit circle, stored as its angle in [0, 2pi).
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians) : value_(normalize(radians)) {}

  static double normalize(double radians) {
    double r = std::fmod(radians, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    // fmod of a tiny negative number can round up to exactly 2pi
    if (r >= kTwoPi) r = 0.0;
    return r;
  }

  static Angle of(Vec2 v) { return Angle(std::atan2(v.y, v.x)); }

  constexpr double radians() const { return value_; }

  Vec2 unit() const { return {std::cos(value_), std::sin(value_)}; }
  Vec2 unit_perp() const { return {-std::sin(value_), std::cos(value_)}; }

  friend Angle operator+(Angle a, double d) { return Angle(a.value_ + d); }
  friend Angle operator-(Angle a, double d) { return Angle(a.value_ - d); }
  friend constexpr bool operator==(Angle, Angle) = default;

 private:
  double value_ = 0.0;
};

inline Vec2 unit(double radians) { return {std::cos(radians), std::sin(radians)}; }
inline Vec2 unit_perp(double radians) { return {-std::sin(radians), std::cos(radians)}; }

// Counterclockwise travel from `from` to `to`, in [0, 2pi).
inline double ccw_distance(Angle from, Angle to) {
  return Angle::normalize(to.radians() - from.radians());
}

// Signed shortest rotation taking `from` to `to`, in (-pi, pi].
inline double signed_difference(double from, double to) {
  double d = Angle::normalize(to - from);
  return d > kPi ? d - kTwoPi : d;
}

// Unsigned angular distance on the circle, in [0, pi].
inline double angular_distance(Angle a, Angle b) {
  return std::abs(signed_difference(a.radians(), b.radians()));
}

// Counterclockwise arc of the unit circle starting at `start` with the given
// measure. A measure of 2pi is the whole circle.
struct Arc {
  Angle start;
  double measure = 0.0;

  Angle end() const { return start + measure; }

  bool contains(Angle a, double slack = 0.0) const {
    const double d = ccw_distance(start, a);
    return d <= measure + slack || d >= kTwoPi - slack;
  }

  static Arc between(Angle from, Angle to) { return {from, ccw_distance(from, to)}; }
};

}  // namespace tsing
