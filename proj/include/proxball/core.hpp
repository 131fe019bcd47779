#pragma once

// Scalar and planar primitives shared by the whole library: extended
// nonnegative reals, 2-D vectors, unit directions, closed balls and
// asymptotic ball families, plus the global tolerance policy.

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace proxball {

enum class errc {
  empty_set,
  invalid_primitive,
  degenerate_projection,
  not_boundary,
  no_valid_normal,
  not_in_complement,
  gamma_out_of_range,
  normal_oracle_failure,
  verification_failure,
  oracle_disagreement,
  precondition_violated,
  bad_t,
  x_not_in_ball,
  generation_exhausted,
  bad_input,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

struct ToleranceConfig {
  double eps_unit = 1e-12;   // unit-vector norm slack
  double eps_strict = 1e-9;  // strictness slack for analytic inequality checks
  double eps_geom = 1e-9;    // geometric predicate tolerance
  double grid_tol = 2e-3;    // brute-force oracle resolution target

  void validate() const {
    if (!(eps_unit > 0 && eps_strict > 0 && eps_geom > 0 && grid_tol > 0) ||
        !(eps_strict <= eps_geom && eps_geom <= grid_tol))
      fail(errc::bad_input, "tolerances must be positive with eps_strict <= eps_geom <= grid_tol");
  }
};

// ---------------------------------------------------------------------------
// Vectors

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double k) const { return {k * x, k * y}; }
  friend constexpr Vec2 operator*(double k, Vec2 v) { return v * k; }
  constexpr bool operator==(const Vec2&) const = default;

  double norm() const { return std::hypot(x, y); }
  constexpr double norm2() const { return x * x + y * y; }
  // Counterclockwise quarter turn.
  constexpr Vec2 perp() const { return {-y, x}; }
};

using Point = Vec2;

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double distance(Point a, Point b) { return (a - b).norm(); }

inline bool lex_less(Vec2 a, Vec2 b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
inline bool near(Point a, Point b, double eps) { return distance(a, b) <= eps; }

// A vector carrying the norm-1 invariant. Construct via normalize() unless
// the coordinates are exact.
class Unit {
 public:
  explicit Unit(Vec2 v, double eps_unit = 1e-12) : v_(v) {
    if (std::abs(v.norm() - 1.0) > eps_unit) fail(errc::bad_input, "not a unit vector");
  }
  static Unit normalize(Vec2 v) {
    double n = v.norm();
    if (!(n > 0)) fail(errc::bad_input, "cannot normalize zero vector");
    return Unit(Vec2{v.x / n, v.y / n}, 1e-9);
  }
  constexpr Vec2 vec() const { return v_; }
  constexpr operator Vec2() const { return v_; }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  Unit flipped() const { return Unit(Vec2{-v_.x, -v_.y}, 1e-6); }

 private:
  Vec2 v_;
};

// ---------------------------------------------------------------------------
// Extended nonnegative reals: finite values >= 0 plus +inf. The +inf branch
// changes the shape of downstream results (ball family vs single ball), so it
// is a dedicated state rather than a floating sentinel.

class ExtReal {
 public:
  constexpr ExtReal() : v_(0.0), inf_(false) {}

  static ExtReal finite(double v) {
    if (!(v >= 0.0) || std::isnan(v) || std::isinf(v))
      fail(errc::bad_input, "ExtReal::finite requires a finite nonnegative value");
    ExtReal r;
    r.v_ = v;
    return r;
  }
  static constexpr ExtReal infinity() {
    ExtReal r;
    r.inf_ = true;
    return r;
  }

  constexpr bool is_inf() const { return inf_; }
  double value() const {
    if (inf_) fail(errc::bad_input, "ExtReal: value() on +inf");
    return v_;
  }
  // Finite value, or `huge` when infinite; for printing and slack-free math.
  constexpr double value_or(double huge) const { return inf_ ? huge : v_; }

  friend constexpr bool operator==(ExtReal a, ExtReal b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtReal a, ExtReal b) {
    if (a.inf_ && b.inf_) return std::strong_ordering::equal;
    if (a.inf_) return std::strong_ordering::greater;
    if (b.inf_) return std::strong_ordering::less;
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  double v_;
  bool inf_ = false;
};

inline ExtReal extreal_max(ExtReal a, ExtReal b) { return a < b ? b : a; }
inline std::strong_ordering extreal_compare(ExtReal a, ExtReal b) { return a <=> b; }

// ---------------------------------------------------------------------------
// Balls

struct ClosedBall {
  Point center;
  double radius = 1.0;

  ClosedBall(Point c, double r) : center(c), radius(r) {
    if (!(r > 0.0) || std::isnan(r) || std::isinf(r)) fail(errc::bad_input, "ball radius must be positive and finite");
  }
  bool contains(Point p, double eps = 0.0) const { return distance(p, center) <= radius + eps; }
};

// The varrho = +inf branch: the family { B(anchor + d*direction; d) : d > 0 },
// every member tangent to `anchor`.
struct AsymptoticBallFamily {
  Point anchor;
  Unit direction;

  ClosedBall member(double delta) const {
    return ClosedBall(anchor + delta * direction.vec(), delta);
  }
};

inline std::pair<Point, Point> opposite_points(const ClosedBall& ball, Unit direction) {
  return {ball.center - ball.radius * direction.vec(),
          ball.center + ball.radius * direction.vec()};
}

}  // namespace proxball
