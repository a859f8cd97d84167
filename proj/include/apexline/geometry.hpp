#pragma once
#include <cmath>
#include <cstddef>
#include <vector>

namespace apex {

struct Vec2 {
  double x{};
  double y{};

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double k) const { return {x * k, y * k}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  double squared_norm() const { return x * x + y * y; }
  // 90 degree counterclockwise rotation (left normal of a tangent).
  Vec2 rot90() const { return {-y, x}; }
};

inline Vec2 operator*(double k, const Vec2& v) { return v * k; }

// Scalar periodic cubic spline over strictly increasing knots, wrapping with
// the given period (the segment from the last knot back to the first closes
// the curve).
class PeriodicSpline {
 public:
  PeriodicSpline() = default;
  PeriodicSpline(std::vector<double> knots, std::vector<double> values, double period);

  double eval(double u) const;
  double deriv(double u) const;
  double deriv2(double u) const;

  std::size_t size() const { return u_.size(); }
  double period() const { return period_; }

 private:
  std::size_t locate(double& u) const;

  std::vector<double> u_;
  std::vector<double> y_;
  std::vector<double> m_;  // second derivatives at knots
  double period_{0.0};
};

// Closed 2D curve interpolating a point loop with periodic cubic splines.
// Knot parameters default to cumulative chord length.
class ClosedCurve {
 public:
  ClosedCurve() = default;
  explicit ClosedCurve(const std::vector<Vec2>& pts);
  ClosedCurve(const std::vector<Vec2>& pts, const std::vector<double>& knots, double period);

  Vec2 eval(double u) const { return {sx_.eval(u), sy_.eval(u)}; }
  Vec2 deriv(double u) const { return {sx_.deriv(u), sy_.deriv(u)}; }
  Vec2 deriv2(double u) const { return {sx_.deriv2(u), sy_.deriv2(u)}; }

  double heading(double u) const;
  // Unit left normal of the travel direction.
  Vec2 normal(double u) const;

  double param_period() const { return sx_.period(); }
  double total_arc_length() const { return cum_len_.back(); }
  // Arc length from the first knot to parameter u (u wrapped into one period).
  double arc_length_from_start(double u) const;
  // Parameter at a given arc length from the first knot (wraps).
  double param_at_arc_length(double target) const;

  std::size_t knot_count() const { return knots_.size(); }
  double knot(std::size_t i) const { return knots_[i]; }

 private:
  double segment_speed_integral(std::size_t seg, double u_end) const;

  PeriodicSpline sx_, sy_;
  std::vector<double> knots_;
  std::vector<double> cum_len_;  // cum_len_[i] = arc length from knot 0 to knot i; back() = total
};

// True if any two non-adjacent segments of the polyline intersect.
bool polyline_self_intersects(const std::vector<Vec2>& pts, bool closed);

// Wrap an angle into (-pi, pi].
double wrap_angle(double a);

// Wrap s into [0, length).
double wrap_arc(double s, double length);

}  // namespace apex
