#pragma once
#include <cstddef>
#include <vector>

#include "apexline/geometry.hpp"

namespace apex {

// One row of a centerline description: position plus the normal distances to
// the right and left track limits.
struct CenterlineRow {
  double x{};
  double y{};
  double w_right{};
  double w_left{};
};

// Closed reference line resampled to a uniform arc-length grid. Sample i sits
// at s = i * step; the sequence wraps (sample N connects back to sample 0).
struct TrackModel {
  std::vector<Vec2> points;
  double step{0.0};
  std::vector<double> heading;       // rad, unwrapped along the lap
  std::vector<double> curvature;     // 1/m, positive for left (CCW) turns
  std::vector<double> border_left;   // m, > 0
  std::vector<double> border_right;  // m, > 0
  bool closed{true};

  std::size_t size() const { return points.size(); }
  double length() const { return step * static_cast<double>(points.size()); }

  // Reference line c(s) with cubic interpolation between grid samples.
  const ClosedCurve& curve() const { return curve_; }

  // Linear periodic interpolation of the per-sample arrays.
  double border_left_at(double s) const;
  double border_right_at(double s) const;
  double curvature_at(double s) const;

  // Internal: rebuild the cached spline from `points` and `step`.
  void rebuild_curve();

 private:
  ClosedCurve curve_;
};

// Lateral offset from the track center to either border at sample i.
struct FrenetPose {
  double s{0.0};
  double d{0.0};
  bool in_bounds{true};
};

// A raceline as a scalar lateral-offset function d(s) on the track grid.
struct RacelineOffset {
  double track_length{0.0};
  double step{0.0};
  std::vector<double> offsets;

  std::size_t size() const { return offsets.size(); }
  static RacelineOffset zeros_like(const TrackModel& track);
};

// Arc-length resample a raw centerline onto a uniform grid of spacing `step`
// (quantized so the loop closes exactly), recomputing heading and curvature
// and interpolating the border widths onto the new grid.
// Throws std::invalid_argument for open or self-intersecting input.
TrackModel build_track(const std::vector<CenterlineRow>& raw, double step);

// Curvature of a closed uniformly spaced polyline: central difference of the
// unwrapped segment headings divided by step, then a centered periodic moving
// average of width `smooth_window` (use 1 to disable smoothing).
std::vector<double> curvature_of(const std::vector<Vec2>& points, double step,
                                 int smooth_window = 5);

// position = c(s) + d * n(s), n the left unit normal.
Vec2 frenet_to_cartesian(const TrackModel& track, const FrenetPose& pose);

// Projection onto the reference line; ties between equidistant segments break
// toward the smallest s. Throws for points farther than
// max border + 10 m from the line.
FrenetPose cartesian_to_frenet(const TrackModel& track, const Vec2& point);

// Apply frenet_to_cartesian per grid sample; the result wraps (closed).
std::vector<Vec2> offsets_to_path(const TrackModel& track, const RacelineOffset& line);

// Assemble a model directly from already uniformly spaced samples (no
// resampling). Used by build_track internally and by dataset tooling.
TrackModel make_track_from_uniform(std::vector<Vec2> points, double step,
                                   std::vector<double> border_left,
                                   std::vector<double> border_right,
                                   int smooth_window = 5);

}  // namespace apex
