#pragma once
#include <cmath>
#include <random>
#include <vector>

#include "apexline/track.hpp"

namespace apex::test {

// Circle centerline, CCW, widths constant.
inline std::vector<CenterlineRow> circle_rows(double radius, double w_right, double w_left,
                                              int n = 400, bool clockwise = false) {
  std::vector<CenterlineRow> rows;
  rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * M_PI * i / n * (clockwise ? -1.0 : 1.0);
    rows.push_back({radius * std::cos(a), radius * std::sin(a), w_right, w_left});
  }
  return rows;
}

// Rounded square: four straights of length `side` joined by quarter circles of
// radius `corner_r`. Perimeter = 4*side + 2*pi*corner_r.
inline std::vector<CenterlineRow> rounded_square_rows(double side, double corner_r,
                                                      double w_right, double w_left,
                                                      int pts_per_arc = 40,
                                                      int pts_per_side = 40) {
  std::vector<CenterlineRow> rows;
  const double half = side / 2.0;
  // corner centers, CCW starting from bottom-right corner
  const double cx[4] = {half, half, -half, -half};
  const double cy[4] = {-half, half, half, -half};
  const double a0[4] = {-M_PI / 2.0, 0.0, M_PI / 2.0, M_PI};
  for (int c = 0; c < 4; ++c) {
    for (int i = 0; i < pts_per_arc; ++i) {
      const double a = a0[c] + (M_PI / 2.0) * i / pts_per_arc;
      rows.push_back({cx[c] + corner_r * std::cos(a), cy[c] + corner_r * std::sin(a),
                      w_right, w_left});
    }
    // straight after this corner
    const double a_end = a0[c] + M_PI / 2.0;
    const double sx = cx[c] + corner_r * std::cos(a_end);
    const double sy = cy[c] + corner_r * std::sin(a_end);
    const double nx = cx[(c + 1) % 4] + corner_r * std::cos(a_end);
    const double ny = cy[(c + 1) % 4] + corner_r * std::sin(a_end);
    for (int i = 0; i < pts_per_side; ++i) {
      const double t = static_cast<double>(i) / pts_per_side;
      rows.push_back({sx + (nx - sx) * t, sy + (ny - sy) * t, w_right, w_left});
    }
  }
  return rows;
}

// Stadium: two straights of length `straight` joined by half circles.
inline std::vector<CenterlineRow> stadium_rows(double straight, double radius,
                                               double w_right, double w_left,
                                               int pts_per_arc = 60,
                                               int pts_per_straight = 60) {
  std::vector<CenterlineRow> rows;
  const double half = straight / 2.0;
  auto add_arc = [&](double cx, double cy, double a_start) {
    for (int i = 0; i < pts_per_arc; ++i) {
      const double a = a_start + M_PI * i / pts_per_arc;
      rows.push_back({cx + radius * std::cos(a), cy + radius * std::sin(a), w_right, w_left});
    }
  };
  auto add_straight = [&](double x0, double y0, double x1, double y1) {
    for (int i = 0; i < pts_per_straight; ++i) {
      const double t = static_cast<double>(i) / pts_per_straight;
      rows.push_back({x0 + (x1 - x0) * t, y0 + (y1 - y0) * t, w_right, w_left});
    }
  };
  add_arc(half, 0.0, -M_PI / 2.0);           // right cap, bottom to top
  add_straight(half, radius, -half, radius);  // top straight, rightward to left
  add_arc(-half, 0.0, M_PI / 2.0);            // left cap
  add_straight(-half, -radius, half, -radius);
  return rows;
}

inline TrackModel circle_track(double radius, double w_right = 5.0, double w_left = 5.0,
                               double step = 2.0) {
  return build_track(circle_rows(radius, w_right, w_left), step);
}

// Annulus track: circle centerline of radius (r_in + r_out)/2 with symmetric borders.
inline TrackModel annulus_track(double r_in, double r_out, double step = 2.0) {
  const double mid = 0.5 * (r_in + r_out);
  const double w = 0.5 * (r_out - r_in);
  return build_track(circle_rows(mid, w, w), step);
}

}  // namespace apex::test
