#include "apexline/track.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace apex {

namespace {

double interp_periodic(const std::vector<double>& values, double step, double s) {
  const double length = step * static_cast<double>(values.size());
  s = wrap_arc(s, length);
  const double t = s / step;
  const std::size_t i = std::min(static_cast<std::size_t>(t), values.size() - 1);
  const double frac = t - static_cast<double>(i);
  const std::size_t j = (i + 1) % values.size();
  return values[i] * (1.0 - frac) + values[j] * frac;
}

}  // namespace

double TrackModel::border_left_at(double s) const {
  return interp_periodic(border_left, step, s);
}

double TrackModel::border_right_at(double s) const {
  return interp_periodic(border_right, step, s);
}

double TrackModel::curvature_at(double s) const {
  return interp_periodic(curvature, step, s);
}

void TrackModel::rebuild_curve() {
  std::vector<double> knots(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    knots[i] = step * static_cast<double>(i);
  curve_ = ClosedCurve(points, knots, length());
}

RacelineOffset RacelineOffset::zeros_like(const TrackModel& track) {
  return {track.length(), track.step, std::vector<double>(track.size(), 0.0)};
}

std::vector<double> curvature_of(const std::vector<Vec2>& points, double step,
                                 int smooth_window) {
  const std::size_t n = points.size();
  if (n < 3) throw std::invalid_argument("curvature needs at least 3 points");

  std::vector<double> seg_heading(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 d = points[(i + 1) % n] - points[i];
    seg_heading[i] = std::atan2(d.y, d.x);
  }
  std::vector<double> kappa(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double prev = seg_heading[(i + n - 1) % n];
    kappa[i] = wrap_angle(seg_heading[i] - prev) / step;
  }
  if (smooth_window > 1) {
    const int w = smooth_window | 1;  // force odd
    const int half = w / 2;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int k = -half; k <= half; ++k)
        acc += kappa[(i + n + static_cast<std::size_t>(k + static_cast<int>(n))) % n];
      out[i] = acc / static_cast<double>(w);
    }
    return out;
  }
  return kappa;
}

TrackModel make_track_from_uniform(std::vector<Vec2> points, double step,
                                   std::vector<double> border_left,
                                   std::vector<double> border_right,
                                   int smooth_window) {
  TrackModel track;
  track.points = std::move(points);
  track.step = step;
  track.border_left = std::move(border_left);
  track.border_right = std::move(border_right);
  track.closed = true;
  track.rebuild_curve();

  const std::size_t n = track.points.size();
  track.heading.resize(n);
  double prev = track.curve().heading(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double raw = track.curve().heading(step * static_cast<double>(i));
    track.heading[i] = i == 0 ? raw : prev + wrap_angle(raw - prev);
    prev = track.heading[i];
  }
  track.curvature = curvature_of(track.points, step, smooth_window);
  return track;
}

TrackModel build_track(const std::vector<CenterlineRow>& raw, double step) {
  if (step <= 0.0) throw std::invalid_argument("step must be positive");
  std::vector<CenterlineRow> rows = raw;
  if (rows.size() >= 2) {
    const Vec2 first{rows.front().x, rows.front().y};
    const Vec2 last{rows.back().x, rows.back().y};
    if ((first - last).norm() < 1e-9) rows.pop_back();  // drop duplicated closing row
  }
  if (rows.size() < 4) throw std::invalid_argument("track needs at least 4 points");
  for (const auto& r : rows) {
    if (!(r.w_left > 0.0) || !(r.w_right > 0.0))
      throw std::invalid_argument("track widths must be positive");
  }
  {
    const Vec2 first{rows.front().x, rows.front().y};
    const Vec2 last{rows.back().x, rows.back().y};
    if ((first - last).norm() > 10.0 * step)
      throw std::invalid_argument("track not closed");
  }

  std::vector<Vec2> pts(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) pts[i] = {rows[i].x, rows[i].y};

  const ClosedCurve fit(pts);
  const double total = fit.total_arc_length();
  const std::size_t n = std::max<std::size_t>(4, static_cast<std::size_t>(std::llround(total / step)));
  const double grid_step = total / static_cast<double>(n);

  std::vector<Vec2> samples(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = fit.param_at_arc_length(grid_step * static_cast<double>(i));
    samples[i] = fit.eval(u);
  }
  if (polyline_self_intersects(samples, true))
    throw std::invalid_argument("self-intersecting reference line");

  // Arc position of each input row on the fitted curve, for border interpolation.
  std::vector<double> row_s(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    row_s[i] = fit.arc_length_from_start(fit.knot(i));

  auto interp_border = [&](auto getter) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double s = grid_step * static_cast<double>(i);
      auto it = std::upper_bound(row_s.begin(), row_s.end(), s);
      const std::size_t hi = static_cast<std::size_t>(it - row_s.begin()) % rows.size();
      const std::size_t lo = (hi + rows.size() - 1) % rows.size();
      const double s_lo = row_s[lo];
      double span = row_s[hi] - s_lo;
      double frac_num = s - s_lo;
      if (span <= 0.0) span += total;
      if (frac_num < 0.0) frac_num += total;
      const double frac = span > 0.0 ? std::clamp(frac_num / span, 0.0, 1.0) : 0.0;
      out[i] = getter(rows[lo]) * (1.0 - frac) + getter(rows[hi]) * frac;
    }
    return out;
  };
  std::vector<double> b_left = interp_border([](const CenterlineRow& r) { return r.w_left; });
  std::vector<double> b_right = interp_border([](const CenterlineRow& r) { return r.w_right; });

  return make_track_from_uniform(std::move(samples), grid_step, std::move(b_left),
                                 std::move(b_right));
}

Vec2 frenet_to_cartesian(const TrackModel& track, const FrenetPose& pose) {
  const double s = wrap_arc(pose.s, track.length());
  return track.curve().eval(s) + pose.d * track.curve().normal(s);
}

namespace {

struct SegmentHit {
  double dist2;
  double s_est;
  std::size_t seg;
};

// Refine the projection parameter on the spline around an initial guess by
// solving (p - c(u)) . c'(u) = 0 with Newton clamped to one grid step.
double refine_projection(const ClosedCurve& curve, const Vec2& p, double u0, double step) {
  const double lo = u0 - step;
  const double hi = u0 + step;
  double u = u0;
  for (int iter = 0; iter < 50; ++iter) {
    const Vec2 c1 = curve.deriv(u);
    const Vec2 diff = p - curve.eval(u);
    const double gu = diff.dot(c1);
    const double gp = -c1.squared_norm() + diff.dot(curve.deriv2(u));
    if (gp == 0.0) break;
    const double next = std::clamp(u - gu / gp, lo, hi);
    const double delta = std::abs(next - u);
    u = next;
    if (delta < 1e-12 * std::max(1.0, std::abs(u))) break;
  }
  return u;
}

}  // namespace

FrenetPose cartesian_to_frenet(const TrackModel& track, const Vec2& point) {
  const std::size_t n = track.size();
  const double length = track.length();
  const double h = track.step;

  // Segment-level scan for nearest candidates.
  double best = std::numeric_limits<double>::infinity();
  std::vector<SegmentHit> hits;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = track.points[i];
    const Vec2& b = track.points[(i + 1) % n];
    const Vec2 ab = b - a;
    const double len2 = ab.squared_norm();
    double t = len2 > 0.0 ? std::clamp((point - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
    const Vec2 proj = a + t * ab;
    const double d2 = (point - proj).squared_norm();
    if (d2 < best + 1e-7) {
      hits.push_back({d2, (static_cast<double>(i) + t) * h, i});
      best = std::min(best, d2);
    }
  }

  double max_border = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    max_border = std::max({max_border, track.border_left[i], track.border_right[i]});
  if (std::sqrt(best) > max_border + 10.0)
    throw std::invalid_argument("off-track point");

  // Refine every near-best candidate; pick smallest distance, ties by smallest s.
  double best_d2 = std::numeric_limits<double>::infinity();
  double best_s = 0.0;
  for (const auto& hit : hits) {
    if (hit.dist2 > best + 1e-7) continue;
    const double u = refine_projection(track.curve(), point, hit.s_est, h);
    const double s = wrap_arc(u, length);
    const double d2 = (point - track.curve().eval(s)).squared_norm();
    if (d2 < best_d2 - 1e-9 || (std::abs(d2 - best_d2) <= 1e-9 && s < best_s)) {
      best_d2 = d2;
      best_s = s;
    }
  }

  FrenetPose pose;
  pose.s = best_s;
  const Vec2 c = track.curve().eval(best_s);
  pose.d = (point - c).dot(track.curve().normal(best_s));
  const double bl = track.border_left_at(best_s);
  const double br = track.border_right_at(best_s);
  const double kappa = track.curvature_at(best_s);
  pose.in_bounds = pose.d >= -br && pose.d <= bl &&
                   (kappa == 0.0 || std::abs(pose.d) * std::abs(kappa) < 1.0);
  return pose;
}

std::vector<Vec2> offsets_to_path(const TrackModel& track, const RacelineOffset& line) {
  if (line.size() != track.size())
    throw std::invalid_argument("offset sample count does not match track");
  std::vector<Vec2> path(track.size());
  for (std::size_t i = 0; i < track.size(); ++i) {
    path[i] = frenet_to_cartesian(
        track, {track.step * static_cast<double>(i), line.offsets[i], true});
  }
  return path;
}

}  // namespace apex
