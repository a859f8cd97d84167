#include "apexline/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace apex {

double wrap_angle(double a) {
  a = std::fmod(a + M_PI, 2.0 * M_PI);
  if (a <= 0.0) a += 2.0 * M_PI;
  return a - M_PI;
}

double wrap_arc(double s, double length) {
  s = std::fmod(s, length);
  if (s < 0.0) s += length;
  return s;
}

namespace {

// Solve the cyclic tridiagonal system arising from periodic cubic spline
// interpolation via Sherman-Morrison on two Thomas solves.
std::vector<double> solve_cyclic_tridiag(const std::vector<double>& lower,
                                         const std::vector<double>& diag,
                                         const std::vector<double>& upper,
                                         std::vector<double> rhs) {
  const std::size_t n = diag.size();
  if (n == 1) return {rhs[0] / (diag[0] + lower[0] + upper[0])};
  if (n == 2) {
    // dense 2x2: corners overlap the off-diagonals
    const double a = diag[0], b = upper[0] + lower[0];
    const double c = lower[1] + upper[1], d = diag[1];
    const double det = a * d - b * c;
    return {(d * rhs[0] - b * rhs[1]) / det, (a * rhs[1] - c * rhs[0]) / det};
  }

  auto thomas = [&](std::vector<double> d, std::vector<double> r) {
    std::vector<double> c(n, 0.0);
    c[0] = upper[0] / d[0];
    r[0] /= d[0];
    for (std::size_t i = 1; i < n; ++i) {
      const double m = d[i] - lower[i] * c[i - 1];
      c[i] = upper[i] / m;
      r[i] = (r[i] - lower[i] * r[i - 1]) / m;
    }
    for (std::size_t i = n - 1; i-- > 0;) r[i] -= c[i] * r[i + 1];
    return r;
  };

  // A = T + gamma*u*v^T with u = e_0 + e_{n-1}*(corner/gamma) pattern
  const double alpha = lower[0];   // A(0, n-1)
  const double beta = upper[n - 1];  // A(n-1, 0)
  const double gamma = -diag[0];
  std::vector<double> dmod(diag);
  dmod[0] -= gamma;
  dmod[n - 1] -= alpha * beta / gamma;

  std::vector<double> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = beta;

  std::vector<double> y = thomas(dmod, std::move(rhs));
  std::vector<double> z = thomas(dmod, std::move(u));

  const double fact = (y[0] + (alpha / gamma) * y[n - 1]) /
                      (1.0 + z[0] + (alpha / gamma) * z[n - 1]);
  for (std::size_t i = 0; i < n; ++i) y[i] -= fact * z[i];
  return y;
}

// 16-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr std::array<double, 8> kGlNodes = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
constexpr std::array<double, 8> kGlWeights = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

}  // namespace

PeriodicSpline::PeriodicSpline(std::vector<double> knots, std::vector<double> values,
                               double period)
    : u_(std::move(knots)), y_(std::move(values)), period_(period) {
  const std::size_t n = u_.size();
  if (n < 3) throw std::invalid_argument("periodic spline needs at least 3 knots");
  if (y_.size() != n) throw std::invalid_argument("knot/value size mismatch");

  auto h = [&](std::size_t i) {
    return (i + 1 < n) ? u_[i + 1] - u_[i] : period_ - (u_[n - 1] - u_[0]);
  };
  std::vector<double> lower(n), diag(n), upper(n), rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t im1 = (i + n - 1) % n;
    const double hi = h(i), him1 = h(im1);
    lower[i] = him1 / 6.0;
    diag[i] = (him1 + hi) / 3.0;
    upper[i] = hi / 6.0;
    const double yi = y_[i];
    const double yip1 = y_[(i + 1) % n];
    const double yim1 = y_[im1];
    rhs[i] = (yip1 - yi) / hi - (yi - yim1) / him1;
  }
  m_ = solve_cyclic_tridiag(lower, diag, upper, std::move(rhs));
}

std::size_t PeriodicSpline::locate(double& u) const {
  const double u0 = u_.front();
  u = u0 + wrap_arc(u - u0, period_);
  auto it = std::upper_bound(u_.begin(), u_.end(), u);
  const std::size_t idx = static_cast<std::size_t>(std::distance(u_.begin(), it));
  return idx == 0 ? u_.size() - 1 : idx - 1;
}

double PeriodicSpline::eval(double u) const {
  const std::size_t n = u_.size();
  const std::size_t i = locate(u);
  const std::size_t j = (i + 1) % n;
  const double h = (i + 1 < n) ? u_[i + 1] - u_[i] : period_ - (u_[n - 1] - u_[0]);
  const double a = (u_[i] + h) - u;
  const double b = u - u_[i];
  return m_[i] * a * a * a / (6.0 * h) + m_[j] * b * b * b / (6.0 * h) +
         (y_[i] / h - m_[i] * h / 6.0) * a + (y_[j] / h - m_[j] * h / 6.0) * b;
}

double PeriodicSpline::deriv(double u) const {
  const std::size_t n = u_.size();
  const std::size_t i = locate(u);
  const std::size_t j = (i + 1) % n;
  const double h = (i + 1 < n) ? u_[i + 1] - u_[i] : period_ - (u_[n - 1] - u_[0]);
  const double a = (u_[i] + h) - u;
  const double b = u - u_[i];
  return -m_[i] * a * a / (2.0 * h) + m_[j] * b * b / (2.0 * h) +
         (y_[j] - y_[i]) / h - (m_[j] - m_[i]) * h / 6.0;
}

double PeriodicSpline::deriv2(double u) const {
  const std::size_t n = u_.size();
  const std::size_t i = locate(u);
  const std::size_t j = (i + 1) % n;
  const double h = (i + 1 < n) ? u_[i + 1] - u_[i] : period_ - (u_[n - 1] - u_[0]);
  const double a = (u_[i] + h) - u;
  const double b = u - u_[i];
  return m_[i] * a / h + m_[j] * b / h;
}

ClosedCurve::ClosedCurve(const std::vector<Vec2>& pts) {
  std::vector<double> knots(pts.size());
  knots[0] = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    knots[i] = knots[i - 1] + (pts[i] - pts[i - 1]).norm();
  const double period = knots.back() + (pts.front() - pts.back()).norm();
  *this = ClosedCurve(pts, knots, period);
}

ClosedCurve::ClosedCurve(const std::vector<Vec2>& pts, const std::vector<double>& knots,
                         double period)
    : knots_(knots) {
  std::vector<double> xs(pts.size()), ys(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    xs[i] = pts[i].x;
    ys[i] = pts[i].y;
  }
  sx_ = PeriodicSpline(knots, std::move(xs), period);
  sy_ = PeriodicSpline(knots, std::move(ys), period);

  cum_len_.assign(knots_.size() + 1, 0.0);
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    const double u_end = (i + 1 < knots_.size()) ? knots_[i + 1] : knots_[0] + period;
    cum_len_[i + 1] = cum_len_[i] + segment_speed_integral(i, u_end);
  }
}

double ClosedCurve::heading(double u) const {
  const Vec2 d = deriv(u);
  return std::atan2(d.y, d.x);
}

Vec2 ClosedCurve::normal(double u) const {
  Vec2 d = deriv(u);
  const double n = d.norm();
  return {-d.y / n, d.x / n};
}

double ClosedCurve::segment_speed_integral(std::size_t seg, double u_end) const {
  const double u_start = knots_[seg];
  const double c = 0.5 * (u_start + u_end);
  const double r = 0.5 * (u_end - u_start);
  double acc = 0.0;
  for (std::size_t k = 0; k < kGlNodes.size(); ++k) {
    acc += kGlWeights[k] *
           (deriv(c - r * kGlNodes[k]).norm() + deriv(c + r * kGlNodes[k]).norm());
  }
  return acc * r;
}

double ClosedCurve::arc_length_from_start(double u) const {
  const double u0 = knots_.front();
  u = u0 + wrap_arc(u - u0, param_period());
  auto it = std::upper_bound(knots_.begin(), knots_.end(), u);
  const std::size_t seg = it == knots_.begin() ? 0 : static_cast<std::size_t>(it - knots_.begin()) - 1;
  return cum_len_[seg] + segment_speed_integral(seg, u);
}

double ClosedCurve::param_at_arc_length(double target) const {
  target = wrap_arc(target, total_arc_length());
  auto it = std::upper_bound(cum_len_.begin(), cum_len_.end(), target);
  std::size_t seg = it == cum_len_.begin() ? 0 : static_cast<std::size_t>(it - cum_len_.begin()) - 1;
  seg = std::min(seg, knots_.size() - 1);

  const double period = param_period();
  double lo = knots_[seg];
  double hi = (seg + 1 < knots_.size()) ? knots_[seg + 1] : knots_[0] + period;
  const double want = target - cum_len_[seg];

  // Newton with bisection safeguard on the monotone length function.
  double u = lo + (hi - lo) * std::clamp(want / std::max(cum_len_[seg + 1] - cum_len_[seg], 1e-300), 0.0, 1.0);
  for (int iter = 0; iter < 60; ++iter) {
    const double f = segment_speed_integral(seg, u) - want;
    if (f > 0.0)
      hi = u;
    else
      lo = u;
    const double speed = deriv(u).norm();
    double step = speed > 0.0 ? f / speed : 0.0;
    double next = u - step;
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - u) < 1e-13 * std::max(1.0, std::abs(u))) return next;
    u = next;
  }
  return u;
}

namespace {

bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  const Vec2 ab = b - a, cd = d - c, ac = c - a;
  const double den = ab.cross(cd);
  const double t_num = ac.cross(cd);
  const double u_num = ac.cross(ab);
  if (den == 0.0) {
    if (t_num != 0.0) return false;  // parallel, non-collinear
    // collinear: check overlap in 1D
    const double len2 = ab.squared_norm();
    if (len2 == 0.0) return false;
    double t0 = ac.dot(ab) / len2;
    double t1 = (d - a).dot(ab) / len2;
    if (t0 > t1) std::swap(t0, t1);
    return t1 >= 0.0 && t0 <= 1.0;
  }
  const double t = t_num / den;
  const double u = u_num / den;
  return t >= 0.0 && t <= 1.0 && u >= 0.0 && u <= 1.0;
}

}  // namespace

bool polyline_self_intersects(const std::vector<Vec2>& pts, bool closed) {
  const std::size_t n = pts.size();
  if (n < 4) return false;
  const std::size_t nseg = closed ? n : n - 1;
  auto seg = [&](std::size_t i) {
    return std::pair<Vec2, Vec2>{pts[i], pts[(i + 1) % n]};
  };
  for (std::size_t i = 0; i < nseg; ++i) {
    const auto [a, b] = seg(i);
    const double min_xi = std::min(a.x, b.x), max_xi = std::max(a.x, b.x);
    const double min_yi = std::min(a.y, b.y), max_yi = std::max(a.y, b.y);
    for (std::size_t j = i + 2; j < nseg; ++j) {
      if (closed && i == 0 && j == nseg - 1) continue;  // adjacent across the seam
      const auto [c, d] = seg(j);
      if (std::max(c.x, d.x) < min_xi || std::min(c.x, d.x) > max_xi ||
          std::max(c.y, d.y) < min_yi || std::min(c.y, d.y) > max_yi)
        continue;
      if (segments_intersect(a, b, c, d)) return true;
    }
  }
  return false;
}

}  // namespace apex
