#include "umcf/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "umcf/potential.hpp"

namespace umcf {

namespace {

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double point_dist(std::span<const double> x, std::span<const double> c) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - c[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double segment_dist(std::span<const double> x, std::span<const double> a,
                    std::span<const double> b) {
  double ab2 = 0.0, t = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = b[i] - a[i];
    ab2 += d * d;
    t += (x[i] - a[i]) * d;
  }
  t = ab2 > 0.0 ? std::clamp(t / ab2, 0.0, 1.0) : 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - (a[i] + t * (b[i] - a[i]));
    s += d * d;
  }
  return std::sqrt(s);
}

// signed distance to a capped cylinder around segment [a,b] of radius r
double cylinder_signed_dist(std::span<const double> x, std::span<const double> a,
                            std::span<const double> b, double r) {
  std::vector<double> axis(x.size()), rel(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    axis[i] = b[i] - a[i];
    rel[i] = x[i] - 0.5 * (a[i] + b[i]);
  }
  const double half_len = 0.5 * norm2(axis);
  double axial = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) axial += rel[i] * axis[i];
  axial /= 2.0 * half_len;
  double rad2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double p = rel[i] - axial * axis[i] / (2.0 * half_len);
    rad2 += p * p;
  }
  const double dx = std::sqrt(rad2) - r;
  const double dy = std::abs(axial) - half_len;
  const double ox = std::max(dx, 0.0), oy = std::max(dy, 0.0);
  return std::min(std::max(dx, dy), 0.0) + std::sqrt(ox * ox + oy * oy);
}

struct PartDist {
  std::span<const double> x;

  double operator()(const Sphere& s) const {
    return std::abs(point_dist(x, s.center) - s.radius);
  }
  double operator()(const BallUnion& u) const {
    double sd = std::numeric_limits<double>::max();
    for (const auto& b : u.balls)
      sd = std::min(sd, point_dist(x, b.center) - b.radius);
    return std::abs(sd);
  }
  double operator()(const Segment& s) const { return segment_dist(x, s.a, s.b); }
  double operator()(const Polyline& p) const {
    const std::size_t n = p.points.size();
    double d = std::numeric_limits<double>::max();
    const std::size_t m = p.closed ? n : n - 1;
    for (std::size_t i = 0; i < m; ++i)
      d = std::min(d, segment_dist(x, p.points[i], p.points[(i + 1) % n]));
    return d;
  }
  double operator()(const AnnulusSystem& a) const {
    const double r = point_dist(x, a.center);
    double d = std::numeric_limits<double>::max();
    for (double ri : a.radii) d = std::min(d, std::abs(r - ri));
    return d;
  }
  double operator()(const Dumbbell& d) const {
    double sd = std::min(point_dist(x, d.c1) - d.ball_radius,
                         point_dist(x, d.c2) - d.ball_radius);
    sd = std::min(sd, cylinder_signed_dist(x, d.c1, d.c2, d.neck_radius));
    return std::abs(sd);
  }
};

void validate_part(const ShapePart& part, int dim) {
  const auto check_pt = [dim](const Point& p, const char* what) {
    if (static_cast<int>(p.size()) != dim)
      fail(ErrorCode::geometry, std::string(what) + " has wrong dimension");
  };
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Sphere>) {
          check_pt(p.center, "sphere center");
          if (p.radius < 0.0) fail(ErrorCode::geometry, "negative radius");
        } else if constexpr (std::is_same_v<T, BallUnion>) {
          if (p.balls.empty()) fail(ErrorCode::geometry, "empty ball union");
          for (const auto& b : p.balls) check_pt(b.center, "ball center");
        } else if constexpr (std::is_same_v<T, Segment>) {
          check_pt(p.a, "segment endpoint");
          check_pt(p.b, "segment endpoint");
        } else if constexpr (std::is_same_v<T, Polyline>) {
          if (p.points.size() < 2) fail(ErrorCode::geometry, "degenerate polyline");
          for (const auto& q : p.points) check_pt(q, "polyline point");
        } else if constexpr (std::is_same_v<T, AnnulusSystem>) {
          check_pt(p.center, "annulus center");
          if (p.radii.empty()) fail(ErrorCode::geometry, "annulus without radii");
        } else if constexpr (std::is_same_v<T, Dumbbell>) {
          check_pt(p.c1, "dumbbell center");
          check_pt(p.c2, "dumbbell center");
          if (!(p.neck_radius < p.ball_radius))
            fail(ErrorCode::geometry, "dumbbell neck must be thinner than balls");
        }
      },
      part);
}

}  // namespace

double distance(const Shape& shape, std::span<const double> x,
                std::span<const double> box_len) {
  if (shape.parts.empty()) fail(ErrorCode::geometry, "empty shape");
  const int d = static_cast<int>(x.size());
  std::vector<double> xi(x.begin(), x.end());
  std::vector<int> off(d, -1);
  double best = std::numeric_limits<double>::max();
  // min over the 3^d periodic images
  for (;;) {
    for (int a = 0; a < d; ++a) xi[a] = x[a] + off[a] * box_len[a];
    for (const auto& part : shape.parts)
      best = std::min(best, std::visit(PartDist{xi}, part));
    int a = d - 1;
    for (; a >= 0; --a) {
      if (++off[a] <= 1) break;
      off[a] = -1;
    }
    if (a < 0) break;
  }
  return best;
}

double RecoveryProfile::operator()(double s) const {
  s = std::abs(s);
  if (s <= x_eps) return profile_bump(s);
  if (s >= 2.0 * x_eps) return 0.0;
  return cubic[0] + s * (cubic[1] + s * (cubic[2] + s * cubic[3]));
}

double RecoveryProfile::deriv(double s) const {
  const double sign = s < 0.0 ? -1.0 : 1.0;
  s = std::abs(s);
  if (s <= x_eps) return sign * profile_bump_deriv(s);
  if (s >= 2.0 * x_eps) return 0.0;
  return sign * (cubic[1] + s * (2.0 * cubic[2] + s * 3.0 * cubic[3]));
}

double RecoveryProfile::second_deriv(double s) const {
  s = std::abs(s);
  if (s <= x_eps) return potential_dF_unchecked(profile_bump(s));  // y'' = F'(y)
  if (s >= 2.0 * x_eps) return 0.0;
  return 2.0 * cubic[2] + 6.0 * cubic[3] * s;
}

RecoveryProfile build_recovery_cubic(double eps) {
  if (!(eps > 0.0) || eps >= 1.0)
    fail(ErrorCode::invalid_argument, "recovery profile needs 0 < eps < 1");
  const double x = std::abs(std::log(eps));
  const double a = profile_bump(x);
  const double b = profile_bump_deriv(x);
  // Hermite data (a, b) at x and (0, 0) at 2x on an interval of length x
  const double t0 = x, h = x;  // interval [x, 2x]
  RecoveryProfile rp;
  rp.eps = eps;
  rp.x_eps = x;
  // Hermite basis in tau = (s - t0)/h: p = a(2t^3-3t^2+1) + b h(t^3-2t^2+t);
  // expand in powers of (s - t0), then shift to powers of s.
  const double A3 = (2.0 * a + b * h) / (h * h * h);
  const double A2 = -(3.0 * a + 2.0 * b * h) / (h * h);
  const double A1 = b;
  const double A0 = a;
  rp.cubic[3] = A3;
  rp.cubic[2] = A2 - 3.0 * A3 * t0;
  rp.cubic[1] = A1 - 2.0 * A2 * t0 + 3.0 * A3 * t0 * t0;
  rp.cubic[0] = A0 - A1 * t0 + A2 * t0 * t0 - A3 * t0 * t0 * t0;
  return rp;
}

RealField initial_condition(const Shape& shape, const GridPtr& grid, double eps,
                            bool truncated) {
  if (shape.parts.empty()) fail(ErrorCode::geometry, "empty shape");
  for (const auto& part : shape.parts) validate_part(part, grid->dim());
  if (!(eps > 0.0)) fail(ErrorCode::invalid_argument, "eps must be positive");
  double hmax = 0.0;
  for (double h : grid->spacing()) hmax = std::max(hmax, h);
  if (eps < 2.0 * hmax)
    std::fprintf(stderr,
                 "umcf: warning: eps = %g under-resolved (max spacing %g)\n",
                 eps, hmax);

  RecoveryProfile rp;
  if (truncated) rp = build_recovery_cubic(eps);

  const int d = grid->dim();
  RealField u(grid);
  std::vector<int> idx(d, 0);
  std::vector<double> x(d);
  for (std::size_t f = 0; f < grid->size(); ++f) {
    for (int a = 0; a < d; ++a) x[a] = idx[a] * grid->spacing()[a];
    const double s = distance(shape, x, grid->len()) / eps;
    u[f] = truncated ? rp(s) : profile_bump(s);
    for (int a = d - 1; a >= 0; --a) {
      if (++idx[a] < grid->n()[a]) break;
      idx[a] = 0;
    }
  }
  return u;
}

}  // namespace umcf
