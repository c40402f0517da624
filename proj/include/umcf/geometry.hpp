#pragma once

#include <array>
#include <variant>
#include <vector>

#include "umcf/grid.hpp"

namespace umcf {

using Point = std::vector<double>;

/// Codim-1 sphere boundary (circle in 2d); radius 0 degenerates to a point.
struct Sphere {
  Point center;
  double radius = 0.0;
};

/// Boundary of the union of overlapping balls (glued circles/spheres).
/// Distance is |min of member signed distances|.
struct BallUnion {
  std::vector<Sphere> balls;
};

/// Codim-2 filament segment: the segment itself is the interface.
struct Segment {
  Point a, b;
};

/// Filament polyline (closed or open); open chains sharing endpoints build
/// junctions.
struct Polyline {
  std::vector<Point> points;
  bool closed = true;
};

/// Concentric sphere boundaries around one center.
struct AnnulusSystem {
  Point center;
  std::vector<double> radii;
};

/// Two balls of radius ball_radius joined by a coaxial cylinder of radius
/// neck_radius < ball_radius; the interface is the boundary of the union.
struct Dumbbell {
  Point c1, c2;
  double ball_radius = 0.0;
  double neck_radius = 0.0;
};

using ShapePart =
    std::variant<Sphere, BallUnion, Segment, Polyline, AnnulusSystem, Dumbbell>;

/// A scene is a union of parts: dist = min over parts.
struct Shape {
  std::vector<ShapePart> parts;
};

/// Unsigned distance from x to the interface, minimized over the 3^d periodic
/// images of the shape in a box of the given lengths.
double distance(const Shape& shape, std::span<const double> x,
                std::span<const double> box_len);

/// C^{1,1} truncation of the bump profile: -q' up to x_eps = |log eps|, a
/// Hermite cubic on [x_eps, 2 x_eps], zero beyond.
struct RecoveryProfile {
  double eps = 0.0;
  double x_eps = 0.0;
  std::array<double, 4> cubic{};  // p(s) = c0 + c1 s + c2 s^2 + c3 s^3

  double operator()(double s) const;
  double deriv(double s) const;
  double second_deriv(double s) const;
};

RecoveryProfile build_recovery_cubic(double eps);

/// Samples the bump profile of dist(.,shape)/eps on the lattice; the truncated
/// variant uses the recovery profile and is compactly supported.
RealField initial_condition(const Shape& shape, const GridPtr& grid, double eps,
                            bool truncated = false);

}  // namespace umcf
