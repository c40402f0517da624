#pragma once

#include <cmath>
#include <limits>

#include "umcf/errors.hpp"

namespace umcf {

/// One-well / one-obstacle potential: F(s) = s^2(1/2 - 2s) for s <= 1/4,
/// infinite above. The well sits at 0, the obstacle at 1/4.
inline double potential_F(double s) {
  if (s > 0.25) return std::numeric_limits<double>::max();  // finite sentinel
  return s * s * (0.5 - 2.0 * s);
}

/// F'(s) = s - 6 s^2 (left-derivative at the obstacle). Only defined up to 1/4.
inline double potential_dF(double s) {
  if (s > 0.25 + 1e-12)
    fail(ErrorCode::domain, "F' evaluated above the obstacle at 1/4");
  return s - 6.0 * s * s;
}

/// F''(s) = 1 - 12 s; vanishes at 1/12, the convexity limit.
inline double potential_ddF(double s) {
  if (s > 0.25 + 1e-12)
    fail(ErrorCode::domain, "F'' evaluated above the obstacle at 1/4");
  return 1.0 - 12.0 * s;
}

// unchecked variants for inner loops operating on projected states
inline double potential_dF_unchecked(double s) { return s - 6.0 * s * s; }
inline double potential_ddF_unchecked(double s) { return 1.0 - 12.0 * s; }

/// Optimal profile of the classical double well W(s) = s^2(1-s)^2/2:
/// q(s) = 1/(1+e^s), decreasing from 1 to 0 with q(0) = 1/2.
inline double profile_q(double s) {
  if (s >= 0.0) {
    const double t = std::exp(-s);
    return t / (1.0 + t);
  }
  return 1.0 / (1.0 + std::exp(s));
}

/// The bump profile -q'(s) = q(s)(1-q(s)) = e^s/(1+e^s)^2: even, peaks at 1/4,
/// decays like e^{-|s|}. Solves y'' = F'(y).
inline double profile_bump(double s) {
  const double t = std::exp(-std::abs(s));
  const double d = 1.0 + t;
  return t / (d * d);
}

/// d/ds of the bump, i.e. -q''(s) = -(-q')(s) tanh(s/2).
inline double profile_bump_deriv(double s) {
  return -profile_bump(s) * std::tanh(0.5 * s);
}

struct PotentialConstants {
  double cF;               // surface tension 2 * int_0^{1/4} sqrt(2F)
  double obstacle;         // 1/4
  double well;             // 0
  double flat_point;       // 1/6, zero of F'
  double convexity_limit;  // 1/12, zero of F''
};

PotentialConstants potential_constants();

/// c_F by adaptive quadrature of 2 sqrt(2 F); the closed form is 1/30.
double compute_cF();

/// Same quadrature at a fixed panel count (refinement-consistency checks).
double compute_cF(int panels);

}  // namespace umcf
