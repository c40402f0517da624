#include "umcf/potential.hpp"

namespace umcf {

namespace {

// composite Simpson on [a,b]
template <class Fn>
double simpson(Fn f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

// 2 sqrt(2F(s)) under the substitution s = (1-w^2)/4, which removes the
// square-root endpoint at s = 1/4
double integrand(double w) {
  const double s = (1.0 - w * w) * 0.25;
  return 2.0 * std::sqrt(2.0 * potential_F(s)) * 0.5 * w;
}

}  // namespace

double compute_cF(int panels) { return simpson(integrand, 0.0, 1.0, panels); }

double compute_cF() {
  double prev = compute_cF(64);
  for (int panels = 256; panels <= 1 << 16; panels *= 4) {
    const double v = compute_cF(panels);
    if (std::abs(v - prev) < 1e-13) return v;
    prev = v;
  }
  return prev;
}

PotentialConstants potential_constants() {
  return {1.0 / 30.0, 0.25, 0.0, 1.0 / 6.0, 1.0 / 12.0};
}

}  // namespace umcf
