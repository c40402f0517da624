#include "umcf/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace umcf {

namespace {

constexpr double four_pi2 = 4.0 * std::numbers::pi * std::numbers::pi;

void check_obstacle(const RealField& u) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > 0.25 + 1e-12)
      fail(ErrorCode::domain,
           "state exceeds the obstacle 1/4 by " + std::to_string(u[i] - 0.25));
}

}  // namespace

void ModelParams::validate() const {
  if (!(eps > 0.0)) fail(ErrorCode::invalid_argument, "eps must be positive");
  if (!(dt > 0.0)) fail(ErrorCode::invalid_argument, "dt must be positive");
  if (sigma < 0.0 || alpha < 0.0 || beta < 0.0)
    fail(ErrorCode::invalid_argument, "sigma, alpha, beta must be nonnegative");
}

RealField mass_density(const RealField& u, const ModelParams& p) {
  p.validate();
  check_obstacle(u);
  auto grad = gradient(u);
  RealField out(u.grid());
  for (std::size_t i = 0; i < u.size(); ++i) {
    double g2 = 0.0;
    for (const auto& d : grad) g2 += d[i] * d[i];
    out[i] = 0.5 * p.eps * g2 + potential_F(std::min(u[i], 0.25)) / p.eps;
  }
  return out;
}

RealField euler_lagrange(const RealField& u, const ModelParams& p) {
  p.validate();
  check_obstacle(u);
  RealField lap = detail::inverse_unchecked(laplacian(forward(u)));
  RealField out(u.grid());
  for (std::size_t i = 0; i < u.size(); ++i)
    out[i] = -p.eps * lap[i] + potential_dF_unchecked(u[i]) / p.eps;
  return out;
}

RealField discrepancy(const RealField& u, const ModelParams& p) {
  p.validate();
  check_obstacle(u);
  auto grad = gradient(u);
  RealField out(u.grid());
  for (std::size_t i = 0; i < u.size(); ++i) {
    double g2 = 0.0;
    for (const auto& d : grad) g2 += d[i] * d[i];
    out[i] = p.eps * p.eps * g2 - 2.0 * potential_F(std::min(u[i], 0.25));
  }
  return out;
}

EnergyBreakdown energy(const RealField& u, const ModelParams& p) {
  p.validate();
  check_obstacle(u);
  const SpectralField U = forward(u);
  const RealField lap = detail::inverse_unchecked(laplacian(U));
  auto grad = gradient(u);
  const double dv = u.grid()->cell_volume();
  double mass = 0.0, will = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    double g2 = 0.0;
    for (const auto& d : grad) g2 += d[i] * d[i];
    mass += 0.5 * p.eps * g2 + potential_F(std::min(u[i], 0.25)) / p.eps;
    const double eul = -p.eps * lap[i] + potential_dF_unchecked(u[i]) / p.eps;
    will += eul * eul;
  }
  EnergyBreakdown e;
  e.mass = mass * dv;
  e.willmore = p.sigma / (2.0 * p.eps) * will * dv;
  e.total = e.mass + e.willmore;
  return e;
}

LinearSolveSymbol build_symbol(const GridPtr& grid, const ModelParams& p) {
  p.validate();
  return build_symbol(grid, p.dt, p.sigma, p.alpha, p.beta);
}

Stepper::Stepper(GridPtr grid, ModelParams params)
    : grid_(std::move(grid)), params_(params), sym_(build_symbol(grid_, params)) {
  const auto xi2 = mode_xi_squared(*grid_);
  lap_mult_.resize(xi2.size());
  for (std::size_t i = 0; i < xi2.size(); ++i) lap_mult_[i] = -four_pi2 * xi2[i];
}

void Stepper::advance(RealField& u, long step_index) const {
  const ModelParams& p = params_;
  const std::size_t n = u.size();
  const double inv_eps2 = 1.0 / (p.eps * p.eps);

  RealField w(grid_);
  for (std::size_t i = 0; i < n; ++i)
    w[i] = potential_dF_unchecked(u[i]) * inv_eps2;

  SpectralField U = forward(u);
  SpectralField W = forward(w);
  for (std::size_t i = 0; i < n; ++i) {
    U[i] *= lap_mult_[i];
    W[i] *= lap_mult_[i];
  }
  const RealField lap_u = detail::inverse_unchecked(U);
  const RealField lap_w = detail::inverse_unchecked(W);

  RealField g(grid_);
  for (std::size_t i = 0; i < n; ++i) {
    const double ddF = potential_ddF_unchecked(u[i]);
    g[i] = u[i] + p.dt * (-w[i] +
                          p.sigma * (lap_w[i] + ddF * inv_eps2 * (lap_u[i] - w[i])) +
                          p.alpha * u[i] - p.beta * lap_u[i]);
  }

  SpectralField G = forward(g);
  apply_solve_inplace(G, sym_);
  RealField next = detail::inverse_unchecked(G);
  if (p.projection)
    for (std::size_t i = 0; i < n; ++i) next[i] = std::min(next[i], 0.25);
  if (!next.all_finite())
    fail(ErrorCode::diverged,
         "non-finite state after step " + std::to_string(step_index));
  u = std::move(next);
}

RealField explicit_update(const RealField& u, const ModelParams& p) {
  p.validate();
  check_obstacle(u);
  const double inv_eps2 = 1.0 / (p.eps * p.eps);
  RealField w(u.grid());
  for (std::size_t i = 0; i < u.size(); ++i)
    w[i] = potential_dF_unchecked(u[i]) * inv_eps2;
  const RealField lap_u = detail::inverse_unchecked(laplacian(forward(u)));
  const RealField lap_w = detail::inverse_unchecked(laplacian(forward(w)));
  RealField g(u.grid());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double ddF = potential_ddF_unchecked(u[i]);
    g[i] = u[i] + p.dt * (-w[i] +
                          p.sigma * (lap_w[i] + ddF * inv_eps2 * (lap_u[i] - w[i])) +
                          p.alpha * u[i] - p.beta * lap_u[i]);
  }
  if (!g.all_finite()) fail(ErrorCode::diverged, "non-finite explicit update");
  return g;
}

RealField step(const RealField& u, const ModelParams& p,
               const LinearSolveSymbol& sym) {
  RealField g = explicit_update(u, p);
  SpectralField G = forward(g);
  apply_solve_inplace(G, sym);
  RealField next = detail::inverse_unchecked(G);
  if (p.projection)
    for (std::size_t i = 0; i < next.size(); ++i)
      next[i] = std::min(next[i], 0.25);
  if (!next.all_finite()) fail(ErrorCode::diverged, "non-finite state after step");
  return next;
}

}  // namespace umcf
