#pragma once

#include "umcf/grid.hpp"
#include "umcf/potential.hpp"
#include "umcf/spectral_ops.hpp"

namespace umcf {

/// Parameters of the energy and the splitting scheme. The accurate regime is
/// alpha = beta = 0 with dt = 0.01 eps^2; the stabilized regime uses
/// alpha = 1/eps^2, beta = 1, dt = eps^2.
struct ModelParams {
  double eps = 0.0;    // interface width
  double sigma = 0.0;  // Willmore weight (typically 2..4 eps^2)
  double dt = 0.0;     // time step
  double alpha = 0.0;  // splitting stabilizers
  double beta = 0.0;
  bool projection = true;  // clamp to the obstacle min(., 1/4) each step

  void validate() const;
};

struct EnergyBreakdown {
  double mass = 0.0;      // int eps/2 |grad u|^2 + F(u)/eps
  double willmore = 0.0;  // sigma/(2 eps) int (eps Lap u - F'(u)/eps)^2
  double total = 0.0;
};

/// Pointwise energy density eps/2 |grad u|^2 + F(u)/eps.
RealField mass_density(const RealField& u, const ModelParams& p);

/// First variation of the mass energy: -eps Lap u + F'(u)/eps.
RealField euler_lagrange(const RealField& u, const ModelParams& p);

/// Pointwise eps^2 |grad u|^2 - 2 F(u); vanishes on the exact profile.
RealField discrepancy(const RealField& u, const ModelParams& p);

EnergyBreakdown energy(const RealField& u, const ModelParams& p);

/// Explicit stage g of the splitting scheme u+ = L[g(u)]:
///   g(u) = u + dt(-w + sigma(Lap w + F''(u)/eps^2 (Lap u - w))
///               + alpha u - beta Lap u),  w = F'(u)/eps^2.
RealField explicit_update(const RealField& u, const ModelParams& p);

LinearSolveSymbol build_symbol(const GridPtr& grid, const ModelParams& p);

/// One scheme step: min(L[g(u)], 1/4) with projection on, L[g(u)] otherwise.
RealField step(const RealField& u, const ModelParams& p,
               const LinearSolveSymbol& sym);

/// Reusable stepper for long runs (caches the symbol and mode table).
class Stepper {
 public:
  Stepper(GridPtr grid, ModelParams params);

  const ModelParams& params() const { return params_; }
  const LinearSolveSymbol& symbol() const { return sym_; }

  /// Advances u in place; throws ErrorCode::diverged on non-finite values,
  /// reporting step_index in the message.
  void advance(RealField& u, long step_index) const;

 private:
  GridPtr grid_;
  ModelParams params_;
  LinearSolveSymbol sym_;
  std::vector<double> lap_mult_;  // -4 pi^2 |xi|^2
};

}  // namespace umcf
