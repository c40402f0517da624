#pragma once

#include <vector>

#include "umcf/grid.hpp"

namespace umcf {

/// Spectral Laplacian: coefficients scaled by -4 pi^2 |xi_k|^2.
RealField laplacian(const RealField& f);
SpectralField laplacian(const SpectralField& F);

/// Spectral gradient, one field per axis. The unmatched -N/2 mode is zeroed
/// (odd-order derivative of an even-length transform).
std::vector<RealField> gradient(const RealField& f);

/// Diagonal multiplier of the semi-implicit solve
///   (I + dt(-Lap + sigma Lap^2 + alpha - beta Lap))^{-1}:
///   Lhat(xi) = 1 / (1 + dt(4pi^2|xi|^2 + sigma 16pi^4|xi|^4
///                          + alpha + beta 4pi^2|xi|^2)).
struct LinearSolveSymbol {
  GridPtr grid;
  std::vector<double> multiplier;  // one per mode, FFT-natural order
  double dt = 0.0, sigma = 0.0, alpha = 0.0, beta = 0.0;
};

LinearSolveSymbol build_symbol(const GridPtr& grid, double dt, double sigma,
                               double alpha, double beta);

/// Multiply coefficients by the symbol: solves the implicit linear stage.
RealField apply_solve(const RealField& f, const LinearSolveSymbol& sym);
void apply_solve_inplace(SpectralField& F, const LinearSolveSymbol& sym);

/// |xi_k|^2 per mode in FFT-natural order (shared by symbol and Laplacian).
std::vector<double> mode_xi_squared(const Grid& g);

}  // namespace umcf
