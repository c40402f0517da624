#include "umcf/spectral_ops.hpp"

#include <cmath>
#include <numbers>

namespace umcf {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double four_pi2 = 4.0 * std::numbers::pi * std::numbers::pi;
}  // namespace

std::vector<double> mode_xi_squared(const Grid& g) {
  const int d = g.dim();
  std::vector<std::vector<double>> axis(d);
  for (int a = 0; a < d; ++a) {
    axis[a].resize(g.n()[a]);
    for (int i = 0; i < g.n()[a]; ++i) {
      const double xi = g.signed_mode(a, i) / g.len()[a];
      axis[a][i] = xi * xi;
    }
  }
  std::vector<double> out(g.size());
  std::vector<int> idx(d, 0);
  for (std::size_t f = 0; f < g.size(); ++f) {
    double s = 0.0;
    for (int a = 0; a < d; ++a) s += axis[a][idx[a]];
    out[f] = s;
    for (int a = d - 1; a >= 0; --a) {
      if (++idx[a] < g.n()[a]) break;
      idx[a] = 0;
    }
  }
  return out;
}

SpectralField laplacian(const SpectralField& F) {
  const auto xi2 = mode_xi_squared(*F.grid());
  SpectralField out(F.grid());
  for (std::size_t i = 0; i < F.size(); ++i)
    out[i] = F[i] * (-four_pi2 * xi2[i]);
  return out;
}

RealField laplacian(const RealField& f) { return inverse(laplacian(forward(f))); }

std::vector<RealField> gradient(const RealField& f) {
  const Grid& g = *f.grid();
  const int d = g.dim();
  SpectralField F = forward(f);
  std::vector<RealField> out;
  out.reserve(d);
  for (int a = 0; a < d; ++a) {
    SpectralField D(f.grid());
    std::vector<int> idx(d, 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const int k = g.signed_mode(a, idx[a]);
      // Nyquist carries no usable sign information for odd derivatives
      const double xi = (2 * k == -g.n()[a]) ? 0.0 : k / g.len()[a];
      D[i] = F[i] * std::complex<double>(0.0, two_pi * xi);
      for (int b = d - 1; b >= 0; --b) {
        if (++idx[b] < g.n()[b]) break;
        idx[b] = 0;
      }
    }
    out.push_back(inverse(D));
  }
  return out;
}

LinearSolveSymbol build_symbol(const GridPtr& grid, double dt, double sigma,
                               double alpha, double beta) {
  if (!(dt > 0.0)) fail(ErrorCode::invalid_argument, "symbol needs dt > 0");
  if (sigma < 0.0 || alpha < 0.0 || beta < 0.0)
    fail(ErrorCode::invalid_argument, "symbol needs sigma, alpha, beta >= 0");
  LinearSolveSymbol sym{grid, {}, dt, sigma, alpha, beta};
  const auto xi2 = mode_xi_squared(*grid);
  sym.multiplier.resize(grid->size());
  for (std::size_t i = 0; i < xi2.size(); ++i) {
    const double k2 = four_pi2 * xi2[i];
    sym.multiplier[i] = 1.0 / (1.0 + dt * (k2 + sigma * k2 * k2 + alpha + beta * k2));
  }
  return sym;
}

void apply_solve_inplace(SpectralField& F, const LinearSolveSymbol& sym) {
  if (F.grid() != sym.grid)
    fail(ErrorCode::invalid_argument, "field/symbol grid mismatch");
  for (std::size_t i = 0; i < F.size(); ++i) F[i] *= sym.multiplier[i];
}

RealField apply_solve(const RealField& f, const LinearSolveSymbol& sym) {
  if (f.grid() != sym.grid)
    fail(ErrorCode::invalid_argument, "field/symbol grid mismatch");
  SpectralField F = forward(f);
  apply_solve_inplace(F, sym);
  return inverse(F);
}

}  // namespace umcf
