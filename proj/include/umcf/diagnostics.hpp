#pragma once

#include <optional>
#include <span>
#include <vector>

#include "umcf/model.hpp"

namespace umcf {

struct DiagnosticsRecord {
  long step = 0;
  double time = 0.0;
  EnergyBreakdown energy;
  std::optional<double> radius;  // empty when no estimator applies
  double discrepancy_sup = 0.0;  // sup |eps^2 |grad u|^2 - 2F(u)|
  double u_max = 0.0;
  double interface_peak_min = 0.0;
};

/// Disk radius from the phase-field mass: R = 1/(2 pi eps) int u.
double radius_circle_2d(const RealField& u, double eps);

/// Sphere radius: R = sqrt(int u / (4 pi eps)).
double radius_sphere_3d(const RealField& u, double eps);

/// Circle filament (codim 2) radius from the tube mass:
/// int u ~ 4 pi^2 ln(2) eps^2 R for the bump profile around a circle.
double radius_filament_3d(const RealField& u, double eps);

/// Exact mean-curvature-flow radius laws. Supported (dim, codim):
/// (2,1) circle sqrt(R0^2-2t); (3,1) sphere sqrt(R0^2-4t);
/// (3,2) circle filament sqrt(R0^2-2 kappa t) with a caller-supplied kappa.
double exact_radius_law(int dim, int codim, double r0, double t,
                        double kappa = 1.0);

enum class PeakMode {
  neighborhood,  // min over band cells of the windowed max (window ~ band width)
  hill_climb,    // min over band cells of the local maximum reached by ascent
};

/// Profile-collapse detector: the smallest local profile peak along the
/// interface band {u >= 1/8} dilated by one cell. Healthy profiles sit near
/// 1/4, collapsed ones near 1/8. Returns 0 on an empty band.
double interface_peak_min(const RealField& u, double eps,
                          PeakMode mode = PeakMode::neighborhood);

/// Connected components of {u >= level} under periodic 2d/3d face adjacency.
int level_set_component_count(const RealField& u, double level);

DiagnosticsRecord diagnose(const RealField& u, const ModelParams& p, long step,
                           std::optional<double> radius = std::nullopt);

// ---- recovery-sequence energy study (radial quadrature, no PDE run) ----

enum class RecoveryMode { truncated, exact };

struct GammaStudyRow {
  double eps = 0.0;
  double mass = 0.0;
  double willmore = 0.0;
  double total = 0.0;
  double target = 0.0;  // cF (P + sigma0 W) summed over radii
  double gap = 0.0;     // |total - target|
};

/// Evaluates the energy of the radial recovery field u(r) = profile(|r-ri|/eps)
/// on an annulus by 1d quadrature with the radial gradient and Laplacian, and
/// tabulates it against cF sum_i (P(B_ri) + sigma0 W(B_ri)).
std::vector<GammaStudyRow> gamma_limsup_study(std::span<const double> radii,
                                              double sigma0,
                                              std::span<const double> eps_list,
                                              int dim, RecoveryMode mode);

}  // namespace umcf
