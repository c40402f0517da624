#include "umcf/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

#include "umcf/geometry.hpp"
#include "umcf/potential.hpp"

namespace umcf {

namespace {

constexpr double pi = std::numbers::pi;

// half-width (in profile units) of the band {bump >= 1/8}: -q'(s*) = 1/8
constexpr double band_half_width = 1.7627471740390861;  // log(3 + 2 sqrt(2))

double surface_area_unit(int dim) {
  switch (dim) {
    case 1: return 2.0;
    case 2: return 2.0 * pi;
    case 3: return 4.0 * pi;
    default: fail(ErrorCode::invalid_argument, "dimension must be 1, 2 or 3");
  }
}

// periodic sliding-window max along one axis, window [-K, K]
void axis_window_max(const Grid& g, int axis, int K, std::vector<double>& v) {
  const int d = g.dim();
  const int N = g.n()[axis];
  std::size_t stride = 1;
  for (int a = axis + 1; a < d; ++a) stride *= g.n()[a];
  const std::size_t block = stride * static_cast<std::size_t>(N);
  std::vector<double> line(N), out(N);
  for (std::size_t base = 0; base < g.size(); ++base) {
    if ((base / stride) % N != 0) continue;  // only line starts
    const std::size_t start = (base / block) * block + base % stride;
    for (int i = 0; i < N; ++i) line[i] = v[start + i * stride];
    for (int i = 0; i < N; ++i) {
      double m = line[i];
      for (int j = 1; j <= K; ++j) {
        m = std::max(m, line[(i + j) % N]);
        m = std::max(m, line[((i - j) % N + N) % N]);
      }
      out[i] = m;
    }
    for (int i = 0; i < N; ++i) v[start + i * stride] = out[i];
  }
}

}  // namespace

double radius_circle_2d(const RealField& u, double eps) {
  if (u.grid()->dim() != 2)
    fail(ErrorCode::invalid_argument, "disk radius estimate needs a 2d grid");
  return u.integral() / (2.0 * pi * eps);
}

double radius_sphere_3d(const RealField& u, double eps) {
  if (u.grid()->dim() != 3)
    fail(ErrorCode::invalid_argument, "sphere radius estimate needs a 3d grid");
  const double m = u.integral();
  if (m < 0.0) fail(ErrorCode::invalid_argument, "negative field mass");
  return std::sqrt(m / (4.0 * pi * eps));
}

double radius_filament_3d(const RealField& u, double eps) {
  if (u.grid()->dim() != 3)
    fail(ErrorCode::invalid_argument, "filament radius estimate needs a 3d grid");
  // cross-section mass of the bump tube: 2 pi eps^2 int_0^inf s(-q') ds
  // = 2 pi eps^2 log 2, times circle length 2 pi R
  return u.integral() / (4.0 * pi * pi * std::numbers::ln2 * eps * eps);
}

double exact_radius_law(int dim, int codim, double r0, double t, double kappa) {
  double rate = 0.0;
  if (dim == 2 && codim == 1) rate = 2.0;
  else if (dim == 3 && codim == 1) rate = 4.0;
  else if (dim == 3 && codim == 2) rate = 2.0 * kappa;
  else fail(ErrorCode::invalid_argument, "unsupported (dim, codim) radius law");
  const double r2 = r0 * r0 - rate * t;
  if (r2 < 0.0)
    fail(ErrorCode::invalid_argument, "time beyond the extinction time");
  return std::sqrt(r2);
}

double interface_peak_min(const RealField& u, double eps, PeakMode mode) {
  const Grid& g = *u.grid();
  const int d = g.dim();

  // band: {u >= 1/8} dilated by one cell
  std::vector<double> marks(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    marks[i] = u[i] >= 0.125 ? 1.0 : 0.0;
  for (int a = 0; a < d; ++a) axis_window_max(g, a, 1, marks);
  bool any = false;
  for (double m : marks)
    if (m > 0.0) { any = true; break; }
  if (!any) return 0.0;

  double hmin = g.spacing()[0];
  for (double h : g.spacing()) hmin = std::min(hmin, h);
  const int K = static_cast<int>(std::ceil(band_half_width * eps / hmin)) + 1;

  double peak_min = std::numeric_limits<double>::max();
  if (mode == PeakMode::neighborhood) {
    std::vector<double> wmax(u.values().begin(), u.values().end());
    for (int a = 0; a < d; ++a) axis_window_max(g, a, K, wmax);
    for (std::size_t i = 0; i < u.size(); ++i)
      if (marks[i] > 0.0) peak_min = std::min(peak_min, wmax[i]);
    return peak_min;
  }

  // hill climb: follow the steepest neighbor up to a local maximum
  std::vector<int> idx(d, 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (marks[i] <= 0.0) {
      for (int a = d - 1; a >= 0; --a) {
        if (++idx[a] < g.n()[a]) break;
        idx[a] = 0;
      }
      continue;
    }
    std::vector<int> cur = idx;
    double val = u[i];
    for (;;) {
      double best = val;
      std::vector<int> bestIdx = cur;
      std::vector<int> nb(d);
      // enumerate the 3^d - 1 neighbors
      std::vector<int> delta(d, -1);
      for (;;) {
        bool all_zero = true;
        for (int a = 0; a < d; ++a)
          if (delta[a] != 0) all_zero = false;
        if (!all_zero) {
          for (int a = 0; a < d; ++a)
            nb[a] = (cur[a] + delta[a] + g.n()[a]) % g.n()[a];
          const double v = u[g.flat_index(nb)];
          if (v > best) {
            best = v;
            bestIdx = nb;
          }
        }
        int a = d - 1;
        for (; a >= 0; --a) {
          if (++delta[a] <= 1) break;
          delta[a] = -1;
        }
        if (a < 0) break;
      }
      if (best <= val) break;
      val = best;
      cur = bestIdx;
    }
    peak_min = std::min(peak_min, val);
    for (int a = d - 1; a >= 0; --a) {
      if (++idx[a] < g.n()[a]) break;
      idx[a] = 0;
    }
  }
  return peak_min;
}

int level_set_component_count(const RealField& u, double level) {
  const Grid& g = *u.grid();
  const int d = g.dim();
  std::vector<char> in(u.size()), seen(u.size(), 0);
  for (std::size_t i = 0; i < u.size(); ++i) in[i] = u[i] >= level;
  std::vector<std::size_t> strides(d);
  {
    std::size_t s = 1;
    for (int a = d - 1; a >= 0; --a) {
      strides[a] = s;
      s *= g.n()[a];
    }
  }
  int components = 0;
  std::deque<std::size_t> queue;
  for (std::size_t seed = 0; seed < u.size(); ++seed) {
    if (!in[seed] || seen[seed]) continue;
    ++components;
    seen[seed] = 1;
    queue.push_back(seed);
    while (!queue.empty()) {
      const std::size_t c = queue.front();
      queue.pop_front();
      for (int a = 0; a < d; ++a) {
        const int N = g.n()[a];
        const int ia = static_cast<int>(c / strides[a]) % N;
        for (int dir = -1; dir <= 1; dir += 2) {
          const int ja = (ia + dir + N) % N;
          const std::size_t nbr = c + (ja - ia) * strides[a];
          if (in[nbr] && !seen[nbr]) {
            seen[nbr] = 1;
            queue.push_back(nbr);
          }
        }
      }
    }
  }
  return components;
}

DiagnosticsRecord diagnose(const RealField& u, const ModelParams& p, long step,
                           std::optional<double> radius) {
  DiagnosticsRecord rec;
  rec.step = step;
  rec.time = step * p.dt;
  rec.energy = energy(u, p);
  rec.radius = radius;
  rec.discrepancy_sup = discrepancy(u, p).max_abs();
  rec.u_max = u.max();
  rec.interface_peak_min = interface_peak_min(u, p.eps);
  return rec;
}

// ---- recovery-sequence energy study ----

namespace {

struct RadialProfile {
  RecoveryMode mode;
  RecoveryProfile rp;  // used in truncated mode
  double eps;

  double value(double s) const {
    return mode == RecoveryMode::truncated ? rp(s) : profile_bump(s);
  }
  double deriv(double s) const {
    return mode == RecoveryMode::truncated ? rp.deriv(s)
                                           : profile_bump_deriv(s);
  }
  double second(double s) const {
    if (mode == RecoveryMode::truncated) return rp.second_deriv(s);
    return potential_dF_unchecked(profile_bump(s));  // y'' = F'(y)
  }
};

}  // namespace

std::vector<GammaStudyRow> gamma_limsup_study(std::span<const double> radii,
                                              double sigma0,
                                              std::span<const double> eps_list,
                                              int dim, RecoveryMode mode) {
  if (radii.empty()) fail(ErrorCode::invalid_argument, "study needs radii");
  if (sigma0 < 0.0) fail(ErrorCode::invalid_argument, "sigma0 must be >= 0");
  const double Sd = surface_area_unit(dim);

  std::vector<double> rs(radii.begin(), radii.end());
  std::sort(rs.begin(), rs.end());
  double max_trunc = 0.0;
  for (double e : eps_list)
    max_trunc = std::max(max_trunc, e * std::abs(std::log(e)));
  for (std::size_t i = 0; i + 1 < rs.size(); ++i)
    if (rs[i + 1] - rs[i] <= 2.0 * max_trunc)
      fail(ErrorCode::invalid_argument,
           "radii too close for the truncation width");
  if (rs.front() <= 2.0 * max_trunc)
    fail(ErrorCode::invalid_argument, "innermost radius too close to 0");

  double target = 0.0;
  const double cF = potential_constants().cF;
  for (double r : rs) {
    const double P = Sd * std::pow(r, dim - 1);
    const double W = 0.5 * (dim - 1) * (dim - 1) * Sd * std::pow(r, dim - 3);
    target += cF * (P + sigma0 * W);
  }

  // annulus bounds away from 0 and past the outermost tail
  const double margin = std::max(4.0 * max_trunc, 0.3 * rs.front());
  const double rA = rs.front() - std::min(rs.front() * 0.75, margin);
  const double rB = rs.back() + margin;

  std::vector<GammaStudyRow> rows;
  for (double eps : eps_list) {
    RadialProfile prof{mode, {}, eps};
    if (mode == RecoveryMode::truncated) prof.rp = build_recovery_cubic(eps);

    // quadrature segments split at profile breakpoints and midpoints
    std::vector<double> cuts{rA, rB};
    for (double r : rs) {
      const double x = std::abs(std::log(eps));
      for (double s : {-2.0 * x, -x, 0.0, x, 2.0 * x}) {
        const double c = r + eps * s;
        if (c > rA && c < rB) cuts.push_back(c);
      }
    }
    for (std::size_t i = 0; i + 1 < rs.size(); ++i)
      cuts.push_back(0.5 * (rs[i] + rs[i + 1]));
    std::sort(cuts.begin(), cuts.end());

    const auto nearest = [&rs](double r) {
      double best = rs[0];
      for (double ri : rs)
        if (std::abs(r - ri) < std::abs(r - best)) best = ri;
      return best;
    };
    const auto integrand = [&](double r, bool willmore_part) {
      const double s = (r - nearest(r)) / eps;
      const double u = prof.value(s);
      const double du = prof.deriv(s) / eps;
      const double ddu = prof.second(s) / (eps * eps);
      const double w = std::pow(r, dim - 1);
      if (!willmore_part)
        return (0.5 * eps * du * du + potential_F(u) / eps) * w;
      const double lap = ddu + (dim - 1) / r * du;
      const double eul = eps * lap - potential_dF_unchecked(u) / eps;
      return eul * eul * w;
    };

    // composite Simpson per segment, resolution tied to eps
    const auto integrate = [&](bool willmore_part) {
      double total = 0.0;
      for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        const double a = cuts[c], b = cuts[c + 1];
        if (b - a < 1e-14) continue;
        const int panels =
            std::clamp(static_cast<int>(std::ceil((b - a) / (eps / 64.0))), 64,
                       200000) & ~1;
        const double h = (b - a) / panels;
        double s = integrand(a, willmore_part) + integrand(b, willmore_part);
        for (int i = 1; i < panels; ++i)
          s += (i % 2 ? 4.0 : 2.0) * integrand(a + i * h, willmore_part);
        total += s * h / 3.0;
      }
      return total;
    };

    GammaStudyRow row;
    row.eps = eps;
    row.mass = Sd * integrate(false);
    row.willmore = sigma0 > 0.0 ? Sd * sigma0 / (2.0 * eps) * integrate(true) : 0.0;
    row.total = row.mass + row.willmore;
    row.target = target;
    row.gap = std::abs(row.total - target);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace umcf
