#include "umcf/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fft.hpp"

namespace umcf {

Grid::Grid(std::vector<int> n, std::vector<double> len)
    : n_(std::move(n)), len_(std::move(len)) {
  if (n_.empty() || n_.size() > 3)
    fail(ErrorCode::invalid_argument, "grid dimension must be 1, 2 or 3");
  if (n_.size() != len_.size())
    fail(ErrorCode::invalid_argument, "grid n/len size mismatch");
  size_ = 1;
  cell_volume_ = 1.0;
  h_.resize(n_.size());
  for (std::size_t a = 0; a < n_.size(); ++a) {
    if (n_[a] < 4)
      fail(ErrorCode::invalid_argument, "grid needs at least 4 samples per axis");
    if (!(len_[a] > 0.0))
      fail(ErrorCode::invalid_argument, "grid lengths must be positive");
    size_ *= static_cast<std::size_t>(n_[a]);
    h_[a] = len_[a] / n_[a];
    cell_volume_ *= h_[a];
  }
}

std::vector<double> Grid::wavenumber(std::span<const int> k) const {
  if (k.size() != n_.size())
    fail(ErrorCode::invalid_argument, "wavenumber index dimension mismatch");
  std::vector<double> xi(k.size());
  for (std::size_t a = 0; a < k.size(); ++a) {
    const int N = n_[a];
    if (k[a] < -N / 2 || k[a] > N / 2 - 1)
      fail(ErrorCode::invalid_argument, "mode index outside K_N");
    xi[a] = k[a] / len_[a];
  }
  return xi;
}

std::size_t Grid::flat_index(std::span<const int> idx) const {
  std::size_t f = 0;
  for (std::size_t a = 0; a < n_.size(); ++a)
    f = f * static_cast<std::size_t>(n_[a]) + static_cast<std::size_t>(idx[a]);
  return f;
}

GridPtr make_grid(std::vector<int> n, std::vector<double> len) {
  return std::make_shared<const Grid>(std::move(n), std::move(len));
}

RealField::RealField(GridPtr grid, double fill)
    : grid_(std::move(grid)), values_(grid_->size(), fill) {}

double RealField::max() const {
  return *std::max_element(values_.begin(), values_.end());
}

double RealField::min() const {
  return *std::min_element(values_.begin(), values_.end());
}

double RealField::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

bool RealField::all_finite() const {
  for (double v : values_)
    if (!std::isfinite(v)) return false;
  return true;
}

double RealField::integral() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s * grid_->cell_volume();
}

SpectralField::SpectralField(GridPtr grid)
    : grid_(std::move(grid)), coeffs_(grid_->size()) {}

std::complex<double> SpectralField::coeff(std::span<const int> k) const {
  grid_->wavenumber(k);  // range check
  std::vector<int> idx(k.size());
  for (std::size_t a = 0; a < k.size(); ++a)
    idx[a] = k[a] >= 0 ? k[a] : k[a] + grid_->n()[a];
  return coeffs_[grid_->flat_index(idx)];
}

SpectralField forward(const RealField& f) {
  const Grid& g = *f.grid();
  std::vector<std::complex<double>> in(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) in[i] = f[i];
  SpectralField out(f.grid());
  detail::fft_execute(g, in.data(), out.data(), true);
  const double scale = 1.0 / static_cast<double>(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] *= scale;
  return out;
}

RealField inverse(const SpectralField& F) {
  const Grid& g = *F.grid();
  std::vector<std::complex<double>> out(g.size());
  detail::fft_execute(g, F.data(), out.data(), false);
  RealField f(F.grid());
  double residue = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    residue = std::max(residue, std::abs(out[i].imag()));
    f[i] = out[i].real();
  }
  if (residue > 1e-10)
    fail(ErrorCode::spectral,
         "inverse transform of non-Hermitian data (imaginary residue " +
             std::to_string(residue) + ")");
  return f;
}

namespace detail {

RealField inverse_unchecked(const SpectralField& F) {
  const Grid& g = *F.grid();
  std::vector<std::complex<double>> out(g.size());
  fft_execute(g, F.data(), out.data(), false);
  RealField f(F.grid());
  for (std::size_t i = 0; i < g.size(); ++i) f[i] = out[i].real();
  return f;
}

}  // namespace detail

}  // namespace umcf
