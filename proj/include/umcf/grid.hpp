#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "umcf/errors.hpp"

namespace umcf {

/// Periodic rectangular lattice: per-axis sample counts N_a and physical
/// lengths l_a. Immutable once built; share via GridPtr.
class Grid {
 public:
  Grid(std::vector<int> n, std::vector<double> len);

  int dim() const { return static_cast<int>(n_.size()); }
  const std::vector<int>& n() const { return n_; }
  const std::vector<double>& len() const { return len_; }
  const std::vector<double>& spacing() const { return h_; }
  std::size_t size() const { return size_; }
  double cell_volume() const { return cell_volume_; }

  /// xi_k = (k_1/l_1, ..., k_d/l_d) for a multi-index k in
  /// K_N = prod_a [-N_a/2, N_a/2 - 1].
  std::vector<double> wavenumber(std::span<const int> k) const;

  /// Storage index i in [0, N_a) -> signed mode k_a (FFT-natural ordering).
  int signed_mode(int axis, int i) const {
    const int N = n_[static_cast<std::size_t>(axis)];
    return i < N / 2 + N % 2 ? i : i - N;
  }

  /// Flat row-major index of a lattice multi-index.
  std::size_t flat_index(std::span<const int> idx) const;

 private:
  std::vector<int> n_;
  std::vector<double> len_;
  std::vector<double> h_;
  std::size_t size_ = 0;
  double cell_volume_ = 0.0;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_grid(std::vector<int> n, std::vector<double> len);

/// Scalar samples on a grid, row-major (first axis slowest).
class RealField {
 public:
  explicit RealField(GridPtr grid, double fill = 0.0);

  const GridPtr& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  double* data() { return values_.data(); }
  const double* data() const { return values_.data(); }
  double& operator[](std::size_t i) { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  double max() const;
  double min() const;
  double max_abs() const;
  bool all_finite() const;
  /// Sum of samples times the cell volume (the lattice quadrature of f).
  double integral() const;

 private:
  GridPtr grid_;
  std::vector<double> values_;
};

/// Discrete Fourier coefficients c_k, FFT-natural mode ordering, normalized
/// so that c_0 is the field mean.
class SpectralField {
 public:
  explicit SpectralField(GridPtr grid);

  const GridPtr& grid() const { return grid_; }
  std::size_t size() const { return coeffs_.size(); }
  std::complex<double>* data() { return coeffs_.data(); }
  const std::complex<double>* data() const { return coeffs_.data(); }
  std::complex<double>& operator[](std::size_t i) { return coeffs_[i]; }
  const std::complex<double>& operator[](std::size_t i) const {
    return coeffs_[i];
  }

  /// Coefficient for a signed multi-index k in K_N.
  std::complex<double> coeff(std::span<const int> k) const;

 private:
  GridPtr grid_;
  std::vector<std::complex<double>> coeffs_;
};

/// Forward transform; c_0 equals the mean of f.
SpectralField forward(const RealField& f);

/// Inverse transform. The imaginary residue must stay below 1e-10 in absolute
/// value (Hermitian input); it is discarded, anything larger is an error.
RealField inverse(const SpectralField& F);

/// FFT threads used by all transforms (default: UMCF_THREADS env var or 1).
void set_fft_threads(int n);
int fft_threads();

namespace detail {
/// Inverse without the residue check, for spectra that are Hermitian by
/// construction (real input through real multipliers).
RealField inverse_unchecked(const SpectralField& F);
}  // namespace detail

}  // namespace umcf
