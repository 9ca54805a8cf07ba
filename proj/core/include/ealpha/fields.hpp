#pragma once

#include <functional>
#include <span>

#include "ealpha/grid.hpp"

namespace ealpha {

/// Real samples of a scalar field on the grid nodes (x_i, y_j) = (ih, jh).
class PhysicalField {
 public:
  explicit PhysicalField(GridPtr grid);

  /// Samples f(x, y) at every grid node.
  static PhysicalField sample(GridPtr grid, const std::function<double(double, double)>& f);

  const TorusGrid& grid() const noexcept { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }

  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }
  double& at(int ix, int iy) noexcept { return values_[static_cast<std::size_t>(ix) * grid_->n() + iy]; }
  double at(int ix, int iy) const noexcept { return values_[static_cast<std::size_t>(ix) * grid_->n() + iy]; }

  double max_abs() const noexcept;

 private:
  GridPtr grid_;
  AlignedVector<double> values_;
};

/// Fourier coefficients of a real scalar field, stored for every lattice
/// mode (Hermitian symmetry is kept explicitly, not implied).
class SpectralField {
 public:
  explicit SpectralField(GridPtr grid);

  const TorusGrid& grid() const noexcept { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }

  std::span<Complex> coeffs() noexcept { return coeffs_; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  Complex& operator[](std::size_t mode) noexcept { return coeffs_[mode]; }
  const Complex& operator[](std::size_t mode) const noexcept { return coeffs_[mode]; }
  Complex& at(int kx, int ky) noexcept { return coeffs_[grid_->mode_index(kx, ky)]; }
  const Complex& at(int kx, int ky) const noexcept { return coeffs_[grid_->mode_index(kx, ky)]; }

  /// Sets the (0,0) coefficient to zero.
  void pin_mean() noexcept { coeffs_[0] = 0.0; }
  double max_abs() const noexcept;
  bool all_finite() const noexcept;
  /// Largest |F(k) - conj(F(-k))| over all modes.
  double hermitian_defect() const noexcept;

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double scale) noexcept;
  /// this += scale * other
  SpectralField& add_scaled(double scale, const SpectralField& other);

 private:
  GridPtr grid_;
  AlignedVector<Complex> coeffs_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double scale, SpectralField a);

/// Velocity-like field in physical space.
struct VectorField {
  PhysicalField x;
  PhysicalField y;

  const TorusGrid& grid() const noexcept { return x.grid(); }
  /// Largest pointwise Euclidean norm.
  double max_norm() const noexcept;
};

/// Velocity-like field in Fourier space.
struct SpectralVector {
  SpectralField x;
  SpectralField y;

  const TorusGrid& grid() const noexcept { return x.grid(); }
};

}  // namespace ealpha
