#include "ealpha/fields.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ealpha {

namespace {

void require_same_grid(const SpectralField& a, const SpectralField& b) {
  if (&a.grid() != &b.grid()) throw std::invalid_argument("spectral fields live on different grids");
}

}  // namespace

PhysicalField::PhysicalField(GridPtr grid) : grid_(std::move(grid)), values_(grid_->size(), 0.0) {}

PhysicalField PhysicalField::sample(GridPtr grid, const std::function<double(double, double)>& f) {
  PhysicalField out(std::move(grid));
  const int n = out.grid().n();
  for (int ix = 0; ix < n; ++ix) {
    const double x = out.grid().coordinate(ix);
    for (int iy = 0; iy < n; ++iy) out.at(ix, iy) = f(x, out.grid().coordinate(iy));
  }
  return out;
}

double PhysicalField::max_abs() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

SpectralField::SpectralField(GridPtr grid) : grid_(std::move(grid)), coeffs_(grid_->size(), Complex{}) {}

double SpectralField::max_abs() const noexcept {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::norm(c));
  return std::sqrt(m);
}

bool SpectralField::all_finite() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Complex& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); });
}

double SpectralField::hermitian_defect() const noexcept {
  const std::size_t n = static_cast<std::size_t>(grid_->n());
  double defect = 0.0;
  for (std::size_t ix = 0; ix < n; ++ix) {
    const Complex* row = coeffs_.data() + ix * n;
    const Complex* mirror = coeffs_.data() + ((n - ix) % n) * n;
    defect = std::max(defect, std::norm(row[0] - std::conj(mirror[0])));
    for (std::size_t iy = 1; iy < n; ++iy) {
      defect = std::max(defect, std::norm(row[iy] - std::conj(mirror[n - iy])));
    }
  }
  return std::sqrt(defect);
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  require_same_grid(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  require_same_grid(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double scale) noexcept {
  for (Complex& c : coeffs_) c *= scale;
  return *this;
}

SpectralField& SpectralField::add_scaled(double scale, const SpectralField& other) {
  require_same_grid(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += scale * other.coeffs_[i];
  return *this;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double scale, SpectralField a) { return a *= scale; }

double VectorField::max_norm() const noexcept {
  double m = 0.0;
  const auto ux = x.values();
  const auto uy = y.values();
  for (std::size_t i = 0; i < ux.size(); ++i) m = std::max(m, ux[i] * ux[i] + uy[i] * uy[i]);
  return std::sqrt(m);
}

}  // namespace ealpha
