#include "ealpha/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ealpha {

namespace {

constexpr double kHermitianTolerance = 1e-10;
constexpr double kMeanTolerance = 1e-10;

// Integral of a product over [0, 2pi)^2 is (2pi)^2 / n^4 times the mode sum.
double parseval_weight(const TorusGrid& grid) {
  const double n2 = static_cast<double>(grid.size());
  return 4.0 * std::numbers::pi * std::numbers::pi / (n2 * n2);
}

}  // namespace

SpectralField forward_transform(const PhysicalField& field) {
  SpectralField out(field.grid_ptr());
  field.grid().forward(field.values(), out.coeffs());
  return out;
}

PhysicalField inverse_transform(const SpectralField& coeffs) {
  const double defect = coeffs.hermitian_defect();
  if (defect > kHermitianTolerance * std::max(1.0, coeffs.max_abs())) {
    throw std::logic_error("inverse_transform: coefficients are not Hermitian-symmetric (defect " +
                           std::to_string(defect) + ")");
  }
  PhysicalField out(coeffs.grid_ptr());
  coeffs.grid().inverse(coeffs.coeffs(), out.values());
  return out;
}

SpectralVector forward_transform(const VectorField& field) {
  return {forward_transform(field.x), forward_transform(field.y)};
}

VectorField inverse_transform(const SpectralVector& field) {
  return {inverse_transform(field.x), inverse_transform(field.y)};
}

SpectralField helmholtz(SpectralField field, double alpha) {
  const double a2 = alpha * alpha;
  const auto k2 = field.grid().k_squared();
  auto c = field.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= 1.0 + a2 * k2[i];
  return field;
}

SpectralField inverse_helmholtz(SpectralField field, double alpha) {
  const double a2 = alpha * alpha;
  const auto k2 = field.grid().k_squared();
  auto c = field.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] /= 1.0 + a2 * k2[i];
  return field;
}

SpectralField laplacian(SpectralField field) {
  const auto k2 = field.grid().k_squared();
  auto c = field.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= -k2[i];
  return field;
}

SpectralField stream_from_omega(const SpectralField& omega) {
  if (std::abs(omega[0]) > kMeanTolerance * std::max(1.0, omega.max_abs())) {
    throw std::invalid_argument("stream_from_omega: vorticity has nonzero mean");
  }
  SpectralField psi(omega.grid_ptr());
  const auto k2 = omega.grid().k_squared();
  auto in = omega.coeffs();
  auto out = psi.coeffs();
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = in[i] / k2[i];
  return psi;
}

SpectralField dealias(SpectralField field) {
  const TorusGrid& grid = field.grid();
  auto c = field.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!grid.resolved(i)) c[i] = 0.0;
  }
  return field;
}

bool is_dealiased(const SpectralField& field) {
  const TorusGrid& grid = field.grid();
  auto c = field.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!grid.resolved(i) && c[i] != Complex{}) return false;
  }
  return true;
}

SpectralField derivative_x(SpectralField field) {
  const auto k = field.grid().derivative_kx();
  auto c = field.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = Complex(-k[i] * c[i].imag(), k[i] * c[i].real());
  return field;
}

SpectralField derivative_y(SpectralField field) {
  const auto k = field.grid().derivative_ky();
  auto c = field.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = Complex(-k[i] * c[i].imag(), k[i] * c[i].real());
  return field;
}

SpectralField divergence(const SpectralVector& w) {
  return derivative_x(w.x) + derivative_y(w.y);
}

SpectralField curl(const SpectralVector& w) {
  return derivative_x(w.y) - derivative_y(w.x);
}

double integral_product(const SpectralField& f, const SpectralField& g) {
  auto a = f.coeffs();
  auto b = g.coeffs();
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
  return parseval_weight(f.grid()) * sum;
}

double l2_norm(const SpectralField& f) { return std::sqrt(integral_product(f, f)); }

double integral(const SpectralField& f) {
  const double n2 = static_cast<double>(f.grid().size());
  return 4.0 * std::numbers::pi * std::numbers::pi / n2 * f[0].real();
}

double quadrature_product(const PhysicalField& f, const PhysicalField& g) {
  auto a = f.values();
  auto b = g.values();
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  const double h = f.grid().spacing();
  return h * h * sum;
}

}  // namespace ealpha
