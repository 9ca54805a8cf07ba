#pragma once

#include <concepts>

#include "ealpha/fields.hpp"

namespace ealpha {

PhysicalField inverse_transform(const SpectralField& coeffs);
SpectralField forward_transform(const PhysicalField& field);

SpectralVector forward_transform(const VectorField& field);
VectorField inverse_transform(const SpectralVector& field);

/// coeff_out(k) = m(kx, ky) * coeff_in(k). Even multipliers keep the
/// result Hermitian.
template <class Multiplier>
  requires std::invocable<Multiplier, int, int>
SpectralField apply_multiplier(SpectralField field, Multiplier&& m) {
  const TorusGrid& grid = field.grid();
  auto coeffs = field.coeffs();
  for (std::size_t mode = 0; mode < coeffs.size(); ++mode) {
    coeffs[mode] *= static_cast<double>(m(grid.kx(mode), grid.ky(mode)));
  }
  return field;
}

/// Multiplier (1 + alpha^2 k^2), i.e. the operator (1 - alpha^2 Laplacian).
SpectralField helmholtz(SpectralField field, double alpha);
/// Multiplier 1 / (1 + alpha^2 k^2).
SpectralField inverse_helmholtz(SpectralField field, double alpha);
/// Multiplier -k^2.
SpectralField laplacian(SpectralField field);

/// Solves -Laplacian(psi) = omega with psi(0,0) = 0.
/// Throws std::invalid_argument when omega has a nonzero mean.
SpectralField stream_from_omega(const SpectralField& omega);

/// Zeroes every mode outside the 2/3-rule mask.
SpectralField dealias(SpectralField field);
bool is_dealiased(const SpectralField& field);

SpectralField derivative_x(SpectralField field);
SpectralField derivative_y(SpectralField field);

/// Spectral divergence d/dx w_x + d/dy w_y.
SpectralField divergence(const SpectralVector& w);
/// Scalar curl d/dx w_y - d/dy w_x.
SpectralField curl(const SpectralVector& w);

/// Integral over the torus of f * g, evaluated exactly by Parseval.
double integral_product(const SpectralField& f, const SpectralField& g);
/// L2 norm over the torus, sqrt(integral f^2).
double l2_norm(const SpectralField& f);
/// Integral over the torus of f.
double integral(const SpectralField& f);

/// Grid quadrature (trapezoidal on the periodic lattice) of f * g.
double quadrature_product(const PhysicalField& f, const PhysicalField& g);

}  // namespace ealpha
