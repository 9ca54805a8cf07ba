#pragma once

#include "ealpha/fields.hpp"

namespace ealpha {

/// Dynamical state of the averaged Euler / Navier-Stokes system.
///
/// The prognostic variable is the potential vorticity
/// q = (1 - alpha^2 Laplacian) omega, kept mean-zero and Hermitian.
/// Conventions: omega = d/dx u_y - d/dy u_x, omega = -Laplacian(psi),
/// u = (d/dy psi, -d/dx psi), which makes curl u = omega.
struct SimState {
  SpectralField q_hat;
  double alpha = 0.0;
  double nu = 0.0;
  double t = 0.0;

  /// Throws std::invalid_argument on negative or non-finite parameters,
  /// a non-Hermitian q or a nonzero mean.
  void validate() const;
};

/// Builds a state from a vorticity spectrum: q = helmholtz(omega, alpha).
SimState state_from_omega(SpectralField omega_hat, double alpha, double nu, double t = 0.0);

struct Diagnostics {
  double t = 0.0;
  double energy = 0.0;     ///< 1/2 integral(|u|^2 + alpha^2 |grad u|^2)
  double mean_q = 0.0;     ///< integral q
  double casimir2 = 0.0;   ///< integral q^2
  double enstrophy = 0.0;  ///< integral omega^2
  double max_u = 0.0;      ///< max pointwise speed on the grid
  double cfl = 0.0;        ///< max_u * dt / h
};

SpectralField omega_from_q(const SpectralField& q_hat, double alpha);
SpectralField stream_from_q(const SpectralField& q_hat, double alpha);
SpectralVector velocity_spectral_from_q(const SpectralField& q_hat, double alpha);
/// Divergence-free velocity u = (d/dy psi, -d/dx psi) with psi from q.
VectorField velocity_from_q(const SpectralField& q_hat, double alpha);

/// dq/dt = -P(u . grad q) + nu Laplacian(omega), P the 2/3-rule truncation.
/// Both factors of the product are dealiased before it is formed in
/// physical space. The result is mean-zero.
///
/// The advective term is the Lie-Poisson bracket of psi and q; only the
/// transport form is implemented.
SpectralField rhs_vorticity(const SimState& s);
/// Advective term u . grad q alone (dealiased, mean-zero).
SpectralField advection_term(const SpectralField& q_hat, double alpha);

/// Projection I - k k^T / k^2 onto divergence-free fields; the mean
/// (k = 0) component is kept.
SpectralVector leray_project(const SpectralVector& w);
VectorField leray_project(const VectorField& w);

enum class ProjectionOrder { project_then_filter, filter_then_project };

/// ad*_u u = (1 - alpha^2 Lap)^{-1} P_L [ (u . grad) v - alpha^2 (grad u)^T Lap u ],
/// with v = (1 - alpha^2 Lap) u and P_L the Leray projection standing in for
/// the pressure gradient. Products are dealiased.
SpectralVector ad_star_spectral(const SimState& s,
                                ProjectionOrder order = ProjectionOrder::project_then_filter);
VectorField ad_star(const SimState& s);

/// Velocity-form right-hand side du/dt = -ad*_u u + nu (1 - alpha^2 Lap)^{-1} Lap u.
SpectralVector rhs_velocity(const SimState& s);

/// Energy as 1/2 sum (1 + alpha^2 k^2) |u_hat|^2 over modes.
double energy_spectral(const SimState& s);
/// Energy as 1/2 integral u . v by grid quadrature, v = (1 - alpha^2 Lap) u.
double energy_physical(const SimState& s);

/// All diagnostics; `dt` only enters the CFL column.
Diagnostics compute_diagnostics(const SimState& s, double dt = 0.0);

}  // namespace ealpha
