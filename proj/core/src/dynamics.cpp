#include "ealpha/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ealpha/spectral.hpp"

namespace ealpha {

namespace {

void require_parameter(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0) {
    throw std::invalid_argument(std::string(name) + " must be finite and >= 0");
  }
}

// out[i] = sum over pairs a[i] * b[i]
PhysicalField dot(std::initializer_list<std::pair<const PhysicalField*, const PhysicalField*>> terms,
                  const GridPtr& grid) {
  PhysicalField out(grid);
  auto r = out.values();
  for (const auto& [a, b] : terms) {
    auto av = a->values();
    auto bv = b->values();
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += av[i] * bv[i];
  }
  return out;
}

}  // namespace

void SimState::validate() const {
  require_parameter(alpha, "alpha");
  require_parameter(nu, "nu");
  if (!std::isfinite(t)) throw std::invalid_argument("time must be finite");
  const double scale = std::max(1.0, q_hat.max_abs());
  if (q_hat.hermitian_defect() > 1e-10 * scale) {
    throw std::invalid_argument("potential vorticity is not Hermitian-symmetric");
  }
  if (std::abs(q_hat[0]) > 1e-10 * scale) {
    throw std::invalid_argument("potential vorticity has nonzero mean");
  }
}

SimState state_from_omega(SpectralField omega_hat, double alpha, double nu, double t) {
  omega_hat.pin_mean();
  SimState s{helmholtz(std::move(omega_hat), alpha), alpha, nu, t};
  s.validate();
  return s;
}

SpectralField omega_from_q(const SpectralField& q_hat, double alpha) {
  return inverse_helmholtz(q_hat, alpha);
}

SpectralField stream_from_q(const SpectralField& q_hat, double alpha) {
  return stream_from_omega(omega_from_q(q_hat, alpha));
}

SpectralVector velocity_spectral_from_q(const SpectralField& q_hat, double alpha) {
  SpectralField psi = stream_from_q(q_hat, alpha);
  SpectralField uy = derivative_x(psi);
  uy *= -1.0;
  return {derivative_y(std::move(psi)), std::move(uy)};
}

VectorField velocity_from_q(const SpectralField& q_hat, double alpha) {
  return inverse_transform(velocity_spectral_from_q(q_hat, alpha));
}

SpectralField advection_term(const SpectralField& q_hat, double alpha) {
  const SpectralField q = dealias(q_hat);
  const VectorField u = velocity_from_q(q, alpha);
  const PhysicalField qx = inverse_transform(derivative_x(q));
  const PhysicalField qy = inverse_transform(derivative_y(q));
  SpectralField out = dealias(forward_transform(dot({{&u.x, &qx}, {&u.y, &qy}}, q.grid_ptr())));
  out.pin_mean();
  return out;
}

SpectralField rhs_vorticity(const SimState& s) {
  SpectralField rhs = advection_term(s.q_hat, s.alpha);
  rhs *= -1.0;
  if (s.nu != 0.0) {
    rhs.add_scaled(s.nu, laplacian(omega_from_q(s.q_hat, s.alpha)));
  }
  rhs.pin_mean();
  return rhs;
}

SpectralVector leray_project(const SpectralVector& w) {
  SpectralVector out = w;
  const TorusGrid& grid = w.grid();
  auto ox = out.x.coeffs();
  auto oy = out.y.coeffs();
  for (std::size_t i = 1; i < ox.size(); ++i) {
    const double kx = grid.kx(i);
    const double ky = grid.ky(i);
    const Complex k_dot_w = (kx * ox[i] + ky * oy[i]) / grid.k_squared(i);
    ox[i] -= kx * k_dot_w;
    oy[i] -= ky * k_dot_w;
  }
  return out;
}

VectorField leray_project(const VectorField& w) {
  return inverse_transform(leray_project(forward_transform(w)));
}

SpectralVector ad_star_spectral(const SimState& s, ProjectionOrder order) {
  const double a2 = s.alpha * s.alpha;
  const SpectralField q = dealias(s.q_hat);
  const GridPtr& grid = q.grid_ptr();
  const SpectralVector u = velocity_spectral_from_q(q, s.alpha);
  const SpectralField vx = helmholtz(u.x, s.alpha);
  const SpectralField vy = helmholtz(u.y, s.alpha);

  const PhysicalField ux = inverse_transform(u.x);
  const PhysicalField uy = inverse_transform(u.y);
  const PhysicalField dvx_dx = inverse_transform(derivative_x(vx));
  const PhysicalField dvx_dy = inverse_transform(derivative_y(vx));
  const PhysicalField dvy_dx = inverse_transform(derivative_x(vy));
  const PhysicalField dvy_dy = inverse_transform(derivative_y(vy));

  // (u . grad) v
  PhysicalField ax = dot({{&ux, &dvx_dx}, {&uy, &dvx_dy}}, grid);
  PhysicalField ay = dot({{&ux, &dvy_dx}, {&uy, &dvy_dy}}, grid);

  if (a2 != 0.0) {
    // (grad u)^T Lap u, component i = sum_j d_i u_j Lap u_j
    const PhysicalField dux_dx = inverse_transform(derivative_x(u.x));
    const PhysicalField dux_dy = inverse_transform(derivative_y(u.x));
    const PhysicalField duy_dx = inverse_transform(derivative_x(u.y));
    const PhysicalField duy_dy = inverse_transform(derivative_y(u.y));
    const PhysicalField lux = inverse_transform(laplacian(u.x));
    const PhysicalField luy = inverse_transform(laplacian(u.y));
    const PhysicalField tx = dot({{&dux_dx, &lux}, {&duy_dx, &luy}}, grid);
    const PhysicalField ty = dot({{&dux_dy, &lux}, {&duy_dy, &luy}}, grid);
    auto axv = ax.values();
    auto ayv = ay.values();
    auto txv = tx.values();
    auto tyv = ty.values();
    for (std::size_t i = 0; i < axv.size(); ++i) {
      axv[i] -= a2 * txv[i];
      ayv[i] -= a2 * tyv[i];
    }
  }

  SpectralVector a{dealias(forward_transform(ax)), dealias(forward_transform(ay))};
  if (order == ProjectionOrder::project_then_filter) {
    SpectralVector p = leray_project(a);
    return {inverse_helmholtz(std::move(p.x), s.alpha), inverse_helmholtz(std::move(p.y), s.alpha)};
  }
  return leray_project(
      SpectralVector{inverse_helmholtz(std::move(a.x), s.alpha), inverse_helmholtz(std::move(a.y), s.alpha)});
}

VectorField ad_star(const SimState& s) { return inverse_transform(ad_star_spectral(s)); }

SpectralVector rhs_velocity(const SimState& s) {
  SpectralVector rhs = ad_star_spectral(s);
  rhs.x *= -1.0;
  rhs.y *= -1.0;
  if (s.nu != 0.0) {
    const SpectralVector u = velocity_spectral_from_q(dealias(s.q_hat), s.alpha);
    rhs.x.add_scaled(s.nu, inverse_helmholtz(laplacian(u.x), s.alpha));
    rhs.y.add_scaled(s.nu, inverse_helmholtz(laplacian(u.y), s.alpha));
  }
  return rhs;
}

double energy_spectral(const SimState& s) {
  const SpectralVector u = velocity_spectral_from_q(s.q_hat, s.alpha);
  return 0.5 * (integral_product(u.x, helmholtz(u.x, s.alpha)) +
                integral_product(u.y, helmholtz(u.y, s.alpha)));
}

double energy_physical(const SimState& s) {
  const SpectralVector u = velocity_spectral_from_q(s.q_hat, s.alpha);
  const PhysicalField ux = inverse_transform(u.x);
  const PhysicalField uy = inverse_transform(u.y);
  const PhysicalField vx = inverse_transform(helmholtz(u.x, s.alpha));
  const PhysicalField vy = inverse_transform(helmholtz(u.y, s.alpha));
  return 0.5 * (quadrature_product(ux, vx) + quadrature_product(uy, vy));
}

Diagnostics compute_diagnostics(const SimState& s, double dt) {
  Diagnostics d;
  d.t = s.t;
  d.energy = energy_spectral(s);
  d.mean_q = integral(s.q_hat);
  d.casimir2 = integral_product(s.q_hat, s.q_hat);
  const SpectralField omega = omega_from_q(s.q_hat, s.alpha);
  d.enstrophy = integral_product(omega, omega);
  d.max_u = velocity_from_q(s.q_hat, s.alpha).max_norm();
  d.cfl = d.max_u * dt / s.q_hat.grid().spacing();
  return d;
}

}  // namespace ealpha
