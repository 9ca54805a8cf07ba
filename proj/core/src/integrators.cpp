#include "ealpha/integrators.hpp"

#include <cmath>
#include <string>

#include "ealpha/errors.hpp"
#include "ealpha/spectral.hpp"

namespace ealpha {

namespace {

SimState with_q(const SimState& s, SpectralField q, double t) {
  q.pin_mean();
  return SimState{std::move(q), s.alpha, s.nu, t};
}

void require_finite(const SimState& s) {
  if (!s.q_hat.all_finite()) {
    throw NumericalError("non-finite potential vorticity at t=" + std::to_string(s.t));
  }
}

SimState rk4_unchecked(const SimState& s, double dt) {
  const SpectralField k1 = rhs_vorticity(s);
  const SpectralField k2 = rhs_vorticity(with_q(s, SpectralField(s.q_hat).add_scaled(0.5 * dt, k1), s.t + 0.5 * dt));
  const SpectralField k3 = rhs_vorticity(with_q(s, SpectralField(s.q_hat).add_scaled(0.5 * dt, k2), s.t + 0.5 * dt));
  const SpectralField k4 = rhs_vorticity(with_q(s, SpectralField(s.q_hat).add_scaled(dt, k3), s.t + dt));

  SpectralField q = s.q_hat;
  q.add_scaled(dt / 6.0, k1).add_scaled(dt / 3.0, k2).add_scaled(dt / 3.0, k3).add_scaled(dt / 6.0, k4);
  return with_q(s, std::move(q), s.t + dt);
}

SimState inviscid_rk4(const SimState& s, double dt, double cfl_limit) {
  SimState inviscid{s.q_hat, s.alpha, 0.0, s.t};
  SimState out = step_rk4(inviscid, dt, cfl_limit);
  out.nu = s.nu;
  return out;
}

}  // namespace

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::rk4:
      return "rk4";
    case Scheme::lie_trotter:
      return "lie_trotter";
    case Scheme::strang:
      return "strang";
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "rk4") return Scheme::rk4;
  if (name == "lie_trotter" || name == "lie-trotter") return Scheme::lie_trotter;
  if (name == "strang") return Scheme::strang;
  throw ConfigError("unknown scheme '" + std::string(name) + "' (expected rk4, lie_trotter or strang)");
}

void StepperConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be finite and > 0");
  if (!(cfl_limit > 0.0 && cfl_limit <= 1.0)) throw ConfigError("cfl_limit must lie in (0, 1]");
}

double cfl_number(const SimState& s, double dt) {
  return velocity_from_q(s.q_hat, s.alpha).max_norm() * dt / s.q_hat.grid().spacing();
}

SimState step_rk4(const SimState& s, double dt, double cfl_limit) {
  const double cfl = cfl_number(s, dt);
  if (!(cfl <= cfl_limit)) throw StepRejected(cfl, cfl_limit, s.t);
  return rk4_unchecked(s, dt);
}

SimState diffusion_semigroup(const SimState& s, double dt) {
  SimState out{s.q_hat, s.alpha, s.nu, s.t + dt};
  if (s.nu == 0.0) return out;
  const double a2 = s.alpha * s.alpha;
  const auto k2 = s.q_hat.grid().k_squared();
  auto q = out.q_hat.coeffs();
  for (std::size_t i = 0; i < q.size(); ++i) {
    q[i] *= std::exp(-s.nu * dt * k2[i] / (1.0 + a2 * k2[i]));
  }
  out.q_hat.pin_mean();
  return out;
}

SimState step_lie_trotter(const SimState& s, double dt, double cfl_limit) {
  // Diffusion first, then transport.
  SimState diffused = diffusion_semigroup(s, dt);
  diffused.t = s.t;
  return inviscid_rk4(diffused, dt, cfl_limit);
}

SimState step_strang(const SimState& s, double dt, double cfl_limit) {
  SimState half = diffusion_semigroup(s, 0.5 * dt);
  half.t = s.t;
  SimState out = diffusion_semigroup(inviscid_rk4(half, dt, cfl_limit), 0.5 * dt);
  out.t = s.t + dt;
  return out;
}

SimState step(const SimState& s, double dt, const StepperConfig& cfg) {
  switch (cfg.scheme) {
    case Scheme::rk4:
      return step_rk4(s, dt, cfg.cfl_limit);
    case Scheme::lie_trotter:
      return step_lie_trotter(s, dt, cfg.cfl_limit);
    case Scheme::strang:
      return step_strang(s, dt, cfg.cfl_limit);
  }
  throw ConfigError("unknown scheme");
}

long step_count(double t0, double t_final, double dt) {
  const double span = t_final - t0;
  if (span <= 0.0) return 0;
  // Tolerate roundoff in span / dt so exact multiples do not gain a sliver step.
  return static_cast<long>(std::ceil(span / dt * (1.0 - 1e-12)));
}

SimState integrate(const SimState& s0, double t_final, const StepperConfig& cfg, const Observer& observer,
                   long observe_every) {
  cfg.validate();
  if (t_final < s0.t) throw ConfigError("t_final precedes the initial time");
  if (observe_every < 1) throw ConfigError("observer cadence must be >= 1");

  const long steps = step_count(s0.t, t_final, cfg.dt);
  SimState s = s0;
  if (observer) observer(s, compute_diagnostics(s, cfg.dt), 0);

  for (long i = 0; i < steps; ++i) {
    const double t_next = i + 1 == steps ? t_final : s0.t + static_cast<double>(i + 1) * cfg.dt;
    const double dt = t_next - s.t;
    s = step(s, dt, cfg);
    s.t = t_next;
    require_finite(s);
    const long count = i + 1;
    if (observer && (count % observe_every == 0 || count == steps)) {
      observer(s, compute_diagnostics(s, cfg.dt), count);
    }
  }
  return s;
}

}  // namespace ealpha
