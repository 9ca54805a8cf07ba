#pragma once

#include <functional>
#include <string_view>

#include "ealpha/dynamics.hpp"

namespace ealpha {

enum class Scheme { rk4, lie_trotter, strang };

std::string_view to_string(Scheme scheme);
/// Throws ConfigError on an unknown name.
Scheme parse_scheme(std::string_view name);

struct StepperConfig {
  double dt = 1e-3;
  Scheme scheme = Scheme::rk4;
  double cfl_limit = 0.5;

  /// Throws ConfigError unless dt > 0 and cfl_limit in (0, 1].
  void validate() const;
};

/// max|u| * dt / h for the velocity of `s`.
double cfl_number(const SimState& s, double dt);

/// Classical four-stage Runge-Kutta on rhs_vorticity. Throws StepRejected
/// when the CFL number at the start of the step exceeds `cfl_limit`.
SimState step_rk4(const SimState& s, double dt, double cfl_limit = 0.5);

/// Exact flow of dq/dt = nu Lap (1 - alpha^2 Lap)^{-1} q: each mode is
/// multiplied by exp(-nu dt k^2 / (1 + alpha^2 k^2)).
SimState diffusion_semigroup(const SimState& s, double dt);

/// Product-formula step: exact diffusion over dt, then an inviscid RK4
/// step over dt. First order in dt.
SimState step_lie_trotter(const SimState& s, double dt, double cfl_limit = 0.5);

/// Symmetric product formula: half diffusion, inviscid RK4, half diffusion.
SimState step_strang(const SimState& s, double dt, double cfl_limit = 0.5);

SimState step(const SimState& s, double dt, const StepperConfig& cfg);

/// Called with the current state, its diagnostics and the step count.
using Observer = std::function<void(const SimState&, const Diagnostics&, long)>;

/// Steps from s0.t to t_final; the last step is shortened to land exactly
/// on t_final. The observer sees step 0, every `observe_every`-th step and
/// the final state. Step rejections propagate; non-finite states raise
/// NumericalError with the time of failure.
SimState integrate(const SimState& s0, double t_final, const StepperConfig& cfg,
                   const Observer& observer = {}, long observe_every = 1);

/// Number of steps integrate() takes for the interval.
long step_count(double t0, double t_final, double dt);

}  // namespace ealpha
