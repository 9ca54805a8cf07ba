#pragma once

#include "ealpha/config.hpp"
#include "ealpha/dynamics.hpp"

namespace ealpha {

/// Vorticity spectrum of the configured initial condition:
///   single_mode         amplitude * cos(kx x + ky y)
///   taylor_green        2 amplitude cos x cos y
///   random_bandlimited  unit-normal real and imaginary parts on
///                       1 <= |k|_inf <= band, Hermitian-symmetrized, rescaled
///                       so the energy at cfg.alpha equals cfg.ic_energy.
/// Draws use std::mt19937_64 seeded with cfg.seed in a fixed mode order.
SpectralField initial_vorticity(const RunConfig& cfg, const GridPtr& grid);

/// State with q = helmholtz(omega, alpha) at t = 0.
SimState make_initial_condition(const RunConfig& cfg);
SimState make_initial_condition(const RunConfig& cfg, const GridPtr& grid);

}  // namespace ealpha
