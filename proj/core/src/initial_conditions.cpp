#include "ealpha/initial_conditions.hpp"

#include <cmath>
#include <random>

#include "ealpha/errors.hpp"
#include "ealpha/spectral.hpp"

namespace ealpha {

namespace {

SpectralField random_vorticity(const RunConfig& cfg, const GridPtr& grid) {
  SpectralField omega(grid);
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const int band = cfg.ic_band;
  // Draw once per conjugate pair, visiting the half-plane (kx > 0, or kx = 0 and ky > 0)
  // in lexicographic order.
  for (int kx = 0; kx <= band; ++kx) {
    for (int ky = -band; ky <= band; ++ky) {
      if (kx == 0 && ky <= 0) continue;
      const double re = normal(rng);
      const double im = normal(rng);
      omega.at(kx, ky) = Complex(re, im);
      omega.at(-kx, -ky) = Complex(re, -im);
    }
  }
  omega.pin_mean();

  const double energy = energy_spectral(SimState{helmholtz(omega, cfg.alpha), cfg.alpha, 0.0, 0.0});
  omega *= std::sqrt(cfg.ic_energy / energy);
  return omega;
}

// amplitude * cos(kx x + ky y) has coefficient amplitude * n^2 / 2 at +-k.
void add_cosine(SpectralField& omega, int kx, int ky, double amplitude) {
  const double c = 0.5 * amplitude * static_cast<double>(omega.grid().size());
  omega.at(kx, ky) += c;
  omega.at(-kx, -ky) += c;
}

}  // namespace

SpectralField initial_vorticity(const RunConfig& cfg, const GridPtr& grid) {
  switch (cfg.ic) {
    case InitialCondition::single_mode: {
      SpectralField omega(grid);
      add_cosine(omega, cfg.ic_kx, cfg.ic_ky, cfg.ic_amplitude);
      return omega;
    }
    case InitialCondition::taylor_green: {
      // 2 cos x cos y = cos(x + y) + cos(x - y)
      SpectralField omega(grid);
      add_cosine(omega, 1, 1, cfg.ic_amplitude);
      add_cosine(omega, 1, -1, cfg.ic_amplitude);
      return omega;
    }
    case InitialCondition::random_bandlimited:
      return random_vorticity(cfg, grid);
  }
  throw ConfigError("unknown initial condition");
}

SimState make_initial_condition(const RunConfig& cfg, const GridPtr& grid) {
  cfg.validate();
  return state_from_omega(initial_vorticity(cfg, grid), cfg.alpha, cfg.nu, 0.0);
}

SimState make_initial_condition(const RunConfig& cfg) {
  cfg.validate();
  return make_initial_condition(cfg, TorusGrid::create(cfg.n));
}

}  // namespace ealpha
