#include "ealpha/verification.hpp"

#include <cmath>
#include <random>

#include "ealpha/config.hpp"
#include "ealpha/dynamics.hpp"
#include "ealpha/initial_conditions.hpp"
#include "ealpha/integrators.hpp"
#include "ealpha/spectral.hpp"

namespace ealpha {

namespace {

CheckResult at_most(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, std::isfinite(value) && value <= threshold};
}

double relative_l2(const SpectralField& a, const SpectralField& b) {
  const double scale = l2_norm(b);
  return scale == 0.0 ? l2_norm(a) : l2_norm(a - b) / scale;
}

SimState random_state(const GridPtr& grid, double alpha, std::uint64_t seed) {
  RunConfig cfg;
  cfg.n = grid->n();
  cfg.alpha = alpha;
  cfg.seed = seed;
  return make_initial_condition(cfg, grid);
}

}  // namespace

std::vector<CheckResult> run_invariant_checks(unsigned seed) {
  std::vector<CheckResult> out;
  const GridPtr grid = TorusGrid::create(32);

  {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    PhysicalField f(grid);
    for (double& v : f.values()) v = uniform(rng);
    const SpectralField F = forward_transform(f);
    const PhysicalField back = inverse_transform(F);
    double err = 0.0;
    for (std::size_t i = 0; i < f.values().size(); ++i) err = std::max(err, std::abs(back.values()[i] - f.values()[i]));
    out.push_back(at_most("transform round trip (max rel)", err / f.max_abs(), 1e-12));

    double grid_sum = 0.0;
    for (double v : f.values()) grid_sum += v * v;
    double mode_sum = 0.0;
    for (const Complex& c : F.coeffs()) mode_sum += std::norm(c);
    mode_sum /= static_cast<double>(grid->size());
    out.push_back(at_most("Parseval identity (rel)", std::abs(grid_sum - mode_sum) / grid_sum, 1e-12));

    for (double alpha : {0.0, 0.1, 1.0, 10.0}) {
      const SpectralField round = inverse_helmholtz(helmholtz(F, alpha), alpha);
      out.push_back(at_most("helmholtz inverse pair alpha=" + std::to_string(alpha), relative_l2(round, F), 1e-13));
    }
  }

  for (double alpha : {0.0, 0.25, 1.0}) {
    const SimState s = random_state(grid, alpha, seed + 11);
    const SpectralVector du = rhs_velocity(s);
    const SpectralField lhs = curl(SpectralVector{helmholtz(du.x, alpha), helmholtz(du.y, alpha)});
    const SpectralField rhs = rhs_vorticity(s);
    out.push_back(at_most("velocity/vorticity form agreement alpha=" + std::to_string(alpha), relative_l2(lhs, rhs),
                          1e-10));

    const SpectralVector ad = ad_star_spectral(s);
    const double div = inverse_transform(divergence(ad)).max_abs();
    const double mag = inverse_transform(ad).max_norm();
    out.push_back(at_most("ad* divergence alpha=" + std::to_string(alpha), div / mag, 1e-10));

    const SpectralField dq = rhs_vorticity(s);
    const double rate = std::abs(integral_product(s.q_hat, dq)) / (l2_norm(s.q_hat) * l2_norm(dq));
    out.push_back(at_most("casimir2 rate <q, dq/dt> alpha=" + std::to_string(alpha), rate, 1e-10));

    const SpectralVector u = velocity_spectral_from_q(s.q_hat, alpha);
    const double power = integral_product(helmholtz(u.x, alpha), du.x) + integral_product(helmholtz(u.y, alpha), du.y);
    const double scale = std::sqrt(2.0 * energy_spectral(s)) *
                         std::sqrt(integral_product(du.x, helmholtz(du.x, alpha)) + integral_product(du.y, helmholtz(du.y, alpha)));
    out.push_back(at_most("energy rate <v, du/dt> alpha=" + std::to_string(alpha), std::abs(power) / scale, 1e-10));
  }

  {
    RunConfig cfg;
    cfg.n = 32;
    cfg.ic = InitialCondition::single_mode;
    cfg.ic_kx = 2;
    cfg.ic_ky = 0;
    cfg.alpha = 0.5;
    cfg.nu = 0.01;
    const SimState s0 = make_initial_condition(cfg);
    const double expected = std::exp(-0.02);
    const double amplitude0 = omega_from_q(s0.q_hat, cfg.alpha).at(2, 0).real();
    for (Scheme scheme : {Scheme::rk4, Scheme::lie_trotter}) {
      const SimState s1 = integrate(s0, 1.0, StepperConfig{0.01, scheme, 0.5});
      const double amplitude = omega_from_q(s1.q_hat, cfg.alpha).at(2, 0).real() / amplitude0;
      out.push_back(at_most("single-mode decay " + std::string(to_string(scheme)),
                            std::abs(amplitude - expected) / expected, scheme == Scheme::rk4 ? 1e-9 : 1e-12));
    }
  }
  return out;
}

}  // namespace ealpha
