#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ealpha/dynamics.hpp"
#include "ealpha/lagrangian.hpp"
#include "ealpha/spectral.hpp"
#include "test_support.hpp"

namespace ealpha {
namespace {

using testing::random_state;

constexpr double kPi = std::numbers::pi;

SimState single_shell(const GridPtr& g, double alpha) {
  const SpectralField omega = forward_transform(PhysicalField::sample(g, [](double x, double) { return std::cos(2 * x); }));
  return state_from_omega(omega, alpha, 0.0);
}

// Brute-force interpolant: real part of (1/n^2) sum over every stored mode.
Point direct_sum(const SpectralVector& u, Point p) {
  const TorusGrid& g = u.x.grid();
  Complex sx{}, sy{};
  for (std::size_t mode = 0; mode < g.size(); ++mode) {
    const Complex phase = std::polar(1.0, g.kx(mode) * p.x + g.ky(mode) * p.y);
    sx += u.x[mode] * phase;
    sy += u.y[mode] * phase;
  }
  const double scale = 1.0 / static_cast<double>(g.size());
  return {sx.real() * scale, sy.real() * scale};
}

SpectralVector constant_velocity(const GridPtr& g, double cx, double cy) {
  SpectralVector u{SpectralField(g), SpectralField(g)};
  u.x[0] = cx * static_cast<double>(g->size());
  u.y[0] = cy * static_cast<double>(g->size());
  return u;
}

TEST(ParticleMap, LatticeLayout) {
  const ParticleMap pm = ParticleMap::lattice(4);
  EXPECT_EQ(pm.m(), 4);
  EXPECT_EQ(pm.positions().size(), 16u);
  EXPECT_DOUBLE_EQ(pm.at(1, 3).x, kPi / 2);
  EXPECT_DOUBLE_EQ(pm.at(1, 3).y, 3 * kPi / 2);
  EXPECT_EQ(&pm.at(1, 3), &pm.positions()[1 * 4 + 3]);
  EXPECT_DOUBLE_EQ(pm.period_x().x, 2 * kPi);
  EXPECT_EQ(pm.period_x().y, 0.0);
  EXPECT_THROW(ParticleMap::lattice(0), std::invalid_argument);
}

TEST(EvalVelocity, SingleShellClosedForm) {
  const GridPtr g = TorusGrid::create(32);
  const SimState s = single_shell(g, 0.3);
  const SpectralVector u = velocity_spectral_from_q(s.q_hat, s.alpha);
  const Point p[] = {{kPi / 4, 0.0}, {kPi / 4, 1.234}, {0.1, 2.0}, {kPi / 2, 0.5}};
  const auto v = eval_velocity_at(u, p);
  EXPECT_NEAR(v[0].x, 0.0, 1e-15);
  EXPECT_NEAR(v[0].y, 0.5, 1e-14);
  EXPECT_NEAR(v[1].y, 0.5, 1e-14);
  EXPECT_NEAR(v[2].y, std::sin(0.2) / 2, 1e-14);
  EXPECT_NEAR(v[3].y, 0.0, 1e-14);
}

TEST(EvalVelocity, ConstantField) {
  const GridPtr g = TorusGrid::create(16);
  const Point p[] = {{0.3, 4.0}, {-7.0, 100.0}};
  for (const Point& v : eval_velocity_at(constant_velocity(g, 1.5, -2.0), p)) {
    EXPECT_NEAR(v.x, 1.5, 1e-15);
    EXPECT_NEAR(v.y, -2.0, 1e-15);
  }
}

TEST(EvalVelocity, MatchesGridValuesAtNodes) {
  const GridPtr g = TorusGrid::create(24);
  const SimState s = random_state(g, 0.25, 3, 6);
  const SpectralVector u = velocity_spectral_from_q(s.q_hat, s.alpha);
  const VectorField grid_u = inverse_transform(u);
  std::vector<Point> nodes;
  for (int ix = 0; ix < g->n(); ++ix) {
    for (int iy = 0; iy < g->n(); ++iy) nodes.push_back({g->coordinate(ix), g->coordinate(iy)});
  }
  const auto v = eval_velocity_at(u, nodes);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    EXPECT_NEAR(v[i].x, grid_u.x.values()[i], 1e-13);
    EXPECT_NEAR(v[i].y, grid_u.y.values()[i], 1e-13);
  }
}

TEST(EvalVelocity, MatchesDirectSummationOffGrid) {
  const GridPtr g = TorusGrid::create(24);
  const SimState s = random_state(g, 0.5, 5, 7);
  const SpectralVector u = velocity_spectral_from_q(dealias(s.q_hat), s.alpha);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  std::vector<Point> pts(50);
  for (Point& p : pts) p = {coord(rng), coord(rng)};
  const auto v = eval_velocity_at(u, pts);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point ref = direct_sum(u, pts[i]);
    EXPECT_NEAR(v[i].x, ref.x, 1e-12);
    EXPECT_NEAR(v[i].y, ref.y, 1e-12);
  }
}

TEST(AdvectParticles, ZeroVelocityLeavesMarkersInPlace) {
  const GridPtr g = TorusGrid::create(16);
  const ParticleMap pm = ParticleMap::lattice(8);
  const SimState zero{SpectralField(g), 0.2, 0.0, 0.0};
  const ParticleMap out = advect_particles(pm, zero, 0.1);
  for (std::size_t i = 0; i < pm.positions().size(); ++i) {
    EXPECT_EQ(out.positions()[i].x, pm.positions()[i].x);
    EXPECT_EQ(out.positions()[i].y, pm.positions()[i].y);
  }
}

TEST(AdvectParticles, UsesSimpsonWeightsInTime) {
  const GridPtr g = TorusGrid::create(16);
  const ParticleMap pm = ParticleMap::lattice(3);
  const double dt = 0.25;
  const ParticleMap out = advect_particles(pm, constant_velocity(g, 1, 0), constant_velocity(g, 2, 1),
                                           constant_velocity(g, 3, -1), dt);
  for (std::size_t i = 0; i < pm.positions().size(); ++i) {
    EXPECT_NEAR(out.positions()[i].x - pm.positions()[i].x, dt * (1 + 8 + 3) / 6.0, 1e-15);
    EXPECT_NEAR(out.positions()[i].y - pm.positions()[i].y, dt * (0 + 4 - 1) / 6.0, 1e-15);
  }
}

TEST(AdvectParticles, FollowsSteadyShearCharacteristics) {
  const GridPtr g = TorusGrid::create(32);
  SimState s = single_shell(g, 0.25);
  ParticleMap pm = ParticleMap::lattice(8);
  const double dt = 0.05;
  for (int k = 0; k < 20; ++k) {
    pm = advect_particles(pm, s, dt);
    s = step_rk4(s, dt);
  }
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const Point ref = pm.reference(i, j);
      EXPECT_NEAR(pm.at(i, j).x, ref.x, 1e-13);
      EXPECT_NEAR(pm.at(i, j).y, ref.y + std::sin(2 * ref.x) / 2, 1e-13);
    }
  }
  const Point start[] = {{kPi / 4, 0.0}};
  EXPECT_NEAR(eval_velocity_at(velocity_spectral_from_q(s.q_hat, s.alpha), start)[0].y, 0.5, 1e-13);
}

TEST(Jacobian, IdentityAndRigidTranslation) {
  ParticleMap pm = ParticleMap::lattice(6);
  JacobianField jac = jacobian_determinant(pm);
  EXPECT_EQ(jac.m, 6);
  EXPECT_LT(jac.max_deviation(), 1e-14);
  EXPECT_EQ(jac.degenerate_count(), 0u);
  for (Point& p : pm.positions()) {
    p.x += 17.0;
    p.y -= 3.0;
  }
  EXPECT_LT(jacobian_determinant(pm).max_deviation(), 1e-13);
}

TEST(Jacobian, AffineShearAcrossSeams) {
  const int m = 10;
  ParticleMap pm = ParticleMap::lattice(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const Point r = pm.reference(i, j);
      pm.at(i, j) = {r.x + 0.3 * r.y, r.y};
    }
  }
  pm.set_periods({2 * kPi, 0.0}, {0.3 * 2 * kPi, 2 * kPi});
  EXPECT_LT(jacobian_determinant(pm).max_deviation(), 1e-13);
}

TEST(Jacobian, AffineStretchIsUnimodular) {
  const int m = 8;
  ParticleMap pm = ParticleMap::lattice(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const Point r = pm.reference(i, j);
      pm.at(i, j) = {2 * r.x, r.y / 2};
    }
  }
  pm.set_periods({4 * kPi, 0.0}, {0.0, kPi});
  const JacobianField jac = jacobian_determinant(pm);
  EXPECT_LT(jac.max_deviation(), 1e-14);
  EXPECT_EQ(jac.degenerate_count(), 0u);
}

TEST(Jacobian, PeriodicShearIsExactlyAreaPreserving) {
  const int m = 16;
  ParticleMap pm = ParticleMap::lattice(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const Point r = pm.reference(i, j);
      pm.at(i, j) = {r.x + 0.7 * std::sin(r.y), r.y};
    }
  }
  // x is linear along i and y is untouched, so the stencil is exact.
  EXPECT_LT(jacobian_determinant(pm).max_deviation(), 1e-14);
}

TEST(Jacobian, SecondOrderForCompressibleMap) {
  const double eps = 0.3;
  auto deviation = [&](int m) {
    ParticleMap pm = ParticleMap::lattice(m);
    double worst = 0.0;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const Point r = pm.reference(i, j);
        pm.at(i, j) = {r.x + eps * std::sin(r.x), r.y};
      }
    }
    const JacobianField jac = jacobian_determinant(pm);
    for (int i = 0; i < m; ++i) {
      const double exact = 1 + eps * std::cos(pm.reference(i, 0).x);
      for (int j = 0; j < m; ++j) worst = std::max(worst, std::abs(jac.det[i * m + j] - exact));
    }
    return worst;
  };
  const double e16 = deviation(16);
  const double e32 = deviation(32);
  EXPECT_NEAR(e16 / e32, 4.0, 0.1);
}

TEST(Jacobian, FlagsFoldedCells) {
  ParticleMap pm = ParticleMap::lattice(5);
  for (Point& p : pm.positions()) p.x = -p.x;
  pm.set_periods({-2 * kPi, 0.0}, {0.0, 2 * kPi});
  const JacobianField jac = jacobian_determinant(pm);
  EXPECT_EQ(jac.degenerate_count(), 25u);
  EXPECT_EQ(jac.max_deviation(), 0.0);
}

TEST(Jacobian, RejectsTinyLattices) {
  EXPECT_THROW(jacobian_determinant(ParticleMap::lattice(2)), std::invalid_argument);
}

}  // namespace
}  // namespace ealpha
