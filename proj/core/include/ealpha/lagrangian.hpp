#pragma once

#include <span>
#include <vector>

#include "ealpha/dynamics.hpp"

namespace ealpha {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Markers on an m x m lattice approximating the flow map eta(t).
/// Positions are unwrapped (winding is retained). Marker (i, j) starts at
/// (2 pi i / m, 2 pi j / m) and lives at index i * m + j.
class ParticleMap {
 public:
  /// The identity map sampled on the lattice. Throws std::invalid_argument for m < 1.
  static ParticleMap lattice(int m);

  int m() const noexcept { return m_; }
  std::span<Point> positions() noexcept { return positions_; }
  std::span<const Point> positions() const noexcept { return positions_; }
  Point& at(int i, int j) noexcept { return positions_[static_cast<std::size_t>(i) * m_ + j]; }
  const Point& at(int i, int j) const noexcept {
    return positions_[static_cast<std::size_t>(i) * m_ + j];
  }
  /// Initial lattice position of marker (i, j).
  Point reference(int i, int j) const noexcept;

  /// Displacement of the lifted map across one period of the lattice in
  /// each direction, eta(xi + 2 pi e_x) - eta(xi) and likewise for y.
  /// (2 pi, 0) and (0, 2 pi) for maps of the torus homotopic to the identity.
  Point period_x() const noexcept { return period_x_; }
  Point period_y() const noexcept { return period_y_; }
  void set_periods(Point px, Point py) noexcept {
    period_x_ = px;
    period_y_ = py;
  }

 private:
  explicit ParticleMap(int m);

  int m_;
  std::vector<Point> positions_;
  Point period_x_;
  Point period_y_;
};

/// Evaluates the trigonometric interpolant of u at arbitrary points by
/// direct summation over the resolved (dealiased) modes.
std::vector<Point> eval_velocity_at(const SpectralVector& u_hat, std::span<const Point> points);

/// One RK4 step of dx/dt = u(t, x) for every marker, with the Eulerian
/// velocity supplied at t, t + dt/2 and t + dt.
ParticleMap advect_particles(const ParticleMap& pm, const SpectralVector& u_start,
                             const SpectralVector& u_mid, const SpectralVector& u_end, double dt);

/// Same, generating the Eulerian velocity at t + dt/2 and t + dt from `s`
/// with two RK4 half steps.
ParticleMap advect_particles(const ParticleMap& pm, const SimState& s, double dt);

struct JacobianField {
  int m = 0;
  std::vector<double> det;
  std::vector<bool> degenerate;  ///< det <= 0 or non-finite

  /// max |det - 1| over non-degenerate cells.
  double max_deviation() const noexcept;
  std::size_t degenerate_count() const noexcept;
};

/// Second-order central-difference det(D eta) at every marker, crossing
/// periodic seams through the unwrapped positions. Throws
/// std::invalid_argument for m < 3.
JacobianField jacobian_determinant(const ParticleMap& pm);

}  // namespace ealpha
