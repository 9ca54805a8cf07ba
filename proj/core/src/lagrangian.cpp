#include "ealpha/lagrangian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ealpha/integrators.hpp"
#include "ealpha/spectral.hpp"

namespace ealpha {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Resolved modes with kx >= 0, laid out [kx][ky + K], scaled so that
// f(x) = Re sum c e^{i k.x}. The half-plane weights fold in the conjugate modes.
struct ModeTable {
  int kmax = 0;
  int width = 0;
  std::vector<double> re_x, im_x, re_y, im_y;

  ModeTable(const SpectralField& fx, const SpectralField& fy) {
    const TorusGrid& grid = fx.grid();
    kmax = grid.max_resolved_wavenumber();
    width = 2 * kmax + 1;
    const std::size_t count = static_cast<std::size_t>(kmax + 1) * width;
    re_x.assign(count, 0.0);
    im_x.assign(count, 0.0);
    re_y.assign(count, 0.0);
    im_y.assign(count, 0.0);
    const double inv_n2 = 1.0 / static_cast<double>(grid.size());
    for (int kx = 0; kx <= kmax; ++kx) {
      for (int ky = -kmax; ky <= kmax; ++ky) {
        double weight = 2.0;
        if (kx == 0 && ky < 0) weight = 0.0;
        if (kx == 0 && ky == 0) weight = 1.0;
        const std::size_t slot = static_cast<std::size_t>(kx) * width + (ky + kmax);
        const Complex cx = weight * inv_n2 * fx.at(kx, ky);
        const Complex cy = weight * inv_n2 * fy.at(kx, ky);
        re_x[slot] = cx.real();
        im_x[slot] = cx.imag();
        re_y[slot] = cy.real();
        im_y[slot] = cy.imag();
      }
    }
  }

  Point evaluate(Point p, std::vector<double>& cos_y, std::vector<double>& sin_y) const {
    for (int j = 0; j < width; ++j) {
      const double phase = static_cast<double>(j - kmax) * p.y;
      cos_y[j] = std::cos(phase);
      sin_y[j] = std::sin(phase);
    }
    double vx = 0.0;
    double vy = 0.0;
    for (int kx = 0; kx <= kmax; ++kx) {
      const std::size_t row = static_cast<std::size_t>(kx) * width;
      double sxr = 0.0, sxi = 0.0, syr = 0.0, syi = 0.0;
      for (int j = 0; j < width; ++j) {
        const double c = cos_y[j];
        const double s = sin_y[j];
        sxr += re_x[row + j] * c - im_x[row + j] * s;
        sxi += re_x[row + j] * s + im_x[row + j] * c;
        syr += re_y[row + j] * c - im_y[row + j] * s;
        syi += re_y[row + j] * s + im_y[row + j] * c;
      }
      const double phase = static_cast<double>(kx) * p.x;
      const double c = std::cos(phase);
      const double s = std::sin(phase);
      vx += c * sxr - s * sxi;
      vy += c * syr - s * syi;
    }
    return {vx, vy};
  }
};

std::vector<Point> shifted(std::span<const Point> base, std::span<const Point> slope, double h) {
  std::vector<Point> out(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) out[i] = {base[i].x + h * slope[i].x, base[i].y + h * slope[i].y};
  return out;
}

}  // namespace

ParticleMap::ParticleMap(int m)
    : m_(m), positions_(static_cast<std::size_t>(m) * m), period_x_{kTwoPi, 0.0}, period_y_{0.0, kTwoPi} {}

ParticleMap ParticleMap::lattice(int m) {
  if (m < 1) throw std::invalid_argument("marker lattice needs m >= 1");
  ParticleMap pm(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) pm.at(i, j) = pm.reference(i, j);
  }
  return pm;
}

Point ParticleMap::reference(int i, int j) const noexcept {
  return {kTwoPi * i / m_, kTwoPi * j / m_};
}

std::vector<Point> eval_velocity_at(const SpectralVector& u_hat, std::span<const Point> points) {
  const ModeTable table(u_hat.x, u_hat.y);
  std::vector<double> cos_y(table.width);
  std::vector<double> sin_y(table.width);
  std::vector<Point> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = table.evaluate(points[i], cos_y, sin_y);
  return out;
}

ParticleMap advect_particles(const ParticleMap& pm, const SpectralVector& u_start, const SpectralVector& u_mid,
                             const SpectralVector& u_end, double dt) {
  const auto x0 = pm.positions();
  const std::vector<Point> k1 = eval_velocity_at(u_start, x0);
  const std::vector<Point> k2 = eval_velocity_at(u_mid, shifted(x0, k1, 0.5 * dt));
  const std::vector<Point> k3 = eval_velocity_at(u_mid, shifted(x0, k2, 0.5 * dt));
  const std::vector<Point> k4 = eval_velocity_at(u_end, shifted(x0, k3, dt));

  ParticleMap out = pm;
  auto x = out.positions();
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i].x += dt / 6.0 * (k1[i].x + 2.0 * k2[i].x + 2.0 * k3[i].x + k4[i].x);
    x[i].y += dt / 6.0 * (k1[i].y + 2.0 * k2[i].y + 2.0 * k3[i].y + k4[i].y);
  }
  return out;
}

ParticleMap advect_particles(const ParticleMap& pm, const SimState& s, double dt) {
  const SimState mid = step_rk4(s, 0.5 * dt, 1.0);
  const SimState end = step_rk4(mid, 0.5 * dt, 1.0);
  return advect_particles(pm, velocity_spectral_from_q(dealias(s.q_hat), s.alpha),
                          velocity_spectral_from_q(dealias(mid.q_hat), s.alpha),
                          velocity_spectral_from_q(dealias(end.q_hat), s.alpha), dt);
}

double JacobianField::max_deviation() const noexcept {
  double worst = 0.0;
  for (std::size_t i = 0; i < det.size(); ++i) {
    if (!degenerate[i]) worst = std::max(worst, std::abs(det[i] - 1.0));
  }
  return worst;
}

std::size_t JacobianField::degenerate_count() const noexcept {
  std::size_t count = 0;
  for (bool d : degenerate) count += d ? 1 : 0;
  return count;
}

JacobianField jacobian_determinant(const ParticleMap& pm) {
  const int m = pm.m();
  if (m < 3) throw std::invalid_argument("jacobian_determinant needs m >= 3");
  const double two_h = 2.0 * kTwoPi / m;
  const Point px = pm.period_x();
  const Point py = pm.period_y();

  JacobianField out;
  out.m = m;
  out.det.resize(static_cast<std::size_t>(m) * m);
  out.degenerate.resize(out.det.size());
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Point ip = pm.at((i + 1) % m, j);
      Point im = pm.at((i + m - 1) % m, j);
      if (i == m - 1) ip = {ip.x + px.x, ip.y + px.y};
      if (i == 0) im = {im.x - px.x, im.y - px.y};
      Point jp = pm.at(i, (j + 1) % m);
      Point jm = pm.at(i, (j + m - 1) % m);
      if (j == m - 1) jp = {jp.x + py.x, jp.y + py.y};
      if (j == 0) jm = {jm.x - py.x, jm.y - py.y};

      const double dxdi = (ip.x - im.x) / two_h;
      const double dydi = (ip.y - im.y) / two_h;
      const double dxdj = (jp.x - jm.x) / two_h;
      const double dydj = (jp.y - jm.y) / two_h;
      const double det = dxdi * dydj - dxdj * dydi;
      const std::size_t idx = static_cast<std::size_t>(i) * m + j;
      out.det[idx] = det;
      out.degenerate[idx] = !std::isfinite(det) || det <= 0.0;
    }
  }
  return out;
}

}  // namespace ealpha
