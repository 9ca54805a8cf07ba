#include "ealpha/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdint>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ealpha/errors.hpp"

namespace ealpha {

namespace {

// FFTW's planner is not thread-safe; executing existing plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

bool aligned(const void* p) {
  return reinterpret_cast<std::uintptr_t>(p) % static_cast<std::uintptr_t>(AlignedAllocator<double>::kAlignment) == 0;
}

}  // namespace

StepRejected::StepRejected(double cfl, double limit, double time)
    : NumericalError("step rejected at t=" + std::to_string(time) + ": CFL " +
                     std::to_string(cfl) + " exceeds limit " + std::to_string(limit)),
      cfl_(cfl),
      limit_(limit),
      time_(time) {}

struct TorusGrid::Plans {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
};

std::shared_ptr<const TorusGrid> TorusGrid::create(int n) {
  if (n < 8 || n % 2 != 0) {
    throw std::invalid_argument("grid size must be even and >= 8, got " + std::to_string(n));
  }
  return std::shared_ptr<const TorusGrid>(new TorusGrid(n));
}

TorusGrid::TorusGrid(int n)
    : n_(n),
      kmax_((n - 1) / 3),
      spacing_(2.0 * std::numbers::pi / n),
      k2_(static_cast<std::size_t>(n) * n),
      dkx_(k2_.size()),
      dky_(k2_.size()),
      mask_(static_cast<std::size_t>(n) * n),
      plans_(std::make_unique<Plans>()) {
  for (std::size_t mode = 0; mode < size(); ++mode) {
    const int a = kx(mode);
    const int b = ky(mode);
    k2_[mode] = static_cast<double>(a) * a + static_cast<double>(b) * b;
    mask_[mode] = (3 * std::abs(a) < n_ && 3 * std::abs(b) < n_) ? 1 : 0;
    // The Nyquist line has no real first derivative.
    dkx_[mode] = 2 * a == -n_ ? 0.0 : a;
    dky_[mode] = 2 * b == -n_ ? 0.0 : b;
  }

  const std::size_t half = static_cast<std::size_t>(n_) * (n_ / 2 + 1);
  AlignedVector<double> real(size());
  AlignedVector<Complex> spec(half);
  auto* cplx = reinterpret_cast<fftw_complex*>(spec.data());

  std::lock_guard lock(planner_mutex());
  plans_->r2c = fftw_plan_dft_r2c_2d(n_, n_, real.data(), cplx, FFTW_ESTIMATE);
  plans_->c2r = fftw_plan_dft_c2r_2d(n_, n_, cplx, real.data(), FFTW_ESTIMATE);
  if (plans_->r2c == nullptr || plans_->c2r == nullptr) {
    throw std::runtime_error("FFTW plan creation failed");
  }
}

TorusGrid::~TorusGrid() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plans_->r2c);
  fftw_destroy_plan(plans_->c2r);
}

std::size_t TorusGrid::conjugate(std::size_t mode) const noexcept {
  const std::size_t n = static_cast<std::size_t>(n_);
  const std::size_t ix = mode / n;
  const std::size_t iy = mode % n;
  return ((n - ix) % n) * n + (n - iy) % n;
}

std::size_t TorusGrid::mode_index(int kx, int ky) const noexcept {
  const int ix = ((kx % n_) + n_) % n_;
  const int iy = ((ky % n_) + n_) % n_;
  return static_cast<std::size_t>(ix) * n_ + iy;
}

void TorusGrid::forward(std::span<const double> values, std::span<Complex> coeffs) const {
  const std::size_t n = static_cast<std::size_t>(n_);
  const std::size_t nh = n / 2 + 1;
  AlignedVector<Complex> half(n * nh);
  // Out-of-place r2c leaves its input intact; copy only to restore alignment.
  if (aligned(values.data())) {
    fftw_execute_dft_r2c(plans_->r2c, const_cast<double*>(values.data()), reinterpret_cast<fftw_complex*>(half.data()));
  } else {
    AlignedVector<double> in(values.begin(), values.end());
    fftw_execute_dft_r2c(plans_->r2c, in.data(), reinterpret_cast<fftw_complex*>(half.data()));
  }

  // Expand to full storage. Columns iy = 0 and iy = n/2 are their own
  // mirror images, so their lower halves are copied as exact conjugates.
  for (std::size_t ix = 0; ix < n; ++ix) {
    const std::size_t cx = (n - ix) % n;
    for (std::size_t iy = 0; iy < n; ++iy) {
      Complex value;
      if (iy == 0 || iy == n / 2) {
        value = ix <= n / 2 ? half[ix * nh + iy] : std::conj(half[cx * nh + iy]);
        if (ix == 0 || ix == n / 2) value.imag(0.0);
      } else if (iy < n / 2) {
        value = half[ix * nh + iy];
      } else {
        value = std::conj(half[cx * nh + (n - iy)]);
      }
      coeffs[ix * n + iy] = value;
    }
  }
}

void TorusGrid::inverse(std::span<const Complex> coeffs, std::span<double> values) const {
  const std::size_t n = static_cast<std::size_t>(n_);
  const std::size_t nh = n / 2 + 1;
  AlignedVector<Complex> half(n * nh);
  for (std::size_t ix = 0; ix < n; ++ix) {
    for (std::size_t iy = 0; iy < nh; ++iy) half[ix * nh + iy] = coeffs[ix * n + iy];
  }
  const double scale = 1.0 / static_cast<double>(size());
  if (aligned(values.data())) {
    fftw_execute_dft_c2r(plans_->c2r, reinterpret_cast<fftw_complex*>(half.data()), values.data());
    for (double& v : values) v *= scale;
  } else {
    AlignedVector<double> out(size());
    fftw_execute_dft_c2r(plans_->c2r, reinterpret_cast<fftw_complex*>(half.data()), out.data());
    for (std::size_t i = 0; i < size(); ++i) values[i] = out[i] * scale;
  }
}

}  // namespace ealpha
