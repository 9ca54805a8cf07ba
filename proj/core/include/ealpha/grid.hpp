#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <new>
#include <span>
#include <vector>

namespace ealpha {

using Complex = std::complex<double>;

/// Cache-line aligned allocator so every field buffer satisfies the
/// alignment FFTW assumed when the plans were created.
template <class T>
struct AlignedAllocator {
  using value_type = T;
  static constexpr std::align_val_t kAlignment{64};

  AlignedAllocator() noexcept = default;
  template <class U>
  AlignedAllocator(const AlignedAllocator<U>&) noexcept {}

  T* allocate(std::size_t count) {
    return static_cast<T*>(::operator new(count * sizeof(T), kAlignment));
  }
  void deallocate(T* p, std::size_t) noexcept { ::operator delete(p, kAlignment); }

  template <class U>
  bool operator==(const AlignedAllocator<U>&) const noexcept {
    return true;
  }
};

template <class T>
using AlignedVector = std::vector<T, AlignedAllocator<T>>;

/// Uniform n x n periodic grid on [0, 2pi)^2.
///
/// Physical samples and Fourier modes share the flat index `ix * n + iy`
/// (row-major, y fastest). Mode index i maps to the integer wavenumber
/// i for i < n/2 and i - n otherwise, so each axis covers -n/2 .. n/2-1.
///
/// Transform normalization: forward is the unnormalized DFT
/// F(k) = sum_x f(x) e^{-i k.x}; inverse carries the 1/n^2 factor, so
/// sum_x f^2 = (1/n^2) sum_k |F(k)|^2 and cos(x) has F(+-1, 0) = n^2 / 2.
///
/// The dealias mask keeps a mode iff 3|kx| < n and 3|ky| < n (2/3 rule);
/// Nyquist modes always fall outside it.
class TorusGrid {
 public:
  /// Throws std::invalid_argument unless n >= 8 and n is even.
  static std::shared_ptr<const TorusGrid> create(int n);

  ~TorusGrid();
  TorusGrid(const TorusGrid&) = delete;
  TorusGrid& operator=(const TorusGrid&) = delete;

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(n_) * n_; }
  double spacing() const noexcept { return spacing_; }
  double coordinate(int i) const noexcept { return spacing_ * i; }

  int wavenumber(int axis_index) const noexcept {
    return axis_index < n_ / 2 ? axis_index : axis_index - n_;
  }
  int kx(std::size_t mode) const noexcept { return wavenumber(static_cast<int>(mode / n_)); }
  int ky(std::size_t mode) const noexcept { return wavenumber(static_cast<int>(mode % n_)); }
  double k_squared(std::size_t mode) const noexcept { return k2_[mode]; }
  std::span<const double> k_squared() const noexcept { return k2_; }

  /// Wavenumber used for first derivatives; zero on the Nyquist line.
  double derivative_kx(std::size_t mode) const noexcept { return dkx_[mode]; }
  double derivative_ky(std::size_t mode) const noexcept { return dky_[mode]; }
  std::span<const double> derivative_kx() const noexcept { return dkx_; }
  std::span<const double> derivative_ky() const noexcept { return dky_; }

  bool resolved(std::size_t mode) const noexcept { return mask_[mode] != 0; }
  /// Largest |k| per axis kept by the dealias mask.
  int max_resolved_wavenumber() const noexcept { return kmax_; }

  /// Flat index of the mode at -k.
  std::size_t conjugate(std::size_t mode) const noexcept;
  /// Flat index of the mode with the given wavenumbers (wrapped mod n).
  std::size_t mode_index(int kx, int ky) const noexcept;

  /// Real-to-complex transform into full (Hermitian-exact) storage.
  void forward(std::span<const double> values, std::span<Complex> coeffs) const;
  /// Complex-to-real transform; `coeffs` must already be Hermitian.
  void inverse(std::span<const Complex> coeffs, std::span<double> values) const;

 private:
  explicit TorusGrid(int n);

  int n_;
  int kmax_;
  double spacing_;
  std::vector<double> k2_;
  std::vector<double> dkx_;
  std::vector<double> dky_;
  std::vector<unsigned char> mask_;
  struct Plans;
  std::unique_ptr<Plans> plans_;
};

using GridPtr = std::shared_ptr<const TorusGrid>;

}  // namespace ealpha
