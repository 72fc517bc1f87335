#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "ddwave/grid.hpp"

namespace ddwave {

using Complex = std::complex<double>;
using Spectrum = std::vector<Complex>;

/// Real-to-complex FFT pair of fixed length backed by FFTW.
///
/// forward() is unnormalized; inverse() divides by N so that
/// inverse(forward(f)) == f. Owns its plans and aligned buffers; an
/// instance must not be used from two threads at once.
class FourierTransform {
 public:
  explicit FourierTransform(std::size_t n);
  ~FourierTransform();
  FourierTransform(FourierTransform&&) noexcept;
  FourierTransform& operator=(FourierTransform&&) noexcept;
  FourierTransform(const FourierTransform&) = delete;
  FourierTransform& operator=(const FourierTransform&) = delete;

  std::size_t size() const noexcept;
  std::size_t spectrum_size() const noexcept { return size() / 2 + 1; }

  void forward(std::span<const double> in, std::span<Complex> out);
  void inverse(std::span<const Complex> in, std::span<double> out);
  Spectrum forward(std::span<const double> in);
  std::vector<double> inverse(std::span<const Complex> in);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Per-thread cached transform of length n.
FourierTransform& transform_for(std::size_t n);

/// d^order f / dx^order by multiplication with (i xi)^order. The Nyquist
/// coefficient is dropped for odd orders.
std::vector<double> spectral_derivative(std::span<const double> f, const Grid& grid, int order);

/// Rectangle rule, which is the trapezoidal rule on a periodic grid.
double integral(std::span<const double> f, const Grid& grid);

/// Multiplicity of half-spectrum index k in the full spectrum (1 or 2).
inline double spectral_multiplicity(std::size_t k, std::size_t n) noexcept {
  return (k == 0 || k == n / 2) ? 1.0 : 2.0;
}

/// ||f||_{L^2}^2 + ||f_x||_{L^2}^2 from the half spectrum of f (Parseval).
double h1_norm_squared(std::span<const Complex> spectrum, const Grid& grid);

}  // namespace ddwave
