#include "ddwave/fourier.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>

#include "ddwave/errors.hpp"

namespace ddwave {

namespace {
// The FFTW planner is not re-entrant; execution on distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

struct FourierTransform::Impl {
  std::size_t n = 0;
  double* real = nullptr;
  fftw_complex* spec = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan inv = nullptr;

  explicit Impl(std::size_t size) : n(size) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    real = fftw_alloc_real(n);
    spec = fftw_alloc_complex(n / 2 + 1);
    fwd = fftw_plan_dft_r2c_1d(static_cast<int>(n), real, spec, FFTW_ESTIMATE);
    inv = fftw_plan_dft_c2r_1d(static_cast<int>(n), spec, real, FFTW_ESTIMATE);
  }
  ~Impl() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(inv);
    fftw_destroy_plan(fwd);
    fftw_free(spec);
    fftw_free(real);
  }
  Impl(const Impl&) = delete;
  Impl& operator=(const Impl&) = delete;
};

FourierTransform::FourierTransform(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw InvalidParams("FFT length must be even");
  impl_ = std::make_unique<Impl>(n);
}

FourierTransform::~FourierTransform() = default;
FourierTransform::FourierTransform(FourierTransform&&) noexcept = default;
FourierTransform& FourierTransform::operator=(FourierTransform&&) noexcept = default;

std::size_t FourierTransform::size() const noexcept { return impl_->n; }

void FourierTransform::forward(std::span<const double> in, std::span<Complex> out) {
  const std::size_t n = impl_->n;
  if (in.size() != n || out.size() != n / 2 + 1) throw InvalidParams("FFT size mismatch");
  std::copy(in.begin(), in.end(), impl_->real);
  fftw_execute(impl_->fwd);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = Complex(impl_->spec[k][0], impl_->spec[k][1]);
}

void FourierTransform::inverse(std::span<const Complex> in, std::span<double> out) {
  const std::size_t n = impl_->n;
  if (out.size() != n || in.size() != n / 2 + 1) throw InvalidParams("FFT size mismatch");
  for (std::size_t k = 0; k < in.size(); ++k) {
    impl_->spec[k][0] = in[k].real();
    impl_->spec[k][1] = in[k].imag();
  }
  // The c2r transform only sees the real part of the DC and Nyquist bins.
  fftw_execute(impl_->inv);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = impl_->real[i] * scale;
}

Spectrum FourierTransform::forward(std::span<const double> in) {
  Spectrum out(spectrum_size());
  forward(in, out);
  return out;
}

std::vector<double> FourierTransform::inverse(std::span<const Complex> in) {
  std::vector<double> out(size());
  inverse(in, out);
  return out;
}

FourierTransform& transform_for(std::size_t n) {
  thread_local std::map<std::size_t, FourierTransform> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, FourierTransform(n)).first;
  return it->second;
}

std::vector<double> spectral_derivative(std::span<const double> f, const Grid& grid, int order) {
  if (f.size() != grid.size()) throw InvalidParams("field length does not match grid");
  if (order < 0) throw InvalidParams("derivative order must be >= 0");
  auto& fft = transform_for(grid.size());
  Spectrum s = fft.forward(f);
  const Complex i_unit(0.0, 1.0);
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k == grid.nyquist_index() && order % 2 == 1) {
      s[k] = 0.0;
      continue;
    }
    Complex factor = 1.0;
    const Complex ik = i_unit * grid.wavenumber(k);
    for (int j = 0; j < order; ++j) factor *= ik;
    s[k] *= factor;
  }
  return fft.inverse(s);
}

double integral(std::span<const double> f, const Grid& grid) {
  double sum = 0.0;
  for (double v : f) sum += v;
  return sum * grid.dx();
}

double h1_norm_squared(std::span<const Complex> spectrum, const Grid& grid) {
  const std::size_t n = grid.size();
  double sum = 0.0;
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    // Matches spectral_derivative, which drops the Nyquist bin of f_x.
    const double xi = k == grid.nyquist_index() ? 0.0 : grid.wavenumber(k);
    sum += spectral_multiplicity(k, n) * (1.0 + xi * xi) * std::norm(spectrum[k]);
  }
  return sum * grid.dx() / static_cast<double>(n);
}

}  // namespace ddwave
