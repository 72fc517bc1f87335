#pragma once

#include <cstddef>
#include <vector>

namespace ddwave {

/// Uniform periodic grid on [-L/2, L/2) with N points, N a power of two >= 64.
///
/// Wavenumbers follow the real-to-complex half spectrum: index k in
/// [0, N/2] carries xi_k = 2 pi k / L, except the Nyquist index k = N/2,
/// which carries -pi N / L (the k = -N/2 member of {-N/2, ..., N/2-1}).
class Grid {
 public:
  Grid(double length, std::size_t n_points);

  double length() const noexcept { return length_; }
  std::size_t size() const noexcept { return n_; }
  double dx() const noexcept { return dx_; }
  double x(std::size_t i) const noexcept { return -0.5 * length_ + static_cast<double>(i) * dx_; }
  std::vector<double> points() const;

  std::size_t spectrum_size() const noexcept { return n_ / 2 + 1; }
  std::size_t nyquist_index() const noexcept { return n_ / 2; }
  double wavenumber(std::size_t k) const noexcept;
  double first_mode() const noexcept;
  double max_wavenumber() const noexcept;

  /// Half-spectrum indices k < cutoff survive the 2/3 rule (|k| <= N/3).
  std::size_t dealias_cutoff() const noexcept { return n_ / 3 + 1; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  double length_;
  std::size_t n_;
  double dx_;
};

}  // namespace ddwave
