#include "ddwave/grid.hpp"

#include <cmath>
#include <numbers>

#include "ddwave/errors.hpp"

namespace ddwave {

Grid::Grid(double length, std::size_t n_points) : length_(length), n_(n_points), dx_(0.0) {
  if (!(length > 0.0) || !std::isfinite(length)) throw InvalidParams("grid length must be > 0");
  if (n_points < 64 || (n_points & (n_points - 1)) != 0) {
    throw InvalidParams("grid point count must be a power of two >= 64");
  }
  dx_ = length_ / static_cast<double>(n_);
}

std::vector<double> Grid::points() const {
  std::vector<double> xs(n_);
  for (std::size_t i = 0; i < n_; ++i) xs[i] = x(i);
  return xs;
}

double Grid::wavenumber(std::size_t k) const noexcept {
  const double base = 2.0 * std::numbers::pi / length_;
  if (k == nyquist_index()) return -base * static_cast<double>(k);
  return base * static_cast<double>(k);
}

double Grid::first_mode() const noexcept { return 2.0 * std::numbers::pi / length_; }

double Grid::max_wavenumber() const noexcept { return std::numbers::pi * static_cast<double>(n_) / length_; }

}  // namespace ddwave
