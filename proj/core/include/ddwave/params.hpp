#pragma once

#include <cmath>

namespace ddwave {

/// Coefficients of u_tt - u_xx + a u_xxxx - b u_xxtt = -(|u|^{p-1} u)_xx.
///
/// Construction validates the structural regime a > b >= 0 and p > 1;
/// b = 0 is the Boussinesq limit. The dispersion ratio mu = b/a is cached
/// exactly as computed.
class ModelParams {
 public:
  ModelParams(double a, double b, double p);

  /// Builds (a, mu*a, p).
  static ModelParams from_ratio(double a, double mu, double p);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double p() const noexcept { return p_; }
  double mu() const noexcept { return mu_; }

 private:
  double a_;
  double b_;
  double p_;
  double mu_;
};

/// Model parameters together with a wave velocity c, c^2 < 1.
///
/// mass_coeff() = 1 - c^2 weighs ||u||^2 and gradient_coeff() = a - b c^2
/// weighs ||u_x||^2 in every functional built on the wave.
class WaveContext {
 public:
  WaveContext(const ModelParams& params, double c);

  const ModelParams& params() const noexcept { return params_; }
  double c() const noexcept { return c_; }
  double c2() const noexcept { return c_ * c_; }
  double mass_coeff() const noexcept { return mass_; }
  double gradient_coeff() const noexcept { return gradient_; }

  double a() const noexcept { return params_.a(); }
  double b() const noexcept { return params_.b(); }
  double p() const noexcept { return params_.p(); }

  /// sqrt(B / A): the decay length of the profile tails.
  double width() const noexcept { return std::sqrt(gradient_ / mass_); }

 private:
  ModelParams params_;
  double c_;
  double mass_;
  double gradient_;
};

/// sign(u) |u|^p, the pointwise nonlinearity |u|^{p-1} u.
inline double signed_power(double u, double p) noexcept {
  if (p == 2.0) return u * std::abs(u);
  if (p == 3.0) return u * u * u;
  return std::copysign(std::pow(std::abs(u), p), u);
}

}  // namespace ddwave
