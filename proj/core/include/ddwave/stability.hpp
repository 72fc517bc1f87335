#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ddwave/params.hpp"

namespace ddwave {

/// Blow-up threshold c0^2 for the given parameters.
double critical_velocity_squared(const ModelParams& params);

/// The same formula without the a > b guard, for the a = b limit. Throws
/// InvalidParams if the inner radicand is negative.
double critical_velocity_squared_unchecked(double a, double b, double p);

/// k(z) = b(p+3) z^2 - 2a(p+1) z + a(p-1), z standing for c^2. Its
/// smaller root is c0^2.
double quartic_k(double z, const ModelParams& params);

struct AlphaC {
  double alpha = 0.0;
  double C = 0.0;
};

/// Multiplier alpha and constant C of the Levine-functional estimate.
/// alpha > 1/2 exactly when c^2 < c0^2. Throws DegenerateVelocity at c = 0.
AlphaC alpha_and_C(const WaveContext& ctx);

/// The sigma combination that must vanish identically; returns the residual.
double sigma_residual(const WaveContext& ctx);

/// G(z, p, mu) = P z^3 - Q z^2 + R z - S.
struct GCoefficients {
  double P = 0.0;
  double Q = 0.0;
  double R = 0.0;
  double S = 0.0;

  double eval(double z) const noexcept { return ((P * z - Q) * z + R) * z - S; }
  double derivative(double z) const noexcept { return (3.0 * P * z - 2.0 * Q) * z + R; }
  double scale() const noexcept;
};

GCoefficients g_coefficients(double p, double mu);
double g_eval(double z, double p, double mu);

/// Distinct real roots of G in the open interval (0, 1), ascending and
/// Newton-polished. Roots within 1e-9 of z = 1 count as the boundary.
std::vector<double> roots_in_unit_interval(double p, double mu);

enum class RegionKind { Empty, UpToOne, Window };

std::string_view to_string(RegionKind kind);

struct RegionReport {
  double p = 0.0;
  double mu = 0.0;
  std::vector<double> roots_in_unit;
  RegionKind kind = RegionKind::Empty;
  /// c^2 in (first, second) is the orbital-stability interval.
  std::optional<std::pair<double, double>> interval;
};

/// Classifies the stability region of (p, mu) and cross-checks the polished
/// roots against a 2048-point sign scan of G on (0, 1).
RegionReport classify_region(double p, double mu);

/// mu_p for p > 5: below it the region is empty, above it a window opens.
/// Bisection on root existence inside [1/3, 1 - 1e-6].
double critical_mu(double p, double tol = 1e-8);

/// Central second difference of the closed-form d(c).
double d_second_derivative_fd(const WaveContext& ctx, double h);

enum class VelocityVerdict {
  UnstableByBlowUp,   ///< c^2 < c0^2
  OrbitallyStable,    ///< c^2 strictly inside the stability interval
  Undetermined,       ///< neither criterion applies
  Unclassified        ///< c^2 sits on c0^2 or on a root of G
};

std::string_view to_string(VelocityVerdict verdict);

/// Combines the blow-up threshold and the convexity region for one velocity.
VelocityVerdict classify_velocity(const WaveContext& ctx, double boundary_tol = 1e-12);

}  // namespace ddwave
