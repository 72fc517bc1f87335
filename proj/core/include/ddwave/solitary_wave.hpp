#pragma once

#include <span>
#include <vector>

#include "ddwave/grid.hpp"
#include "ddwave/params.hpp"

namespace ddwave {

/// Discretized (u, w) pair of the first-order system u_t = w_x,
/// w_t = (1 - b D^2)^{-1} [(1 - a D^2) u_x - (|u|^{p-1} u)_x].
struct StatePair {
  std::vector<double> u;
  std::vector<double> w;
  double t = 0.0;
};

/// Samples of the solitary profile on a periodic grid.
struct ProfileField {
  Grid grid;
  std::vector<double> values;
};

/// ||u||_{L^2}^2, ||u_x||_{L^2}^2 and ||u||_{L^{p+1}}^{p+1}.
struct Norms {
  double l2_sq = 0.0;
  double grad_l2_sq = 0.0;
  double lp1 = 0.0;
};

struct FunctionalReport {
  double V = 0.0;
  double P1 = 0.0;
  double P2 = 0.0;
  double E = 0.0;
  double M = 0.0;
  double alpha = 0.0;
  double K_alpha = 0.0;
  Norms norms;
};

struct EnergyMomentum {
  double energy = 0.0;
  double momentum = 0.0;
};

struct PohozaevResiduals {
  double p1_rel = 0.0;  ///< |P1| / (A ||phi||^2 + B ||phi'||^2)
  double p2_rel = 0.0;
};

enum class DMode { ClosedForm, Quadrature };

inline constexpr double kDefaultTailTol = 1e-12;
inline constexpr std::size_t kDefaultQuadraturePoints = 2048;

/// phi_c(x) = [(p+1)(1-c^2)/2]^{1/(p-1)} sech^{2/(p-1)}((p-1)/2 sqrt(A/B) x).
double solitary_profile(const WaveContext& ctx, double x);

/// Box length keeping about 60 decay lengths sqrt(B/A) in view, widened by
/// 2/(p-1) when p < 3 so the sech power has decayed below the tail tolerance.
double suggested_length(const WaveContext& ctx);

/// Samples the centered profile. Throws TailTooFat when the boundary value
/// exceeds tail_tol times the peak.
ProfileField profile_on_grid(const WaveContext& ctx, const Grid& grid, double tail_tol = kDefaultTailTol);

Norms norms(std::span<const double> u, const Grid& grid, double p);

/// V, P1, P2, K_alpha of u and E, M of the pair (u, -c u).
FunctionalReport functionals(std::span<const double> u, const Grid& grid, const WaveContext& ctx,
                             double alpha);
/// Same, with E and M taken from the actual (u, w) pair.
FunctionalReport functionals(const StatePair& state, const Grid& grid, const WaveContext& ctx,
                             double alpha);

EnergyMomentum energy_momentum(std::span<const double> u, std::span<const double> w, const Grid& grid,
                               const ModelParams& params);
EnergyMomentum energy_momentum(const StatePair& state, const Grid& grid, const ModelParams& params);

PohozaevResiduals pohozaev_residuals(const ProfileField& field, const WaveContext& ctx);

/// sup |B phi'' - A phi + |phi|^{p-1} phi| / sup |A phi|, with phi'' spectral.
double ode_residual(const ProfileField& field, const WaveContext& ctx);

/// d(0) = (p-1)/(p+3) ||phi_0||^2 by quadrature of the c = 0 profile.
double d_at_rest(const ModelParams& params, std::size_t n_points = kDefaultQuadraturePoints);

/// d(0) (1-c^2)^{(p+3)/(2(p-1))} (1 - mu c^2)^{1/2} for a precomputed d(0).
double d_closed_form(const WaveContext& ctx, double d0);

/// d(c) either from the closed form or as (p-1)/(p+3) A ||phi_c||^2.
double d_of_c(const WaveContext& ctx, DMode mode, std::size_t n_points = kDefaultQuadraturePoints);

}  // namespace ddwave
