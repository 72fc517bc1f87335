#include "ddwave/solitary_wave.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ddwave/errors.hpp"
#include "ddwave/fourier.hpp"

namespace ddwave {

namespace {

// sech without overflowing cosh in the tails.
double sech(double y) {
  const double e = std::exp(-std::abs(y));
  return 2.0 * e / (1.0 + e * e);
}

void check_size(std::span<const double> f, const Grid& grid) {
  if (f.size() != grid.size()) throw InvalidParams("field length does not match grid");
}

}  // namespace

double solitary_profile(const WaveContext& ctx, double x) {
  const double p = ctx.p();
  const double amplitude = std::pow(0.5 * (p + 1.0) * ctx.mass_coeff(), 1.0 / (p - 1.0));
  const double arg = 0.5 * (p - 1.0) * x / ctx.width();
  return amplitude * std::pow(sech(arg), 2.0 / (p - 1.0));
}

double suggested_length(const WaveContext& ctx) {
  return 60.0 * ctx.width() * std::max(1.0, 2.0 / (ctx.p() - 1.0));
}

ProfileField profile_on_grid(const WaveContext& ctx, const Grid& grid, double tail_tol) {
  ProfileField field{grid, std::vector<double>(grid.size())};
  for (std::size_t i = 0; i < grid.size(); ++i) field.values[i] = solitary_profile(ctx, grid.x(i));

  const double peak = solitary_profile(ctx, 0.0);
  const double edge = std::max(std::abs(field.values.front()), std::abs(field.values.back()));
  if (edge > tail_tol * peak) {
    std::ostringstream msg;
    msg << "domain length " << grid.length() << " too short: boundary/peak ratio " << edge / peak
        << " exceeds " << tail_tol << "; try L >= " << suggested_length(ctx);
    throw TailTooFat(msg.str(), suggested_length(ctx));
  }
  return field;
}

Norms norms(std::span<const double> u, const Grid& grid, double p) {
  check_size(u, grid);
  Norms n;
  const std::vector<double> ux = spectral_derivative(u, grid, 1);
  for (std::size_t i = 0; i < u.size(); ++i) {
    n.l2_sq += u[i] * u[i];
    n.grad_l2_sq += ux[i] * ux[i];
    n.lp1 += std::pow(std::abs(u[i]), p + 1.0);
  }
  n.l2_sq *= grid.dx();
  n.grad_l2_sq *= grid.dx();
  n.lp1 *= grid.dx();
  return n;
}

namespace {

FunctionalReport variational_part(const Norms& n, const WaveContext& ctx, double alpha) {
  const double A = ctx.mass_coeff();
  const double B = ctx.gradient_coeff();
  const double p = ctx.p();
  FunctionalReport r;
  r.norms = n;
  r.alpha = alpha;
  r.P1 = A * n.l2_sq + B * n.grad_l2_sq - n.lp1;
  r.P2 = 0.5 * A * n.l2_sq - 0.5 * B * n.grad_l2_sq - n.lp1 / (p + 1.0);
  r.V = 0.5 * A * n.l2_sq + 0.5 * B * n.grad_l2_sq - n.lp1 / (p + 1.0);
  r.K_alpha = alpha * r.P1 + r.P2;
  return r;
}

}  // namespace

FunctionalReport functionals(std::span<const double> u, const Grid& grid, const WaveContext& ctx,
                             double alpha) {
  StatePair state{std::vector<double>(u.begin(), u.end()), std::vector<double>(u.size()), 0.0};
  for (std::size_t i = 0; i < u.size(); ++i) state.w[i] = -ctx.c() * u[i];
  return functionals(state, grid, ctx, alpha);
}

FunctionalReport functionals(const StatePair& state, const Grid& grid, const WaveContext& ctx,
                             double alpha) {
  FunctionalReport r = variational_part(norms(state.u, grid, ctx.p()), ctx, alpha);
  const EnergyMomentum em = energy_momentum(state, grid, ctx.params());
  r.E = em.energy;
  r.M = em.momentum;
  return r;
}

EnergyMomentum energy_momentum(std::span<const double> u, std::span<const double> w, const Grid& grid,
                               const ModelParams& params) {
  check_size(u, grid);
  check_size(w, grid);
  const std::vector<double> ux = spectral_derivative(u, grid, 1);
  const std::vector<double> wx = spectral_derivative(w, grid, 1);
  const double a = params.a();
  const double b = params.b();
  const double p = params.p();
  double quad = 0.0;
  double power = 0.0;
  double mom = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    quad += w[i] * w[i] + b * wx[i] * wx[i] + u[i] * u[i] + a * ux[i] * ux[i];
    power += std::pow(std::abs(u[i]), p + 1.0);
    mom += u[i] * w[i] + b * ux[i] * wx[i];
  }
  EnergyMomentum em;
  em.energy = grid.dx() * (0.5 * quad - power / (p + 1.0));
  em.momentum = grid.dx() * mom;
  return em;
}

EnergyMomentum energy_momentum(const StatePair& state, const Grid& grid, const ModelParams& params) {
  return energy_momentum(state.u, state.w, grid, params);
}

PohozaevResiduals pohozaev_residuals(const ProfileField& field, const WaveContext& ctx) {
  const Norms n = norms(field.values, field.grid, ctx.p());
  const FunctionalReport r = variational_part(n, ctx, 0.0);
  const double scale = ctx.mass_coeff() * n.l2_sq + ctx.gradient_coeff() * n.grad_l2_sq;
  return {std::abs(r.P1) / scale, std::abs(r.P2) / scale};
}

double ode_residual(const ProfileField& field, const WaveContext& ctx) {
  const std::vector<double> second = spectral_derivative(field.values, field.grid, 2);
  const double A = ctx.mass_coeff();
  const double B = ctx.gradient_coeff();
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < second.size(); ++i) {
    const double phi = field.values[i];
    worst = std::max(worst, std::abs(B * second[i] - A * phi + signed_power(phi, ctx.p())));
    scale = std::max(scale, std::abs(A * phi));
  }
  return scale > 0.0 ? worst / scale : worst;
}

namespace {

double l2_of_profile(const WaveContext& ctx, std::size_t n_points) {
  const Grid grid(suggested_length(ctx), n_points);
  const ProfileField field = profile_on_grid(ctx, grid);
  double sum = 0.0;
  for (double v : field.values) sum += v * v;
  return sum * grid.dx();
}

}  // namespace

double d_at_rest(const ModelParams& params, std::size_t n_points) {
  const double p = params.p();
  return (p - 1.0) / (p + 3.0) * l2_of_profile(WaveContext(params, 0.0), n_points);
}

double d_closed_form(const WaveContext& ctx, double d0) {
  const double p = ctx.p();
  return d0 * std::pow(ctx.mass_coeff(), (p + 3.0) / (2.0 * (p - 1.0))) *
         std::sqrt(1.0 - ctx.params().mu() * ctx.c2());
}

double d_of_c(const WaveContext& ctx, DMode mode, std::size_t n_points) {
  if (mode == DMode::ClosedForm) return d_closed_form(ctx, d_at_rest(ctx.params(), n_points));
  const double p = ctx.p();
  return (p - 1.0) / (p + 3.0) * ctx.mass_coeff() * l2_of_profile(ctx, n_points);
}

}  // namespace ddwave
