#include "ddwave/harness/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ddwave/errors.hpp"
#include "ddwave/simulation.hpp"
#include "ddwave/solitary_wave.hpp"

namespace ddwave::harness {

bool VerifyReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const InvariantResult& r) { return r.passed; });
}

std::vector<std::string> VerifyReport::failures() const {
  std::vector<std::string> names;
  for (const auto& r : results) {
    if (!r.passed) names.push_back(r.name);
  }
  return names;
}

namespace {

// One independent stream per check so adding a check never reshuffles the others.
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    engine_.seed(seq);
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

  ModelParams params(double p_lo = 1.1, double p_hi = 9.0) {
    return ModelParams::from_ratio(uniform(0.25, 4.0), uniform(0.0, 0.95), uniform(p_lo, p_hi));
  }

  // Nonzero velocity with c^2 < 1.
  WaveContext context(double p_lo = 1.1, double p_hi = 9.0, double c_max = 0.97) {
    const double c = uniform(0.02, c_max) * (uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0);
    return WaveContext(params(p_lo, p_hi), c);
  }

 private:
  std::mt19937_64 engine_;
};

struct Tracker {
  InvariantResult result;

  Tracker(std::string name, double tolerance) {
    result.name = std::move(name);
    result.tolerance = tolerance;
  }
  void observe(double residual) {
    ++result.samples;
    // NaN must count as a failure, so compare with !(<=).
    if (!(residual <= result.worst)) result.worst = std::isnan(residual) ? INFINITY : residual;
  }
  InvariantResult finish() {
    result.passed = result.worst <= result.tolerance;
    return result;
  }
};

InvariantResult check_sigma(Sampler rng, const VerifyKernels& k) {
  Tracker t("sigma_residual", 1e-9);
  for (int i = 0; i < 10000; ++i) t.observe(std::abs(k.sigma(rng.context())));
  return t.finish();
}

InvariantResult check_threshold(Sampler rng) {
  Tracker t("threshold_root", 1e-10);
  for (int i = 0; i < 10000; ++i) {
    const ModelParams mp = rng.params();
    const double z = critical_velocity_squared(mp);
    double residual = std::abs(quartic_k(z, mp)) / (mp.a() * (mp.p() + 1.0));
    if (!(z <= (mp.p() - 1.0) / (mp.p() + 3.0) * (1.0 + 1e-15))) residual = INFINITY;
    t.observe(residual);
  }
  return t.finish();
}

InvariantResult check_alpha_duality(Sampler rng) {
  Tracker t("alpha_duality", 0.0);
  for (int i = 0; i < 10000; ++i) {
    const WaveContext ctx = rng.context();
    const double c0_sq = critical_velocity_squared(ctx.params());
    if (std::abs(ctx.c2() - c0_sq) < 1e-9) continue;
    const bool alpha_side = alpha_and_C(ctx).alpha > 0.5;
    t.observe(alpha_side == (ctx.c2() < c0_sq) ? 0.0 : 1.0);
  }
  return t.finish();
}

InvariantResult check_endpoint(Sampler rng, const VerifyKernels& k) {
  Tracker t("g_endpoint", 1e-12);
  for (int i = 0; i < 5000; ++i) {
    const double p = rng.uniform(1.01, 12.0);
    const double mu = rng.uniform(0.0, 1.0);
    const double expected = (mu - 1.0) * (mu - 1.0) * (p + 3.0) * (5.0 - p);
    t.observe(std::abs(k.coefficients(p, mu).eval(1.0) - expected) / ((p + 3.0) * (p + 3.0)));
  }
  return t.finish();
}

InvariantResult check_factor_p5(Sampler rng, const VerifyKernels& k) {
  Tracker t("g_factor_p5", 1e-12);
  for (int i = 0; i < 5000; ++i) {
    const double mu = rng.uniform(0.0, 1.0);
    const double z = rng.uniform(0.0, 3.0);
    const GCoefficients g = k.coefficients(5.0, mu);
    const double expected = 16.0 * (z - 1.0) * (6.0 * mu * mu * z * z - 9.0 * mu * z + mu + 2.0);
    t.observe(std::abs(g.eval(z) - expected) / (g.scale() * std::max(1.0, z * z * z)));
  }
  return t.finish();
}

InvariantResult check_factor_mu1(Sampler rng, const VerifyKernels& k) {
  Tracker t("g_factor_mu1", 1e-12);
  for (int i = 0; i < 5000; ++i) {
    const double p = rng.uniform(1.01, 12.0);
    const double z = rng.uniform(0.0, 3.0);
    const GCoefficients g = k.coefficients(p, 1.0);
    const double expected =
        2.0 * (p + 1.0) * (p + 3.0) * (z - (p - 1.0) / (p + 3.0)) * (z - 1.0) * (z - 1.0);
    t.observe(std::abs(g.eval(z) - expected) / (g.scale() * std::max(1.0, z * z * z)));
  }
  return t.finish();
}

InvariantResult check_parity(Sampler rng) {
  Tracker t("root_parity", 0.0);
  for (int i = 0; i < 4000; ++i) {
    const double p = rng.uniform(1.01, 12.0);
    if (std::abs(p - 5.0) < 1e-3) continue;
    const double mu = rng.uniform(0.0, 0.999);
    const bool odd = roots_in_unit_interval(p, mu).size() % 2 == 1;
    t.observe(odd == (g_eval(1.0, p, mu) > 0.0) ? 0.0 : 1.0);
  }
  return t.finish();
}

InvariantResult check_region(Sampler rng) {
  Tracker t("region_consistency", 0.0);
  for (int i = 0; i < 2000; ++i) {
    const double p = rng.uniform(1.01, 12.0);
    const double mu = rng.uniform(0.0, 0.999);
    double violation = 0.0;
    try {
      const RegionReport r = classify_region(p, mu);
      const bool expected_kind = p < 5.0 ? r.kind == RegionKind::UpToOne : r.kind != RegionKind::UpToOne;
      if (!expected_kind) violation = 1.0;
    } catch (const InconsistentRootCount&) {
      violation = 1.0;
    }
    t.observe(violation);
  }
  return t.finish();
}

ProfileField profile_for(const WaveContext& ctx, std::size_t n) {
  return profile_on_grid(ctx, Grid(suggested_length(ctx), n));
}

std::vector<InvariantResult> check_profiles(Sampler rng) {
  Tracker pohozaev("pohozaev", 1e-8);
  Tracker ode("ode_residual", 1e-8);
  Tracker scaling("scaling_law", 1e-8);
  Tracker modes("d_modes_agree", 1e-6);
  for (int i = 0; i < 40; ++i) {
    const WaveContext ctx = rng.context(1.2, 8.0, 0.9);
    const ProfileField field = profile_for(ctx, 1024);
    const PohozaevResiduals r = pohozaev_residuals(field, ctx);
    pohozaev.observe(std::max(r.p1_rel, r.p2_rel));
    ode.observe(ode_residual(field, ctx));

    const double p = ctx.p();
    const WaveContext rest(ctx.params(), 0.0);
    const double l2_c = norms(profile_for(ctx, 2048).values, Grid(suggested_length(ctx), 2048), p).l2_sq;
    const double l2_0 = norms(profile_for(rest, 2048).values, Grid(suggested_length(rest), 2048), p).l2_sq;
    const double predicted = std::pow(ctx.a(), -0.5) * std::pow(ctx.mass_coeff(), (5.0 - p) / (2.0 * p - 2.0)) *
                             std::sqrt(ctx.gradient_coeff()) * l2_0;
    scaling.observe(std::abs(l2_c - predicted) / predicted);

    const double closed = d_of_c(ctx, DMode::ClosedForm);
    const double quad = d_of_c(ctx, DMode::Quadrature);
    modes.observe(std::abs(closed - quad) / quad);
  }
  return {pohozaev.finish(), ode.finish(), scaling.finish(), modes.finish()};
}

std::vector<double> random_field(Sampler& rng, const Grid& grid) {
  std::vector<double> f(grid.size(), 0.0);
  constexpr double kTwoPi = 6.283185307179586;
  for (int k = 1; k <= 8; ++k) {
    const double ca = rng.uniform(-1.0, 1.0) / k;
    const double sa = rng.uniform(-1.0, 1.0) / k;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double arg = kTwoPi * k * grid.x(i) / grid.length();
      f[i] += ca * std::cos(arg) + sa * std::sin(arg);
    }
  }
  return f;
}

std::vector<InvariantResult> check_random_fields(Sampler rng) {
  Tracker identity("energy_identity", 1e-10);
  Tracker linearity("k_alpha_linearity", 1e-15);
  const Grid grid(40.0, 256);
  for (int i = 0; i < 200; ++i) {
    const WaveContext ctx = rng.context(1.5, 6.0);
    StatePair s{random_field(rng, grid), random_field(rng, grid), 0.0};
    const double c = ctx.c();
    const double b = ctx.b();

    std::vector<double> shifted(grid.size());
    for (std::size_t j = 0; j < shifted.size(); ++j) shifted[j] = s.w[j] + c * s.u[j];
    const std::vector<double> shifted_x = spectral_derivative(shifted, grid, 1);
    double quad = 0.0;
    for (std::size_t j = 0; j < shifted.size(); ++j) quad += shifted[j] * shifted[j] + b * shifted_x[j] * shifted_x[j];
    quad *= 0.5 * grid.dx();

    const double alpha = rng.uniform(-3.0, 3.0);
    const FunctionalReport r = functionals(s, grid, ctx, alpha);
    const double lhs = r.E + c * r.M;
    const double rhs = quad + r.V;
    identity.observe(std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(quad), std::abs(r.V)}));
    const double scale = std::max({std::abs(alpha * r.P1), std::abs(r.P2), 1e-300});
    linearity.observe(std::abs(r.K_alpha - (alpha * r.P1 + r.P2)) / scale);
  }
  return {identity.finish(), linearity.finish()};
}

InvariantResult check_d_sign(Sampler rng) {
  Tracker t("d_second_derivative_sign", 1.0);
  constexpr double h = 1e-4;
  std::size_t taken = 0;
  while (taken < 500) {
    const WaveContext ctx = rng.context(1.1, 9.0, 0.95);
    const double z = ctx.c2();
    const double mu = ctx.params().mu();
    const auto roots = roots_in_unit_interval(ctx.p(), mu);
    const bool near_root =
        std::any_of(roots.begin(), roots.end(), [&](double r) { return std::abs(z - r) < 10.0 * h; });
    if (near_root) continue;
    ++taken;
    const double fd = d_second_derivative_fd(ctx, h);
    const double g = g_eval(z, ctx.p(), mu);
    t.result.samples++;
    if ((fd > 0.0) != (g > 0.0)) t.result.worst += 1.0;
  }
  return t.finish();
}

InvariantResult check_conservation() {
  Tracker t("conservation", 1e-6);
  const ModelParams mp(2.0, 1.0, 3.0);
  const WaveContext ctx(mp, 0.8);
  const Grid grid(120.0, 512);
  SimConfig cfg;
  cfg.t_end = 2.0;
  cfg.record_every = 5;
  const SimRecord rec = integrate(traveling_wave_state(ctx, grid), mp, grid, cfg);
  for (std::size_t i = 0; i < rec.times.size(); ++i) {
    t.observe(std::max(std::abs(rec.energy[i] - rec.energy[0]) / std::abs(rec.energy[0]),
                       std::abs(rec.momentum[i] - rec.momentum[0]) / std::abs(rec.momentum[0])));
  }
  if (rec.verdict != Verdict::Completed) t.observe(INFINITY);
  return t.finish();
}

}  // namespace

VerifyReport run_verify(std::uint64_t seed, const VerifyKernels& kernels) {
  VerifyReport report;
  report.seed = seed;
  auto& out = report.results;
  std::uint64_t stream = 0;
  auto next = [&] { return Sampler(seed, ++stream); };

  out.push_back(check_sigma(next(), kernels));
  out.push_back(check_threshold(next()));
  out.push_back(check_alpha_duality(next()));
  out.push_back(check_endpoint(next(), kernels));
  out.push_back(check_factor_p5(next(), kernels));
  out.push_back(check_factor_mu1(next(), kernels));
  out.push_back(check_parity(next()));
  out.push_back(check_region(next()));
  for (auto& r : check_profiles(next())) out.push_back(std::move(r));
  for (auto& r : check_random_fields(next())) out.push_back(std::move(r));
  out.push_back(check_d_sign(next()));
  out.push_back(check_conservation());
  return report;
}

}  // namespace ddwave::harness
