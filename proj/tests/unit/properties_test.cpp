#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ddwave/fourier.hpp"
#include "ddwave/simulation.hpp"
#include "ddwave/solitary_wave.hpp"
#include "ddwave/stability.hpp"
#include "oracles.hpp"

using namespace ddwave;

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  double operator()(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

  WaveContext context(double p_lo, double p_hi, double c_max) {
    const ModelParams mp = ModelParams::from_ratio((*this)(0.3, 3.0), (*this)(0.0, 0.95), (*this)(p_lo, p_hi));
    return WaveContext(mp, (*this)(0.05, c_max));
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<double> smooth_field(Draw& draw, const Grid& grid) {
  std::vector<double> f(grid.size(), 0.0);
  for (int k = 1; k <= 6; ++k) {
    const double amp = draw(-1.0, 1.0) / k;
    const double phase = draw(0.0, 6.283185307179586);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += amp * std::cos(grid.wavenumber(k) * grid.x(i) + phase);
  }
  return f;
}

}  // namespace

TEST(Properties, PohozaevAndOdeResidualsOnRandomWaves) {
  Draw draw(11);
  for (int i = 0; i < 25; ++i) {
    const WaveContext ctx = draw.context(1.3, 8.0, 0.9);
    const ProfileField field = profile_on_grid(ctx, Grid(suggested_length(ctx), 1024));
    const PohozaevResiduals r = pohozaev_residuals(field, ctx);
    EXPECT_LE(r.p1_rel, 1e-8);
    EXPECT_LE(r.p2_rel, 1e-8);
    EXPECT_LE(ode_residual(field, ctx), 1e-8);
  }
}

TEST(Properties, QuadratureNormsMatchSechIntegrals) {
  Draw draw(12);
  for (int i = 0; i < 25; ++i) {
    const WaveContext ctx = draw.context(1.3, 8.0, 0.9);
    const Grid grid(suggested_length(ctx), 2048);
    const Norms n = norms(profile_on_grid(ctx, grid).values, grid, ctx.p());
    const oracle::AnalyticNorms e = oracle::analytic_norms(ctx.a(), ctx.b(), ctx.p(), ctx.c());
    EXPECT_NEAR(n.l2_sq, e.l2_sq, 1e-9 * e.l2_sq);
    EXPECT_NEAR(n.grad_l2_sq, e.grad_l2_sq, 1e-9 * e.grad_l2_sq);
    EXPECT_NEAR(n.lp1, e.lp1, 1e-9 * e.lp1);
  }
}

TEST(Properties, MassScalingLaw) {
  Draw draw(13);
  for (int i = 0; i < 50; ++i) {
    const WaveContext ctx = draw.context(1.3, 8.0, 0.95);
    const double p = ctx.p();
    const double moving = oracle::analytic_norms(ctx.a(), ctx.b(), p, ctx.c()).l2_sq;
    const double rest = oracle::analytic_norms(ctx.a(), ctx.b(), p, 0.0).l2_sq;
    const double predicted = std::pow(ctx.a(), -0.5) * std::pow(ctx.mass_coeff(), (5.0 - p) / (2.0 * p - 2.0)) *
                             std::sqrt(ctx.gradient_coeff()) * rest;
    EXPECT_NEAR(moving, predicted, 1e-12 * predicted);
  }
}

TEST(Properties, EnergyMomentumIdentityOnRandomFields) {
  Draw draw(14);
  const Grid grid(30.0, 256);
  for (int i = 0; i < 100; ++i) {
    const WaveContext ctx = draw.context(1.5, 6.0, 0.95);
    const StatePair s{smooth_field(draw, grid), smooth_field(draw, grid), 0.0};
    const FunctionalReport r = functionals(s, grid, ctx, draw(-2.0, 2.0));
    // Direct Riemann sums of the completed square.
    std::vector<double> shifted(grid.size());
    for (std::size_t j = 0; j < shifted.size(); ++j) shifted[j] = s.w[j] + ctx.c() * s.u[j];
    const auto shifted_x = spectral_derivative(shifted, grid, 1);
    double square = 0.0;
    double potential = 0.0;
    const auto ux = spectral_derivative(s.u, grid, 1);
    for (std::size_t j = 0; j < shifted.size(); ++j) {
      square += shifted[j] * shifted[j] + ctx.b() * shifted_x[j] * shifted_x[j];
      potential += ctx.mass_coeff() * s.u[j] * s.u[j] + ctx.gradient_coeff() * ux[j] * ux[j] -
                   2.0 / (ctx.p() + 1.0) * std::pow(std::abs(s.u[j]), ctx.p() + 1.0);
    }
    square *= 0.5 * grid.dx();
    potential *= 0.5 * grid.dx();
    const double scale = std::max({std::abs(square), std::abs(potential), 1.0});
    EXPECT_NEAR(r.V, potential, 1e-12 * scale);
    EXPECT_NEAR(r.E + ctx.c() * r.M, square + potential, 1e-10 * scale);
    EXPECT_EQ(r.K_alpha, r.alpha * r.P1 + r.P2);
  }
}

TEST(Properties, ThresholdIsSmallerQuarticRoot) {
  Draw draw(15);
  for (int i = 0; i < 2000; ++i) {
    const ModelParams mp = ModelParams::from_ratio(draw(0.1, 5.0), draw(0.0, 0.999), draw(1.01, 12.0));
    const double z0 = critical_velocity_squared(mp);
    const double upper = (mp.p() - 1.0) / (mp.p() + 3.0);
    ASSERT_LE(z0, upper * (1.0 + 1e-14));
    // k is positive on [0, z0) and changes sign at z0.
    const auto k = [&](double z) { return quartic_k(z, mp); };
    const auto crossings = oracle::scan_roots(k, 0.0, 1.0, 4000);
    ASSERT_FALSE(crossings.empty());
    EXPECT_NEAR(crossings.front(), z0, 1e-10);
  }
}

TEST(Properties, AlphaAboveHalfExactlyBelowThreshold) {
  Draw draw(16);
  for (int i = 0; i < 5000; ++i) {
    const WaveContext ctx = draw.context(1.1, 10.0, 0.98);
    const double z0 = critical_velocity_squared(ctx.params());
    if (std::abs(ctx.c2() - z0) < 1e-9) continue;
    EXPECT_EQ(alpha_and_C(ctx).alpha > 0.5, ctx.c2() < z0);
    EXPECT_LE(std::abs(sigma_residual(ctx)), 1e-9);
  }
}

TEST(Properties, RootCountParityAndScanAgreement) {
  Draw draw(17);
  for (int i = 0; i < 1500; ++i) {
    const double p = draw(1.05, 12.0);
    const double mu = draw(0.0, 0.99);
    if (std::abs(p - 5.0) < 1e-3) continue;
    const auto roots = roots_in_unit_interval(p, mu);
    EXPECT_EQ(roots.size() % 2 == 1, p < 5.0) << p << " " << mu;
    const auto scanned = oracle::scan_roots([&](double z) { return g_eval(z, p, mu); }, 0.0, 1.0 - 1e-9, 20000);
    ASSERT_EQ(scanned.size(), roots.size()) << p << " " << mu;
    for (std::size_t j = 0; j < roots.size(); ++j) EXPECT_NEAR(roots[j], scanned[j], 1e-9);
  }
}

TEST(Properties, LowerRootFallsAndUpperRootRisesWithMu) {
  // Empirical check of the plotted root curves, on a grid of (p, mu).
  for (double p : {5.5, 6.0, 7.0, 8.0, 10.0, 12.0}) {
    const double mu_c = critical_mu(p);
    double z1_prev = INFINITY;
    double z2_prev = -INFINITY;
    for (int j = 1; j <= 40; ++j) {
      const double mu = mu_c + (0.999 - mu_c) * j / 40.0;
      const RegionReport r = classify_region(p, mu);
      ASSERT_EQ(r.kind, RegionKind::Window) << p << " " << mu;
      EXPECT_LT(r.roots_in_unit[0], z1_prev) << p << " " << mu;
      EXPECT_GT(r.roots_in_unit[1], z2_prev) << p << " " << mu;
      z1_prev = r.roots_in_unit[0];
      z2_prev = r.roots_in_unit[1];
    }
  }
}

TEST(Properties, CriticalMuIncreasesWithP) {
  double prev = 1.0 / 3.0;
  for (double p = 5.25; p <= 12.0; p += 0.25) {
    const double mu = critical_mu(p);
    EXPECT_GT(mu, prev) << p;
    EXPECT_LT(mu, 1.0);
    prev = mu;
  }
}

TEST(Properties, RegionKindFollowsExponent) {
  Draw draw(18);
  for (int i = 0; i < 2000; ++i) {
    const double p = draw(1.05, 12.0);
    const double mu = draw(0.0, 0.99);
    if (std::abs(p - 5.0) < 1e-3) continue;
    const RegionReport r = classify_region(p, mu);
    if (p < 5.0) {
      EXPECT_EQ(r.kind, RegionKind::UpToOne);
    } else {
      EXPECT_EQ(r.kind, mu < critical_mu(p) ? RegionKind::Empty : RegionKind::Window) << p << " " << mu;
    }
  }
}

TEST(Properties, SecondDerivativeSignFollowsG) {
  Draw draw(19);
  constexpr double h = 1e-4;
  int taken = 0;
  int mismatches = 0;
  while (taken < 500) {
    const WaveContext ctx = draw.context(1.1, 9.0, 0.95);
    const auto roots = roots_in_unit_interval(ctx.p(), ctx.params().mu());
    if (std::any_of(roots.begin(), roots.end(), [&](double r) { return std::abs(ctx.c2() - r) < 10.0 * h; })) {
      continue;
    }
    ++taken;
    if ((d_second_derivative_fd(ctx, h) > 0.0) != (g_eval(ctx.c2(), ctx.p(), ctx.params().mu()) > 0.0)) {
      ++mismatches;
    }
  }
  EXPECT_LE(mismatches, 1);
}

TEST(Properties, ClosedFormAndQuadratureDAgree) {
  Draw draw(20);
  for (int i = 0; i < 25; ++i) {
    const WaveContext ctx = draw.context(1.3, 8.0, 0.9);
    const double closed = d_of_c(ctx, DMode::ClosedForm);
    EXPECT_NEAR(d_of_c(ctx, DMode::Quadrature), closed, 1e-6 * closed);
  }
}
