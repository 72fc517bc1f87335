#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "ddwave/errors.hpp"
#include "ddwave/grid.hpp"
#include "ddwave/params.hpp"

using namespace ddwave;

TEST(ModelParams, StoresRatio) {
  const ModelParams mp(2.0, 1.0, 3.0);
  EXPECT_EQ(mp.a(), 2.0);
  EXPECT_EQ(mp.b(), 1.0);
  EXPECT_EQ(mp.p(), 3.0);
  EXPECT_EQ(mp.mu(), 1.0 / 2.0);
}

TEST(ModelParams, BoussinesqLimitAllowed) { EXPECT_EQ(ModelParams(1.0, 0.0, 2.0).mu(), 0.0); }

TEST(ModelParams, RejectsOutsideRegime) {
  EXPECT_THROW(ModelParams(0.0, 0.0, 3.0), InvalidParams);
  EXPECT_THROW(ModelParams(1.0, -0.1, 3.0), InvalidParams);
  EXPECT_THROW(ModelParams(1.0, 1.0, 3.0), InvalidParams);
  EXPECT_THROW(ModelParams(1.0, 2.0, 3.0), InvalidParams);
  EXPECT_THROW(ModelParams(1.0, 0.5, 1.0), InvalidParams);
  EXPECT_THROW(ModelParams(std::nan(""), 0.5, 3.0), InvalidParams);
}

TEST(ModelParams, FromRatio) {
  const ModelParams mp = ModelParams::from_ratio(4.0, 0.25, 2.5);
  EXPECT_EQ(mp.b(), 1.0);
  EXPECT_EQ(mp.mu(), 0.25);
  EXPECT_THROW(ModelParams::from_ratio(1.0, 1.0, 3.0), InvalidParams);
}

TEST(WaveContext, DerivedCoefficients) {
  const WaveContext ctx(ModelParams(2.0, 1.0, 3.0), 0.5);
  EXPECT_DOUBLE_EQ(ctx.mass_coeff(), 0.75);
  EXPECT_DOUBLE_EQ(ctx.gradient_coeff(), 1.75);
  EXPECT_DOUBLE_EQ(ctx.width(), std::sqrt(1.75 / 0.75));
}

TEST(WaveContext, RejectsSupersonic) {
  const ModelParams mp(1.0, 0.0, 3.0);
  EXPECT_THROW(WaveContext(mp, 1.0), InvalidParams);
  EXPECT_THROW(WaveContext(mp, -1.1), InvalidParams);
  EXPECT_THROW(WaveContext(mp, std::numeric_limits<double>::infinity()), InvalidParams);
}

TEST(SignedPower, OddExtension) {
  for (double p : {1.5, 2.0, 2.7, 3.0, 5.0}) {
    EXPECT_NEAR(signed_power(-0.7, p), -std::pow(0.7, p), 1e-15) << p;
    EXPECT_NEAR(signed_power(0.7, p), std::pow(0.7, p), 1e-15) << p;
    EXPECT_EQ(signed_power(0.0, p), 0.0);
  }
}

TEST(Grid, SpacingAndPoints) {
  const Grid g(80.0, 1024);
  EXPECT_DOUBLE_EQ(g.dx() * 1024, 80.0);
  EXPECT_DOUBLE_EQ(g.x(0), -40.0);
  EXPECT_DOUBLE_EQ(g.x(512), 0.0);
  EXPECT_EQ(g.points().size(), 1024u);
}

TEST(Grid, WavenumbersFollowDiscreteConvention) {
  const Grid g(10.0, 64);
  EXPECT_EQ(g.spectrum_size(), 33u);
  EXPECT_DOUBLE_EQ(g.wavenumber(0), 0.0);
  EXPECT_DOUBLE_EQ(g.wavenumber(3), 2.0 * std::numbers::pi * 3 / 10.0);
  EXPECT_DOUBLE_EQ(g.wavenumber(32), -std::numbers::pi * 64 / 10.0);
  EXPECT_DOUBLE_EQ(g.first_mode(), 2.0 * std::numbers::pi / 10.0);
  EXPECT_DOUBLE_EQ(g.max_wavenumber(), std::numbers::pi * 64 / 10.0);
  EXPECT_EQ(g.dealias_cutoff(), 22u);
}

TEST(Grid, RejectsBadSizes) {
  EXPECT_THROW(Grid(10.0, 32), InvalidParams);
  EXPECT_THROW(Grid(10.0, 100), InvalidParams);
  EXPECT_THROW(Grid(0.0, 64), InvalidParams);
  EXPECT_THROW(Grid(-1.0, 64), InvalidParams);
}
