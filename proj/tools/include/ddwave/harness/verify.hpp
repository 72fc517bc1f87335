#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ddwave/params.hpp"
#include "ddwave/stability.hpp"

namespace ddwave::harness {

/// Functions the verification suite exercises. Tests swap one out to check
/// that the suite notices a broken kernel.
struct VerifyKernels {
  std::function<double(const WaveContext&)> sigma = [](const WaveContext& ctx) { return sigma_residual(ctx); };
  std::function<GCoefficients(double, double)> coefficients = [](double p, double mu) {
    return g_coefficients(p, mu);
  };
};

struct InvariantResult {
  std::string name;
  std::size_t samples = 0;
  double worst = 0.0;      ///< largest residual, or number of violations for counting checks
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<InvariantResult> results;

  bool passed() const;
  std::vector<std::string> failures() const;
};

inline constexpr std::uint64_t kDefaultVerifySeed = 20240601;

/// Runs every property check with random samples drawn from `seed`.
/// Deterministic for a fixed seed.
VerifyReport run_verify(std::uint64_t seed, const VerifyKernels& kernels = {});

}  // namespace ddwave::harness
