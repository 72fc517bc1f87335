#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ddwave/fourier.hpp"
#include "ddwave/grid.hpp"
#include "ddwave/params.hpp"
#include "ddwave/solitary_wave.hpp"

namespace ddwave {

struct SimConfig {
  double dt = 0.0;  ///< 0 selects cfl_safety * pi / omega_max
  double t_end = 10.0;
  bool dealias = true;
  double blow_threshold = 50.0;  ///< multiple of sup|u0| that counts as blow-up
  std::size_t record_every = 10;
  double cfl_safety = 0.4;
};

enum class Verdict { Completed, BlowUpDetected, StepRejected };

std::string_view to_string(Verdict verdict);

struct SimRecord {
  std::vector<double> times;
  std::vector<double> energy;
  std::vector<double> momentum;
  std::vector<double> sup_u;
  std::vector<double> levine_h;
  std::vector<double> orbital_dist;  ///< empty unless a reference wave was supplied
  Verdict verdict = Verdict::Completed;
  double blowup_time = std::numeric_limits<double>::quiet_NaN();
  double dt = 0.0;
  std::size_t steps = 0;
  StatePair final_state;  ///< last finite state reached
};

/// Largest angular frequency xi sqrt((1 + a xi^2)/(1 + b xi^2)) on the grid.
double max_linear_frequency(const ModelParams& params, const Grid& grid);

/// RK4 is stable on the imaginary axis up to |lambda dt| = 2 sqrt(2).
double stability_bound(const ModelParams& params, const Grid& grid);

/// cfl_safety * pi / omega_max; equals cfl_safety * dx / max phase speed when b > 0.
double default_time_step(const ModelParams& params, const Grid& grid, double cfl_safety = 0.4);

/// Method-of-lines right-hand side and RK4 stepper in Fourier space.
///
/// State is carried as half spectra of (u, w) and, optionally, of the
/// accumulator v with v_t = w. Not thread-safe; one solver per run.
class SpectralSolver {
 public:
  struct Modes {
    Spectrum u;
    Spectrum w;
    Spectrum v;  ///< empty when v is not tracked
    double t = 0.0;
  };

  SpectralSolver(const ModelParams& params, const Grid& grid, bool dealias = true);

  const Grid& grid() const noexcept { return grid_; }
  const ModelParams& params() const noexcept { return params_; }

  Modes to_modes(const StatePair& state) const;
  StatePair to_state(const Modes& modes) const;

  /// (du/dt, dw/dt) in physical space. Throws NonFinite.
  std::pair<std::vector<double>, std::vector<double>> rhs(const StatePair& state);

  void rhs_modes(const Spectrum& u, const Spectrum& w, Spectrum& du, Spectrum& dw);
  void step(Modes& modes, double dt);

 private:
  ModelParams params_;
  Grid grid_;
  bool dealias_;
  std::vector<Complex> ik_;
  std::vector<double> stiffness_;   // 1 + a xi^2
  std::vector<double> inv_helm_;    // 1 / (1 + b xi^2)
  std::vector<double> mask_;
  mutable FourierTransform fft_;
  std::vector<double> phys_;
  Spectrum nl_;
  Spectrum ku_[4], kw_[4], kv_[4];
  Spectrum tmp_u_, tmp_w_;
};

/// One classical RK4 step of the physical state.
StatePair step_rk4(const StatePair& state, const ModelParams& params, const Grid& grid, double dt,
                   bool dealias = true);

/// Phi_c = (phi_c, -c phi_c) sampled on the grid.
StatePair traveling_wave_state(const WaveContext& ctx, const Grid& grid);

/// ||(u, w)||_{H^1 x H^1}.
double h1_pair_norm(const StatePair& state, const Grid& grid);

struct PerturbedData {
  StatePair state;
  std::vector<double> v0;  ///< antiderivative accumulator with (v0)_x = mean-free u0
  double distance = 0.0;   ///< ||U0 - Phi_c||_{H^1 x H^1}
};

/// U0 = (u0, -c u0) with u0_hat = lambda phi_hat on |xi| >= h_cut. When
/// h_cut is below the first nonzero mode nothing is removed, so the DC
/// mode survives and U0 = lambda Phi_c. Throws InvalidParams for lambda < 1.
PerturbedData perturbed_initial_data(const WaveContext& ctx, double lambda, double h_cut, const Grid& grid);

/// min over translates s of ||(u - phi_c(. - s), w + c phi_c(. - s))||_{H^1 x H^1}.
double orbital_distance(const StatePair& state, const WaveContext& ctx, const Grid& grid);

/// Optimal translate found by orbital_distance, for diagnostics.
double orbital_shift(const StatePair& state, const WaveContext& ctx, const Grid& grid);

/// H = (||v||^2 + b ||u||^2) / 2.
double levine_h(const StatePair& state, std::span<const double> v, const ModelParams& params, const Grid& grid);

/// Optional inputs to integrate().
struct RunExtras {
  std::optional<WaveContext> reference;  ///< enables orbital_dist
  std::vector<double> v0;                ///< initial accumulator; derived from u0 when empty
};

/// Marches to t_end or until sup|u| >= blow_threshold * sup|u0| or a
/// non-finite value appears. Throws StepRejected when dt exceeds the RK4 bound.
SimRecord integrate(const StatePair& state0, const ModelParams& params, const Grid& grid, const SimConfig& cfg,
                    const RunExtras& extras = {});

}  // namespace ddwave
