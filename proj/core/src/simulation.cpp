#include "ddwave/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ddwave/errors.hpp"

namespace ddwave {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Completed: return "completed";
    case Verdict::BlowUpDetected: return "blow_up_detected";
    case Verdict::StepRejected: return "step_rejected";
  }
  return "unknown";
}

double max_linear_frequency(const ModelParams& params, const Grid& grid) {
  double omega = 0.0;
  for (std::size_t k = 0; k < grid.nyquist_index(); ++k) {
    const double xi = grid.wavenumber(k);
    const double xi2 = xi * xi;
    omega = std::max(omega, std::abs(xi) * std::sqrt((1.0 + params.a() * xi2) / (1.0 + params.b() * xi2)));
  }
  return omega;
}

double stability_bound(const ModelParams& params, const Grid& grid) {
  return 2.0 * std::numbers::sqrt2 / max_linear_frequency(params, grid);
}

double default_time_step(const ModelParams& params, const Grid& grid, double cfl_safety) {
  return cfl_safety * std::numbers::pi / max_linear_frequency(params, grid);
}

SpectralSolver::SpectralSolver(const ModelParams& params, const Grid& grid, bool dealias)
    : params_(params), grid_(grid), dealias_(dealias), fft_(grid.size()) {
  const std::size_t m = grid.spectrum_size();
  ik_.resize(m);
  stiffness_.resize(m);
  inv_helm_.resize(m);
  mask_.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double xi = grid.wavenumber(k);
    ik_[k] = k == grid.nyquist_index() ? Complex(0.0) : Complex(0.0, xi);
    stiffness_[k] = 1.0 + params.a() * xi * xi;
    inv_helm_[k] = 1.0 / (1.0 + params.b() * xi * xi);
    mask_[k] = (!dealias_ || k < grid.dealias_cutoff()) ? 1.0 : 0.0;
  }
  phys_.resize(grid.size());
  nl_.resize(m);
  for (int s = 0; s < 4; ++s) {
    ku_[s].resize(m);
    kw_[s].resize(m);
    kv_[s].resize(m);
  }
  tmp_u_.resize(m);
  tmp_w_.resize(m);
}

SpectralSolver::Modes SpectralSolver::to_modes(const StatePair& state) const {
  if (state.u.size() != grid_.size() || state.w.size() != grid_.size()) {
    throw InvalidParams("state does not match solver grid");
  }
  Modes m;
  m.u = fft_.forward(state.u);
  m.w = fft_.forward(state.w);
  m.t = state.t;
  return m;
}

StatePair SpectralSolver::to_state(const Modes& modes) const {
  return {fft_.inverse(modes.u), fft_.inverse(modes.w), modes.t};
}

void SpectralSolver::rhs_modes(const Spectrum& u, const Spectrum& w, Spectrum& du, Spectrum& dw) {
  const std::size_t m = u.size();
  for (std::size_t k = 0; k < m; ++k) {
    du[k] = ik_[k] * w[k];
    nl_[k] = u[k] * mask_[k];
  }
  fft_.inverse(nl_, phys_);
  const double p = params_.p();
  for (double& x : phys_) {
    x = signed_power(x, p);
    if (!std::isfinite(x)) throw NonFinite("nonlinearity is not finite");
  }
  fft_.forward(phys_, nl_);
  for (std::size_t k = 0; k < m; ++k) {
    dw[k] = ik_[k] * (stiffness_[k] * u[k] - mask_[k] * nl_[k]) * inv_helm_[k];
  }
}

std::pair<std::vector<double>, std::vector<double>> SpectralSolver::rhs(const StatePair& state) {
  const Modes m = to_modes(state);
  Spectrum du(m.u.size());
  Spectrum dw(m.u.size());
  rhs_modes(m.u, m.w, du, dw);
  auto out = std::make_pair(fft_.inverse(du), fft_.inverse(dw));
  for (std::size_t i = 0; i < out.first.size(); ++i) {
    if (!std::isfinite(out.first[i]) || !std::isfinite(out.second[i])) throw NonFinite("rhs is not finite");
  }
  return out;
}

void SpectralSolver::step(Modes& modes, double dt) {
  const std::size_t m = modes.u.size();
  const bool track_v = !modes.v.empty();
  static constexpr double kStageWeight[3] = {0.5, 0.5, 1.0};

  rhs_modes(modes.u, modes.w, ku_[0], kw_[0]);
  if (track_v) kv_[0] = modes.w;
  for (int s = 1; s < 4; ++s) {
    const double h = kStageWeight[s - 1] * dt;
    for (std::size_t k = 0; k < m; ++k) {
      tmp_u_[k] = modes.u[k] + h * ku_[s - 1][k];
      tmp_w_[k] = modes.w[k] + h * kw_[s - 1][k];
    }
    rhs_modes(tmp_u_, tmp_w_, ku_[s], kw_[s]);
    if (track_v) kv_[s] = tmp_w_;
  }
  const double sixth = dt / 6.0;
  for (std::size_t k = 0; k < m; ++k) {
    modes.u[k] += sixth * (ku_[0][k] + 2.0 * ku_[1][k] + 2.0 * ku_[2][k] + ku_[3][k]);
    modes.w[k] += sixth * (kw_[0][k] + 2.0 * kw_[1][k] + 2.0 * kw_[2][k] + kw_[3][k]);
    if (track_v) modes.v[k] += sixth * (kv_[0][k] + 2.0 * kv_[1][k] + 2.0 * kv_[2][k] + kv_[3][k]);
  }
  modes.t += dt;
}

StatePair step_rk4(const StatePair& state, const ModelParams& params, const Grid& grid, double dt, bool dealias) {
  SpectralSolver solver(params, grid, dealias);
  SpectralSolver::Modes modes = solver.to_modes(state);
  solver.step(modes, dt);
  return solver.to_state(modes);
}

StatePair traveling_wave_state(const WaveContext& ctx, const Grid& grid) {
  StatePair s;
  s.u.resize(grid.size());
  s.w.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    s.u[i] = solitary_profile(ctx, grid.x(i));
    s.w[i] = -ctx.c() * s.u[i];
  }
  return s;
}

double h1_pair_norm(const StatePair& state, const Grid& grid) {
  auto& fft = transform_for(grid.size());
  return std::sqrt(h1_norm_squared(fft.forward(state.u), grid) + h1_norm_squared(fft.forward(state.w), grid));
}

namespace {

// (i xi)^{-1} f_hat with the DC and Nyquist bins zeroed.
Spectrum antiderivative(const Spectrum& f, const Grid& grid) {
  Spectrum v(f.size());
  for (std::size_t k = 1; k < f.size(); ++k) {
    if (k == grid.nyquist_index()) continue;
    v[k] = f[k] / Complex(0.0, grid.wavenumber(k));
  }
  return v;
}

// Half-spectrum translate factor for f(x - s); the Nyquist bin stays real.
Complex shift_factor(const Grid& grid, std::size_t k, double s) {
  const double xi = grid.wavenumber(k);
  if (k == grid.nyquist_index()) return Complex(std::cos(xi * s), 0.0);
  return std::polar(1.0, -xi * s);
}

// Best-translate H^1 x H^1 distance to the orbit of Phi_c.
class OrbitMeter {
 public:
  OrbitMeter(const WaveContext& ctx, const Grid& grid) : ctx_(ctx), grid_(grid), fft_(transform_for(grid.size())) {
    std::vector<double> phi(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) phi[i] = solitary_profile(ctx, grid.x(i));
    phi_hat_ = fft_.forward(phi);
  }

  struct Result {
    double shift = 0.0;
    double distance = 0.0;
  };

  Result measure(const StatePair& state) {
    const std::size_t n = grid_.size();
    const std::size_t m = grid_.spectrum_size();
    const double c = ctx_.c();
    const Spectrum u_hat = fft_.forward(state.u);
    const Spectrum w_hat = fft_.forward(state.w);

    // <u - c w, phi(. - s)>_{H^1} = Re sum_k weight_k conj(g_k) phi_k e^{-i xi s}.
    Spectrum weighted(m);
    for (std::size_t k = 0; k < m; ++k) {
      if (k == grid_.nyquist_index()) continue;
      const double xi = grid_.wavenumber(k);
      weighted[k] = (1.0 + xi * xi) * std::conj(u_hat[k] - c * w_hat[k]) * phi_hat_[k];
    }

    // Coarse peak over grid translates via one inverse transform.
    Spectrum conj_weighted(m);
    for (std::size_t k = 0; k < m; ++k) conj_weighted[k] = std::conj(weighted[k]);
    const std::vector<double> coarse = fft_.inverse(conj_weighted);
    const std::size_t j = static_cast<std::size_t>(std::max_element(coarse.begin(), coarse.end()) - coarse.begin());
    double s0 = static_cast<double>(j) * grid_.dx();
    if (s0 > 0.5 * grid_.length()) s0 -= grid_.length();

    auto corr = [&](double s, int deriv) {
      double sum = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        const double xi = grid_.wavenumber(k);
        Complex term = weighted[k] * std::polar(1.0, -xi * s);
        if (deriv == 1) term *= Complex(0.0, -xi);
        if (deriv == 2) term *= -xi * xi;
        sum += spectral_multiplicity(k, n) * term.real();
      }
      return sum;
    };

    // Golden-section refinement on one cell either side of the coarse peak.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = s0 - grid_.dx();
    double hi = s0 + grid_.dx();
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = corr(x1, 0);
    double f2 = corr(x2, 0);
    for (int it = 0; it < 80 && hi - lo > 1e-14 * grid_.length(); ++it) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + inv_phi * (hi - lo);
        f2 = corr(x2, 0);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - inv_phi * (hi - lo);
        f1 = corr(x1, 0);
      }
    }
    double s = 0.5 * (lo + hi);

    // Newton polish on the stationarity condition.
    for (int it = 0; it < 4; ++it) {
      const double d2 = corr(s, 2);
      if (!(d2 < 0.0)) break;
      const double step = corr(s, 1) / d2;
      if (std::abs(step) > grid_.dx()) break;
      s -= step;
      if (std::abs(step) < 1e-16 * grid_.length()) break;
    }

    double dist_sq = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      const Complex shifted = phi_hat_[k] * shift_factor(grid_, k, s);
      const double xi = k == grid_.nyquist_index() ? 0.0 : grid_.wavenumber(k);
      dist_sq += spectral_multiplicity(k, n) * (1.0 + xi * xi) *
                 (std::norm(u_hat[k] - shifted) + std::norm(w_hat[k] + c * shifted));
    }
    return {s, std::sqrt(dist_sq * grid_.dx() / static_cast<double>(n))};
  }

 private:
  WaveContext ctx_;
  Grid grid_;
  FourierTransform& fft_;
  Spectrum phi_hat_;
};

double sup_abs(std::span<const double> f) {
  double m = 0.0;
  for (double v : f) {
    if (!std::isfinite(v)) return std::numeric_limits<double>::infinity();
    m = std::max(m, std::abs(v));
  }
  return m;
}

}  // namespace

PerturbedData perturbed_initial_data(const WaveContext& ctx, double lambda, double h_cut, const Grid& grid) {
  if (!(lambda >= 1.0) || !std::isfinite(lambda)) throw InvalidParams("lambda must be >= 1");
  if (!(h_cut >= 0.0)) throw InvalidParams("h_cut must be >= 0");
  if (!(h_cut < 10.0 * grid.first_mode())) throw InvalidParams("h_cut must be below ten times the first grid mode");

  auto& fft = transform_for(grid.size());
  const ProfileField profile = profile_on_grid(ctx, grid);
  const Spectrum phi_hat = fft.forward(profile.values);

  const double cut = h_cut * (1.0 - 1e-12);
  const bool removes_any = cut >= grid.first_mode() * (1.0 - 1e-12);
  Spectrum u_hat(phi_hat.size());
  for (std::size_t k = 0; k < phi_hat.size(); ++k) {
    const bool kept = !removes_any || std::abs(grid.wavenumber(k)) >= cut;
    u_hat[k] = kept ? lambda * phi_hat[k] : Complex(0.0);
  }

  PerturbedData out;
  out.state.u = fft.inverse(u_hat);
  out.state.w.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out.state.w[i] = -ctx.c() * out.state.u[i];
  out.v0 = fft.inverse(antiderivative(u_hat, grid));

  Spectrum diff(u_hat.size());
  for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = u_hat[k] - phi_hat[k];
  out.distance = std::sqrt((1.0 + ctx.c2()) * h1_norm_squared(diff, grid));
  return out;
}

double orbital_distance(const StatePair& state, const WaveContext& ctx, const Grid& grid) {
  return OrbitMeter(ctx, grid).measure(state).distance;
}

double orbital_shift(const StatePair& state, const WaveContext& ctx, const Grid& grid) {
  return OrbitMeter(ctx, grid).measure(state).shift;
}

double levine_h(const StatePair& state, std::span<const double> v, const ModelParams& params, const Grid& grid) {
  double vv = 0.0;
  double uu = 0.0;
  for (double x : v) vv += x * x;
  for (double x : state.u) uu += x * x;
  return 0.5 * grid.dx() * (vv + params.b() * uu);
}

SimRecord integrate(const StatePair& state0, const ModelParams& params, const Grid& grid, const SimConfig& cfg,
                    const RunExtras& extras) {
  if (!(cfg.t_end > 0.0)) throw InvalidParams("t_end must be > 0");
  if (!(cfg.dt >= 0.0)) throw InvalidParams("dt must be > 0 (or 0 for automatic)");
  if (!(cfg.blow_threshold > 1.0)) throw InvalidParams("blow_threshold must be > 1");
  if (cfg.record_every == 0) throw InvalidParams("record_every must be >= 1");

  const double bound = stability_bound(params, grid);
  double dt = cfg.dt > 0.0 ? cfg.dt : default_time_step(params, grid, cfg.cfl_safety);
  if (dt > bound) {
    std::ostringstream msg;
    msg << "dt=" << dt << " exceeds the RK4 stability bound " << bound;
    throw StepRejected(msg.str(), dt, bound);
  }
  const auto n_steps = static_cast<std::size_t>(std::max(1.0, std::ceil(cfg.t_end / dt - 1e-9)));
  dt = cfg.t_end / static_cast<double>(n_steps);

  SpectralSolver solver(params, grid, cfg.dealias);
  FourierTransform fft(grid.size());
  SpectralSolver::Modes modes = solver.to_modes(state0);
  modes.v = extras.v0.empty() ? antiderivative(modes.u, grid) : fft.forward(extras.v0);

  std::optional<OrbitMeter> meter;
  if (extras.reference) meter.emplace(*extras.reference, grid);

  SimRecord rec;
  rec.dt = dt;
  const double sup0 = sup_abs(state0.u);

  auto record = [&](const StatePair& s, std::span<const double> v) {
    const EnergyMomentum em = energy_momentum(s, grid, params);
    rec.times.push_back(s.t);
    rec.energy.push_back(em.energy);
    rec.momentum.push_back(em.momentum);
    rec.sup_u.push_back(sup_abs(s.u));
    rec.levine_h.push_back(levine_h(s, v, params, grid));
    if (meter) rec.orbital_dist.push_back(meter->measure(s).distance);
  };

  StatePair current = state0;
  std::vector<double> v = fft.inverse(modes.v);
  record(current, v);

  for (std::size_t step = 1; step <= n_steps; ++step) {
    const double t = static_cast<double>(step) * dt;
    try {
      solver.step(modes, dt);
    } catch (const NonFinite&) {
      rec.verdict = Verdict::BlowUpDetected;
      rec.blowup_time = t;
      break;
    }
    modes.t = t;
    rec.steps = step;
    const std::vector<double> u = fft.inverse(modes.u);
    const double sup = sup_abs(u);
    const bool finite = std::isfinite(sup);
    const bool grew = sup0 > 0.0 && sup >= cfg.blow_threshold * sup0;
    if (finite && (grew || step % cfg.record_every == 0 || step == n_steps)) {
      current = solver.to_state(modes);
      v = fft.inverse(modes.v);
      record(current, v);
    }
    if (!finite || grew) {
      rec.verdict = Verdict::BlowUpDetected;
      rec.blowup_time = t;
      break;
    }
  }
  rec.final_state = std::move(current);
  return rec;
}

}  // namespace ddwave
