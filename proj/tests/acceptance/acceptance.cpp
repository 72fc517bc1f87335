// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ddwave/simulation.hpp"
#include "ddwave/solitary_wave.hpp"
#include "ddwave/stability.hpp"
#include "oracles.hpp"

using namespace ddwave;

namespace {

struct Verdict2 {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Verdict2 threshold_limits() {
  double worst = 0.0;
  for (double p : {2.0, 3.0, 4.0, 5.0, 7.0}) {
    worst = std::max(worst, std::abs(critical_velocity_squared(ModelParams(1.0, 0.0, p)) -
                                     (p - 1.0) / (2.0 * (p + 1.0))));
    worst = std::max(worst,
                     std::abs(critical_velocity_squared_unchecked(1.0, 1.0, p) - (p - 1.0) / (p + 3.0)));
  }
  return {worst <= 1e-12, "max error " + fmt("%.3g", worst)};
}

Verdict2 sigma_identity() {
  std::mt19937_64 rng(1001);
  auto u = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double a = u(0.1, 10.0);
    const ModelParams mp(a, u(0.0, 0.99) * a, u(1.05, 12.0));
    const double c = u(0.01, 0.99) * (u(0.0, 1.0) < 0.5 ? -1.0 : 1.0);
    const double s = std::abs(sigma_residual(WaveContext(mp, c)));
    if (!(s <= worst)) worst = std::isnan(s) ? INFINITY : s;
  }
  return {worst <= 1e-9, "max |sigma| " + fmt("%.3g", worst) + " over 10000 samples"};
}

Verdict2 pohozaev_grid() {
  double worst_pz = 0.0;
  double worst_ode = 0.0;
  int count = 0;
  for (double a : {0.5, 1.0, 2.0, 3.0, 4.0}) {
    for (double mu : {0.0, 0.2, 0.4, 0.6, 0.8}) {
      for (double p : {1.5, 2.0, 3.0, 5.0, 7.0}) {
        for (double c : {0.0, 0.2, 0.4, 0.6, 0.8}) {
          const WaveContext ctx(ModelParams(a, mu * a, p), c);
          const ProfileField field = profile_on_grid(ctx, Grid(suggested_length(ctx), 1024));
          const PohozaevResiduals r = pohozaev_residuals(field, ctx);
          worst_pz = std::max({worst_pz, r.p1_rel, r.p2_rel});
          worst_ode = std::max(worst_ode, ode_residual(field, ctx));
          ++count;
        }
      }
    }
  }
  return {worst_pz <= 1e-8 && worst_ode <= 1e-8, std::to_string(count) + " profiles, Pohozaev " +
                                                     fmt("%.3g", worst_pz) + ", ODE " + fmt("%.3g", worst_ode)};
}

Verdict2 g_identities() {
  double worst = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double p = 1.05 + 10.95 * i / 200.0;
    for (int j = 0; j <= 50; ++j) {
      const double mu = j / 50.0;
      const double expected = (mu - 1.0) * (mu - 1.0) * (p + 3.0) * (5.0 - p);
      worst = std::max(worst, std::abs(g_eval(1.0, p, mu) - expected) / ((p + 3.0) * (p + 3.0)));
    }
  }
  for (int j = 0; j <= 50; ++j) {
    const double mu = j / 50.0;
    const double scale = g_coefficients(5.0, mu).scale();
    for (int k = 0; k <= 300; ++k) {
      const double z = 3.0 * k / 300.0;
      const double expected = 16.0 * (z - 1.0) * (6.0 * mu * mu * z * z - 9.0 * mu * z + mu + 2.0);
      worst = std::max(worst, std::abs(g_eval(z, 5.0, mu) - expected) / (scale * std::max(1.0, z * z * z)));
    }
  }
  for (int i = 0; i <= 200; ++i) {
    const double p = 1.05 + 10.95 * i / 200.0;
    const double scale = g_coefficients(p, 1.0).scale();
    for (int k = 0; k <= 300; ++k) {
      const double z = 3.0 * k / 300.0;
      const double expected = 2.0 * (p + 1.0) * (p + 3.0) * (z - (p - 1.0) / (p + 3.0)) * (z - 1.0) * (z - 1.0);
      worst = std::max(worst, std::abs(g_eval(z, p, 1.0) - expected) / (scale * std::max(1.0, z * z * z)));
    }
  }
  return {worst <= 1e-12, "max relative error " + fmt("%.3g", worst)};
}

Verdict2 closed_form_roots() {
  double worst = 0.0;
  for (double mu : {0.4, 0.6, 0.8}) {
    const auto roots = roots_in_unit_interval(5.0, mu);
    if (roots.size() != 1) return {false, "expected one root at p=5, mu=" + fmt("%g", mu)};
    worst = std::max(worst, std::abs(roots[0] - (9.0 - std::sqrt(33.0 - 24.0 * mu)) / (12.0 * mu)));
  }
  bool exact = true;
  for (double p : {2.0, 3.0, 4.0}) {
    const auto roots = roots_in_unit_interval(p, 0.0);
    exact = exact && roots.size() == 1 && roots[0] == (p - 1.0) / 4.0;
  }
  return {worst <= 1e-10 && exact,
          "p=5 max error " + fmt("%.3g", worst) + ", mu=0 roots " + (exact ? "exact" : "inexact")};
}

Verdict2 second_derivative_sign() {
  std::mt19937_64 rng(1006);
  auto u = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  constexpr double h = 1e-4;
  int agree = 0;
  int taken = 0;
  while (taken < 500) {
    const double a = u(0.2, 5.0);
    const WaveContext ctx(ModelParams(a, u(0.0, 0.95) * a, u(1.1, 9.0)), u(0.02, 0.95));
    const auto roots = roots_in_unit_interval(ctx.p(), ctx.params().mu());
    if (std::any_of(roots.begin(), roots.end(), [&](double r) { return std::abs(ctx.c2() - r) < 10.0 * h; })) {
      continue;
    }
    ++taken;
    const bool fd_positive = d_second_derivative_fd(ctx, h) > 0.0;
    if (fd_positive == (g_eval(ctx.c2(), ctx.p(), ctx.params().mu()) > 0.0)) ++agree;
  }
  return {agree >= 499, std::to_string(agree) + "/500 agree"};
}

double relative_drift(const std::vector<double>& series) {
  double worst = 0.0;
  for (double v : series) worst = std::max(worst, std::abs(v - series.front()) / std::abs(series.front()));
  return worst;
}

Verdict2 reference_run() {
  const ModelParams mp(2.0, 1.0, 3.0);
  const WaveContext ctx(mp, 0.8);
  const Grid grid(120.0, 1024);
  const oracle::ProfileShape shape = oracle::profile_shape(2.0, 1.0, 3.0, 0.8);
  auto run = [&](double dt, double& e_drift, double& m_drift) {
    SimConfig cfg;
    cfg.t_end = 10.0;
    cfg.dt = dt;
    const SimRecord rec = integrate(traveling_wave_state(ctx, grid), mp, grid, cfg);
    e_drift = relative_drift(rec.energy);
    m_drift = relative_drift(rec.momentum);
    double err = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      double x = grid.x(i) - 0.8 * rec.final_state.t;
      x -= grid.length() * std::round(x / grid.length());
      err = std::max(err, std::abs(rec.final_state.u[i] - oracle::profile(shape, x)));
    }
    return err;
  };
  double e_drift = 0.0;
  double m_drift = 0.0;
  double unused = 0.0;
  const double err = run(0.0, e_drift, m_drift);
  const double fine = run(0.5 * default_time_step(mp, grid), unused, unused);
  const double ratio = err / fine;
  const bool pass = e_drift <= 1e-6 && m_drift <= 1e-6 && err <= 1e-5 && ratio >= 12.0;
  return {pass, "E drift " + fmt("%.3g", e_drift) + ", M drift " + fmt("%.3g", m_drift) + ", translate error " +
                    fmt("%.3g", err) + ", dt-halving ratio " + fmt("%.2f", ratio)};
}

struct DichotomyRun {
  Verdict verdict;
  double blowup_time;
  double sup_ratio;
  double orbital_ratio;
  double k_alpha;
  double energy_gap;  // E + cM - d(c)
};

DichotomyRun dichotomy_run(double p, double c_sq, std::size_t n) {
  const ModelParams mp(2.0, 1.0, p);
  const WaveContext ctx(mp, std::sqrt(c_sq));
  const Grid grid(suggested_length(ctx), n);
  const PerturbedData data = perturbed_initial_data(ctx, 1.05, 0.0, grid);
  DichotomyRun out{};
  if (c_sq < critical_velocity_squared(mp)) {
    const FunctionalReport r = functionals(data.state, grid, ctx, alpha_and_C(ctx).alpha);
    out.k_alpha = r.K_alpha;
    out.energy_gap = r.E + ctx.c() * r.M - d_of_c(ctx, DMode::ClosedForm);
  }
  SimConfig cfg;
  cfg.t_end = 50.0;
  cfg.record_every = 5;
  RunExtras extras;
  extras.reference = ctx;
  extras.v0 = data.v0;
  const SimRecord rec = integrate(data.state, mp, grid, cfg, extras);
  out.verdict = rec.verdict;
  out.blowup_time = rec.blowup_time;
  out.sup_ratio = *std::max_element(rec.sup_u.begin(), rec.sup_u.end()) / rec.sup_u.front();
  out.orbital_ratio = *std::max_element(rec.orbital_dist.begin(), rec.orbital_dist.end()) / rec.orbital_dist.front();
  return out;
}

// c^2 at the middle of the orbital-stability interval.
double stable_speed_sq(double p) {
  const RegionReport r = classify_region(p, 0.5);
  return 0.5 * (r.interval->first + r.interval->second);
}

struct DichotomyResults {
  std::vector<DichotomyRun> unstable;
  std::string text;
  bool pass = true;
};

DichotomyResults dichotomy() {
  DichotomyResults res;
  bool resolution_stable = true;
  for (double p : {2.0, 3.0}) {
    const double c0_sq = critical_velocity_squared(ModelParams(2.0, 1.0, p));
    const DichotomyRun blow = dichotomy_run(p, 0.5 * c0_sq, 1024);
    const DichotomyRun blow_fine = dichotomy_run(p, 0.5 * c0_sq, 2048);
    const DichotomyRun calm = dichotomy_run(p, stable_speed_sq(p), 1024);
    const DichotomyRun calm_fine = dichotomy_run(p, stable_speed_sq(p), 2048);
    res.unstable.push_back(blow);
    res.unstable.push_back(blow_fine);

    const bool blew = blow.verdict == Verdict::BlowUpDetected && blow.blowup_time < 50.0 && blow.sup_ratio >= 50.0;
    const bool held = calm.verdict == Verdict::Completed && calm.orbital_ratio <= 5.0;
    resolution_stable = resolution_stable && blow.verdict == blow_fine.verdict && calm.verdict == calm_fine.verdict;
    res.pass = res.pass && blew && held;
    res.text += "p=" + fmt("%g", p) + ": blow-up t=" + fmt("%.3f", blow.blowup_time) + " (2N " +
                fmt("%.3f", blow_fine.blowup_time) + "), stable c^2=" + fmt("%.4f", stable_speed_sq(p)) +
                " orbital ratio " + fmt("%.2f", calm.orbital_ratio) + " (2N " + fmt("%.2f", calm_fine.orbital_ratio) +
                "); ";
  }
  res.pass = res.pass && resolution_stable;
  res.text += resolution_stable ? "verdicts agree at N and 2N" : "verdicts differ between N and 2N";
  return res;
}

Verdict2 membership(const std::vector<DichotomyRun>& runs) {
  double worst_k = -INFINITY;
  double worst_gap = -INFINITY;
  for (const auto& r : runs) {
    worst_k = std::max(worst_k, r.k_alpha);
    worst_gap = std::max(worst_gap, r.energy_gap);
  }
  return {!runs.empty() && worst_k < 0.0 && worst_gap < 0.0,
          "max K_alpha " + fmt("%.4g", worst_k) + ", max E+cM-d " + fmt("%.4g", worst_gap)};
}

Verdict2 region_classification() {
  int wrong = 0;
  int cells = 0;
  std::string misses;
  for (double p : {2.0, 3.0, 4.0, 4.9, 5.1, 6.0, 8.0}) {
    const double mu_c = p > 5.0 ? critical_mu(p) : 0.0;
    for (int j = 1; j <= 19; ++j) {
      const double mu = 0.05 * j;
      const RegionKind kind = classify_region(p, mu).kind;
      RegionKind expected = RegionKind::UpToOne;
      if (p > 5.0) expected = mu < mu_c ? RegionKind::Empty : RegionKind::Window;
      ++cells;
      if (kind != expected) {
        ++wrong;
        misses += " (" + fmt("%g", p) + "," + fmt("%g", mu) + ")";
      }
    }
  }
  // Small and large mu must both occur above five for the dichotomy to be observed.
  const bool both = classify_region(6.0, 0.05).kind == RegionKind::Empty &&
                    classify_region(6.0, 0.95).kind == RegionKind::Window &&
                    classify_region(8.0, 0.05).kind == RegionKind::Empty &&
                    classify_region(8.0, 0.95).kind == RegionKind::Window;
  return {wrong == 0 && both, std::to_string(cells - wrong) + "/" + std::to_string(cells) + " cells" + misses};
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](const char* id, const char* title, const Verdict2& v) {
    std::printf("%s %s %s: %s\n", v.pass ? "PASS" : "FAIL", id, title, v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failures;
  };
  auto guarded = [&](const char* id, const char* title, const std::function<Verdict2()>& check) {
    try {
      report(id, title, check());
    } catch (const std::exception& e) {
      report(id, title, {false, std::string("exception: ") + e.what()});
    }
  };

  guarded("A01", "threshold limits", threshold_limits);
  guarded("A02", "sigma identity", sigma_identity);
  guarded("A03", "Pohozaev and ODE residuals", pohozaev_grid);
  guarded("A04", "G identities", g_identities);
  guarded("A05", "closed-form roots", closed_form_roots);
  guarded("A06", "second derivative sign", second_derivative_sign);
  guarded("A07", "reference traveling wave", reference_run);

  DichotomyResults dich;
  try {
    dich = dichotomy();
  } catch (const std::exception& e) {
    dich.pass = false;
    dich.text = std::string("exception: ") + e.what();
  }
  report("A08", "instability dichotomy", {dich.pass, dich.text});
  report("A09", "blow-up data membership", membership(dich.unstable));
  guarded("A10", "region classification", region_classification);

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
