#include "ddwave/harness/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ddwave/errors.hpp"
#include "ddwave/harness/output.hpp"
#include "ddwave/harness/worker_pool.hpp"
#include "ddwave/simulation.hpp"
#include "ddwave/solitary_wave.hpp"
#include "ddwave/stability.hpp"

namespace ddwave::harness {

namespace fs = std::filesystem;

namespace {

constexpr int kGCurvePoints = 512;

// Files go under one directory; every written path is remembered for the manifest.
class OutputDir {
 public:
  explicit OutputDir(fs::path root) : root_(std::move(root)) { fs::create_directories(root_); }

  fs::path claim(const std::string& relative) {
    const fs::path full = root_ / relative;
    if (full.has_parent_path()) fs::create_directories(full.parent_path());
    files_.push_back(relative);
    return full;
  }

  // The manifest lists itself so that every written file is accounted for.
  void write_manifest(FlatJson manifest) {
    const fs::path path = claim("manifest.json");
    manifest.set("outputs", files_);
    write_text_file(path, manifest.dump(0));
  }

 private:
  fs::path root_;
  std::vector<std::string> files_;
};

struct ModelOptions {
  double a = 1.0;
  std::optional<double> b;
  std::optional<double> mu;
  double p = 3.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("-a", a, "Coefficient of u_xxxx (a > 0)")->capture_default_str();
    cmd->add_option("-b", b, "Coefficient of u_xxtt (0 <= b < a); default 0");
    cmd->add_option("--mu", mu, "Dispersion ratio b/a in [0, 1), instead of -b");
    cmd->add_option("-p", p, "Nonlinearity exponent (p > 1)")->capture_default_str();
  }

  ModelParams resolve() const {
    if (b && mu) throw InvalidParams("give either -b or --mu, not both");
    if (mu) return ModelParams::from_ratio(a, *mu, p);
    return ModelParams(a, b.value_or(0.0), p);
  }
};

void describe_params(FlatJson& json, const ModelParams& mp) {
  json.set("a", mp.a()).set("b", mp.b()).set("mu", mp.mu()).set("p", mp.p());
}

std::vector<double> sorted_unique(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

// ---------------------------------------------------------------- wave

struct WaveCommand {
  ModelOptions model;
  double c = 0.0;
  std::optional<double> length;
  std::size_t n_points = 1024;
  std::optional<double> alpha;
  std::string out_dir = ".";

  void attach(CLI::App* cmd) {
    model.attach(cmd);
    cmd->add_option("-c", c, "Wave velocity, c^2 < 1")->capture_default_str();
    cmd->add_option("-L", length, "Box length; default keeps about 60 decay lengths");
    cmd->add_option("-N", n_points, "Grid points (power of two >= 64)")->capture_default_str();
    cmd->add_option("--alpha", alpha, "Multiplier for K_alpha; default from the blow-up estimate, 0 at c = 0");
    cmd->add_option("-o", out_dir, "Output directory")->capture_default_str();
  }

  int run(std::ostream& out) const {
    const ModelParams mp = model.resolve();
    const WaveContext ctx(mp, c);
    const Grid grid(length.value_or(suggested_length(ctx)), n_points);
    const ProfileField field = profile_on_grid(ctx, grid);
    const double a_mult = alpha.value_or(c != 0.0 ? alpha_and_C(ctx).alpha : 0.0);

    OutputDir dir(out_dir);
    {
      CsvWriter csv(dir.claim("profile.csv"), {"x", "phi"});
      for (std::size_t i = 0; i < grid.size(); ++i) csv.row({grid.x(i), field.values[i]});
    }

    const FunctionalReport r = functionals(field.values, grid, ctx, a_mult);
    const PohozaevResiduals poh = pohozaev_residuals(field, ctx);
    const double d_closed = d_of_c(ctx, DMode::ClosedForm);
    const double d_quad = d_of_c(ctx, DMode::Quadrature);

    FlatJson json;
    describe_params(json, mp);
    json.set("c", c)
        .set("length", grid.length())
        .set("n_points", grid.size())
        .set("v", r.V)
        .set("p1", r.P1)
        .set("p2", r.P2)
        .set("e", r.E)
        .set("m", r.M)
        .set("alpha", a_mult)
        .set("k_alpha", r.K_alpha)
        .set("l2_sq", r.norms.l2_sq)
        .set("grad_l2_sq", r.norms.grad_l2_sq)
        .set("lp1", r.norms.lp1)
        .set("pohozaev_p1_rel", poh.p1_rel)
        .set("pohozaev_p2_rel", poh.p2_rel)
        .set("ode_residual", ode_residual(field, ctx))
        .set("d_closed_form", d_closed)
        .set("d_quadrature", d_quad)
        .set("c0_sq", critical_velocity_squared(mp))
        .set("classification", std::string(to_string(classify_velocity(ctx))));
    write_text_file(dir.claim("functionals.json"), json.dump(0));

    FlatJson manifest;
    manifest.set("command", "wave");
    describe_params(manifest, mp);
    manifest.set("c", c).set("length", grid.length()).set("n_points", grid.size()).set("alpha", a_mult);
    dir.write_manifest(std::move(manifest));

    out << "d(c) closed form " << format_number(d_closed) << ", quadrature " << format_number(d_quad) << '\n';
    return kExitOk;
  }
};

// ---------------------------------------------------------------- region

FlatJson region_json(const RegionReport& r) {
  FlatJson json;
  json.set("p", r.p)
      .set("mu", r.mu)
      .set("kind", std::string(to_string(r.kind)))
      .set("root_count", r.roots_in_unit.size())
      .set("roots_in_unit", r.roots_in_unit);
  if (r.interval) {
    json.set("interval_lo", r.interval->first).set("interval_hi", r.interval->second);
  } else {
    json.set("interval_lo", nullptr).set("interval_hi", nullptr);
  }
  json.set("g_at_one", g_eval(1.0, r.p, r.mu));
  if (r.p > 5.0) {
    json.set("critical_mu", critical_mu(r.p));
  } else {
    json.set("critical_mu", nullptr);
  }
  return json;
}

struct RegionCommand {
  double p = 3.0;
  std::vector<double> mus;
  std::optional<double> a;
  std::optional<double> b;
  std::string out_dir = ".";

  void attach(CLI::App* cmd) {
    cmd->add_option("-p", p, "Nonlinearity exponent (p > 1)")->capture_default_str();
    cmd->add_option("--mu", mus, "Comma-separated dispersion ratios in [0, 1)")->delimiter(',');
    cmd->add_option("-a", a, "With -b, derive mu = b/a");
    cmd->add_option("-b", b, "With -a, derive mu = b/a");
    cmd->add_option("-o", out_dir, "Output directory")->capture_default_str();
  }

  std::vector<double> resolve_mus() const {
    if (!mus.empty() && (a || b)) throw InvalidParams("give either --mu or -a/-b, not both");
    if (!mus.empty()) return sorted_unique(mus);
    if (!b) throw InvalidParams("region needs --mu or -b (with optional -a)");
    return {ModelParams(a.value_or(1.0), *b, p).mu()};
  }

  int run(std::ostream& out) const {
    if (!(p > 1.0)) throw InvalidParams("p must be > 1");
    const std::vector<double> mu_list = resolve_mus();
    std::vector<RegionReport> reports;
    for (double mu : mu_list) reports.push_back(classify_region(p, mu));

    OutputDir dir(out_dir);
    {
      CsvWriter csv(dir.claim("gcurve.csv"), {"z", "mu", "G"});
      for (double mu : mu_list) {
        const GCoefficients g = g_coefficients(p, mu);
        for (int i = 0; i < kGCurvePoints; ++i) {
          const double z = static_cast<double>(i) / (kGCurvePoints - 1);
          csv.row({z, mu, g.eval(z)});
        }
      }
    }
    std::vector<FlatJson> objects;
    for (const auto& r : reports) objects.push_back(region_json(r));
    write_text_file(dir.claim("region.json"), objects.size() == 1 ? objects.front().dump(0) : dump_array(objects));

    FlatJson manifest;
    manifest.set("command", "region").set("p", p).set("mu", mu_list);
    dir.write_manifest(std::move(manifest));

    for (const auto& r : reports) {
      out << "p=" << format_number(p) << " mu=" << format_number(r.mu) << ": " << to_string(r.kind);
      if (r.interval) {
        out << " (" << format_number(r.interval->first) << ", " << format_number(r.interval->second) << ")";
      }
      out << '\n';
    }
    return kExitOk;
  }
};

// ---------------------------------------------------------------- atlas

struct AtlasCommand {
  std::vector<double> mus{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  double p_min = 1.1;
  double p_max = 12.0;
  std::size_t resolution = 110;
  unsigned jobs = 0;
  std::string out_dir = ".";

  void attach(CLI::App* cmd) {
    cmd->add_option("--mu", mus, "Comma-separated ratios in [0, 1]")->delimiter(',')->capture_default_str();
    cmd->add_option("--p-min", p_min, "Smallest p (> 1)")->capture_default_str();
    cmd->add_option("--p-max", p_max, "Largest p (<= 12)")->capture_default_str();
    cmd->add_option("--resolution", resolution, "Number of p samples")->capture_default_str();
    cmd->add_option("--jobs", jobs, "Worker threads; 0 uses every hardware thread")->capture_default_str();
    cmd->add_option("-o", out_dir, "Output directory")->capture_default_str();
  }

  int run(std::ostream& out) const {
    if (!(p_min > 1.0) || !(p_max <= 12.0) || !(p_min < p_max)) {
      throw InvalidParams("need 1 < p-min < p-max <= 12");
    }
    if (resolution < 2) throw InvalidParams("resolution must be >= 2");
    const std::vector<double> mu_list = sorted_unique(mus);
    for (double mu : mu_list) {
      if (!(mu >= 0.0) || !(mu <= 1.0)) throw InvalidParams("atlas mu values must lie in [0, 1]");
    }

    std::vector<double> ps(resolution);
    for (std::size_t i = 0; i < resolution; ++i) {
      ps[i] = p_min + (p_max - p_min) * static_cast<double>(i) / static_cast<double>(resolution - 1);
    }
    ps.back() = p_max;

    // roots[i][j]: roots at (ps[i], mu_list[j]).
    std::vector<std::vector<std::vector<double>>> roots(resolution);
    std::vector<std::optional<double>> mu_crit(resolution);
    parallel_for(resolution, resolve_jobs(jobs), [&](std::size_t i) {
      for (double mu : mu_list) roots[i].push_back(roots_in_unit_interval(ps[i], mu));
      if (ps[i] > 5.0) mu_crit[i] = critical_mu(ps[i]);
    });

    OutputDir dir(out_dir);
    std::size_t rows = 0;
    {
      CsvWriter csv(dir.claim("atlas.csv"), {"mu", "p", "z_root", "root_index"});
      for (std::size_t j = 0; j < mu_list.size(); ++j) {
        for (std::size_t i = 0; i < resolution; ++i) {
          for (std::size_t k = 0; k < roots[i][j].size(); ++k) {
            csv.add(mu_list[j]).add(ps[i]).add(roots[i][j][k]).add(static_cast<std::int64_t>(k + 1)).end_row();
            ++rows;
          }
        }
      }
    }
    {
      CsvWriter csv(dir.claim("mucrit.csv"), {"p", "mu_crit"});
      for (std::size_t i = 0; i < resolution; ++i) {
        if (mu_crit[i]) csv.row({ps[i], *mu_crit[i]});
      }
    }
    FlatJson manifest;
    manifest.set("command", "atlas")
        .set("mu", mu_list)
        .set("p_min", p_min)
        .set("p_max", p_max)
        .set("resolution", resolution);
    dir.write_manifest(std::move(manifest));
    out << rows << " zero-level samples over " << mu_list.size() << " mu values\n";
    return kExitOk;
  }
};

// ---------------------------------------------------------------- simulate and sweep

struct RunOptions {
  std::optional<double> length;
  std::size_t n_points = 1024;
  double dt = 0.0;
  double t_end = 10.0;
  double lambda = 1.0;
  double h_cut = 0.0;
  std::size_t record_every = 10;
  double blow_threshold = 50.0;
  bool no_dealias = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("-L", length, "Box length; default keeps about 60 decay lengths");
    cmd->add_option("-N", n_points, "Grid points (power of two >= 64)")->capture_default_str();
    cmd->add_option("--dt", dt, "Time step; 0 picks a stable default")->capture_default_str();
    cmd->add_option("--t-end", t_end, "Final time")->capture_default_str();
    cmd->add_option("--lambda", lambda, "Amplitude factor of the initial wave (>= 1)")->capture_default_str();
    cmd->add_option("--h-cut", h_cut, "Remove modes with |xi| below this cut")->capture_default_str();
    cmd->add_option("--record-every", record_every, "Diagnostic stride in steps")->capture_default_str();
    cmd->add_option("--blow-threshold", blow_threshold, "Multiple of sup|u0| that counts as blow-up")
        ->capture_default_str();
    cmd->add_flag("--no-dealias", no_dealias, "Disable the 2/3 rule");
  }

  SimConfig config() const {
    SimConfig cfg;
    cfg.dt = dt;
    cfg.t_end = t_end;
    cfg.dealias = !no_dealias;
    cfg.blow_threshold = blow_threshold;
    cfg.record_every = record_every;
    return cfg;
  }

  void describe(FlatJson& json) const {
    json.set("dt_requested", dt)
        .set("t_end", t_end)
        .set("lambda", lambda)
        .set("h_cut", h_cut)
        .set("record_every", record_every)
        .set("blow_threshold", blow_threshold)
        .set("dealias", !no_dealias);
  }
};

struct CaseResult {
  double length = 0.0;
  double initial_distance = 0.0;
  SimRecord record;
};

CaseResult run_case(const WaveContext& ctx, const RunOptions& opts) {
  CaseResult result;
  const Grid grid(opts.length.value_or(suggested_length(ctx)), opts.n_points);
  result.length = grid.length();
  const PerturbedData data = perturbed_initial_data(ctx, opts.lambda, opts.h_cut, grid);
  result.initial_distance = data.distance;
  RunExtras extras;
  extras.reference = ctx;
  extras.v0 = data.v0;
  result.record = integrate(data.state, ctx.params(), grid, opts.config(), extras);
  return result;
}

void write_run_csv(const fs::path& path, const SimRecord& rec) {
  CsvWriter csv(path, {"t", "E", "M", "sup_u", "H", "orbital_dist"});
  for (std::size_t i = 0; i < rec.times.size(); ++i) {
    csv.row({rec.times[i], rec.energy[i], rec.momentum[i], rec.sup_u[i], rec.levine_h[i],
             i < rec.orbital_dist.size() ? rec.orbital_dist[i] : std::nan("")});
  }
}

double max_relative_drift(const std::vector<double>& series) {
  double worst = 0.0;
  const double scale = std::max(std::abs(series.front()), 1e-300);
  for (double v : series) worst = std::max(worst, std::abs(v - series.front()) / scale);
  return worst;
}

double max_ratio(const std::vector<double>& series) {
  if (series.empty() || !(series.front() > 0.0)) return std::nan("");
  return *std::max_element(series.begin(), series.end()) / series.front();
}

struct SimulateCommand {
  ModelOptions model;
  double c = 0.0;
  RunOptions run_opts;
  std::string out_dir = ".";

  void attach(CLI::App* cmd) {
    model.attach(cmd);
    cmd->add_option("-c", c, "Wave velocity, c^2 < 1")->capture_default_str();
    run_opts.attach(cmd);
    cmd->add_option("-o", out_dir, "Output directory")->capture_default_str();
  }

  int run(std::ostream& out) const {
    const ModelParams mp = model.resolve();
    const WaveContext ctx(mp, c);
    const auto start = std::chrono::steady_clock::now();
    const CaseResult res = run_case(ctx, run_opts);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const SimRecord& rec = res.record;

    OutputDir dir(out_dir);
    write_run_csv(dir.claim("run.csv"), rec);

    FlatJson manifest;
    manifest.set("command", "simulate");
    describe_params(manifest, mp);
    manifest.set("c", c).set("length", res.length).set("n_points", run_opts.n_points);
    run_opts.describe(manifest);
    manifest.set("dt", rec.dt)
        .set("steps", rec.steps)
        .set("c0_sq", critical_velocity_squared(mp))
        .set("classification", std::string(to_string(classify_velocity(ctx))))
        .set("initial_distance", res.initial_distance)
        .set("verdict", std::string(to_string(rec.verdict)))
        .set("blowup_time", rec.blowup_time)
        .set("energy_drift", max_relative_drift(rec.energy))
        .set("momentum_drift", max_relative_drift(rec.momentum))
        .set("wall_time_s", wall);
    dir.write_manifest(std::move(manifest));

    out << "verdict " << to_string(rec.verdict);
    if (rec.verdict == Verdict::BlowUpDetected) out << " at t=" << format_number(rec.blowup_time);
    out << " (" << rec.steps << " steps, dt=" << format_number(rec.dt) << ")\n";
    return kExitOk;
  }
};

struct SweepCommand {
  double a = 1.0;
  std::optional<double> b;
  std::optional<double> mu;
  std::vector<double> ps{3.0};
  std::vector<double> cs;
  RunOptions run_opts;
  unsigned jobs = 0;
  std::string out_dir = ".";

  void attach(CLI::App* cmd) {
    cmd->add_option("-a", a, "Coefficient of u_xxxx (a > 0)")->capture_default_str();
    cmd->add_option("-b", b, "Coefficient of u_xxtt (0 <= b < a); default 0");
    cmd->add_option("--mu", mu, "Dispersion ratio b/a in [0, 1), instead of -b");
    cmd->add_option("-p", ps, "Comma-separated exponents")->delimiter(',')->capture_default_str();
    cmd->add_option("-c", cs, "Comma-separated velocities")->delimiter(',')->required();
    run_opts.attach(cmd);
    cmd->add_option("--jobs", jobs, "Worker threads; 0 uses every hardware thread")->capture_default_str();
    cmd->add_option("-o", out_dir, "Output directory")->capture_default_str();
  }

  int run(std::ostream& out) const {
    if (b && mu) throw InvalidParams("give either -b or --mu, not both");
    struct Key {
      double p;
      double c;
      auto operator<=>(const Key&) const = default;
    };
    std::vector<Key> keys;
    for (double p : sorted_unique(ps)) {
      for (double c : sorted_unique(cs)) keys.push_back({p, c});
    }
    // Validate every tuple before launching any work.
    std::vector<WaveContext> contexts;
    for (const Key& k : keys) {
      const ModelParams mp = mu ? ModelParams::from_ratio(a, *mu, k.p) : ModelParams(a, b.value_or(0.0), k.p);
      contexts.emplace_back(mp, k.c);
    }

    std::vector<CaseResult> results(keys.size());
    parallel_for(keys.size(), resolve_jobs(jobs), [&](std::size_t i) { results[i] = run_case(contexts[i], run_opts); });

    OutputDir dir(out_dir);
    for (std::size_t i = 0; i < keys.size(); ++i) {
      char name[48];
      std::snprintf(name, sizeof name, "runs/run_%04zu.csv", i);
      write_run_csv(dir.claim(name), results[i].record);
    }
    {
      CsvWriter csv(dir.claim("sweep.csv"),
                    {"p", "c", "c_sq", "c0_sq", "classification", "verdict", "blowup_time", "steps", "energy_drift",
                     "momentum_drift", "orbital_dist_initial", "orbital_dist_max", "sup_ratio", "h_ratio",
                     "run_file"});
      for (std::size_t i = 0; i < keys.size(); ++i) {
        const WaveContext& ctx = contexts[i];
        const SimRecord& rec = results[i].record;
        char name[48];
        std::snprintf(name, sizeof name, "runs/run_%04zu.csv", i);
        const double od_max =
            rec.orbital_dist.empty() ? std::nan("") : *std::max_element(rec.orbital_dist.begin(), rec.orbital_dist.end());
        csv.add(keys[i].p)
            .add(keys[i].c)
            .add(ctx.c2())
            .add(critical_velocity_squared(ctx.params()))
            .add(to_string(classify_velocity(ctx)))
            .add(to_string(rec.verdict))
            .add(rec.blowup_time)
            .add(static_cast<std::int64_t>(rec.steps))
            .add(max_relative_drift(rec.energy))
            .add(max_relative_drift(rec.momentum))
            .add(results[i].initial_distance)
            .add(od_max)
            .add(max_ratio(rec.sup_u))
            .add(max_ratio(rec.levine_h))
            .add(std::string_view(name))
            .end_row();
      }
    }

    FlatJson manifest;
    manifest.set("command", "sweep").set("a", a).set("mu", contexts.front().params().mu());
    manifest.set("p", sorted_unique(ps)).set("c", sorted_unique(cs)).set("n_points", run_opts.n_points);
    if (run_opts.length) manifest.set("length", *run_opts.length);
    run_opts.describe(manifest);
    dir.write_manifest(std::move(manifest));

    for (std::size_t i = 0; i < keys.size(); ++i) {
      out << "p=" << format_number(keys[i].p) << " c=" << format_number(keys[i].c) << ": "
          << to_string(results[i].record.verdict) << '\n';
    }
    return kExitOk;
  }
};

// ---------------------------------------------------------------- verify

struct VerifyCommand {
  std::uint64_t seed = kDefaultVerifySeed;
  std::string out_dir = ".";

  void attach(CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Seed for the random samples")->capture_default_str();
    cmd->add_option("-o", out_dir, "Output directory")->capture_default_str();
  }

  int run(std::ostream& out, std::ostream& err, const VerifyKernels& kernels) const {
    const VerifyReport report = run_verify(seed, kernels);
    OutputDir dir(out_dir);

    FlatJson json;
    json.set("seed", static_cast<std::int64_t>(seed)).set("passed", report.passed()).set("failed", report.failures());
    for (const auto& r : report.results) {
      json.set(r.name + "_samples", r.samples)
          .set(r.name + "_worst", r.worst)
          .set(r.name + "_tolerance", r.tolerance)
          .set(r.name + "_passed", r.passed);
      out << (r.passed ? "ok   " : "FAIL ") << r.name << "  samples=" << r.samples
          << " worst=" << format_number(r.worst) << " tol=" << format_number(r.tolerance) << '\n';
    }
    write_text_file(dir.claim("verify.json"), json.dump(0));

    FlatJson manifest;
    manifest.set("command", "verify").set("seed", static_cast<std::int64_t>(seed));
    dir.write_manifest(std::move(manifest));

    if (report.passed()) return kExitOk;
    err << "verify failed:";
    for (const auto& name : report.failures()) err << ' ' << name;
    err << '\n';
    return kExitVerifyFailed;
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const VerifyKernels& kernels) {
  CLI::App app{"Traveling waves of the double dispersion equation: profiles, stability maps, simulations"};
  app.name("ddwave");
  app.require_subcommand(1, 1);

  WaveCommand wave;
  RegionCommand region;
  AtlasCommand atlas;
  SimulateCommand simulate;
  SweepCommand sweep;
  VerifyCommand verify;
  auto* wave_cmd = app.add_subcommand("wave", "Sample a solitary wave and evaluate its functionals");
  auto* region_cmd = app.add_subcommand("region", "Classify the stability region for (p, mu)");
  auto* atlas_cmd = app.add_subcommand("atlas", "Zero set of G over (z, p) and the critical mu curve");
  auto* simulate_cmd = app.add_subcommand("simulate", "Evolve a (perturbed) solitary wave");
  auto* sweep_cmd = app.add_subcommand("sweep", "Run simulations over a (p, c) grid in parallel");
  auto* verify_cmd = app.add_subcommand("verify", "Run the randomized self-checks");
  wave.attach(wave_cmd);
  region.attach(region_cmd);
  atlas.attach(atlas_cmd);
  simulate.attach(simulate_cmd);
  sweep.attach(sweep_cmd);
  verify.attach(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidParams;
  }

  try {
    if (*wave_cmd) return wave.run(out);
    if (*region_cmd) return region.run(out);
    if (*atlas_cmd) return atlas.run(out);
    if (*simulate_cmd) return simulate.run(out);
    if (*sweep_cmd) return sweep.run(out);
    return verify.run(out, err, kernels);
  } catch (const TailTooFat& e) {
    err << "error: " << e.what() << "\nsuggested L: " << format_number(e.suggested_length()) << '\n';
    return kExitDomainTooShort;
  } catch (const StepRejected& e) {
    err << "error: " << e.what() << "\nstability bound: " << format_number(e.bound()) << '\n';
    return kExitStepRejected;
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidParams;
  } catch (const DegenerateVelocity& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidParams;
  } catch (const NotApplicable& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidParams;
  } catch (const std::exception& e) {
    // Numerical self-check failures (root-count inconsistency, non-finite
    // values) and I/O errors share the check-failure code.
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
}

}  // namespace ddwave::harness
