#include "ddwave/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ddwave/errors.hpp"
#include "ddwave/solitary_wave.hpp"

namespace ddwave {

double critical_velocity_squared_unchecked(double a, double b, double p) {
  if (!(a > 0.0) || b < 0.0 || !(p > 1.0)) throw InvalidParams("need a > 0, b >= 0, p > 1");
  const double radicand = 1.0 - b * (p + 3.0) * (p - 1.0) / (a * (p + 1.0) * (p + 1.0));
  if (radicand < 0.0) throw InvalidParams("negative radicand in c0^2 (b too large relative to a)");
  return ((p - 1.0) / (p + 1.0)) / (1.0 + std::sqrt(radicand));
}

double critical_velocity_squared(const ModelParams& params) {
  return critical_velocity_squared_unchecked(params.a(), params.b(), params.p());
}

double quartic_k(double z, const ModelParams& params) {
  const double a = params.a();
  const double b = params.b();
  const double p = params.p();
  return b * (p + 3.0) * z * z - 2.0 * a * (p + 1.0) * z + a * (p - 1.0);
}

AlphaC alpha_and_C(const WaveContext& ctx) {
  if (ctx.c() == 0.0) throw DegenerateVelocity("alpha is singular at c = 0");
  const double a = ctx.a();
  const double b = ctx.b();
  const double p = ctx.p();
  const double c2 = ctx.c2();
  const double B = ctx.gradient_coeff();
  const double m = 1.0 - c2 * (p + 3.0) / (p - 1.0);
  AlphaC out;
  out.alpha = B * m / (2.0 * c2 * (a - b));
  out.C = (B * m * (p + 1.0) + 2.0 * c2 * (a - b)) / (ctx.mass_coeff() * B);
  return out;
}

double sigma_residual(const WaveContext& ctx) {
  const AlphaC ac = alpha_and_C(ctx);
  const double b = ctx.b();
  const double p = ctx.p();
  const double c2 = ctx.c2();
  const double A = ctx.mass_coeff();
  const double B = ctx.gradient_coeff();
  const double bracket = 1.0 + b * (p - 1.0) * A / ((p + 3.0) * B);
  return -(p + 1.0) + (2.0 * c2 / A) * bracket * ((p + 3.0) / (p - 1.0)) + ac.C;
}

double GCoefficients::scale() const noexcept {
  return std::max({std::abs(P), std::abs(Q), std::abs(R), std::abs(S)});
}

GCoefficients g_coefficients(double p, double mu) {
  GCoefficients g;
  g.P = 2.0 * (p + 3.0) * (p + 1.0) * mu * mu;
  g.Q = 3.0 * (p + 3.0) * (p - 1.0) * mu * mu + (3.0 * p * p + 10.0 * p + 19.0) * mu;
  g.R = 2.0 * ((3.0 * p + 5.0) * (p - 1.0) * mu + 2.0 * (p + 3.0));
  g.S = (p - 1.0) * (p - 1.0) * mu + (p - 1.0) * (p + 3.0);
  return g;
}

double g_eval(double z, double p, double mu) { return g_coefficients(p, mu).eval(z); }

namespace {

constexpr double kBoundaryTol = 1e-9;
constexpr double kSmallMu = 1e-8;
constexpr double kSignProbe = 1e-9;
constexpr int kScanPoints = 2048;

double newton_polish(const GCoefficients& g, double z) {
  for (int it = 0; it < 100; ++it) {
    const double d = g.derivative(z);
    if (d == 0.0) break;
    const double step = g.eval(z) / d;
    z -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

// Real-root seeds of the monic form z^3 + a2 z^2 + a1 z + a0.
std::vector<double> cubic_seeds(const GCoefficients& g) {
  const double a2 = -g.Q / g.P;
  const double a1 = g.R / g.P;
  const double a0 = -g.S / g.P;
  const double q = (a2 * a2 - 3.0 * a1) / 9.0;
  const double r = (2.0 * a2 * a2 * a2 - 9.0 * a2 * a1 + 27.0 * a0) / 54.0;
  const double shift = a2 / 3.0;
  std::vector<double> seeds;
  if (q > 0.0 && r * r < q * q * q) {
    const double theta = std::acos(std::clamp(r / std::sqrt(q * q * q), -1.0, 1.0));
    const double sq = -2.0 * std::sqrt(q);
    for (double k : {0.0, 1.0, -1.0}) {
      seeds.push_back(sq * std::cos((theta + 2.0 * std::numbers::pi * k) / 3.0) - shift);
    }
  } else {
    const double big = -std::copysign(std::cbrt(std::abs(r) + std::sqrt(r * r - q * q * q)), r);
    const double small = big != 0.0 ? q / big : 0.0;
    seeds.push_back(big + small - shift);
    // Real part of the complex pair; polishes onto a near-double real pair when one exists.
    seeds.push_back(-0.5 * (big + small) - shift);
  }
  return seeds;
}

bool crosses_zero(const GCoefficients& g, double z) {
  const double lo = g.eval(z - kSignProbe);
  const double hi = g.eval(z + kSignProbe);
  return (lo < 0.0 && hi > 0.0) || (lo > 0.0 && hi < 0.0);
}

}  // namespace

std::vector<double> roots_in_unit_interval(double p, double mu) {
  if (!(p > 1.0)) throw InvalidParams("p must be > 1");
  if (!(mu >= 0.0) || !(mu <= 1.0)) throw InvalidParams("mu must lie in [0, 1]");
  // G(z,p,1) = 2(p+1)(p+3)(z - (p-1)/(p+3))(z-1)^2. Rounding splits the double
  // root at 1 into a spurious crossing within ~1e-8 of it, so use the factors.
  if (mu == 1.0) return {(p - 1.0) / (p + 3.0)};
  const GCoefficients g = g_coefficients(p, mu);

  std::vector<double> candidates;
  if (mu == 0.0) {
    candidates.push_back(g.S / g.R);
  } else if (mu < kSmallMu) {
    candidates.push_back(newton_polish(g, g.S / g.R));
  } else {
    for (double seed : cubic_seeds(g)) candidates.push_back(newton_polish(g, seed));
  }

  const double tol = 1e-12 * g.scale();
  std::vector<double> roots;
  for (double z : candidates) {
    if (!(z > 0.0) || !(z < 1.0 - kBoundaryTol)) continue;
    if (std::abs(g.eval(z)) > tol) continue;
    if (mu != 0.0 && !crosses_zero(g, z)) continue;
    roots.push_back(z);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double x, double y) { return std::abs(x - y) <= 1e-12 * std::max(1.0, x); }),
              roots.end());
  return roots;
}

std::string_view to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::Empty: return "empty";
    case RegionKind::UpToOne: return "up_to_one";
    case RegionKind::Window: return "window";
  }
  return "unknown";
}

RegionReport classify_region(double p, double mu) {
  if (!(mu >= 0.0) || !(mu < 1.0)) throw InvalidParams("mu must lie in [0, 1)");
  RegionReport report;
  report.p = p;
  report.mu = mu;
  report.roots_in_unit = roots_in_unit_interval(p, mu);
  const auto& roots = report.roots_in_unit;
  const GCoefficients g = g_coefficients(p, mu);

  auto fail = [&](const std::string& why) {
    std::ostringstream msg;
    msg << "p=" << p << " mu=" << mu << ": " << why << " (" << roots.size() << " polished roots)";
    throw InconsistentRootCount(msg.str());
  };

  if (roots.size() > 2) fail("more than two roots in (0,1)");
  const double g_one = g.eval(1.0);
  if (g_one != 0.0 && ((roots.size() % 2 == 1) != (g_one > 0.0))) fail("root-count parity contradicts sign of G(1)");

  switch (roots.size()) {
    case 0: report.kind = RegionKind::Empty; break;
    case 1:
      report.kind = RegionKind::UpToOne;
      report.interval = std::make_pair(roots[0], 1.0);
      break;
    default:
      report.kind = RegionKind::Window;
      report.interval = std::make_pair(roots[0], roots[1]);
      break;
  }

  // Sign scan: uniform samples plus the midpoint of every gap in {0, roots, 1},
  // so a root closer to an end than the scan spacing still shows its sign change.
  std::vector<double> samples;
  samples.reserve(kScanPoints + roots.size() + 1);
  for (int i = 1; i < kScanPoints; ++i) samples.push_back(static_cast<double>(i) / kScanPoints);
  double left = 0.0;
  for (double r : roots) {
    samples.push_back(0.5 * (left + r));
    left = r;
  }
  samples.push_back(0.5 * (left + 1.0));
  std::sort(samples.begin(), samples.end());

  auto near_root = [&](double z) {
    return std::any_of(roots.begin(), roots.end(), [&](double r) { return std::abs(z - r) <= 2.0 * kSignProbe; });
  };
  int changes = 0;
  int last_sign = -1;  // G(0) = -S < 0
  for (double z : samples) {
    if (near_root(z)) continue;
    const double v = g.eval(z);
    const bool inside = report.interval && z > report.interval->first && z < report.interval->second;
    if (inside && !(v > 0.0)) fail("G not positive inside the claimed interval");
    if (!inside && v > 0.0) fail("G positive outside the claimed interval");
    const int sign = v > 0.0 ? 1 : -1;
    if (sign != last_sign) ++changes;
    last_sign = sign;
  }
  if (changes != static_cast<int>(roots.size())) fail("sign scan disagrees with polished roots");
  return report;
}

double critical_mu(double p, double tol) {
  if (!(p > 5.0)) throw NotApplicable("critical mu exists only for p > 5");
  double lo = 1.0 / 3.0;
  double hi = 1.0 - 1e-6;
  if (!roots_in_unit_interval(p, lo).empty() || roots_in_unit_interval(p, hi).empty()) {
    std::ostringstream msg;
    msg << "critical mu bracket [1/3, 1-1e-6] does not straddle the transition for p=" << p;
    throw InconsistentRootCount(msg.str());
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (roots_in_unit_interval(p, mid).empty()) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double d_second_derivative_fd(const WaveContext& ctx, double h) {
  if (!(h > 1e-6) || !(h < 1e-2)) throw InvalidParams("h must lie in (1e-6, 1e-2)");
  if (!(std::abs(ctx.c()) + h < 1.0)) throw InvalidParams("c +- h must stay inside (-1, 1)");
  const double d0 = d_at_rest(ctx.params());
  const double minus = d_closed_form(WaveContext(ctx.params(), ctx.c() - h), d0);
  const double centre = d_closed_form(ctx, d0);
  const double plus = d_closed_form(WaveContext(ctx.params(), ctx.c() + h), d0);
  return (minus - 2.0 * centre + plus) / (h * h);
}

std::string_view to_string(VelocityVerdict verdict) {
  switch (verdict) {
    case VelocityVerdict::UnstableByBlowUp: return "unstable_by_blow_up";
    case VelocityVerdict::OrbitallyStable: return "orbitally_stable";
    case VelocityVerdict::Undetermined: return "undetermined";
    case VelocityVerdict::Unclassified: return "unclassified";
  }
  return "unknown";
}

VelocityVerdict classify_velocity(const WaveContext& ctx, double boundary_tol) {
  const double c2 = ctx.c2();
  const double c0_sq = critical_velocity_squared(ctx.params());
  if (std::abs(c2 - c0_sq) <= boundary_tol) return VelocityVerdict::Unclassified;
  if (c2 < c0_sq) return VelocityVerdict::UnstableByBlowUp;

  const RegionReport region = classify_region(ctx.p(), ctx.params().mu());
  for (double r : region.roots_in_unit) {
    if (std::abs(c2 - r) <= boundary_tol) return VelocityVerdict::Unclassified;
  }
  if (region.interval && c2 > region.interval->first && c2 < region.interval->second) {
    return VelocityVerdict::OrbitallyStable;
  }
  return VelocityVerdict::Undetermined;
}

}  // namespace ddwave
