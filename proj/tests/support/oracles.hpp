#pragma once

// Reference computations that share no code with the library: closed-form
// sech integrals, bracketing root search, a naive DFT, and a brute-force
// translate scan built from the analytic profile.

#include <complex>
#include <functional>
#include <vector>

namespace oracle {

/// Integral over the real line of sech(y)^s, s > 0.
double sech_power_integral(double s);

struct ProfileShape {
  double amplitude;  ///< peak value
  double exponent;   ///< q in sech^q
  double rate;       ///< kappa in sech(kappa x)
};

/// phi(x) = amplitude sech^q(kappa x) written out from the model coefficients.
ProfileShape profile_shape(double a, double b, double p, double c);
double profile(const ProfileShape& s, double x);
double profile_slope(const ProfileShape& s, double x);

struct AnalyticNorms {
  double l2_sq;
  double grad_l2_sq;
  double lp1;
};
AnalyticNorms analytic_norms(double a, double b, double p, double c);

/// Plain bisection; f(lo) and f(hi) must differ in sign.
double bisect(const std::function<double(double)>& f, double lo, double hi, int iterations = 200);

/// Roots of f in (lo, hi) found by a fine sign scan and bisection.
std::vector<double> scan_roots(const std::function<double(double)>& f, double lo, double hi, int samples);

/// O(N^2) forward DFT without normalization.
std::vector<std::complex<double>> naive_dft(const std::vector<double>& f);

/// omega(xi) of the linearized equation.
double linear_frequency(double a, double b, double xi);

/// min over shifts of the H1 x H1 distance between (u, w) and the translated
/// analytic wave; u_x and w_x are supplied by the caller.
double brute_force_orbital_distance(const std::vector<double>& u, const std::vector<double>& ux,
                                    const std::vector<double>& w, const std::vector<double>& wx, double a, double b,
                                    double p, double c, double length, int coarse_shifts);

}  // namespace oracle
