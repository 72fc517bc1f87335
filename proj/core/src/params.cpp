#include "ddwave/params.hpp"

#include <string>

#include "ddwave/errors.hpp"

namespace ddwave {

ModelParams::ModelParams(double a, double b, double p) : a_(a), b_(b), p_(p), mu_(0.0) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(p)) {
    throw InvalidParams("model parameters must be finite");
  }
  if (!(a > 0.0)) throw InvalidParams("a must be > 0");
  if (b < 0.0) throw InvalidParams("b must be >= 0");
  if (!(a > b)) throw InvalidParams("a must be > b (mu = b/a < 1)");
  if (!(p > 1.0)) throw InvalidParams("p must be > 1");
  mu_ = b_ / a_;
}

ModelParams ModelParams::from_ratio(double a, double mu, double p) {
  if (!(mu >= 0.0) || !(mu < 1.0)) throw InvalidParams("mu must lie in [0, 1)");
  return ModelParams(a, mu * a, p);
}

WaveContext::WaveContext(const ModelParams& params, double c)
    : params_(params), c_(c), mass_(1.0 - c * c), gradient_(params.a() - params.b() * c * c) {
  if (!std::isfinite(c)) throw InvalidParams("c must be finite");
  if (!(c * c < 1.0)) throw InvalidParams("c^2 must be < 1");
  if (!(mass_ > 0.0) || !(gradient_ > 0.0)) {
    throw InvalidParams("traveling waves need 1 - c^2 > 0 and a - b c^2 > 0");
  }
}

}  // namespace ddwave
