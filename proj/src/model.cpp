#include "qc/model.hpp"

#include <cmath>
#include <stdexcept>

namespace qc {

namespace {

void check_inputs(const ModelParams& params, const Mode& mode) {
  if (!(params.lambda >= 0.0) || !std::isfinite(params.lambda)) {
    throw std::invalid_argument("lambda must be finite and nonnegative");
  }
  if (!(mode.k >= 0.0 && mode.k <= M_PI)) {
    throw std::invalid_argument("k must lie in [0, pi]");
  }
}

}  // namespace

double dispersion(const ModelParams& params, const Mode& mode) {
  check_inputs(params, mode);
  const double lambda = params.lambda;
  const double arg = 1.0 + lambda * lambda + 2.0 * lambda * std::cos(mode.k);
  // arg is a perfect square plus a cross term; tiny negatives are roundoff.
  return std::sqrt(std::max(arg, 0.0));
}

BogoliubovCoefficients bogoliubov(const ModelParams& params, const Mode& mode) {
  check_inputs(params, mode);
  const double energy = dispersion(params, mode);
  if (energy <= 0.0) {
    throw DegenerateModeError("bogoliubov coefficients undefined at the gap-closing mode (lambda=1, k=pi)");
  }
  const double u = 1.0 + params.lambda * std::cos(mode.k);
  BogoliubovCoefficients out;
  out.alpha = std::sqrt(std::max(energy - u, 0.0) / (2.0 * energy));
  const double sign = std::sin(mode.k) >= 0.0 ? 1.0 : -1.0;
  out.beta = sign * std::sqrt(std::max(energy + u, 0.0) / (2.0 * energy));
  return out;
}

PropagatorAmplitudes propagator_amplitudes(const ModelParams& params,
                                           const Mode& mode, double t) {
  check_inputs(params, mode);
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("t must be finite and nonnegative");
  }
  const double energy = dispersion(params, mode);
  if (energy <= 0.0) {
    // sin(Lk t) -> 0 faster than beta^2 diverges; the limit is free evolution.
    return PropagatorAmplitudes{{1.0, 0.0}, {0.0, 0.0}};
  }
  const double u = 1.0 + params.lambda * std::cos(mode.k);
  const double beta_sq = (energy + u) / (2.0 * energy);
  const double alpha_beta = params.lambda * std::sin(mode.k) / (2.0 * energy);
  const double s = std::sin(energy * t);
  const double c = std::cos(energy * t);
  PropagatorAmplitudes out;
  out.a = std::complex<double>(c, s - 2.0 * beta_sq * s);
  out.b = std::complex<double>(0.0, -2.0 * alpha_beta * s);
  return out;
}

}  // namespace qc
