#include "qc/correlators.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qc {

namespace {

// 10-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr int kGaussOrder = 10;
constexpr double kGaussNodes[kGaussOrder] = {
    -0.9739065285171717, -0.8650633666889845, -0.6794095682990244,
    -0.4333953941292472, -0.1488743389816312, 0.1488743389816312,
    0.4333953941292472,  0.6794095682990244,  0.8650633666889845,
    0.9739065285171717};
constexpr double kGaussWeights[kGaussOrder] = {
    0.0666713443086881, 0.1494513491505806, 0.2190863625159820,
    0.2692667193099963, 0.2955242247147529, 0.2955242247147529,
    0.2692667193099963, 0.2190863625159820, 0.1494513491505806,
    0.0666713443086881};

struct RawIntegrals {
  double occupation = 0.0;          // integral of lambda sin^2 k sin^2(Lt)/L^2
  double hopping = 0.0;             // same with an extra cos k
  std::complex<double> pairing{0.0, 0.0};
  std::complex<double> hopping_check{0.0, 0.0};  // unreduced A/B form of g12
};

// One composite pass with `panels` panels over [0, pi]. Node ordering is
// fixed and summation is serial, so results are bit-reproducible.
RawIntegrals integrate(const ModelParams& params, double t, int panels,
                       int points_per_panel) {
  if (points_per_panel != kGaussOrder) {
    throw std::invalid_argument("points_per_panel must be 10");
  }
  const double lambda = params.lambda;
  const double width = M_PI / panels;
  RawIntegrals out;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * width;
    for (int q = 0; q < kGaussOrder; ++q) {
      const double k = mid + 0.5 * width * kGaussNodes[q];
      const double w = 0.5 * width * kGaussWeights[q];
      const double sk = std::sin(k);
      const double ck = std::cos(k);
      const double energy_sq = 1.0 + lambda * lambda + 2.0 * lambda * ck;
      const double energy = std::sqrt(std::max(energy_sq, 0.0));
      const double st = std::sin(energy * t);
      const double base = lambda * sk * sk * st * st / energy_sq;
      out.occupation += w * base;
      out.hopping += w * ck * base;
      const double s2t = std::sin(2.0 * energy * t);
      const double c2t = std::cos(2.0 * energy * t);
      out.pairing += w * sk * sk *
                     std::complex<double>(
                         -c2t - 2.0 * lambda * st * st * (ck + lambda) / energy_sq,
                         s2t / energy);
      // Unreduced hopping integrand, kept in complex arithmetic so its
      // imaginary part witnesses the reality of g12 at runtime.
      const double u = 1.0 + lambda * ck;
      const double beta_sq = (energy + u) / (2.0 * energy);
      const double alpha_beta = lambda * sk / (2.0 * energy);
      const std::complex<double> a(std::cos(energy * t),
                                   st - 2.0 * beta_sq * st);
      const std::complex<double> b(0.0, -2.0 * alpha_beta * st);
      const double abs_a_sq = std::norm(a);
      const double abs_b_sq = std::norm(b);
      out.hopping_check +=
          w * ((1.0 + std::cos(2.0 * k)) * (abs_a_sq - abs_b_sq) / 4.0 +
               ck * (abs_a_sq + abs_b_sq) / 2.0 +
               std::sin(2.0 * k) * (a - std::conj(a)) * std::conj(b) / 4.0);
    }
  }
  return out;
}

CorrelatorSet assemble(const ModelParams& params, double t,
                       const RawIntegrals& raw) {
  CorrelatorSet out;
  out.lambda = params.lambda;
  out.t = t;
  out.g11 = 0.5 + raw.occupation / M_PI;
  out.g12 = 0.25 + raw.hopping / M_PI;
  out.f12 = raw.pairing / (2.0 * M_PI);
  const double im_g12 = std::abs(raw.hopping_check.imag() / M_PI);
  if (im_g12 >= 1e-10) {
    throw std::runtime_error("hopping correlator acquired an imaginary part: " +
                             std::to_string(im_g12));
  }
  return out;
}

int initial_panels(const ModelParams& params, double t,
                   const QuadratureConfig& cfg) {
  const double suggested =
      std::ceil(cfg.panel_time_factor * (1.0 + params.lambda) * t);
  return std::max(cfg.base_panels, static_cast<int>(suggested));
}

}  // namespace

StaticCorrelators static_correlators(int offset) {
  StaticCorrelators out;
  if (offset == 0) out.cdag_c = 0.5;
  if (offset == 1) {
    out.cdag_c = 0.25;
    out.c_c = -0.25;
    out.cdag_cdag = 0.25;
  }
  if (offset == -1) {
    out.cdag_c = 0.25;
    out.c_c = 0.25;
    out.cdag_cdag = -0.25;
  }
  return out;
}

CorrelatorSet correlator_set(const ModelParams& params, double t,
                             const QuadratureConfig& cfg) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("t must be finite and nonnegative");
  }
  if (cfg.base_panels < 1 || cfg.tolerance <= 0.0) {
    throw std::invalid_argument("invalid quadrature config");
  }
  int panels = initial_panels(params, t, cfg);
  CorrelatorSet coarse = assemble(
      params, t, integrate(params, t, panels, cfg.points_per_panel));
  CorrelatorSet fine = coarse;
  for (int r = 0; r < cfg.max_refinements; ++r) {
    panels *= 2;
    fine = assemble(params, t,
                    integrate(params, t, panels, cfg.points_per_panel));
    const double delta = std::max(
        {std::abs(fine.g11 - coarse.g11), std::abs(fine.g12 - coarse.g12),
         std::abs(fine.f12 - coarse.f12)});
    if (delta < cfg.tolerance) return fine;
    if (r + 1 == cfg.max_refinements) break;
    coarse = fine;
  }
  throw ConvergenceError("correlator quadrature did not converge", fine.g11,
                         coarse.g11);
}

double occupation(const ModelParams& params, double t,
                  const QuadratureConfig& cfg) {
  return correlator_set(params, t, cfg).g11;
}

double hopping(const ModelParams& params, double t,
               const QuadratureConfig& cfg) {
  return correlator_set(params, t, cfg).g12;
}

std::complex<double> pairing(const ModelParams& params, double t,
                             const QuadratureConfig& cfg) {
  return correlator_set(params, t, cfg).f12;
}

}  // namespace qc
