#include "qc/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qc {

namespace {
constexpr double kTraceTol = 1e-10;
constexpr double kPositivityTol = 1e-8;
constexpr double kRadicandClamp = 1e-12;
}  // namespace

XState assemble_rho(const CorrelatorSet& c) {
  XState rho;
  rho.r11 = c.g11 * c.g11 + std::norm(c.f12) - c.g12 * c.g12;
  rho.r22 = c.g11 - rho.r11;
  rho.r44 = 1.0 - rho.r11 - 2.0 * rho.r22;
  // rho_14 = <c_2 c_1> = -conj(f12); the conjugate matters once f12 goes
  // complex (cross-checked against exact diagonalization).
  rho.r14 = -std::conj(c.f12);
  rho.r23 = c.g12;

  if (std::abs(rho.trace() - 1.0) > kTraceTol) {
    throw PositivityError("X-state trace deviates from 1 by " +
                          std::to_string(rho.trace() - 1.0));
  }
  if (rho.r11 < -kPositivityTol || rho.r22 < -kPositivityTol ||
      rho.r44 < -kPositivityTol) {
    throw PositivityError("negative diagonal entry in X-state");
  }
  if (rho.r11 * rho.r44 < std::norm(rho.r14) - kPositivityTol) {
    throw PositivityError("X-state corner block violates positivity");
  }
  if (rho.r22 * rho.r22 < rho.r23 * rho.r23 - kPositivityTol) {
    throw PositivityError("X-state inner block violates positivity");
  }
  return rho;
}

ConcurrenceSpectrum x_spectrum(const XState& rho) {
  double radicand = rho.r11 * rho.r44;
  if (radicand < -kRadicandClamp) {
    throw PositivityError("negative radicand r11*r44 = " +
                          std::to_string(radicand));
  }
  const double root = std::sqrt(std::max(radicand, 0.0));
  const double corner = std::abs(rho.r14);
  double l[4] = {std::abs(corner + root), std::abs(corner - root),
                 std::abs(rho.r22 + rho.r23), std::abs(rho.r22 - rho.r23)};
  std::sort(l, l + 4, std::greater<>());
  return ConcurrenceSpectrum{l[0], l[1], l[2], l[3]};
}

double concurrence(const ConcurrenceSpectrum& spectrum) {
  return std::max(0.0,
                  spectrum.l1 - spectrum.l2 - spectrum.l3 - spectrum.l4);
}

double concurrence_at(const ModelParams& params, double t,
                      const QuadratureConfig& cfg) {
  return concurrence(x_spectrum(assemble_rho(correlator_set(params, t, cfg))));
}

}  // namespace qc
