#pragma once

#include <complex>

#include "qc/model.hpp"

namespace qc {

/// The three time-dependent two-point functions that fully determine the
/// nearest-neighbor reduced density matrix:
///   g11 = <c1^+(t) c1(t)>, g12 = <c1^+(t) c2(t)>, f12 = <c1(t) c2(t)>.
struct CorrelatorSet {
  double g11 = 0.0;
  double g12 = 0.0;
  std::complex<double> f12{0.0, 0.0};
  double t = 0.0;
  double lambda = 0.0;
};

/// Composite Gauss-Legendre quadrature over k in [0, pi].
/// Panel count scales with the integrand frequency: P = max(base_panels,
/// ceil(panel_time_factor * (1 + lambda) * t)); convergence is declared when
/// the P and 2P estimates agree to tolerance.
struct QuadratureConfig {
  int base_panels = 32;
  int points_per_panel = 10;
  double tolerance = 1e-10;
  int max_refinements = 6;
  double panel_time_factor = 4.0;
};

/// Static two-point functions of the initial state as a function of the site
/// offset j - i.
struct StaticCorrelators {
  double cdag_c = 0.0;    // <ci^+ cj>_0
  double c_c = 0.0;       // <ci cj>_0
  double cdag_cdag = 0.0; // <ci^+ cj^+>_0
};

/// Kronecker-delta structure of the t=0 correlations:
///   <ci^+ cj>_0  = (d_{i+1,j} + d_{i-1,j} + 2 d_{i,j}) / 4
///   <ci cj>_0    = (-d_{i+1,j} + d_{i-1,j}) / 4
///   <ci^+ cj^+>_0 = (d_{i+1,j} - d_{i-1,j}) / 4
StaticCorrelators static_correlators(int offset);

/// All three correlators in one pass over shared quadrature nodes.
/// Throws ConvergenceError if the panel-doubling comparison fails to settle
/// within max_refinements.
CorrelatorSet correlator_set(const ModelParams& params, double t,
                             const QuadratureConfig& cfg = {});

double occupation(const ModelParams& params, double t,
                  const QuadratureConfig& cfg = {});
double hopping(const ModelParams& params, double t,
               const QuadratureConfig& cfg = {});
std::complex<double> pairing(const ModelParams& params, double t,
                             const QuadratureConfig& cfg = {});

}  // namespace qc
