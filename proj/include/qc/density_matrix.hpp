#pragma once

#include <complex>

#include "qc/correlators.hpp"

namespace qc {

/// Two-qubit X-state in the {up-up, up-down, down-up, down-down} basis,
/// spin-up identified with an occupied fermion mode. The inner diagonal pair
/// is degenerate (r33 = r22) and the inner coherence r23 is real, so seven
/// real numbers reduce to five here.
struct XState {
  double r11 = 0.0;
  double r22 = 0.0;
  double r44 = 0.0;
  std::complex<double> r14{0.0, 0.0};
  double r23 = 0.0;

  double trace() const { return r11 + 2.0 * r22 + r44; }
};

/// Eigenvalues of sqrt(rho rho~) for an X-state, sorted descending.
struct ConcurrenceSpectrum {
  double l1 = 0.0, l2 = 0.0, l3 = 0.0, l4 = 0.0;
};

/// Wick's-theorem assembly of the nearest-neighbor reduced density matrix:
///   r11 = g11^2 + |f12|^2 - g12^2
///   r22 = g11 - r11,  r44 = 1 - r11 - 2 r22
///   r14 = -f12,       r23 = g12
/// Throws PositivityError if trace or X-state positivity checks fail beyond
/// tolerance (quadrature noise allowances: 1e-10 trace, 1e-8 positivity).
XState assemble_rho(const CorrelatorSet& c);

/// Closed-form spectrum: | |r14| +- sqrt(r11 r44) | and |r22 +- r23|.
/// Radicands below -1e-12 raise PositivityError; tinier negatives clamp to 0.
ConcurrenceSpectrum x_spectrum(const XState& rho);

/// C = max(0, l1 - l2 - l3 - l4).
double concurrence(const ConcurrenceSpectrum& spectrum);

/// End-to-end concurrence: correlators -> X-state -> spectrum -> C.
double concurrence_at(const ModelParams& params, double t,
                      const QuadratureConfig& cfg = {});

}  // namespace qc
