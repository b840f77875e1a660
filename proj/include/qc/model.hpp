#pragma once

#include <complex>

#include "qc/errors.hpp"

namespace qc {

/// Reciprocal transverse field: the Ising coupling in units of the field.
/// lambda >= 0; the chain is quantum critical at lambda = 1.
struct ModelParams {
  double lambda = 1.0;
};

/// Quasimomentum in [0, pi].
struct Mode {
  double k = 0.0;
};

/// Mode-mixing amplitudes of the quasiparticle transformation.
/// Normalized: alpha^2 + beta^2 = 1; beta carries the sign of sin k.
struct BogoliubovCoefficients {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Heisenberg-picture coefficients of a fermion operator at time t:
///   A(k,t) = e^{i Lk t} - 2 i beta^2 sin(Lk t)
///   B(k,t) = -2 i alpha beta sin(Lk t)
/// Unitarity gives |A|^2 + |B|^2 = 1; B is purely imaginary.
struct PropagatorAmplitudes {
  std::complex<double> a{1.0, 0.0};
  std::complex<double> b{0.0, 0.0};
};

/// Quasiparticle energy Lk = sqrt(1 + lambda^2 + 2 lambda cos k).
/// Vanishes only at (lambda=1, k=pi), the critical gap closing.
double dispersion(const ModelParams& params, const Mode& mode);

/// Coefficients via the cancellation-free forms
///   alpha = sqrt((Lk - (1 + lambda cos k)) / (2 Lk))
///   beta  = sign(sin k) sqrt((Lk + (1 + lambda cos k)) / (2 Lk))
/// Throws DegenerateModeError at (lambda=1, k=pi) where Lk = 0.
BogoliubovCoefficients bogoliubov(const ModelParams& params, const Mode& mode);

/// A(k,t), B(k,t) built from beta^2 = (Lk + 1 + lambda cos k)/(2 Lk) and
/// alpha beta = lambda sin k / (2 Lk). At the degenerate mode sin(Lk t) = 0
/// forces the finite limit A=1, B=0, so no error path exists here.
PropagatorAmplitudes propagator_amplitudes(const ModelParams& params,
                                           const Mode& mode, double t);

}  // namespace qc
