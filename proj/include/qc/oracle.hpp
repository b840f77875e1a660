#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "qc/correlators.hpp"

namespace qc {

/// Finite periodic chain for the exact-diagonalization referee.
/// N must be even and within [4, 12] (Hilbert dimension <= 4096).
struct SpinChainSpec {
  int n_sites = 10;
  double lambda = 1.0;
};

using DensityMatrix4 = Eigen::Matrix4cd;

/// H = -1/2 sum_i (lambda sx_i sx_{i+1} + sz_i), periodic, dense, in the
/// computational sz basis. Bit convention: site 1 is the most significant
/// bit; bit value 1 means spin-up (= occupied fermion mode).
Eigen::MatrixXd build_hamiltonian(const SpinChainSpec& spec);

/// The two fully-x-polarized product states as state vectors; the initial
/// condition is their equal (rank-2) mixture.
std::pair<Eigen::VectorXd, Eigen::VectorXd> initial_state_vectors(int n_sites);

/// Holds one eigendecomposition of H and reuses it across times.
class SpinChainOracle {
 public:
  explicit SpinChainOracle(const SpinChainSpec& spec);

  /// Evolve both mixture components to time t, average the projectors, and
  /// partial-trace over sites 3..N. Output in the {uu, ud, du, dd} basis.
  DensityMatrix4 evolve_and_reduce(double t) const;

  double ground_state_energy() const { return energies_(0); }
  const SpinChainSpec& spec() const { return spec_; }

 private:
  SpinChainSpec spec_;
  Eigen::VectorXd energies_;
  Eigen::MatrixXd eigenvectors_;
  Eigen::VectorXd plus_coeffs_;   // eigenbasis coefficients of |N+>
  Eigen::VectorXd minus_coeffs_;  // ... and |N->
};

/// Wootters concurrence of an arbitrary two-qubit density matrix via the
/// spin-flipped product rho rho~: quartic characteristic polynomial from
/// traces of powers, Ferrari roots, clamp, sqrt, C = max(0, l1-l2-l3-l4).
/// Deliberately shares no code with the closed-form X-state route.
double wootters_generic(const DensityMatrix4& rho);

/// Midpoint-rule discretization of the thermodynamic-limit correlators over
/// n_modes momenta k_n = pi (n - 1/2) / n_modes. Independent of the
/// Gauss-Legendre path; used as a cross-check.
CorrelatorSet momentum_sum_correlators(const ModelParams& params, double t,
                                       int n_modes);

struct StaticCheckReport {
  double max_sigma_z = 0.0;       // largest |<sz_i>| over sites
  double max_rho_deviation = 0.0; // largest entrywise deviation from rho(0)
};

/// t=0 sanity pass on the spin side: all <sz_i> vanish and the reduced
/// matrix equals the 1/4-on-X-positions initial matrix.
StaticCheckReport static_check(int n_sites);

}  // namespace qc
