#include "qc/oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dd.hpp"
#include "qc/quartic.hpp"

namespace qc {

namespace {

using cplx = std::complex<double>;

void check_spec(const SpinChainSpec& spec) {
  if (spec.n_sites < 4 || spec.n_sites > 12 || spec.n_sites % 2 != 0) {
    throw std::invalid_argument("n_sites must be even and within [4, 12]");
  }
  if (!(spec.lambda >= 0.0) || !std::isfinite(spec.lambda)) {
    throw std::invalid_argument("lambda must be finite and nonnegative");
  }
}

}  // namespace

Eigen::MatrixXd build_hamiltonian(const SpinChainSpec& spec) {
  check_spec(spec);
  const int n = spec.n_sites;
  const int dim = 1 << n;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int s = 0; s < dim; ++s) {
    // field term: -1/2 sum_i sz_i = -(n_up - n_down)/2
    const int n_up = std::popcount(static_cast<unsigned>(s));
    h(s, s) = -0.5 * (2 * n_up - n);
    // coupling: sx_i sx_{i+1} flips the two bits (site i has bit n - i)
    for (int site = 1; site <= n; ++site) {
      const int next = site % n + 1;
      const int mask = (1 << (n - site)) | (1 << (n - next));
      h(s ^ mask, s) += -0.5 * spec.lambda;
    }
  }
  return h;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> initial_state_vectors(int n_sites) {
  const int dim = 1 << n_sites;
  const double norm = std::pow(2.0, -0.5 * n_sites);
  Eigen::VectorXd plus(dim), minus(dim);
  for (int s = 0; s < dim; ++s) {
    const int n_down = n_sites - std::popcount(static_cast<unsigned>(s));
    plus(s) = norm;
    minus(s) = (n_down % 2 == 0) ? norm : -norm;
  }
  return {plus, minus};
}

SpinChainOracle::SpinChainOracle(const SpinChainSpec& spec) : spec_(spec) {
  const Eigen::MatrixXd h = build_hamiltonian(spec);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  energies_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
  auto [plus, minus] = initial_state_vectors(spec.n_sites);
  plus_coeffs_ = eigenvectors_.transpose() * plus;
  minus_coeffs_ = eigenvectors_.transpose() * minus;
}

DensityMatrix4 SpinChainOracle::evolve_and_reduce(double t) const {
  const int n = spec_.n_sites;
  const int env_dim = 1 << (n - 2);
  const cplx i_unit(0.0, 1.0);
  const Eigen::VectorXcd phases =
      (-i_unit * t * energies_.cast<cplx>().array()).exp();

  DensityMatrix4 rho = DensityMatrix4::Zero();
  for (const Eigen::VectorXd* coeffs : {&plus_coeffs_, &minus_coeffs_}) {
    const Eigen::VectorXcd psi =
        eigenvectors_ * (phases.array() * coeffs->cast<cplx>().array()).matrix();
    // Sites 1,2 occupy the top two bits; basis row 0 = uu = bit pattern 11,
    // so the block index for matrix row i is 3 - i.
    for (int row = 0; row < 4; ++row) {
      const int a = 3 - row;
      for (int col = 0; col < 4; ++col) {
        const int b = 3 - col;
        cplx sum = 0.0;
        for (int e = 0; e < env_dim; ++e) {
          sum += psi(a * env_dim + e) * std::conj(psi(b * env_dim + e));
        }
        rho(row, col) += 0.5 * sum;
      }
    }
  }
  return rho;
}

namespace {

using detail::dd;
using detail::ddc;

struct Mat4dd {
  ddc m[4][4];
};

Mat4dd multiply(const Mat4dd& a, const Mat4dd& b) {
  Mat4dd out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      ddc sum;
      for (int k = 0; k < 4; ++k) sum = sum + a.m[i][k] * b.m[k][j];
      out.m[i][j] = sum;
    }
  }
  return out;
}

dd trace_re(const Mat4dd& a) {
  dd sum;
  for (int i = 0; i < 4; ++i) sum = sum + a.m[i][i].re;
  return sum;
}

// Guarded Newton on the monic quartic with double-double coefficients;
// rescues the digits the solver loses at near-degenerate small roots. At an
// exact double root f' vanishes along with f, so oversized steps are
// rejected and the iterate with the smallest residual wins.
ddc polish_dd(ddc x, const ddc& a, const ddc& b, const ddc& c, const ddc& d) {
  const auto residual = [&](ddc y) {
    return detail::abs_approx(((y + a) * y + b) * y * y + c * y + d);
  };
  ddc best = x;
  double best_res = residual(x);
  for (int i = 0; i < 8; ++i) {
    const ddc f = ((x + a) * x + b) * x * x + c * x + d;
    const ddc fp = (ddc(4.0, 0.0) * x + ddc(3.0, 0.0) * a) * x * x +
                   ddc(2.0, 0.0) * b * x + c;
    if (detail::abs_approx(fp) == 0.0) break;
    const ddc step = f / fp;
    if (detail::abs_approx(step) > 0.01 * (1.0 + detail::abs_approx(x))) break;
    x = x - step;
    const double res = residual(x);
    if (res < best_res) {
      best = x;
      best_res = res;
    }
    if (detail::abs_approx(step) < 1e-30 * (1.0 + detail::abs_approx(x))) break;
  }
  return best;
}

}  // namespace

double wootters_generic(const DensityMatrix4& rho) {
  // The traces-of-powers route digs the small elementary-symmetric
  // coefficients out of O(1) cancellations, so coefficients and the final
  // root polish run in double-double arithmetic.
  Mat4dd rho_dd, tilde;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      rho_dd.m[i][j] = ddc(rho(i, j).real(), rho(i, j).imag());
    }
  }
  // rho~ = (sy x sy) rho* (sy x sy): entry (i,j) -> conj entry (3-i, 3-j)
  // with sign (-1)^{parity(i) + parity(j)} where parity flips on rows 1,2.
  const double sign[4] = {-1.0, 1.0, 1.0, -1.0};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const ddc v = conj(rho_dd.m[3 - i][3 - j]);
      tilde.m[i][j] =
          ddc(dd(sign[i] * sign[j]) * v.re, dd(sign[i] * sign[j]) * v.im);
    }
  }
  const Mat4dd m = multiply(rho_dd, tilde);
  const Mat4dd m2 = multiply(m, m);

  // characteristic polynomial coefficients from traces of powers
  const dd p1 = trace_re(m);
  const dd p2 = trace_re(m2);
  const dd p3 = trace_re(multiply(m2, m));
  const dd p4 = trace_re(multiply(m2, m2));
  const dd e1 = p1;
  const dd e2 = (p1 * p1 - p2) / dd(2.0);
  const dd e3 = (p1 * p1 * p1 - dd(3.0) * p1 * p2 + dd(2.0) * p3) / dd(6.0);
  const dd e4 = (p1 * p1 * p1 * p1 - dd(6.0) * p1 * p1 * p2 +
                 dd(3.0) * p2 * p2 + dd(8.0) * p1 * p3 - dd(6.0) * p4) /
                dd(24.0);

  auto widen = [](dd v) {
    return std::complex<long double>(static_cast<long double>(v.hi) +
                                     static_cast<long double>(v.lo));
  };
  const auto seeds = solve_quartic_ext(widen(-e1), widen(e2), widen(-e3),
                                       widen(e4));
  const ddc qa_full{-e1, dd(0.0)}, qb_full{e2, dd(0.0)};
  const ddc qc_full{-e3, dd(0.0)}, qd_full{e4, dd(0.0)};
  double l[4];
  for (int i = 0; i < 4; ++i) {
    ddc seed(static_cast<double>(seeds[i].real()),
             static_cast<double>(seeds[i].imag()));
    const ddc refined = polish_dd(seed, qa_full, qb_full, qc_full, qd_full);
    const double re = refined.re.hi;
    if (re < -1e-8) {
      throw PositivityError("rho rho~ eigenvalue " + std::to_string(re) +
                            " below tolerance");
    }
    l[i] = std::sqrt(std::max(re, 0.0));
  }
  std::sort(l, l + 4, std::greater<>());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

CorrelatorSet momentum_sum_correlators(const ModelParams& params, double t,
                                       int n_modes) {
  if (n_modes < 100) throw std::invalid_argument("n_modes must be >= 100");
  const double lambda = params.lambda;
  double occ = 0.0, hop = 0.0;
  cplx pair = 0.0;
  for (int n = 1; n <= n_modes; ++n) {
    const double k = M_PI * (n - 0.5) / n_modes;
    const double sk = std::sin(k);
    const double ck = std::cos(k);
    const double energy_sq = 1.0 + lambda * lambda + 2.0 * lambda * ck;
    const double energy = std::sqrt(energy_sq);
    const double st = std::sin(energy * t);
    const double base = lambda * sk * sk * st * st / energy_sq;
    occ += base;
    hop += ck * base;
    pair += sk * sk *
            cplx(-std::cos(2.0 * energy * t) -
                     2.0 * lambda * st * st * (ck + lambda) / energy_sq,
                 std::sin(2.0 * energy * t) / energy);
  }
  CorrelatorSet out;
  out.lambda = lambda;
  out.t = t;
  out.g11 = 0.5 + occ / n_modes;
  out.g12 = 0.25 + hop / n_modes;
  out.f12 = pair / (2.0 * n_modes);
  return out;
}

StaticCheckReport static_check(int n_sites) {
  if (n_sites < 6) throw std::invalid_argument("n_sites must be >= 6");
  SpinChainSpec spec{n_sites, 1.0};
  check_spec(spec);
  auto [plus, minus] = initial_state_vectors(n_sites);
  StaticCheckReport report;
  // <sz_i> over the mixture
  for (int site = 1; site <= n_sites; ++site) {
    const int bit = 1 << (n_sites - site);
    double expect = 0.0;
    for (int s = 0; s < (1 << n_sites); ++s) {
      const double sign = (s & bit) ? 1.0 : -1.0;
      expect += 0.5 * sign * (plus(s) * plus(s) + minus(s) * minus(s));
    }
    report.max_sigma_z = std::max(report.max_sigma_z, std::abs(expect));
  }
  // reduced matrix at t=0 against the 1/4-on-X-positions matrix
  SpinChainOracle oracle(spec);
  const DensityMatrix4 rho = oracle.evolve_and_reduce(0.0);
  DensityMatrix4 expected = DensityMatrix4::Zero();
  expected(0, 0) = expected(1, 1) = expected(2, 2) = expected(3, 3) = 0.25;
  expected(0, 3) = expected(3, 0) = expected(1, 2) = expected(2, 1) = 0.25;
  report.max_rho_deviation = (rho - expected).cwiseAbs().maxCoeff();
  return report;
}

}  // namespace qc
