#include "qc/quartic.hpp"

#include <cmath>

// Extended precision throughout: the characteristic polynomials handed to
// this solver often carry near-zero root pairs whose product is dug out of
// O(1) trace combinations, so double-precision coefficients alone would cap
// the attainable root accuracy.

namespace qc {

namespace {

using cplx = std::complex<long double>;

// Stable complex quadratic: y^2 + b y + c.
std::array<cplx, 2> solve_quadratic(cplx b, cplx c) {
  const cplx disc = std::sqrt(b * b - 4.0L * c);
  // pick the sign that avoids cancellation in -b -+ disc
  const cplx q = (std::real(std::conj(b) * disc) >= 0.0L) ? -0.5L * (b + disc)
                                                          : -0.5L * (b - disc);
  if (std::abs(q) == 0.0L) return {cplx(0.0L), cplx(0.0L)};
  return {q, c / q};
}

// All three roots of z^3 + a z^2 + b z + c (Cardano).
std::array<cplx, 3> solve_cubic(cplx a, cplx b, cplx c) {
  const cplx p = b - a * a / 3.0L;
  const cplx q = c - a * b / 3.0L + 2.0L * a * a * a / 27.0L;
  const cplx shift = -a / 3.0L;
  if (std::abs(p) < 1e-4000L && std::abs(q) < 1e-4000L) {
    return {shift, shift, shift};
  }
  const cplx disc = std::sqrt(q * q / 4.0L + p * p * p / 27.0L);
  const cplx u3 = (std::abs(-q / 2.0L + disc) >= std::abs(-q / 2.0L - disc))
                      ? -q / 2.0L + disc
                      : -q / 2.0L - disc;
  const cplx u = std::pow(u3, 1.0L / 3.0L);
  const cplx omega(-0.5L, std::sqrt(3.0L) / 2.0L);
  std::array<cplx, 3> roots;
  cplx uk = u;
  for (int i = 0; i < 3; ++i) {
    const cplx w = uk - p / (3.0L * uk);
    roots[i] = w + shift;
    uk *= omega;
  }
  return roots;
}

// Guarded Newton: at a multiple root f' vanishes with f, so an unguarded
// step can be O(1) garbage. Cap the step size and keep the iterate with the
// smallest residual.
cplx polish(cplx x, cplx a, cplx b, cplx c, cplx d) {
  const auto residual = [&](cplx y) {
    return std::abs(((y + a) * y + b) * y * y + c * y + d);
  };
  cplx best = x;
  long double best_res = residual(x);
  for (int i = 0; i < 6; ++i) {
    const cplx f = ((x + a) * x + b) * x * x + c * x + d;
    const cplx fp = (4.0L * x + 3.0L * a) * x * x + 2.0L * b * x + c;
    if (std::abs(fp) == 0.0L) break;
    const cplx step = f / fp;
    if (std::abs(step) > 0.01L * (1.0L + std::abs(x))) break;
    x -= step;
    const long double res = residual(x);
    if (res < best_res) {
      best = x;
      best_res = res;
    }
    if (std::abs(step) < 1e-20L * (1.0L + std::abs(x))) break;
  }
  return best;
}

}  // namespace

std::array<cplx, 4> solve_quartic_ext(cplx a, cplx b, cplx c, cplx d) {
  // depress: x = y - a/4
  const cplx p = b - 3.0L * a * a / 8.0L;
  const cplx q = c - a * b / 2.0L + a * a * a / 8.0L;
  const cplx r =
      d - a * c / 4.0L + a * a * b / 16.0L - 3.0L * a * a * a * a / 256.0L;
  const cplx shift = -a / 4.0L;
  const long double scale = 1.0L + std::abs(p) + std::abs(q) + std::abs(r);

  std::array<cplx, 4> roots;
  if (std::abs(q) < 1e-18L * scale) {
    // biquadratic
    const auto y2 = solve_quadratic(p, r);
    roots = {std::sqrt(y2[0]) + shift, -std::sqrt(y2[0]) + shift,
             std::sqrt(y2[1]) + shift, -std::sqrt(y2[1]) + shift};
  } else {
    // resolvent cubic z^3 - p z^2 - 4 r z + (4 p r - q^2); pick the root
    // maximizing |z - p| so the factorization parameter s stays away from 0
    const auto zs = solve_cubic(-p, -4.0L * r, 4.0L * p * r - q * q);
    cplx z = zs[0];
    for (const cplx& cand : zs) {
      if (std::abs(cand - p) > std::abs(z - p)) z = cand;
    }
    const cplx s = std::sqrt(z - p);
    const cplx shift_q = q / (2.0L * s);
    const auto y_lo = solve_quadratic(s, z / 2.0L - shift_q);
    const auto y_hi = solve_quadratic(-s, z / 2.0L + shift_q);
    roots = {y_lo[0] + shift, y_lo[1] + shift, y_hi[0] + shift,
             y_hi[1] + shift};
  }
  for (cplx& root : roots) root = polish(root, a, b, c, d);
  return roots;
}

std::array<std::complex<double>, 4> solve_quartic(std::complex<double> a,
                                                  std::complex<double> b,
                                                  std::complex<double> c,
                                                  std::complex<double> d) {
  const auto roots = solve_quartic_ext(cplx(a), cplx(b), cplx(c), cplx(d));
  std::array<std::complex<double>, 4> out;
  for (int i = 0; i < 4; ++i) {
    out[i] = std::complex<double>(static_cast<double>(roots[i].real()),
                                  static_cast<double>(roots[i].imag()));
  }
  return out;
}

}  // namespace qc
