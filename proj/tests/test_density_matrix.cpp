#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "qc/density_matrix.hpp"
#include "qc/oracle.hpp"

using qc::CorrelatorSet;
using qc::XState;

namespace {

CorrelatorSet make_set(double g11, double g12, std::complex<double> f12) {
  CorrelatorSet c;
  c.g11 = g11;
  c.g12 = g12;
  c.f12 = f12;
  return c;
}

qc::DensityMatrix4 to_matrix(const XState& x) {
  qc::DensityMatrix4 rho = qc::DensityMatrix4::Zero();
  rho(0, 0) = x.r11;
  rho(1, 1) = rho(2, 2) = x.r22;
  rho(3, 3) = x.r44;
  rho(0, 3) = x.r14;
  rho(3, 0) = std::conj(x.r14);
  rho(1, 2) = rho(2, 1) = x.r23;
  return rho;
}

XState random_x_state(std::mt19937& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double d[3] = {uni(rng), uni(rng), uni(rng)};  // r11, r22 (twice), r44
  const double norm = d[0] + 2.0 * d[1] + d[2];
  XState x;
  x.r11 = d[0] / norm;
  x.r22 = d[1] / norm;
  x.r44 = d[2] / norm;
  const double phase = 2.0 * M_PI * uni(rng);
  x.r14 = uni(rng) * std::sqrt(x.r11 * x.r44) *
          std::complex<double>(std::cos(phase), std::sin(phase));
  x.r23 = (2.0 * uni(rng) - 1.0) * x.r22;
  return x;
}

}  // namespace

TEST_CASE("t=0 correlators assemble to the quarter matrix") {
  const auto rho = qc::assemble_rho(make_set(0.5, 0.25, {-0.25, 0.0}));
  CHECK(rho.r11 == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(rho.r22 == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(rho.r44 == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(std::abs(rho.r14 - 0.25) < 1e-14);
  CHECK(rho.r23 == doctest::Approx(0.25).epsilon(1e-14));
  const auto spectrum = qc::x_spectrum(rho);
  CHECK(spectrum.l1 == doctest::Approx(0.5));
  CHECK(spectrum.l2 == doctest::Approx(0.5));
  CHECK(spectrum.l3 == doctest::Approx(0.0));
  CHECK(spectrum.l4 == doctest::Approx(0.0));
  CHECK(qc::concurrence(spectrum) == 0.0);
}

TEST_CASE("assembled matrices have unit trace") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> lam(0.0, 3.0);
  std::uniform_real_distribution<double> time(0.0, 10.0);
  for (int i = 0; i < 40; ++i) {
    const auto rho =
        qc::assemble_rho(qc::correlator_set({lam(rng)}, time(rng)));
    CHECK(rho.trace() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("x-state positivity holds over the physical window") {
  for (double lambda : {0.0, 0.5, 1.0, 1.5, 3.0}) {
    for (double t = 0.0; t <= 10.0; t += 0.5) {
      const auto rho = qc::assemble_rho(qc::correlator_set({lambda}, t));
      CHECK(rho.r11 * rho.r44 >= std::norm(rho.r14) - 1e-8);
      CHECK(rho.r22 * rho.r22 >= rho.r23 * rho.r23 - 1e-8);
    }
  }
}

TEST_CASE("bell state spectrum and concurrence") {
  XState bell;
  bell.r11 = bell.r44 = 0.5;
  bell.r14 = 0.5;
  bell.r22 = bell.r23 = 0.0;
  const auto spectrum = qc::x_spectrum(bell);
  CHECK(spectrum.l1 == doctest::Approx(1.0));
  CHECK(spectrum.l2 == doctest::Approx(0.0));
  CHECK(qc::concurrence(spectrum) == doctest::Approx(1.0));
}

TEST_CASE("maximally mixed state has zero concurrence") {
  XState mixed;
  mixed.r11 = mixed.r22 = mixed.r44 = 0.25;
  const auto spectrum = qc::x_spectrum(mixed);
  CHECK(spectrum.l1 == doctest::Approx(0.25));
  CHECK(spectrum.l4 == doctest::Approx(0.25));
  CHECK(qc::concurrence(spectrum) == 0.0);
}

TEST_CASE("closed form equals generic Wootters on random x-states") {
  std::mt19937 rng(90210);
  for (int i = 0; i < 1000; ++i) {
    const XState x = random_x_state(rng);
    const double closed = qc::concurrence(qc::x_spectrum(x));
    const double generic = qc::wootters_generic(to_matrix(x));
    CHECK(std::abs(closed - generic) < 1e-10);
  }
}

TEST_CASE("closed form equals generic Wootters along the quench") {
  for (double lambda : {0.5, 1.0, 1.5}) {
    for (double t : {0.5, 1.0, 2.0, 5.0}) {
      const auto x = qc::assemble_rho(qc::correlator_set({lambda}, t));
      const double closed = qc::concurrence(qc::x_spectrum(x));
      const double generic = qc::wootters_generic(to_matrix(x));
      CHECK(std::abs(closed - generic) < 1e-10);
    }
  }
}

TEST_CASE("no initial entanglement for any lambda") {
  for (int i = 0; i < 50; ++i) {
    const double lambda = 5.0 * i / 49.0;
    CHECK(qc::concurrence_at({lambda}, 0.0) == doctest::Approx(0.0).epsilon(1e-10));
  }
}

TEST_CASE("lambda=0 never generates entanglement") {
  for (double t = 0.0; t <= 10.0; t += 0.25) {
    CHECK(qc::concurrence_at({0.0}, t) <= 1e-12);  // zero up to roundoff
  }
}

TEST_CASE("concurrence stays within [0, 1]") {
  std::mt19937 rng(64);
  std::uniform_real_distribution<double> lam(0.0, 3.0);
  std::uniform_real_distribution<double> time(0.0, 10.0);
  for (int i = 0; i < 60; ++i) {
    const double c = qc::concurrence_at({lam(rng)}, time(rng));
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
  }
}
