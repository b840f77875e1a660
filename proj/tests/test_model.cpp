#include <cmath>
#include <random>

#include "doctest.h"
#include "qc/model.hpp"

using qc::Mode;
using qc::ModelParams;

TEST_CASE("dispersion closed form") {
  CHECK(qc::dispersion({1.0}, {M_PI}) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(qc::dispersion({0.0}, {0.3}) == doctest::Approx(1.0));
  CHECK(qc::dispersion({0.0}, {2.9}) == doctest::Approx(1.0));
  CHECK(qc::dispersion({2.0}, {0.0}) == doctest::Approx(3.0));
}

TEST_CASE("dispersion minimum over k equals |1 - lambda|") {
  for (double lambda : {0.0, 0.3, 0.7, 1.0, 1.4, 2.5}) {
    double min_energy = 1e300;
    for (int i = 0; i <= 2000; ++i) {
      min_energy = std::min(min_energy,
                            qc::dispersion({lambda}, {M_PI * i / 2000.0}));
    }
    CHECK(min_energy == doctest::Approx(std::abs(1.0 - lambda)).epsilon(1e-6));
    if (lambda != 1.0) CHECK(min_energy > 0.0);
  }
}

TEST_CASE("bogoliubov at lambda=1, k=pi/2") {
  const auto bc = qc::bogoliubov({1.0}, {M_PI / 2.0});
  CHECK(bc.alpha == doctest::Approx(std::sin(M_PI / 8.0)).epsilon(1e-12));
  CHECK(bc.beta == doctest::Approx(std::cos(M_PI / 8.0)).epsilon(1e-12));
}

TEST_CASE("bogoliubov degenerate mode throws") {
  CHECK_THROWS_AS(qc::bogoliubov({1.0}, {M_PI}), qc::DegenerateModeError);
}

TEST_CASE("bogoliubov k->0 limit at lambda=2") {
  const auto bc = qc::bogoliubov({2.0}, {1e-9});
  CHECK(bc.alpha == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(bc.beta == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("normalization property alpha^2 + beta^2 = 1") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> lam(0.0, 3.0);
  std::uniform_real_distribution<double> mom(0.0, M_PI);
  for (int i = 0; i < 10000; ++i) {
    const ModelParams p{lam(rng)};
    const Mode m{mom(rng)};
    if (qc::dispersion(p, m) < 1e-8) continue;
    const auto bc = qc::bogoliubov(p, m);
    CHECK(bc.alpha * bc.alpha + bc.beta * bc.beta ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bc.alpha >= 0.0);
  }
}

TEST_CASE("stable forms match the raw coefficient formulas") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> lam(0.0, 3.0);
  std::uniform_real_distribution<double> mom(0.05, M_PI - 0.05);
  for (int i = 0; i < 1000; ++i) {
    const double lambda = lam(rng);
    const double k = mom(rng);
    const double energy = qc::dispersion({lambda}, {k});
    const double u = 1.0 + lambda * std::cos(k);
    const double denom_sq = 2.0 * (energy * energy - u * energy);
    if (denom_sq < 1e-12) continue;  // near-removable singularity of the raw form
    const double alpha_raw = (energy - u) / std::sqrt(denom_sq);
    const double beta_raw = lambda * std::sin(k) / std::sqrt(denom_sq);
    const auto bc = qc::bogoliubov({lambda}, {k});
    CHECK(bc.alpha == doctest::Approx(alpha_raw).epsilon(1e-10));
    CHECK(bc.beta == doctest::Approx(beta_raw).epsilon(1e-10));
  }
}

TEST_CASE("propagator amplitudes at t=0") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> lam(0.0, 3.0);
  std::uniform_real_distribution<double> mom(0.0, M_PI);
  for (int i = 0; i < 100; ++i) {
    const auto amp = qc::propagator_amplitudes({lam(rng)}, {mom(rng)}, 0.0);
    CHECK(std::abs(amp.a - 1.0) < 1e-15);
    CHECK(std::abs(amp.b) < 1e-15);
  }
}

TEST_CASE("propagator unitarity |A|^2 + |B|^2 = 1") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> lam(0.0, 3.0);
  std::uniform_real_distribution<double> mom(0.0, M_PI);
  std::uniform_real_distribution<double> time(0.0, 10.0);
  for (int i = 0; i < 10000; ++i) {
    const auto amp =
        qc::propagator_amplitudes({lam(rng)}, {mom(rng)}, time(rng));
    CHECK(std::norm(amp.a) + std::norm(amp.b) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(amp.b.real()) < 1e-15);  // B purely imaginary
  }
}

TEST_CASE("free evolution at lambda=0") {
  const auto amp = qc::propagator_amplitudes({0.0}, {0.7}, 1.3);
  CHECK(std::abs(amp.a) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(amp.b) < 1e-15);
}

TEST_CASE("degenerate mode resolves to the free limit") {
  const auto amp = qc::propagator_amplitudes({1.0}, {M_PI}, 3.7);
  CHECK(std::abs(amp.a - 1.0) < 1e-12);
  CHECK(std::abs(amp.b) < 1e-12);
}
