#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qc/density_matrix.hpp"

namespace qc {

/// Rectangular (lambda, t) scan window.
struct ScanGrid {
  double lambda_min = 0.2, lambda_max = 3.0, lambda_step = 0.02;
  double t_min = 0.0, t_max = 10.0, t_step = 0.01;
};

/// Controls for first-maximum detection: scan (0, t_max] in steps of
/// coarse_dt, count C > epsilon as entanglement.
struct SearchConfig {
  double t_max = 10.0;
  double coarse_dt = 0.01;
  double epsilon = 1e-6;
};

struct TmPoint {
  double lambda = 0.0;
  double t_m = 0.0;  // time of the first concurrence maximum
  double c_m = 0.0;  // concurrence there
};

struct TmCurve {
  std::vector<TmPoint> points;                      // sorted by lambda
  std::vector<std::pair<double, double>> derivative; // interior points only
  double argmin_lambda = 0.0;  // parabola-refined minimum of the derivative
  double min_derivative = 0.0;
};

struct Surface {
  std::vector<double> lambdas;
  std::vector<double> times;
  std::vector<double> values;  // row-major, lambdas x times

  double at(std::size_t i_lambda, std::size_t i_t) const {
    return values[i_lambda * times.size() + i_t];
  }
};

enum class Regime { multi_max, single_max, oscillatory };

struct RegimeResult {
  Regime regime = Regime::single_max;
  bool boundary = false;  // set when the structural call is ambiguous
  int n_maxima = 0;
};

/// Dense concurrence table over the grid. Worker slots are pre-indexed, so
/// the result is independent of worker count.
Surface concurrence_surface(const ScanGrid& grid, const QuadratureConfig& cfg,
                            int workers = 1);

/// First strict local maximum of C(t) with C > epsilon, located by the
/// coarse scan and refined by golden-section maximization to 1e-5 in t.
/// Empty when no entanglement appears in (0, t_max] (e.g. lambda = 0).
std::optional<TmPoint> first_max_time(double lambda,
                                      const QuadratureConfig& cfg,
                                      const SearchConfig& search);

/// T_m over a lambda grid with central-difference derivative and the
/// parabola-refined argmin of the derivative (the critical-point indicator).
TmCurve tm_curve(const std::vector<double>& lambdas,
                 const QuadratureConfig& cfg, const SearchConfig& search,
                 int workers = 1);

/// Max concurrence over the lambda grid and a t grid of step t_step inside
/// the band (exclusive endpoints).
double dead_band_check(const std::vector<double>& lambdas,
                       std::pair<double, double> t_band,
                       const QuadratureConfig& cfg, double t_step = 0.01,
                       int workers = 1);

/// Counts maxima and zero-entanglement gaps of C(t) over (0, window] and
/// maps the structure onto the three quench regimes.
RegimeResult regime_classify(double lambda, const QuadratureConfig& cfg,
                             double window, double coarse_dt = 0.01,
                             double epsilon = 1e-6);

/// Runs fn(i) for i in [0, n) on `workers` threads. Exceptions propagate.
void parallel_for(std::size_t n, int workers,
                  const std::function<void(std::size_t)>& fn);

}  // namespace qc
