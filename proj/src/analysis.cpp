#include "qc/analysis.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace qc {

namespace {

std::vector<double> linspace_by_step(double lo, double hi, double step) {
  if (!(step > 0.0) || !(lo < hi)) {
    throw std::invalid_argument("grid requires step > 0 and min < max");
  }
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 0.5)) + 1;
  if (count > 10'000'000) throw std::invalid_argument("grid too large");
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = lo + static_cast<double>(i) * step;
  if (out.back() > hi + 1e-12) out.pop_back();
  return out;
}

// Golden-section maximization of f on [a, b] to the given x tolerance.
double golden_max(const std::function<double(double)>& f, double a, double b,
                  double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

void parallel_for(std::size_t n, int workers,
                  const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  const std::size_t count = std::min(static_cast<std::size_t>(workers), n);
  threads.reserve(count);
  for (std::size_t i = 0; i < count; ++i) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

Surface concurrence_surface(const ScanGrid& grid, const QuadratureConfig& cfg,
                            int workers) {
  Surface out;
  out.lambdas = linspace_by_step(grid.lambda_min, grid.lambda_max, grid.lambda_step);
  out.times = linspace_by_step(grid.t_min, grid.t_max, grid.t_step);
  out.values.resize(out.lambdas.size() * out.times.size());
  parallel_for(out.lambdas.size(), workers, [&](std::size_t i) {
    const ModelParams params{out.lambdas[i]};
    for (std::size_t j = 0; j < out.times.size(); ++j) {
      try {
        out.values[i * out.times.size() + j] =
            concurrence_at(params, out.times[j], cfg);
      } catch (const std::exception& e) {
        throw std::runtime_error("surface evaluation failed at lambda=" +
                                 std::to_string(out.lambdas[i]) + " t=" +
                                 std::to_string(out.times[j]) + ": " + e.what());
      }
    }
  });
  return out;
}

std::optional<TmPoint> first_max_time(double lambda,
                                      const QuadratureConfig& cfg,
                                      const SearchConfig& search) {
  const ModelParams params{lambda};
  auto eval = [&](double t) { return concurrence_at(params, t, cfg); };
  const double dt = search.coarse_dt;
  double c_prev2 = eval(0.0);
  double c_prev1 = eval(dt);
  for (int i = 2; (i - 1) * dt <= search.t_max; ++i) {
    const double t_cur = i * dt;
    const double c_cur = eval(t_cur);
    if (c_prev1 > search.epsilon && c_prev1 > c_prev2 && c_prev1 > c_cur) {
      const double t_star = golden_max(eval, (i - 2) * dt, t_cur, 1e-5);
      return TmPoint{lambda, t_star, eval(t_star)};
    }
    c_prev2 = c_prev1;
    c_prev1 = c_cur;
  }
  return std::nullopt;
}

TmCurve tm_curve(const std::vector<double>& lambdas,
                 const QuadratureConfig& cfg, const SearchConfig& search,
                 int workers) {
  std::vector<std::optional<TmPoint>> slots(lambdas.size());
  parallel_for(lambdas.size(), workers, [&](std::size_t i) {
    slots[i] = first_max_time(lambdas[i], cfg, search);
  });
  TmCurve curve;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) {
      throw std::runtime_error("no first maximum found at lambda=" +
                               std::to_string(lambdas[i]));
    }
    curve.points.push_back(*slots[i]);
  }
  if (curve.points.size() < 3) {
    throw std::invalid_argument("tm_curve needs at least 3 lambda values");
  }
  for (std::size_t i = 1; i + 1 < curve.points.size(); ++i) {
    const double dtm = (curve.points[i + 1].t_m - curve.points[i - 1].t_m) /
                       (curve.points[i + 1].lambda - curve.points[i - 1].lambda);
    curve.derivative.emplace_back(curve.points[i].lambda, dtm);
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < curve.derivative.size(); ++i) {
    if (curve.derivative[i].second < curve.derivative[best].second) best = i;
  }
  curve.argmin_lambda = curve.derivative[best].first;
  curve.min_derivative = curve.derivative[best].second;
  if (best > 0 && best + 1 < curve.derivative.size()) {
    // parabola through the three points around the discrete minimum
    const auto [xl, yl] = curve.derivative[best - 1];
    const auto [xc, yc] = curve.derivative[best];
    const auto [xr, yr] = curve.derivative[best + 1];
    const double denom = yr - 2.0 * yc + yl;
    if (denom > 1e-14) {
      curve.argmin_lambda = xc - 0.5 * (xr - xl) / 2.0 * (yr - yl) / denom;
    }
  }
  return curve;
}

double dead_band_check(const std::vector<double>& lambdas,
                       std::pair<double, double> t_band,
                       const QuadratureConfig& cfg, double t_step,
                       int workers) {
  std::vector<double> times;
  for (double t = t_band.first + t_step; t < t_band.second - 1e-12; t += t_step) {
    times.push_back(t);
  }
  std::vector<double> row_max(lambdas.size(), 0.0);
  parallel_for(lambdas.size(), workers, [&](std::size_t i) {
    const ModelParams params{lambdas[i]};
    for (double t : times) {
      row_max[i] = std::max(row_max[i], concurrence_at(params, t, cfg));
    }
  });
  double out = 0.0;
  for (double v : row_max) out = std::max(out, v);
  return out;
}

RegimeResult regime_classify(double lambda, const QuadratureConfig& cfg,
                             double window, double coarse_dt, double epsilon) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  const ModelParams params{lambda};
  const auto count = static_cast<std::size_t>(std::floor(window / coarse_dt));
  std::vector<double> c(count + 1);
  for (std::size_t i = 0; i <= count; ++i) {
    c[i] = concurrence_at(params, static_cast<double>(i) * coarse_dt, cfg);
  }

  std::vector<std::size_t> maxima;
  for (std::size_t i = 1; i + 1 <= count; ++i) {
    if (c[i] > epsilon && c[i] > c[i - 1] && c[i] > c[i + 1]) maxima.push_back(i);
  }
  RegimeResult out;
  out.n_maxima = static_cast<int>(maxima.size());
  if (maxima.empty()) {
    throw std::runtime_error("no entanglement generated within the window");
  }
  if (maxima.size() == 1) {
    out.regime = Regime::single_max;
    return out;
  }
  // a gap counts as "dead" when the concurrence collapses below epsilon for
  // at least two consecutive samples between two maxima; at large lambda the
  // first collapse window shrinks to a couple of sample intervals while the
  // sub-threshold gaps stay at zero dead samples, so two is discriminating
  bool all_gaps_dead = true;
  for (std::size_t m = 0; m + 1 < maxima.size(); ++m) {
    int run = 0, longest = 0;
    for (std::size_t i = maxima[m]; i <= maxima[m + 1]; ++i) {
      run = (c[i] <= epsilon) ? run + 1 : 0;
      longest = std::max(longest, run);
    }
    if (longest < 2) {
      all_gaps_dead = false;
      break;
    }
  }
  out.regime = all_gaps_dead ? Regime::oscillatory : Regime::multi_max;
  out.boundary = (out.regime == Regime::oscillatory) != (lambda > 1.0);
  return out;
}

}  // namespace qc
