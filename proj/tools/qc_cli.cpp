// quench-concurrence command line front end.
//
// Subcommands map one-to-one onto the figure data of the study:
//   correlators  time series of the three correlators at fixed lambda
//   surface      C(lambda, t) grid
//   slice        C vs lambda at fixed times
//   trace        C vs t at fixed lambdas
//   tm           first-maximum curve T_m(lambda), derivative, argmin summary
//   deadband     max C over a (lambda, t) band
//   oracle       exact-diagonalization comparison report
//
// Exit codes: 0 success, 1 numerical failure, 2 usage error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qc/analysis.hpp"
#include "qc/oracle.hpp"

namespace {

using nlohmann::json;

struct OutputOptions {
  std::string format = "csv";
  std::string path;  // empty = stdout
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  json summary;  // optional, appended to both formats
};

void write_output(const Table& table, const json& meta,
                  const OutputOptions& out) {
  std::ostringstream body;
  if (out.format == "csv") {
    body << "# quench-concurrence v1\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      body << (i ? "," : "") << table.columns[i];
    }
    body << "\n";
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        body << (i ? "," : "") << fmt(row[i]);
      }
      body << "\n";
    }
    if (!table.summary.is_null()) {
      body << "# summary " << table.summary.dump() << "\n";
    }
  } else {
    json doc;
    doc["meta"] = meta;
    doc["columns"] = table.columns;
    json data = json::array();
    for (const auto& row : table.rows) {
      json jrow = json::array();
      for (double v : row) {
        if (std::isfinite(v)) {
          jrow.push_back(json::parse(fmt(v)));
        } else {
          jrow.push_back(nullptr);
        }
      }
      data.push_back(jrow);
    }
    doc["data"] = data;
    if (!table.summary.is_null()) doc["summary"] = table.summary;
    body << doc.dump(2) << "\n";
  }
  if (out.path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream file(out.path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + out.path);
    file << body.str();
  }
}

int default_workers() {
  if (const char* env = std::getenv("QC_WORKERS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

std::vector<double> steps(double lo, double hi, double step) {
  std::vector<double> out;
  for (int i = 0;; ++i) {
    const double v = lo + i * step;
    if (v > hi + 1e-12) break;
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quench-concurrence: entanglement dynamics of the transverse Ising chain"};
  app.require_subcommand(1);
  app.fallthrough();

  qc::QuadratureConfig quad;
  OutputOptions out;
  int workers = default_workers();
  app.add_option("--base-panels", quad.base_panels, "quadrature base panel count")
      ->check(CLI::PositiveNumber);
  app.add_option("--tolerance", quad.tolerance, "quadrature tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-refinements", quad.max_refinements,
                 "quadrature refinement cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output,-o", out.path, "output file (default stdout)");
  app.add_option("--workers", workers, "parallel workers for grid scans")
      ->check(CLI::PositiveNumber);

  json meta;

  // correlators
  auto* c_cmd = app.add_subcommand("correlators", "g11, g12, f12 time series");
  double c_lambda = 1.0, c_tmin = 0.0, c_tmax = 5.0, c_dt = 0.1;
  c_cmd->add_option("--lambda", c_lambda)->check(CLI::NonNegativeNumber);
  c_cmd->add_option("--t-min", c_tmin)->check(CLI::NonNegativeNumber);
  c_cmd->add_option("--t-max", c_tmax)->check(CLI::PositiveNumber);
  c_cmd->add_option("--dt", c_dt)->check(CLI::PositiveNumber);

  // surface
  auto* s_cmd = app.add_subcommand("surface", "C(lambda, t) grid, long format");
  qc::ScanGrid s_grid{0.0, 3.0, 0.05, 0.0, 10.0, 0.05};
  s_cmd->add_option("--lambda-min", s_grid.lambda_min);
  s_cmd->add_option("--lambda-max", s_grid.lambda_max);
  s_cmd->add_option("--lambda-step", s_grid.lambda_step)->check(CLI::PositiveNumber);
  s_cmd->add_option("--t-min", s_grid.t_min);
  s_cmd->add_option("--t-max", s_grid.t_max);
  s_cmd->add_option("--t-step", s_grid.t_step)->check(CLI::PositiveNumber);

  // slice (C vs lambda at fixed times)
  auto* sl_cmd = app.add_subcommand("slice", "C vs lambda at fixed times");
  std::vector<double> sl_times{0.5, 1.0, 1.5, 2.0};
  double sl_lmin = 0.0, sl_lmax = 5.0, sl_lstep = 0.01;
  sl_cmd->add_option("--t", sl_times, "fixed times (default the early-time set)");
  bool sl_late = false;
  sl_cmd->add_flag("--late", sl_late, "use the late-time preset t = 4,5,6,7");
  sl_cmd->add_option("--lambda-min", sl_lmin);
  sl_cmd->add_option("--lambda-max", sl_lmax);
  sl_cmd->add_option("--lambda-step", sl_lstep)->check(CLI::PositiveNumber);

  // trace (C vs t at fixed lambdas)
  auto* tr_cmd = app.add_subcommand("trace", "C vs t at fixed lambdas");
  std::vector<double> tr_lambdas{0.2, 0.4, 0.6, 0.8};
  double tr_tmax = 10.0, tr_dt = 0.01;
  tr_cmd->add_option("--lambda", tr_lambdas, "fixed lambdas (default the weak-field set)");
  bool tr_strong = false;
  tr_cmd->add_flag("--strong", tr_strong, "use the strong-coupling preset lambda = 1.5, 3.0");
  tr_cmd->add_option("--t-max", tr_tmax)->check(CLI::PositiveNumber);
  tr_cmd->add_option("--dt", tr_dt)->check(CLI::PositiveNumber);

  // tm
  auto* tm_cmd = app.add_subcommand("tm", "first-maximum curve and derivative");
  double tm_lmin = 0.2, tm_lmax = 3.0, tm_lstep = 0.02;
  qc::SearchConfig tm_search{15.0, 0.01, 1e-6};
  tm_cmd->add_option("--lambda-min", tm_lmin)->check(CLI::PositiveNumber);
  tm_cmd->add_option("--lambda-max", tm_lmax)->check(CLI::PositiveNumber);
  tm_cmd->add_option("--lambda-step", tm_lstep)->check(CLI::PositiveNumber);
  tm_cmd->add_option("--t-max", tm_search.t_max)->check(CLI::PositiveNumber);
  tm_cmd->add_option("--coarse-dt", tm_search.coarse_dt)->check(CLI::PositiveNumber);
  tm_cmd->add_option("--epsilon", tm_search.epsilon)->check(CLI::PositiveNumber);

  // deadband
  auto* db_cmd = app.add_subcommand("deadband", "max C over a time band");
  double db_tlo = 2.47, db_thi = 2.69, db_dt = 0.01;
  double db_lmin = 0.1, db_lmax = 5.0, db_lstep = 0.05;
  db_cmd->add_option("--t-lo", db_tlo);
  db_cmd->add_option("--t-hi", db_thi);
  db_cmd->add_option("--dt", db_dt)->check(CLI::PositiveNumber);
  db_cmd->add_option("--lambda-min", db_lmin);
  db_cmd->add_option("--lambda-max", db_lmax);
  db_cmd->add_option("--lambda-step", db_lstep)->check(CLI::PositiveNumber);

  // oracle
  auto* or_cmd = app.add_subcommand("oracle", "exact-diagonalization comparison");
  int or_n = 10;
  std::vector<double> or_lambdas{0.5, 1.0, 1.5};
  std::vector<double> or_times{0.5, 1.0, 2.0};
  or_cmd->add_option("--n", or_n, "chain length (even, 4..12)");
  or_cmd->add_option("--lambda", or_lambdas);
  or_cmd->add_option("--t", or_times);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  meta["quadrature"] = {{"base_panels", quad.base_panels},
                        {"points_per_panel", quad.points_per_panel},
                        {"tolerance", quad.tolerance},
                        {"max_refinements", quad.max_refinements}};
  meta["workers"] = workers;

  try {
    Table table;
    if (*c_cmd) {
      meta["subcommand"] = "correlators";
      meta["lambda"] = c_lambda;
      meta["t_min"] = c_tmin;
      meta["t_max"] = c_tmax;
      meta["dt"] = c_dt;
      table.columns = {"t", "g11", "g12", "re_f12", "im_f12"};
      for (double t : steps(c_tmin, c_tmax, c_dt)) {
        const auto c = qc::correlator_set({c_lambda}, t, quad);
        table.rows.push_back({t, c.g11, c.g12, c.f12.real(), c.f12.imag()});
      }
    } else if (*s_cmd) {
      meta["subcommand"] = "surface";
      meta["grid"] = {{"lambda_min", s_grid.lambda_min},
                      {"lambda_max", s_grid.lambda_max},
                      {"lambda_step", s_grid.lambda_step},
                      {"t_min", s_grid.t_min},
                      {"t_max", s_grid.t_max},
                      {"t_step", s_grid.t_step}};
      const auto surface = qc::concurrence_surface(s_grid, quad, workers);
      table.columns = {"lambda", "t", "concurrence"};
      for (std::size_t i = 0; i < surface.lambdas.size(); ++i) {
        for (std::size_t j = 0; j < surface.times.size(); ++j) {
          table.rows.push_back({surface.lambdas[i], surface.times[j], surface.at(i, j)});
        }
      }
    } else if (*sl_cmd) {
      if (sl_late) sl_times = {4.0, 5.0, 6.0, 7.0};
      meta["subcommand"] = "slice";
      meta["times"] = sl_times;
      table.columns = {"t", "lambda", "concurrence"};
      const auto lambdas = steps(sl_lmin, sl_lmax, sl_lstep);
      std::vector<std::vector<double>> slots(sl_times.size() * lambdas.size());
      qc::parallel_for(slots.size(), workers, [&](std::size_t idx) {
        const double t = sl_times[idx / lambdas.size()];
        const double lambda = lambdas[idx % lambdas.size()];
        slots[idx] = {t, lambda, qc::concurrence_at({lambda}, t, quad)};
      });
      table.rows = std::move(slots);
    } else if (*tr_cmd) {
      if (tr_strong) tr_lambdas = {1.5, 3.0};
      meta["subcommand"] = "trace";
      meta["lambdas"] = tr_lambdas;
      table.columns = {"lambda", "t", "concurrence"};
      const auto times = steps(0.0, tr_tmax, tr_dt);
      std::vector<std::vector<double>> slots(tr_lambdas.size() * times.size());
      qc::parallel_for(slots.size(), workers, [&](std::size_t idx) {
        const double lambda = tr_lambdas[idx / times.size()];
        const double t = times[idx % times.size()];
        slots[idx] = {lambda, t, qc::concurrence_at({lambda}, t, quad)};
      });
      table.rows = std::move(slots);
    } else if (*tm_cmd) {
      meta["subcommand"] = "tm";
      meta["lambda_min"] = tm_lmin;
      meta["lambda_max"] = tm_lmax;
      meta["lambda_step"] = tm_lstep;
      meta["t_max"] = tm_search.t_max;
      meta["coarse_dt"] = tm_search.coarse_dt;
      const auto curve = qc::tm_curve(steps(tm_lmin, tm_lmax, tm_lstep), quad,
                                      tm_search, workers);
      table.columns = {"lambda", "t_m", "c_m", "dtm_dlambda"};
      for (std::size_t i = 0; i < curve.points.size(); ++i) {
        const auto& p = curve.points[i];
        std::vector<double> row{p.lambda, p.t_m, p.c_m};
        if (i >= 1 && i - 1 < curve.derivative.size()) {
          row.push_back(curve.derivative[i - 1].second);
        } else {
          row.push_back(std::numeric_limits<double>::quiet_NaN());
        }
        table.rows.push_back(std::move(row));
      }
      table.summary = {{"argmin_lambda", json::parse(fmt(curve.argmin_lambda))},
                       {"min_derivative", json::parse(fmt(curve.min_derivative))}};
    } else if (*db_cmd) {
      meta["subcommand"] = "deadband";
      meta["band"] = {db_tlo, db_thi};
      const auto lambdas = steps(db_lmin, db_lmax, db_lstep);
      const double max_c =
          qc::dead_band_check(lambdas, {db_tlo, db_thi}, quad, db_dt, workers);
      table.columns = {"max_concurrence"};
      table.rows.push_back({max_c});
    } else if (*or_cmd) {
      meta["subcommand"] = "oracle";
      meta["n_sites"] = or_n;
      table.columns = {"lambda", "t", "max_rho_deviation", "delta_concurrence"};
      for (double lambda : or_lambdas) {
        const qc::SpinChainOracle oracle({or_n, lambda});
        for (double t : or_times) {
          const auto rho_ed = oracle.evolve_and_reduce(t);
          const auto c = qc::correlator_set({lambda}, t, quad);
          const auto x = qc::assemble_rho(c);
          qc::DensityMatrix4 rho_an = qc::DensityMatrix4::Zero();
          rho_an(0, 0) = x.r11;
          rho_an(1, 1) = rho_an(2, 2) = x.r22;
          rho_an(3, 3) = x.r44;
          rho_an(0, 3) = x.r14;
          rho_an(3, 0) = std::conj(x.r14);
          rho_an(1, 2) = rho_an(2, 1) = x.r23;
          const double dev = (rho_ed - rho_an).cwiseAbs().maxCoeff();
          const double dc = std::abs(qc::wootters_generic(rho_ed) -
                                     qc::concurrence(qc::x_spectrum(x)));
          table.rows.push_back({lambda, t, dev, dc});
        }
      }
    }
    write_output(table, meta, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
