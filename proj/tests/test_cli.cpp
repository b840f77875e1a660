#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

std::string cli_path() {
  const char* env = std::getenv("QC_CLI_BIN");
  REQUIRE_MESSAGE(env != nullptr, "QC_CLI_BIN must point at the qc binary");
  return env;
}

// output files land in the system temp dir, not the test working directory
std::string scratch(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

int run(const std::string& args) {
  const std::string cmd = "cd " + scratch("") + " && " + cli_path() + " " +
                          args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream file(scratch(path), std::ios::binary);
  std::ostringstream out;
  out << file.rdbuf();
  return out.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("correlators: header, row count, initial row") {
  REQUIRE(run("correlators --lambda 1.0 --t-max 5 --dt 0.1 -o corr.csv") == 0);
  const auto lines = lines_of(slurp("corr.csv"));
  REQUIRE(lines.size() == 53);  // marker + header + 51 rows
  CHECK(lines[0] == "# quench-concurrence v1");
  CHECK(lines[1] == "t,g11,g12,re_f12,im_f12");
  CHECK(lines[2] == "0,0.5,0.25,-0.25,0");
}

TEST_CASE("correlators at lambda=0 keep g11 constant") {
  REQUIRE(run("correlators --lambda 0 --t-max 1 --dt 0.5 -o corr0.csv") == 0);
  const auto lines = lines_of(slurp("corr0.csv"));
  REQUIRE(lines.size() == 5);
  for (std::size_t i = 2; i < lines.size(); ++i) {
    CHECK(lines[i].find(",0.5,0.25,") != std::string::npos);
  }
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("correlators --no-such-flag 1") == 2);
  CHECK(run("") == 2);
  CHECK(run("--help") == 0);
}

TEST_CASE("surface output is byte-identical across runs and workers") {
  const std::string grid =
      "surface --lambda-min 0.2 --lambda-max 1.2 --lambda-step 0.2 "
      "--t-min 0 --t-max 3 --t-step 0.25";
  REQUIRE(run(grid + " --workers 1 -o surf1.csv") == 0);
  REQUIRE(run(grid + " --workers 4 -o surf4.csv") == 0);
  REQUIRE(run(grid + " --workers 4 -o surf4b.csv") == 0);
  const std::string first = slurp("surf1.csv");
  CHECK(first == slurp("surf4.csv"));
  CHECK(first == slurp("surf4b.csv"));
  // grid size: 6 lambdas x 13 times + marker + header
  CHECK(lines_of(first).size() == 6 * 13 + 2);
}

TEST_CASE("surface t=0 rows vanish to roundoff") {
  REQUIRE(run("surface --lambda-min 0 --lambda-max 2 --lambda-step 0.5 "
              "--t-min 0 --t-max 0.5 --t-step 0.5 -o surf0.csv") == 0);
  int seen = 0;
  for (const auto& line : lines_of(slurp("surf0.csv"))) {
    if (line.size() > 2 && line[0] != '#' && line.find(",0,") != std::string::npos) {
      CHECK(std::stod(line.substr(line.rfind(',') + 1)) <= 1e-12);
      ++seen;
    }
  }
  CHECK(seen == 5);
}

TEST_CASE("tm subcommand emits a summary with argmin near 1") {
  REQUIRE(run("tm --lambda-min 0.7 --lambda-max 1.3 --lambda-step 0.05 "
              "--t-max 12 --workers 4 --format json -o tm.json") == 0);
  const auto doc = nlohmann::json::parse(slurp("tm.json"));
  REQUIRE(doc.contains("summary"));
  const double argmin = doc["summary"]["argmin_lambda"].get<double>();
  CHECK(argmin > 0.8);
  CHECK(argmin < 1.2);
  REQUIRE(doc.contains("data"));
  // T_m column strictly decreasing
  double prev = 1e300;
  for (const auto& row : doc["data"]) {
    const double tm = row[1].get<double>();
    CHECK(tm < prev);
    prev = tm;
  }
}

TEST_CASE("trace and slice presets run end to end") {
  REQUIRE(run("trace --lambda 1.5 --t-max 2 --dt 0.1 -o trace.csv") == 0);
  CHECK(lines_of(slurp("trace.csv")).size() == 2 + 21);
  REQUIRE(run("slice --t 1.0 --lambda-min 0 --lambda-max 1 --lambda-step 0.25 "
              "-o slice.csv") == 0);
  CHECK(lines_of(slurp("slice.csv")).size() == 2 + 5);
}

TEST_CASE("deadband subcommand reports a tiny maximum") {
  REQUIRE(run("deadband --lambda-min 0.5 --lambda-max 2.0 --lambda-step 0.5 "
              "--workers 4 --format json -o db.json") == 0);
  const auto doc = nlohmann::json::parse(slurp("db.json"));
  CHECK(doc["data"][0][0].get<double>() <= 1e-4);
}

TEST_CASE("oracle subcommand: t=0 deviations vanish") {
  REQUIRE(run("oracle --n 8 --lambda 1.0 --t 0.0 --format json -o or.json") == 0);
  const auto doc = nlohmann::json::parse(slurp("or.json"));
  const auto& row = doc["data"][0];
  CHECK(row[2].get<double>() < 1e-10);
  CHECK(row[3].get<double>() < 1e-10);
}
