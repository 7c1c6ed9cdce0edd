#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fsf/format.hpp"

#include "oracles.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  ///< stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(FSF_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json parse_json(const RunResult& r) {
  REQUIRE(r.exit_code == 0);
  return json::parse(r.output);
}

}  // namespace

TEST_CASE("design then verify round-trips the reported sidelobe level") {
  const json d = parse_json(run_cli("design --n 16 --bw 4 --ntrans 1 --format json"));
  REQUIRE(d["coefficients"].size() == 1);
  const double t1 = d["coefficients"][0].get<double>();
  const double designed_psl = d["psl_db"].get<double>();

  std::ostringstream cmd;
  cmd << "verify --n 16 --bw 4 --ntrans 1 --format json --coeffs " << fsf::g17(t1);
  const json v = parse_json(run_cli(cmd.str()));
  CHECK_NEAR(v["psl_db"].get<double>(), designed_psl, 1e-9);
}

TEST_CASE("design output is byte-identical across runs") {
  const RunResult a = run_cli("design --n 16 --bw 4 --ntrans 2 --format json");
  const RunResult b = run_cli("design --n 16 --bw 4 --ntrans 2 --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(!a.output.empty());
}

TEST_CASE("design text format reports the same coefficients as json") {
  const RunResult text = run_cli("design --n 16 --bw 4 --ntrans 1 --format text");
  REQUIRE(text.exit_code == 0);
  CHECK(text.output.find("coefficients ") == 0);
  CHECK(text.output.find("psl_db ") != std::string::npos);

  const json d = parse_json(run_cli("design --n 16 --bw 4 --ntrans 1 --format json"));
  CHECK(text.output.find(fsf::g17(d["coefficients"][0].get<double>())) != std::string::npos);
}

TEST_CASE("cycle units rescale every reported frequency") {
  const std::string base = "verify --n 16 --bw 4 --ntrans 1 --coeffs 0.4 --format json";
  const json rad = parse_json(run_cli(base));
  const json cyc = parse_json(run_cli(base + " --units cycles"));
  const double two_pi = 2.0 * std::numbers::pi;
  CHECK_NEAR(cyc["peak_omega"].get<double>(), rad["peak_omega"].get<double>() / two_pi, 1e-15);
  REQUIRE(rad["local_maxima"].size() == cyc["local_maxima"].size());
  for (std::size_t i = 0; i < rad["local_maxima"].size(); ++i) {
    CHECK_NEAR(cyc["local_maxima"][i]["omega"].get<double>(),
               rad["local_maxima"][i]["omega"].get<double>() / two_pi, 1e-15);
    CHECK(cyc["local_maxima"][i]["db"] == rad["local_maxima"][i]["db"]);
  }
}

TEST_CASE("export-taps writes one row per tap") {
  // One unity sample and no transitions: every tap is exactly 1/n.
  const RunResult r = run_cli("export-taps --n 8 --bw 1 --ntrans 0");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "index,value");
  int rows = 0;
  while (std::getline(lines, line)) {
    CHECK(line == std::to_string(rows) + ",0.125");
    ++rows;
  }
  CHECK(rows == 8);
}

TEST_CASE("response exports the requested range at the requested step") {
  const RunResult r =
      run_cli("response --n 16 --bw 4 --ntrans 1 --coeffs 0.4 --step 0.5 --range 0,3");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "omega_rad,amplitude,db");
  int rows = 0;
  double first_omega = -1.0, first_amp = 0.0;
  while (std::getline(lines, line)) {
    if (rows == 0) std::sscanf(line.c_str(), "%lf,%lf", &first_omega, &first_amp);
    ++rows;
  }
  CHECK(rows == 7);
  CHECK(first_omega == 0.0);
  CHECK_NEAR(first_amp, 1.0, 1e-12);  // the response passes through the unity sample at DC
}

TEST_CASE("table preset renders a deterministic csv report") {
  const RunResult a = run_cli("table --preset sensitivity --format csv");
  const RunResult b = run_cli("table --preset sensitivity --format csv");
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("table,n,kind,") == 0);
  CHECK(a.output.find("sensitivity") != std::string::npos);
}

TEST_CASE("--out writes the same bytes stdout would carry") {
  const fs::path out = fs::temp_directory_path() / "fsf-cli-tests" / "design.json";
  fs::create_directories(out.parent_path());
  const RunResult to_stdout = run_cli("design --n 16 --bw 4 --ntrans 1 --format json");
  const RunResult to_file =
      run_cli("design --n 16 --bw 4 --ntrans 1 --format json --out " + out.string());
  REQUIRE(to_file.exit_code == 0);
  CHECK(to_file.output.empty());
  std::ifstream in(out, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == to_stdout.output);
}

TEST_CASE("exit codes distinguish usage, validation, and io failures") {
  SUBCASE("unknown flag fails parsing") {
    const RunResult r = run_cli("design --n 16 --bw 4 --no-such-flag");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("missing required option fails parsing") {
    const RunResult r = run_cli("design --n 16");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("infeasible spec fails validation") {
    const RunResult r = run_cli("design --n 16 --bw 9 --ntrans 1");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("error:") != std::string::npos);
  }
  SUBCASE("out-of-range coefficient fails validation") {
    const RunResult r = run_cli("verify --n 16 --bw 4 --ntrans 1 --coeffs 1.5");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("unknown preset fails validation") {
    const RunResult r = run_cli("table --preset no-such-table");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("unwritable output path fails io") {
    const RunResult r =
        run_cli("design --n 16 --bw 4 --ntrans 1 --out /no-such-directory/out.json");
    CHECK(r.exit_code == 4);
  }
  SUBCASE("missing fixtures path fails io") {
    const RunResult r = run_cli("table --preset sensitivity --fixtures /no-such-fixtures.csv");
    CHECK(r.exit_code == 4);
  }
  SUBCASE("help exits cleanly") {
    const RunResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("design") != std::string::npos);
  }
}
