#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(NETINFO_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

// Splits CSV output into data rows (skipping '#' comments and the header).
std::vector<std::string> csv_data_rows(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    rows.push_back(line);
  }
  return rows;
}

std::vector<std::string> split(const std::string& row) {
  std::vector<std::string> fields;
  std::istringstream in(row);
  std::string f;
  while (std::getline(in, f, ',')) fields.push_back(f);
  return fields;
}

}  // namespace

TEST_CASE("info on synthetic data emits a complete record") {
  const auto res = run_cli(
      "info --variant synthetic --n 20 --d0 128 --intra-cos 0.6 --depth 3 "
      "--samples 2000 --seed 1");
  CHECK(res.exit_code == 0);
  const auto rows = csv_data_rows(res.output);
  REQUIRE(rows.size() == 1);
  const auto fields = split(rows[0]);
  REQUIRE(fields.size() == 15);
  CHECK(fields[0] == "synthetic");
  CHECK(fields[1] == "20");
  const double c0 = std::stod(fields[5]);
  CHECK(c0 > 0.0);
  CHECK(c0 < 20.0 * std::numbers::ln2 + 1.0);
}

TEST_CASE("csv and json emissions carry identical values") {
  const std::string common =
      "sweep --variants synthetic --n-list 10,20 --seeds 0,1 --d0 64 "
      "--depth 2 --samples 1000";
  const auto csv = run_cli(common + " --format csv");
  const auto js = run_cli(common + " --format json");
  REQUIRE(csv.exit_code == 0);
  REQUIRE(js.exit_code == 0);

  const auto rows = csv_data_rows(csv.output);
  const json arr = json::parse(js.output);
  std::vector<json> records;
  for (const auto& j : arr) {
    if (!j.contains("record_type")) records.push_back(j);
  }
  REQUIRE(rows.size() == 4);  // 1 variant x 2 sizes x 2 seeds
  REQUIRE(records.size() == 4);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto fields = split(rows[i]);
    CHECK(fields[0] == records[i]["variant"].get<std::string>());
    CHECK(std::stol(fields[1]) == records[i]["n"].get<long>());
    CHECK(std::stod(fields[5]) ==
          doctest::Approx(records[i]["c0_nats"].get<double>()).epsilon(1e-9));
    CHECK(std::stod(fields[10]) ==
          doctest::Approx(records[i]["error_bound_c0"].get<double>())
              .epsilon(1e-9));
  }
  // Aggregates: one per (variant, n).
  int agg_count = 0;
  for (const auto& j : arr) {
    if (j.contains("record_type")) ++agg_count;
  }
  CHECK(agg_count == 2);
}

TEST_CASE("bits units divide information values by ln 2") {
  const std::string common =
      "info --variant synthetic --n 10 --d0 64 --depth 2 --samples 500 "
      "--seed 3 --format json";
  const json nats = json::parse(run_cli(common + " --units nats").output);
  const json bits = json::parse(run_cli(common + " --units bits").output);
  CHECK(bits[0]["c0_nats"].get<double>() ==
        doctest::Approx(nats[0]["c0_nats"].get<double>() / std::numbers::ln2)
            .epsilon(1e-12));
  // Bounds are unitless and must not be rescaled.
  CHECK(bits[0]["raw_bound_c0"].get<double>() ==
        doctest::Approx(nats[0]["raw_bound_c0"].get<double>()).epsilon(1e-12));
}

TEST_CASE("missing IDX path yields DATASET_NOT_FOUND and nonzero exit") {
  const auto res = run_cli("info --variant decimal_digits --n 10");
  CHECK(res.exit_code != 0);
  CHECK(res.output.find("DATASET_NOT_FOUND") != std::string::npos);
}

TEST_CASE("sweep without --n-list yields INVALID_SWEEP") {
  const auto res = run_cli("sweep --variants synthetic");
  CHECK(res.exit_code != 0);
  CHECK(res.output.find("INVALID_SWEEP") != std::string::npos);
}

TEST_CASE("oracle fixture agrees with the estimator") {
  const auto res = run_cli(
      "oracle --n 2 --rho 0.5 --samples 100000 --trials 200000 --seed 5 "
      "--format json");
  CHECK(res.exit_code == 0);
  const json j = json::parse(res.output);
  CHECK(j[0]["agree"].get<bool>());
  CHECK(j[0]["oracle_p"].get<double>() == doctest::Approx(1.0 / 3.0).epsilon(0.02));
}

TEST_CASE("oracle rejects n > 12") {
  const auto res = run_cli("oracle --n 20");
  CHECK(res.exit_code != 0);
  CHECK(res.output.find("N_TOO_LARGE") != std::string::npos);
}

TEST_CASE("symmetry bound via the CLI") {
  const auto res = run_cli(
      "symmetry --d0 3 --widths 4 --weight-bits 8 --format json");
  CHECK(res.exit_code == 0);
  const json j = json::parse(res.output);
  CHECK(j[0]["symmetry_bound"].get<double>() ==
        doctest::Approx(85.5448).epsilon(1e-4));
}

TEST_CASE("symmetry with zero weight bits is rejected") {
  const auto res = run_cli("symmetry --d0 3 --widths 4 --weight-bits 0");
  CHECK(res.exit_code != 0);
  CHECK(res.output.find("INVALID_ARGUMENT") != std::string::npos);
}

TEST_CASE("every record embeds the resolved config") {
  const auto res = run_cli(
      "info --variant synthetic --n 10 --d0 64 --depth 2 --samples 500 "
      "--format json");
  const json j = json::parse(res.output);
  REQUIRE(j[0].contains("config"));
  CHECK(j[0]["config"]["samples"].get<long>() == 500);
  CHECK(j[0]["config"].contains("library_version"));
  // CSV carries the same header as a comment line.
  const auto csv = run_cli(
      "info --variant synthetic --n 10 --d0 64 --depth 2 --samples 500");
  CHECK(csv.output.rfind("# config ", 0) == 0);
}
