// End-to-end tests running the installed CLI binary as a subprocess.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr combined
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(TMILLS_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// field access for single-row CSV output (header line + one data line)
std::string csv_field(const std::string& csv, const std::string& name) {
  std::istringstream in(csv);
  std::string header, data;
  std::getline(in, header);
  std::getline(in, data);
  std::istringstream hs(header), ds(data);
  std::string h, d;
  while (std::getline(hs, h, ',')) {
    if (!std::getline(ds, d, ',')) d.clear();
    if (h == name) return d;
    d.clear();
  }
  return {};
}

}  // namespace

TEST_CASE("eval emits the full report row") {
  const RunResult r = run_cli("eval --nu 1 --a 1");
  CHECK(r.exit_code == 0);
  CHECK(std::fabs(std::stod(csv_field(r.output, "mills")) - 1.5707963267948966) <= 1e-12);
  CHECK(std::fabs(std::stod(csv_field(r.output, "bound_theorem1")) - 2.1213203435596426) <= 1e-12);

  const RunResult r0 = run_cli("eval --nu 1 --a 0");
  CHECK(r0.exit_code == 0);
  CHECK(std::stod(csv_field(r0.output, "tail_beta")) == 0.5);
  CHECK(std::stod(csv_field(r0.output, "bound_corollary")) == 1.0);
}

TEST_CASE("eval rejects bad parameters with exit 2 naming the flag") {
  const RunResult r = run_cli("eval --nu -1 --a 0");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("--nu") != std::string::npos);
  CHECK(run_cli("eval --a 0").exit_code == 2);  // missing required --nu
}

TEST_CASE("sweep corollary certifies, json format parses") {
  const RunResult r = run_cli("sweep corollary --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::ordered_json::parse(r.output);
  CHECK(j["points_checked"].get<std::size_t>() == 5000);
  CHECK(j["violations"].get<std::size_t>() == 0);
}

TEST_CASE("sweep theorem1_pos exits 1: the positive branch fails near a = 0") {
  const RunResult r = run_cli("sweep theorem1_pos --format json");
  CHECK(r.exit_code == 1);
  const auto j = nlohmann::ordered_json::parse(r.output);
  CHECK(j["violations"].get<std::size_t>() > 0);
  CHECK(j["worst_violation"]["a"].get<double>() == 0.0);
}

TEST_CASE("sweep theorem1_pos certifies on a clean sub-region") {
  const RunResult r =
      run_cli("sweep theorem1_pos --nu-grid 0.01:0.5:10:log --a-grid 0:10:20:lin");
  CHECK(r.exit_code == 0);
}

TEST_CASE("sweep theorem1_neg is probe mode: exit 0 with violation rows") {
  const RunResult r = run_cli(
      "sweep theorem1_neg --nu-grid 1:1:1:lin --a-grid -10:-10:1:lin --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::ordered_json::parse(r.output);
  CHECK(j["violations"].get<std::size_t>() == 1);
  CHECK(std::fabs(j["rows"][0]["lhs"].get<double>() - 307.234) <= 0.5);
  CHECK(std::fabs(j["rows"][0]["rhs"].get<double>() - 20.0998) <= 0.01);
}

TEST_CASE("sweep config errors exit 2") {
  CHECK(run_cli("sweep corollary --a-grid 0:0:1:lin").exit_code == 2);
  CHECK(run_cli("sweep nosuchsuite").exit_code == 2);
  CHECK(run_cli("sweep lemma1 --a-grid 1:2:3").exit_code == 2);
  CHECK(run_cli("sweep lemma1 --violation-factor 0.5").exit_code == 2);
  CHECK(run_cli("sweep lemma1 --rel-tol 0.5").exit_code == 2);
}

TEST_CASE("kconst reproduces K and honors exit codes") {
  const RunResult r = run_cli("kconst");
  CHECK(r.exit_code == 0);
  const double value = std::stod(csv_field(r.output, "value"));
  CHECK(value > 0.53);
  CHECK(value <= 0.543);
  CHECK(run_cli("kconst --lo 0").exit_code == 2);
  CHECK(run_cli("kconst --resolution 10").exit_code == 2);

  const RunResult edge = run_cli("kconst --lo 10 --hi 1e6");
  CHECK(edge.exit_code == 0);
  CHECK(edge.output.find("bracket") != std::string::npos);
  CHECK(std::stod(csv_field(edge.output.substr(edge.output.find("value,")), "value")) ==
        doctest::Approx(0.3176010669830155).epsilon(1e-12));
}

TEST_CASE("thresholds table and k validation") {
  const RunResult r = run_cli("thresholds --k 0.543 --nu 1");
  CHECK(r.exit_code == 0);
  CHECK(std::fabs(std::stod(csv_field(r.output, "exact_a2")) - 5.3548690206719903) <= 1e-6);
  CHECK(std::fabs(std::stod(csv_field(r.output, "sufficient_a2")) - 4.4425838361928065) <= 1e-6);
  CHECK(run_cli("thresholds --k 1.5").exit_code == 2);
  CHECK(run_cli("thresholds --k 0").exit_code == 2);
}

TEST_CASE("probe exits 0 and reports the nu = 1 onset") {
  const RunResult r =
      run_cli("probe --nu-grid 1:1:1:lin --a-grid 0:5:501:lin --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::ordered_json::parse(r.output);
  CHECK(j["rows"][0]["flag"] == "onset");
  CHECK(std::fabs(j["rows"][0]["a"].get<double>() - 3.0239983) <= 1e-4);
}

TEST_CASE("identical invocations produce byte-identical reports") {
  for (const std::string& args :
       {std::string("sweep corollary --format json"),
        std::string("sweep gaussian_facts"),
        std::string("kconst --format json")}) {
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.output == b.output);
  }
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = "cli_out_test.csv";
  std::remove(path.c_str());
  const RunResult r = run_cli("sweep lemma1 --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "suite,nu,a,lhs,rhs,slack,oracle_err,flag");
  in.close();
  std::remove(path.c_str());
}

TEST_CASE("help and missing subcommand") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("").exit_code == 2);
}
