// End-to-end tests spawning the CLI binary (path injected by the build).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env;
  if (!env.empty()) cmd += " ";
  cmd += std::string(CIRCLELAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

}  // namespace

TEST_CASE("mean-value pinned example prints 28") {
  auto r = run_cli("mean-value --k 2 --t 2 --P 4 --R 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"value\":28") != std::string::npos);
}

TEST_CASE("JSON output is byte-identical across runs") {
  std::string cmd = "singular-series --n 10 --s 5 --k 2";
  auto a = run_cli(cmd);
  auto b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
  // seed flag is inert
  auto c = run_cli(cmd + " --seed 12345");
  CHECK(c.out == a.out);
}

TEST_CASE("JSON keys are sorted") {
  auto r = run_cli("dickman --u 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"rho\":0.306852819440055,\"u\":2}\n");
}

TEST_CASE("missing required options exit 2") {
  CHECK(run_cli("mean-value --k 2").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
}

TEST_CASE("table ceiling produces a capacity error (exit 3)") {
  auto r = run_cli("smooth --P 100000 --R 7 --k 2", "CIRCLELAB_MAX_TABLE=100");
  CHECK(r.exit_code == 3);
}

TEST_CASE("infeasible quasi-diagonal range exits 4") {
  CHECK(run_cli("delta-quasidiag --k 10 --t 5").exit_code == 4);
  CHECK(run_cli("delta-quasidiag --k 100 --t 5").exit_code == 0);
}

TEST_CASE("exponents alias emits the reference constant at k=3, t=3") {
  auto r = run_cli("exponents --k 3 --t 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"lambda\":") != std::string::npos);
  CHECK(r.out.find("\"reference_3_plus_xi\":3.24941301") != std::string::npos);
}

TEST_CASE("g-table emits CSV with the published rows") {
  auto r = run_cli("g-table --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("k,bound,congruence_conditions,citation\n", 0) == 0);
  CHECK(r.out.find("\n3,7,") != std::string::npos);
  CHECK(r.out.find("\n20,142,") != std::string::npos);
}

TEST_CASE("ladder specification drives geometric sequences") {
  auto r = run_cli("fit-lambda --k 2 --t 2 --ladder 16:128:2 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("P,count\n", 0) == 0);
  CHECK(r.out.find("\n16,") != std::string::npos);
  CHECK(r.out.find("\n128,") != std::string::npos);
  CHECK(run_cli("fit-lambda --k 2 --t 2 --ladder 16:8:2").exit_code == 2);
}

TEST_CASE("complete-sum matches the pinned value") {
  auto r = run_cli("complete-sum --q 4 --a 1 --k 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"im\":2,\"re\":2") != std::string::npos);
}

TEST_CASE("output lands in a file when --output is given") {
  std::string path = "cli_test_report.json";
  auto r = run_cli("three-cubes --X 100 --output " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  char buf[256] = {0};
  std::fread(buf, 1, sizeof buf - 1, f);
  std::fclose(f);
  std::remove(path.c_str());
  CHECK(std::string(buf).find("\"count\":") != std::string::npos);
}
