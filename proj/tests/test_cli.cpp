#include <doctest.h>

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_ordcalc(const std::vector<std::string>& args) {
  std::string cmd = ORDCALC_PATH;
  for (const std::string& a : args) cmd += " '" + a + "'";
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, n);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("otype prints the canonical CNF") {
  auto r = run_ordcalc({"otype", "2^w"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "w\n");

  auto big = run_ordcalc({"otype", "(w+1)*(w+1)"});
  CHECK(big.out == "w^2 + w + 1\n");
}

TEST_CASE("cmp prints LT/EQ/GT") {
  CHECK(run_ordcalc({"cmp", "2^w", "w"}).out == "EQ\n");
  CHECK(run_ordcalc({"cmp", "w", "w^2"}).out == "LT\n");
  CHECK(run_ordcalc({"cmp", "w+1", "w"}).out == "GT\n");
  CHECK(run_ordcalc({"cmp", "w", "w^2"}).exit_code == 0);
}

TEST_CASE("rank, unrank and enum") {
  CHECK(run_ordcalc({"rank", "w^w", "[(3,2),(1,0)]"}).out == "w^2*3 + 1\n");
  CHECK(run_ordcalc({"unrank", "w^w", "w^2*3 + 1"}).out == "[(3,2),(1,0)]\n");
  auto r = run_ordcalc({"enum", "2^2", "--count", "10"});
  CHECK(r.out == "[]\n[(1,0)]\n[(1,1)]\n[(1,1),(1,0)]\n");
}

TEST_CASE("approximate operations report verification") {
  auto r = run_ordcalc({"div", "0", "w"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "w\nverified: true\n");
  CHECK(run_ordcalc({"sub", "w", "w+5"}).out == "5\nverified: true\n");
  CHECK(run_ordcalc({"log", "2", "w"}).out == "w\nverified: true\n");
}

TEST_CASE("usage and parse errors exit with 10") {
  CHECK(run_ordcalc({"otype", "w^"}).exit_code == 10);
  CHECK(run_ordcalc({"otype", "0^w"}).exit_code == 10);  // empty base
  CHECK(run_ordcalc({"rank", "w", "L:0"}).exit_code == 10);
  CHECK(run_ordcalc({"unrank", "w", "w"}).exit_code == 10);
  CHECK(run_ordcalc({"nosuchcommand"}).exit_code == 10);
  CHECK(run_ordcalc({}).exit_code == 10);
}

TEST_CASE("json output is line-delimited with the agreed fields") {
  auto r = run_ordcalc({"--json", "otype", "2^w"});
  CHECK(r.exit_code == 0);
  nlohmann::json line = nlohmann::json::parse(r.out);
  CHECK(line["command"] == "otype");
  CHECK(line["inputs"][0] == "2^w");
  CHECK(line["result"] == "w");
  CHECK(line["verified"].is_null());

  auto d = run_ordcalc({"--json", "div", "0", "w"});
  nlohmann::json dline = nlohmann::json::parse(d.out);
  CHECK(dline["result"] == "w");
  CHECK(dline["verified"] == true);
}

TEST_CASE("fuzz is deterministic and exits 0") {
  auto first = run_ordcalc({"fuzz", "--cases", "500", "--seed", "42"});
  auto second = run_ordcalc({"fuzz", "--cases", "500", "--seed", "42"});
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out == "fuzz: 500 cases, no counterexample\n");
}

TEST_CASE("the laws subcommand runs a corpus") {
  auto r = run_ordcalc({"laws", "--depth", "2", "--seed", "7", "--count", "4",
                        "--samples", "24"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("0 failures") != std::string::npos);
}
