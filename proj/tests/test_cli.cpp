#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "pennantwebs/jellyfish.hpp"

namespace {

struct RunResult {
  int status;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(PENNANTWEBS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  const int rc = pclose(pipe);
  return {WEXITSTATUS(rc), out};
}

}  // namespace

TEST_CASE("five-term subcommand") {
  const RunResult r = run_cli("five-term --n 4 --A 1 --B 2 --I 3 --J 4");
  REQUIRE(r.status == 0);
  REQUIRE(r.out == "residual: 0\n");

  const RunResult fixed = run_cli("five-term --n 8 --A 1,2 --B 3,4 --I 5 --J 6 --fixed 7,8");
  REQUIRE(fixed.status == 0);
  REQUIRE(fixed.out == "residual: 0\n");
}

TEST_CASE("invariant subcommand reproduces the six-tableau listing") {
  const RunResult r = run_cli("invariant --n 10 --partition \"2,3,6,10|5,7,8,9|1,4\"");
  REQUIRE(r.status == 0);
  REQUIRE(r.out.find("partition: 1,4|2,3,6,10|5,7,8,9\n") != std::string::npos);
  REQUIRE(r.out.find("tableaux: 6\n") != std::string::npos);
  REQUIRE(r.out.find("inversions: 8,7,6,8,7,8\n") != std::string::npos);
  REQUIRE(r.out.find("signs: +,-,+,+,-,+\n") != std::string::npos);
}

TEST_CASE("invariant text matches the library rendering") {
  using namespace pennantwebs;
  const RunResult r = run_cli("invariant --n 4 --partition \"1,2|3,4\"");
  REQUIRE(r.status == 0);
  const std::string expected =
      "invariant: " + web_invariant(SetPartition::parse("1,2|3,4")).poly.to_string() + "\n";
  REQUIRE(r.out.find(expected) != std::string::npos);
}

TEST_CASE("expand subcommand") {
  const RunResult json = run_cli("expand --n 4 --partition \"1,3|2,4\" --format json");
  REQUIRE(json.status == 0);
  REQUIRE(json.out ==
          "{\"coeffs\":[{\"c\":\"-1\",\"pi\":\"1,4|2,3\"},{\"c\":\"-1\",\"pi\":\"1,2|3,4\"}],"
          "\"target\":\"1,3|2,4\"}\n");

  const RunResult text = run_cli("expand --partition \"1,3|2,4\"");
  REQUIRE(text.status == 0);
  REQUIRE(text.out == "target: 1,3|2,4\n1,4|2,3: -1\n1,2|3,4: -1\n");

  const RunResult basis_element = run_cli("expand --partition \"1,2|3,4\"");
  REQUIRE(basis_element.status == 0);
  REQUIRE(basis_element.out == "target: 1,2|3,4\n1,2|3,4: 1\n");
}

TEST_CASE("act subcommand verifies the action") {
  const RunResult r = run_cli("act --n 4 --perm \"4,1,2,3\" --partition \"1,2|3,4\"");
  REQUIRE(r.status == 0);
  REQUIRE(r.out == "result: 1,4|2,3\nsign: -1\nverified: true\n");
}

TEST_CASE("tableau subcommands") {
  REQUIRE(run_cli("promote --tableau \"1,2;3,4\"").out == "1,3;2,4\n");
  REQUIRE(run_cli("evacuate --tableau \"1,2;2,3\"").out == "1,2;2,3\n");

  const RunResult bij = run_cli("bijection --tableau \"1,2,3,4,6,7,8;2,3,5,6,8,9,10\"");
  REQUIRE(bij.status == 0);
  REQUIRE(bij.out ==
          "increasing: 1,2,3,4,6,7,8;2,3,5,6,8,9,10\n"
          "standard: 1,4,7;2,6,10;3;5;8;9\n"
          "partition: 1,2,3,6,10|4,5|7,8,9\n");

  const RunResult orbits = run_cli("orbits --q 4 --m 2 --format json");
  REQUIRE(orbits.status == 0);
  REQUIRE(orbits.out ==
          "{\"m\":2,\"orbits\":[{\"size\":2,\"tableaux\":[\"1,2;3,4\",\"1,3;2,4\"]}],\"q\":4}\n");
}

TEST_CASE("basis subcommand") {
  const RunResult r = run_cli("basis --n 4 --d 2");
  REQUIRE(r.status == 0);
  REQUIRE(r.out ==
          "dimension: 2\nstandard_tableaux: 2\ndimension_match: true\n"
          "1. pi=1,4|2,3 lead=x[1,1]*x[1,2]*x[2,4]*x[2,3]\n"
          "2. pi=1,2|3,4 lead=x[1,1]*x[1,3]*x[2,4]*x[2,2]\n");
}

TEST_CASE("identical invocations are byte-identical") {
  const std::string args = "invariant --n 6 --partition \"1,3,5|2,4,6\" --format json";
  REQUIRE(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("exit codes") {
  REQUIRE(run_cli("nonsense").status == 2);
  REQUIRE(run_cli("basis --n 4").status == 2);                               // missing --d
  REQUIRE(run_cli("invariant --partition \"1,2|2,3\"").status == 2);        // malformed
  REQUIRE(run_cli("invariant --n 5 --partition \"1,2|3,4\"").status == 2);  // size mismatch
  REQUIRE(run_cli("expand --partition \"1,2,3,4\"").status == 2);           // d out of range
  REQUIRE(run_cli("verify --n-max 4").status == 0);
}

TEST_CASE("the identity suite passes at the default bound") {
  REQUIRE(run_cli("verify --n-max 7").status == 0);
}
