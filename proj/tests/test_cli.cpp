#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "rankc/hoa.hpp"

using namespace fixtures;

namespace {

struct CmdResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

CmdResult run_cmd(const std::string& args) {
  std::string cmd = std::string(RANKC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_fixture(const rankc::Ba& ba, const std::string& name) {
  std::string path = "/tmp/rankc_test_" + name + ".hoa";
  std::ofstream(path) << rankc::serialize_hoa(ba);
  return path;
}

}  // namespace

TEST_CASE("cli analyze prints the component table") {
  CmdResult res = run_cmd("analyze " + write_fixture(weak_pair(), "weak_pair"));
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("{q}: N 1") != std::string::npos);
  CHECK(res.output.find("{s,t}: IWA 0") != std::string::npos);
  CHECK(res.output.find("elevator: true") != std::string::npos);
}

TEST_CASE("cli complement emits HOA plus stats") {
  std::string path = write_fixture(ab_loop(), "ab_loop");
  CmdResult res = run_cmd("complement " + path + " --trub=elevator --stats");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("HOA: v1") != std::string::npos);
  CHECK(res.output.find("Acceptance: 1 Inf(0)") != std::string::npos);
  auto pos = res.output.find("max_rank=");
  REQUIRE(pos != std::string::npos);
  int max_rank = std::atoi(res.output.c_str() + pos + 9);
  CHECK(max_rank <= 3);
  // the HOA part reparses
  rankc::Ba back = rankc::parse_hoa(res.output.substr(
      res.output.find("HOA: v1"),
      res.output.find("--END--") + 8 - res.output.find("HOA: v1")));
  CHECK(back.num_states > 0);
}

TEST_CASE("cli check accepts its own complements") {
  std::string path = write_fixture(ab_loop(), "ab_loop");
  CHECK(run_cmd("check " + path).exit_code == 0);
  CHECK(run_cmd("check " + path + " --trub=elevator --propagate=outer,inner")
            .exit_code == 0);
  CHECK(run_cmd("check " + write_fixture(weak_pair(), "weak_pair") + " --deelevate")
            .exit_code == 0);
}

TEST_CASE("cli gen is deterministic and reparses") {
  CmdResult a = run_cmd("gen --n 6 --td 1.5 --ad 0.5 --seed 11");
  CmdResult b = run_cmd("gen --n 6 --td 1.5 --ad 0.5 --seed 11");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  rankc::Ba ba = rankc::parse_hoa(a.output);
  CHECK(ba.num_states == 6);
}

TEST_CASE("cli semidet produces a semi-deterministic automaton") {
  CmdResult res = run_cmd("semidet " + write_fixture(ab_loop(), "ab_loop"));
  CHECK(res.exit_code == 0);
  rankc::Ba out = rankc::parse_hoa(res.output);
  CHECK(rankc::is_semi_deterministic(out));
}

TEST_CASE("cli exits 2 on flag and input errors") {
  CHECK(run_cmd("complement --nonsense").exit_code == 2);
  CHECK(run_cmd("complement /tmp/rankc_no_such_file.hoa").exit_code == 2);
  CHECK(run_cmd("gen --td -1").exit_code == 2);
  CHECK(run_cmd("frobnicate").exit_code == 2);
}

TEST_CASE("cli elevator fallback warns on non-elevator input") {
  rankc::Ba bad(2, {"a", "b"});
  bad.add_edge(0, 0, 0);
  bad.add_edge(0, 0, 1);
  bad.add_edge(1, 0, 0, true);
  bad.add_edge(0, 1, 0);
  bad.initial.set(0);
  std::string path = write_fixture(bad, "nonelev");
  CmdResult res = run_cmd("complement " + path + " --trub=elevator --stats-only");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("warning") != std::string::npos);
}
