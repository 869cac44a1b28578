// End-to-end checks of the command-line tool: output contracts, exit codes,
// JSON well-formedness, and byte determinism across seeds and worker counts.

#include <gtest/gtest.h>

#include "json.hpp"

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(BRAIDSURF_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, InvariantTrefoil) {
  const RunResult r = run_cli("invariant --braid \"1 1 1\" --strands 2 --k 3");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("P_3 = 6*z^4 - 8*z^2"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("f_1^(3) = 20"), std::string::npos);
  EXPECT_NE(r.output.find("f_2^(3) = -14"), std::string::npos);
}

TEST(Cli, InvariantUnlinkAndHopf) {
  const RunResult unlink = run_cli("invariant --braid \"\" --strands 2 --k 1");
  EXPECT_EQ(unlink.exit_code, 0);
  EXPECT_NE(unlink.output.find("P_1 = 0"), std::string::npos) << unlink.output;

  const RunResult hopf = run_cli("invariant --braid \"1 1\" --strands 2 --k 1");
  EXPECT_EQ(hopf.exit_code, 0);
  EXPECT_NE(hopf.output.find("P_1 = z"), std::string::npos) << hopf.output;
}

TEST(Cli, VerifyPasses) {
  const RunResult trefoil = run_cli("verify --braid \"1 1 1\" --strands 2 --k 2");
  EXPECT_EQ(trefoil.exit_code, 0);
  EXPECT_NE(trefoil.output.find("PASS"), std::string::npos);
  EXPECT_NE(trefoil.output.find("6*z^4 - 8*z^2"), std::string::npos);

  const RunResult fig8 = run_cli("verify --braid \"1 -2 1 -2\" --strands 3 --k 0");
  EXPECT_EQ(fig8.exit_code, 0);
  EXPECT_NE(fig8.output.find("-z^2 + 1"), std::string::npos) << fig8.output;

  const RunResult unlink = run_cli("verify --braid \"\" --strands 3 --k 1");
  EXPECT_EQ(unlink.exit_code, 0);
  EXPECT_NE(unlink.output.find("PASS"), std::string::npos);
}

TEST(Cli, OracleOutputs) {
  const RunResult homfly = run_cli("oracle --braid \"1 1 1\" --strands 2");
  EXPECT_EQ(homfly.exit_code, 0);
  EXPECT_NE(homfly.output.find("HOMFLY = a^-2*z^2 + 2*a^-2 - a^-4"), std::string::npos);

  const RunResult deriv = run_cli("oracle --braid \"1 1 1\" --strands 2 --k 2");
  EXPECT_EQ(deriv.exit_code, 0);
  EXPECT_NE(deriv.output.find("PP_2 = 6*z^4 - 8*z^2"), std::string::npos);
}

TEST(Cli, StatesCensus) {
  const RunResult r = run_cli("states --braid \"1 1 1\" --strands 2 --k 3 --j 2");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("state {0}"), std::string::npos);
  EXPECT_NE(r.output.find("state {2}"), std::string::npos);
  EXPECT_NE(r.output.find("state {0,1,2}"), std::string::npos);
  EXPECT_EQ(r.output.find("state {1}"), std::string::npos);

  const RunResult over = run_cli("states --braid \"1 1\" --strands 2 --k 3 --j 3");
  EXPECT_EQ(over.exit_code, 0);
  EXPECT_NE(over.output.find("exceed"), std::string::npos);
}

TEST(Cli, JsonOutputsParse) {
  const RunResult inv = run_cli("invariant --braid \"1 1 1\" --strands 2 --k 3 --json");
  EXPECT_EQ(inv.exit_code, 0);
  const nlohmann::json j = nlohmann::json::parse(inv.output);
  EXPECT_EQ(j["polynomial_str"], "6*z^4 - 8*z^2");
  EXPECT_EQ(j["writhe"], 3);

  const RunResult st = run_cli("states --braid \"1 1 1\" --strands 2 --k 2 --json");
  const nlohmann::json js = nlohmann::json::parse(st.output);
  EXPECT_EQ(js["diagram"]["strands"], 2);
  EXPECT_EQ(js["levels"].size(), 2u);

  const RunResult orc = run_cli("oracle --braid \"1 1\" --strands 2 --json");
  const nlohmann::json jo = nlohmann::json::parse(orc.output);
  EXPECT_EQ(jo["homfly"].size(), 3u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("invariant --braid \"1 x\"").exit_code, 2);       // parse error
  EXPECT_EQ(run_cli("invariant --braid \"0\"").exit_code, 2);         // zero letter
  EXPECT_EQ(run_cli("bogus-subcommand").exit_code, 2);                // usage
  EXPECT_EQ(run_cli("invariant --braid \"1 1 1\" --max-arrows 2").exit_code, 3);
  EXPECT_EQ(run_cli("verify --braid \"1 1 1\" --strands 2 --max-letters 2").exit_code, 3);
}

TEST(Cli, CampaignDeterminism) {
  const std::string args = "random-check --strands 3 --letters 6 --samples 8 --max-k 1 --seed 42";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.output, b.output);
  EXPECT_NE(a.output.find("8 samples, 0 failure(s)"), std::string::npos);

  const RunResult w8 = run_cli(args + " --workers 8");
  EXPECT_EQ(w8.output, a.output);

  const RunResult empty = run_cli("random-check --samples 0 --seed 1");
  EXPECT_EQ(empty.exit_code, 0);
  EXPECT_NE(empty.output.find("0 samples, 0 failure(s)"), std::string::npos);
}

TEST(Cli, WorkerCountDoesNotChangeOutput) {
  const std::string base = "invariant --braid \"1 -2 1 -2\" --strands 3 --k 3";
  const RunResult one = run_cli(base + " --workers 1");
  const RunResult eight = run_cli(base + " --workers 8");
  EXPECT_EQ(one.exit_code, 0);
  EXPECT_EQ(one.output, eight.output);
}
