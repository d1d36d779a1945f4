#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "lcheck_tools/cli.hpp"

namespace lcheck {
namespace {

const std::string kData = LCHECK_DATA_DIR;
const std::string kGolden = LCHECK_GOLDEN_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Timing and absolute paths vary between machines.
std::string mask(std::string s) {
  s = std::regex_replace(s, std::regex(R"(timing_ms: [0-9.]+)"), "timing_ms: <masked>");
  s = std::regex_replace(s, std::regex(R"("timing_ms": [0-9.eE+-]+)"), "\"timing_ms\": <masked>");
  std::string::size_type pos;
  while ((pos = s.find(kData)) != std::string::npos) s.replace(pos, kData.size(), "<data>");
  return s;
}

void check_golden(const std::string& name, const std::vector<std::string>& args, int want_code) {
  auto r = run(args);
  EXPECT_EQ(r.code, want_code) << r.out << r.err;
  std::string got = mask(r.out);
  // The digest covers the arguments, so it moves with the checkout path.
  for (const auto& a : args) {
    if (a.find(kData) != std::string::npos) {
      got = std::regex_replace(got, std::regex("inputs: [0-9a-f]+"), "inputs: <masked>");
      got = std::regex_replace(got, std::regex(R"("inputs_digest": "[0-9a-f]+")"),
                               "\"inputs_digest\": <masked>");
    }
  }
  const std::string path = kGolden + "/" + name + ".txt";
  if (std::getenv("LCHECK_UPDATE_GOLDEN")) {
    std::ofstream(path) << got;
    return;
  }
  std::ifstream f(path);
  ASSERT_TRUE(f) << "missing golden " << path << " (set LCHECK_UPDATE_GOLDEN=1)";
  std::stringstream want;
  want << f.rdbuf();
  EXPECT_EQ(got, want.str()) << "golden " << name;
}

TEST(Golden, VerifySos) { check_golden("verify_sos", {"verify", "sos"}, 0); }
TEST(Golden, VerifyCase41) { check_golden("verify_case_4_1", {"verify", "case", "4.1"}, 0); }
TEST(Golden, VerifyCase443) { check_golden("verify_case_4_4_3", {"verify", "case", "4.4.3"}, 1); }
TEST(Golden, VerifyBridge) { check_golden("verify_bridge", {"verify", "bridge"}, 0); }
TEST(Golden, VerifyAll) { check_golden("verify_all", {"verify", "all"}, 1); }
TEST(Golden, ShowCase) { check_golden("show_case_5_3_3", {"show-case", "5.3.3"}, 0); }

TEST(Golden, Expand) {
  check_golden("expand_adjoint_pair",
               {"expand", "Ad(pi) (x) Ad(pi') tw chi", "--assume", "relation pi ~ pi'"}, 0);
}

TEST(Golden, Poles) {
  check_golden("poles_sym4_pair",
               {"poles", "6*1 (+) Sym^4(pi) (x) Sym^4(pi') tw omega^-2*omega'^-2", "--hyp",
                kData + "/pi_tetrahedral.hyp", "--assume", "type pi general"},
               0);
}

TEST(Golden, Scan) {
  check_golden("scan_small",
               {"scan", "--form1", "delta", "--form2", "x0_11", "--char", "kronecker:-4", "--xmax",
                "500", "--lmax", "2"},
               0);
}

TEST(Golden, JsonSos) { check_golden("verify_sos_json", {"verify", "sos", "--json"}, 0); }
TEST(Golden, JsonBeforeSubcommand) {
  check_golden("verify_bridge_json", {"--json", "verify", "bridge"}, 0);
}

TEST(Golden, CorruptedCase) {
  check_golden("corrupted_case", {"verify", "case", "--file", kData + "/corrupted_4_2.case"}, 1);
}

TEST(Golden, BadEigenvalue) {
  check_golden("bad_eigenvalue",
               {"scan", "--form1", kData + "/delta_bad.tsv", "--form2", "x0_11", "--char",
                "trivial", "--xmax", "50", "--lmax", "1"},
               1);
}

TEST(Cli, UsageErrorsExitTwo) {
  auto r = run({"verify", "nonsense"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"expand", "pi (+)"}).code, 2);
  EXPECT_EQ(run({"scan", "--form1", "delta", "--form2", "x0_11", "--char", "nope"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, UnknownCaseIsAFailure) {
  auto r = run({"verify", "case", "9.9"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, ExitCodeMatchesAggregate) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "sos"}, {"verify", "case", "4.2"}, {"verify", "case", "4.4.3"}}) {
    auto r = run(args);
    const bool pass = r.out.find("aggregate: PASS") != std::string::npos;
    EXPECT_EQ(r.code, pass ? 0 : 1);
  }
}

TEST(Cli, ThreadCapFromEnvironment) {
  ::setenv("LCALC_THREADS", "1", 1);
  EXPECT_EQ(cli::worker_count(), 1u);
  ::unsetenv("LCALC_THREADS");
  EXPECT_GE(cli::worker_count(), 1u);
}

}  // namespace
}  // namespace lcheck
