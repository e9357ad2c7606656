/**
 * @file test_cli.cpp
 */
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "klab/cli.hpp"

using namespace klab;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("klab-test-" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST(Cli, DecidePrintsVerdict) {
  const auto r = run({"decide", "--m", "2", "--a", "2", "--p", "2", "--tau", "2", "--d", "2", "--delta", "0"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out.rfind("Holds (tau = p and m <= a)", 0), 0u) << r.out;
}

TEST(Cli, PdeTauPrintsDecimal) {
  const auto r = run({"pde-tau", "--m", "1", "--a", "0", "--d", "2", "--delta", "0"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "1.0\n");
}

TEST(Cli, InvalidInputExitCodes) {
  EXPECT_EQ(run({"decide", "--bogus", "1"}).code, cli::kInvalidInput);
  EXPECT_EQ(run({}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"decide", "--m", "1", "--p", "0.5"}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"verify", "nonsense"}).code, cli::kInvalidInput);
}

TEST(Cli, JsonDocumentHasSchema) {
  const auto r = run({"adaptivity", "--m", "1", "--d", "2", "--json"});
  EXPECT_EQ(r.code, cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], cli::kSchema);
}

TEST(Cli, VerifyWritesReportAndReportRoundTrips) {
  const auto dir = temp_dir("roundtrip");
  const auto r = run({"verify", "counterexample", "--m", "1", "--p", "2", "--tau", "1", "--a", "0", "--lambda", "-0.7",
                      "--out", dir.string()});
  EXPECT_EQ(r.code, cli::kOk) << r.out << r.err;
  EXPECT_NE(r.out.find("counterexample: PASS"), std::string::npos);
  ASSERT_TRUE(fs::exists(dir / "verify-counterexample.csv"));
  ASSERT_TRUE(fs::exists(dir / "verify-counterexample.json"));
  {
    std::ifstream in(dir / "verify-counterexample.json");
    const auto j = nlohmann::json::parse(in);
    EXPECT_EQ(j["schema"], cli::kSchema);
    EXPECT_TRUE(j.contains("config"));
    EXPECT_TRUE(j.contains("cover"));
  }
  const auto rep = run({"report", "--dir", dir.string()});
  EXPECT_EQ(rep.code, cli::kOk) << rep.out;
  EXPECT_NE(rep.out.find("matches stored"), std::string::npos);

  // tamper with the stored summary
  std::ifstream in(dir / "verify-counterexample.json");
  auto j = nlohmann::json::parse(in);
  in.close();
  j["summary"]["pass"] = false;
  std::ofstream(dir / "verify-counterexample.json") << j.dump(2);
  EXPECT_EQ(run({"report", "--dir", dir.string()}).code, cli::kCheckFailed);
  fs::remove_all(dir);
}

TEST(Cli, WhitneyReportsCertificates) {
  const auto r = run({"whitney", "--d", "2", "--half", "1", "--max-level", "6"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("certificate_violations=0"), std::string::npos);
}

TEST(Cli, NormCommand) {
  const auto r = run({"norm", "--kind", "kondratiev", "--m", "1", "--a", "0.5", "--p", "2", "--beta", "1.2"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("Finite"), std::string::npos) << r.out;
  const auto j = run({"norm", "--kind", "weighted", "--a", "0.5", "--beta", "1.2", "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["config"]["options"]["lambda"].get<double>(), 0.0);
}
