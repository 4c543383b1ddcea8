#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "secmon/cli.hpp"
#include "secmon/io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = secmon::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name + ".json";
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST(Cli, AllFiveRows) {
  const std::vector<std::pair<std::string, std::string>> rows{
      {"p2ab", "1 1 0 1 1"}, {"p2ac", "1 0 1 1 1"}, {"p2bc", "0 1 1 1 1"},
      {"p3", "1 1 1 1 2"},   {"px", "1 1 1 2 1"}};
  for (const auto& [name, row] : rows) {
    const auto r = run({"monotone", fixture(name), "--all-five"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, row)) << name << ": " << r.out;
  }
}

TEST(Cli, SingleMonotone) {
  const auto r = run({"monotone", fixture("product"), "--monotone", "s"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "0.000000")) << r.out;
  const auto j = run({"--json", "monotone", fixture("px"), "--monotone", "t"});
  EXPECT_EQ(j.code, 0);
  EXPECT_NO_THROW(secmon::io::json::parse(j.out)) << j.out;
}

TEST(Cli, RunBuiltinMatches) {
  const auto r = run({"run", fixture("pxpx"), "--builtin", "pxsq_to_p3", "--expect", fixture("p3")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "match")) << r.out;
}

TEST(Cli, RunProtocolFile) {
  const auto r = run({"run", fixture("p3p3"), fixture("protocol_p3sq_to_px"), "--expect",
                      fixture("px")});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"run", fixture("p3"), "--builtin", "px_to_p2", "--expect", fixture("p2ab")}).code,
            secmon::cli::kVerification);
  EXPECT_EQ(run({"run", fixture("pxpx"), "--builtin", "px_to_p2"}).code, secmon::cli::kProtocol);
  EXPECT_EQ(run({"monotone", fixture("nonexistent")}).code, secmon::cli::kUsage);
  EXPECT_EQ(run({"monotone", fixture("p3"), "--frobnicate"}).code, secmon::cli::kUsage);
  EXPECT_EQ(run({"verify", "--trials", "0"}).code, secmon::cli::kUsage);
  EXPECT_EQ(run({}).code, secmon::cli::kUsage);
}

TEST(Cli, QuantumDemo) {
  const auto r = run({"quantum", "--ghz-demo", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "equality")) << r.out;
  const auto m = run({"quantum", fixture("ghz"), "--measure", "x,x,x"});
  EXPECT_EQ(m.code, 0) << m.err;
}

TEST(Cli, DecomposeAndBound) {
  const auto d = run({"decompose", fixture("px")});
  EXPECT_EQ(d.code, 0) << d.err;
  const auto b = run({"bound", fixture("px"), fixture("p3")});
  EXPECT_EQ(b.code, 0) << b.err;
  EXPECT_TRUE(contains(b.out, "0.5")) << b.out;
}

TEST(Cli, VerifyWritesReport) {
  const auto path = (std::filesystem::temp_directory_path() / "secmon_cli_report.json").string();
  const auto r = run({"--seed", "3", "verify", "--suite", "classical", "--trials", "10", "--report",
                      path});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = secmon::io::read_json(path);
  ASSERT_TRUE(j.is_array());
  EXPECT_TRUE(j[0].contains("check_name"));
  EXPECT_TRUE(j[0].contains("verdict"));
  std::filesystem::remove(path);
}
