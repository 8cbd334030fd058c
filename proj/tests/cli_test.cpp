#include "binperm/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace binperm {
namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "binperm");
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

TEST(Cli, VerifyExitCodes) {
  const auto r = run({"verify", "--case", "f2", "--base-n", "2"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "verified"));
  EXPECT_EQ(run({"verify", "--case", "h2", "--base-n", "2"}).code, kExitOk);
  EXPECT_EQ(run({"verify", "--case", "f4", "--base-n", "2"}).code, kExitOk);
  EXPECT_TRUE(contains(run({"verify", "--case", "f1", "--base-n", "3"}).out, "primitive elements"));
  EXPECT_EQ(run({"verify", "--case", "f2", "--base-n", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--case", "f9", "--base-n", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--case", "f3", "--base-n", "2", "--tester", "hermite"}).code, kExitUsage);
}

TEST(Cli, IndexCommand) {
  const auto r = run({"index", "--n", "12", "--i", "1846"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "index 91"));
  EXPECT_EQ(run({"index", "--n", "12", "--i", "4095"}).code, kExitUsage);
  EXPECT_EQ(run({"index", "--n", "12"}).code, kExitUsage);
}

TEST(Cli, SearchTable) {
  const auto r = run({"search", "--n", "4", "--skip-linearized"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "0 rows"));
  const auto six = run({"search", "--n", "6", "--skip-linearized", "--tester", "cross-check"});
  EXPECT_EQ(six.code, kExitOk) << six.err;
  EXPECT_TRUE(contains(six.out, "4 rows"));
}

TEST(Cli, SearchJsonToStdout) {
  const auto r = run({"search", "--n", "6", "--skip-linearized", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rows"].size(), 4u);
}

TEST(Cli, SearchToFile) {
  const auto path = std::filesystem::temp_directory_path() / "binperm_cli_test.csv";
  const auto r = run({"search", "--n", "8", "--skip-linearized", "--i", "100-200", "--out",
                      path.string(), "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), {});
  EXPECT_TRUE(contains(content, "8,154,5,false,10,"));
  EXPECT_TRUE(contains(content, "8,171,3,false,48,"));
  EXPECT_FALSE(contains(content, ",86,"));
  std::filesystem::remove(path);
}

TEST(Cli, SearchUsageErrors) {
  EXPECT_EQ(run({"search", "--n", "11", "--tester", "hermite"}).code, kExitUsage);
  EXPECT_EQ(run({"search", "--n", "6", "--tester", "bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"search", "--n", "6", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({"search", "--n", "6", "--i", "abc"}).code, kExitUsage);
  EXPECT_EQ(run({"search", "--n", "6", "--i", "50-10"}).code, kExitUsage);
  EXPECT_EQ(run({"search", "--n", "6", "--frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, TestCommand) {
  const auto ok = run({"test", "--n", "6", "--i", "10", "--a", "0x3"});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_TRUE(contains(ok.out, "hermite"));
  const auto one = run({"test", "--n", "6", "--i", "10", "--a", "1"});
  EXPECT_EQ(one.code, kExitOk);
  EXPECT_TRUE(contains(one.out, "direct not a permutation"));
  EXPECT_EQ(run({"test", "--n", "6", "--i", "10", "--a", "0xzz"}).code, kExitUsage);
  EXPECT_EQ(run({"test", "--n", "6", "--i", "10", "--a", "0x0"}).code, kExitUsage);
  EXPECT_EQ(run({"test", "--n", "6", "--i", "10", "--a", "0x40"}).code, kExitUsage);
}

TEST(Cli, HermiteCommand) {
  const auto all = run({"hermite", "--n", "6", "--i", "43", "--a", "0x2"});
  EXPECT_EQ(all.code, kExitOk);
  EXPECT_TRUE(contains(all.out, "permutation"));
  const auto single = run({"hermite", "--n", "6", "--i", "43", "--a", "0x2", "--t", "5"});
  EXPECT_EQ(single.code, kExitOk);
  EXPECT_TRUE(contains(single.out, "power_sum"));
  EXPECT_EQ(run({"hermite", "--n", "6", "--i", "43", "--a", "0x2", "--t", "63"}).code, kExitUsage);
  EXPECT_EQ(run({"hermite", "--n", "12", "--i", "43", "--a", "0x2"}).code, kExitUsage);
  EXPECT_EQ(run({"hermite", "--n", "12", "--i", "43", "--a", "0x2", "--t", "7"}).code, kExitOk);
}

}  // namespace
}  // namespace binperm
