// Runs the built command-line tool end to end.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "busemann/io.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kTool = BUSEMANN_CLI_PATH;
const fs::path kData = BUSEMANN_TEST_DATA;

struct Result {
  int status;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Result tool(const std::string& args) {
  const fs::path dir = fs::temp_directory_path() / ("busemann_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path out = dir / "stdout", err = dir / "stderr";
  const std::string cmd = kTool + " " + args + " >" + out.string() + " 2>" + err.string();
  const int raw = std::system(cmd.c_str());
  Result r{WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
  fs::remove_all(dir);
  return r;
}

std::string config(const char* name) { return "--config " + (kData / name).string(); }

TEST(CliTool, W1Example) {
  const auto r = tool("w1 " + config("w1_plane.json"));
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = busemann::Json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["w1"].get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(j["w1_bruteforce"].get<double>(), 0.5);
}

TEST(CliTool, BarycenterOfUnevenTripodMeasureLeavesTheCenter) {
  const auto r = tool("bary " + config("bary_uneven_tripod.json"));
  ASSERT_EQ(r.status, 0) << r.err;
  const auto rep = busemann::Json::parse(r.out)["report"];
  EXPECT_EQ(rep["point"]["edge"], busemann::Json::parse(R"(["o", "x"])"));
  EXPECT_GT(rep["point"]["offset"].get<double>(), 0.1);
  EXPECT_EQ(rep["replication_level"].get<int>(), 16);
}

TEST(CliTool, ErgodicOutputIsDeterministic) {
  const fs::path dir = fs::temp_directory_path() / "busemann_det";
  fs::create_directories(dir);
  const auto a = dir / "a.csv", b = dir / "b.csv";
  ASSERT_EQ(tool("ergodic " + config("ergodic_tripod.json") + " --format csv --out " + a.string()).status, 0);
  ASSERT_EQ(tool("ergodic " + config("ergodic_tripod.json") + " --format csv --out " + b.string()).status, 0);
  const std::string text = slurp(a);
  EXPECT_EQ(text, slurp(b));
  EXPECT_EQ(text.rfind("n,point_serialized,distance_to_candidate\n", 0), 0u);
  fs::remove_all(dir);
}

TEST(CliTool, ExitCodes) {
  const auto malformed = tool("w1 " + config("malformed.json"));
  EXPECT_EQ(malformed.status, 2);
  EXPECT_NE(malformed.err.find("malformed.json:3:"), std::string::npos) << malformed.err;
  EXPECT_EQ(tool("w1").status, 2);
  EXPECT_EQ(tool("bary --config /nonexistent/file.json").status, 2);
  EXPECT_EQ(tool("nonsense").status, 2);
  EXPECT_EQ(tool("w1 " + config("w1_plane.json") + " --format xml").status, 2);
  EXPECT_EQ(tool("bary " + config("w1_plane.json")).status, 2);  // config names another command
  EXPECT_EQ(tool("probe " + config("w1_plane.json") + " --tol 0").status, 2);
}

TEST(CliTool, FixturesExitStatusMatchesReport) {
  const auto r = tool("fixtures");
  const auto j = busemann::Json::parse(r.out);
  EXPECT_EQ(r.status, j["passed"].get<bool>() ? 0 : 1);
}

}  // namespace
