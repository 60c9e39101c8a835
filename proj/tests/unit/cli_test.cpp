#include <gtest/gtest.h>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace flatland {
namespace {

namespace fs = std::filesystem;

struct Result {
  int exit_code;
  std::string out;
  std::string err;
};

Result execute(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Compares against tests/golden/<name>; FLATLAND_UPDATE_GOLDEN=1 rewrites it.
void expect_golden(const std::string& name, const std::string& actual) {
  const fs::path path = fs::path(FLATLAND_GOLDEN_DIR) / name;
  if (const char* update = std::getenv("FLATLAND_UPDATE_GOLDEN"); update && *update == '1') {
    std::ofstream(path, std::ios::binary) << actual;
    return;
  }
  ASSERT_TRUE(fs::exists(path)) << "missing golden file " << path;
  EXPECT_EQ(actual, read_file(path)) << name;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("flatland_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

struct GoldenCase {
  const char* file;
  std::vector<std::string> args;
  int exit_code;
};

class CliGolden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(CliGolden, MatchesFixture) {
  const Result r = execute(GetParam().args);
  EXPECT_EQ(r.exit_code, GetParam().exit_code) << r.err;
  expect_golden(GetParam().file, r.out);
}

INSTANTIATE_TEST_SUITE_P(
    Commands, CliGolden,
    ::testing::Values(
        GoldenCase{"family_T_7_1_2.tri", {"family", "T(7,1,2)"}, 0},
        GoldenCase{"family_Q_5_2.json", {"family", "Q(5,2)", "--json"}, 0},
        GoldenCase{"check_T_12_1_3.txt", {"check", "T(12,1,3)"}, 0},
        GoldenCase{"check_K_3_4.json", {"check", "K(3,4)", "--json"}, 0},
        GoldenCase{"invariant_T_12_1_4_g4.txt", {"invariant", "T(12,1,4)", "--g", "4"}, 0},
        GoldenCase{"aut_T_15_1_3.txt", {"aut", "T(15,1,3)"}, 0},
        GoldenCase{"aut_Q_5_3.json", {"aut", "Q(5,3)", "--json"}, 0},
        GoldenCase{"iso_T_17_1_5_T_17_1_2.json", {"iso", "T(17,1,5)", "T(17,1,2)", "--json"}, 0},
        GoldenCase{"iso_T_6_2_2_T_12_1_4.txt", {"iso", "T(6,2,2)", "T(12,1,4)"}, 1},
        GoldenCase{"classify_9.json", {"classify", "--n", "9", "--json"}, 0},
        GoldenCase{"classify_15.txt", {"classify", "--n", "15"}, 0}),
    [](const auto& info) {
      std::string name = info.param.file;
      for (char& c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
      }
      return name;
    });

TEST(Cli, SingleFaceIsNotAManifold) {
  TempDir dir;
  const fs::path file = dir.path() / "one.tri";
  std::ofstream(file) << "3 1\n0 1 2\n";
  const Result r = execute({"check", file.string()});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("NotAManifold"), std::string::npos) << r.err;
  EXPECT_NE(r.out.find("valid: no"), std::string::npos);
}

TEST(Cli, MalformedInputReportsLineNumber) {
  TempDir dir;
  const fs::path file = dir.path() / "bad.tri";
  std::ofstream(file) << "# header follows\n4 2\n0 1 2\n0 1 z\n";
  const Result r = execute({"check", file.string()});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("bad.tri:4:"), std::string::npos) << r.err;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(execute({}).exit_code, 2);
  EXPECT_EQ(execute({"frobnicate"}).exit_code, 2);
  EXPECT_EQ(execute({"check"}).exit_code, 2);
  EXPECT_EQ(execute({"check", "/no/such/file.tri"}).exit_code, 2);
  EXPECT_EQ(execute({"family", "T(9,1,4)"}).exit_code, 2);
  EXPECT_EQ(execute({"classify", "--n", "x"}).exit_code, 2);
  EXPECT_EQ(execute({"--help"}).exit_code, 0);
}

TEST(Cli, InvalidComplexForOtherCommands) {
  TempDir dir;
  const fs::path file = dir.path() / "disk.tri";
  std::ofstream(file) << "4 2\n0 1 2\n0 2 3\n";
  EXPECT_EQ(execute({"aut", file.string()}).exit_code, 1);
  EXPECT_EQ(execute({"iso", file.string(), file.string()}).exit_code, 1);
}

TEST(Cli, JsonInputMirrorsTriInput) {
  TempDir dir;
  const fs::path json = dir.path() / "t.json";
  const Result family = execute({"family", "T(9,1,2)", "--json", "--out", json.string()});
  ASSERT_EQ(family.exit_code, 0);
  const fs::path tri = dir.path() / "t.tri";
  ASSERT_EQ(execute({"family", "T(9,1,2)", "--out", tri.string()}).exit_code, 0);
  EXPECT_EQ(execute({"aut", json.string()}).out, execute({"aut", tri.string()}).out);
  EXPECT_EQ(execute({"iso", json.string(), tri.string()}).exit_code, 0);
}

TEST(Cli, EnumerateWritesFilesThatPassCheck) {
  TempDir dir;
  const Result r = execute({"enumerate", "--n", "12", "--out", dir.path().string()});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  int tri_files = 0;
  for (const auto& entry : fs::directory_iterator(dir.path())) {
    if (entry.path().extension() != ".tri") continue;
    ++tri_files;
    const std::string name = entry.path().filename().string();
    EXPECT_EQ(name.rfind("12_", 0), 0u) << name;
    EXPECT_EQ(execute({"check", entry.path().string()}).exit_code, 0) << name;
  }
  EXPECT_EQ(tri_files, 7);
  EXPECT_TRUE(fs::exists(dir.path() / "12_0_klein_bottle.tri") ||
              fs::exists(dir.path() / "12_0_torus.tri"));
  const std::string summary = read_file(dir.path() / "census_12.json");
  EXPECT_EQ(summary, execute({"classify", "--n", "12", "--json"}).out);
}

TEST(Cli, JobsDoNotChangeOutput) {
  const Result one = execute({"classify", "--n", "12", "--jobs", "1", "--json"});
  const Result eight = execute({"classify", "--n", "12", "--jobs", "8", "--json"});
  EXPECT_EQ(one.exit_code, 0);
  EXPECT_EQ(one.out, eight.out);
}

TEST(Cli, BudgetExhaustionExitsWithThree) {
  const Result r = execute({"classify", "--n", "14", "--budget", "1e-9"});
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(r.err.find("budget"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, BudgetFromEnvironment) {
  ::setenv("FLATLAND_BUDGET_SECS", "1e-9", 1);
  const Result env_only = execute({"classify", "--n", "13"});
  const Result flag_wins = execute({"classify", "--n", "13", "--budget", "60"});
  ::setenv("FLATLAND_BUDGET_SECS", "soon", 1);
  const Result garbage = execute({"classify", "--n", "13"});
  ::unsetenv("FLATLAND_BUDGET_SECS");
  EXPECT_EQ(env_only.exit_code, 3);
  EXPECT_EQ(flag_wins.exit_code, 0);
  EXPECT_EQ(garbage.exit_code, 2);
}

}  // namespace
}  // namespace flatland
