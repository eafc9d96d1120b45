// Runs the built `stab` executable as a subprocess.

#include <gtest/gtest.h>
#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("stab_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& body) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << body;
    return p;
  }

  Outcome run(const std::string& args, const std::string& env = "") {
    const fs::path out = dir_ / "stdout", err = dir_ / "stderr";
    const std::string cmd = env + " '" STAB_CLI_PATH "' " + args + " >'" + out.string() + "' 2>'" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    Outcome r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  fs::path dir_;
};

const char* kTriple =
    R"({"ambient_rank": 3, "points": [["1","0","0"],["1","0","0"],["1","0","0"],["0","1","0"],["1","1","1"],["1","2","3"]]})";

}  // namespace

TEST_F(Cli, CriticalValues) {
  const auto r = run("critical-values -r 2 -d 4 -k 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out), (json{{"values", {"1", "2"}}}));
}

TEST_F(Cli, GitClassifyTriple) {
  const auto p = write("triple.json", kTriple);
  const auto r = run("git-classify --g 2 --input '" + p.string() + "'");
  EXPECT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["class"], "Unstable");
  EXPECT_EQ(j["witness"]["indices"], json::array({0, 1, 2}));

  const auto oracle = run("git-classify --g 2 --oracle --input '" + p.string() + "'");
  EXPECT_EQ(oracle.code, 0);
  EXPECT_EQ(oracle.out, r.out);
}

TEST_F(Cli, ReadsStdin) {
  const auto p = write("triple.json", kTriple);
  const auto r = run("git-classify --g 2 --input - <'" + p.string() + "'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["class"], "Unstable");
}

TEST_F(Cli, OracleCapFromEnvironment) {
  const auto p = write("triple.json", kTriple);
  const auto r = run("git-classify --g 2 --oracle --input '" + p.string() + "'", "STAB_MAX_SUBSET_SIZE=4");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(json::parse(r.err)["error"]["kind"], "TooLarge");
}

TEST_F(Cli, InputErrorsExitTwo) {
  const auto bad = write("bad.json", "{\"ambient_rank\": 2, ");
  auto r = run("git-classify --g 2 --input '" + bad.string() + "'");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.err)["error"]["kind"], "Parse");

  const auto schema = write("schema.json", R"({"ambient_rank": 2, "points": [["1"]]})");
  r = run("git-classify --g 2 --input '" + schema.string() + "'");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.err)["error"]["kind"], "Schema");

  r = run("git-classify --g 2 --input '" + (dir_ / "missing.json").string() + "'");
  EXPECT_EQ(r.code, 2);

  r = run("critical-values -r 2 -d 4 -k 2 --bogus");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.err)["error"]["kind"], "Usage");

  r = run("critical-values -r 2 -d 4");
  EXPECT_EQ(r.code, 2);

  r = run("no-such-command");
  EXPECT_EQ(r.code, 2);

  r = run("hypersurface verify cayley");
  EXPECT_EQ(r.code, 2);
}

TEST_F(Cli, AlphaCheckAndEquivalence) {
  const auto p = write("triple.json", kTriple);
  auto r = run("alpha-check --g 2 --alpha 1/2 --input '" + p.string() + "'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["semistable"], false);

  r = run("alpha-check --g 3 --alpha 1 --input '" + p.string() + "'");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.err)["error"]["kind"], "SizeMismatch");

  r = run("equivalence --g 2 --input '" + p.string() + "'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["agree"], true);
}

TEST_F(Cli, DestableExampleRoundTrip) {
  for (int g = 2; g <= 6; ++g) {
    const auto r = run("destable-example --genus " + std::to_string(g));
    ASSERT_EQ(r.code, 0);
    const auto p = write("ex.json", r.out);
    const auto c = run("git-classify --g " + std::to_string(g) + " --input '" + p.string() + "'");
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(json::parse(c.out)["class"], "Stable") << g;
  }
  const auto custom = run("destable-example --genus 2 --lambdas 1/2,-1,3");
  EXPECT_EQ(custom.code, 0);
  EXPECT_EQ(json::parse(custom.out)["points"][1], json::array({"1", "2"}));
  EXPECT_EQ(run("destable-example --genus 2 --lambdas 1,1,3").code, 2);
}

TEST_F(Cli, GaleSeedsAndDeterminism) {
  const auto p = write("conic.json",
                       R"({"ambient_rank": 3, "points": [["0","0","1"],["1","1","1"],["-1","1","1"],["2","4","1"],["-2","4","1"],["3","9","1"]]})");
  const auto a = run("gale --input '" + p.string() + "' --seed 5");
  const auto b = run("gale --input '" + p.string() + "' --seed 5");
  const auto c = run("gale --input '" + p.string() + "' --seed 6");
  const auto plain = run("gale --input '" + p.string() + "'");
  for (const auto* r : {&a, &b, &c, &plain}) {
    EXPECT_EQ(r->code, 0);
    EXPECT_EQ(json::parse(r->out)["self_associated"], true);
  }
  EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, Hypersurfaces) {
  for (const char* which : {"segre", "igusa"}) {
    const auto r = run(std::string("hypersurface verify ") + which);
    EXPECT_EQ(r.code, 0) << which;
    EXPECT_EQ(json::parse(r.out)["passed"], true);
  }
  const auto d1 = run("hypersurface verify duality --samples 30 --seed 4");
  const auto d2 = run("hypersurface verify duality --samples 30 --seed 4");
  EXPECT_EQ(d1.code, 0);
  EXPECT_EQ(d1.out, d2.out);
  EXPECT_EQ(json::parse(d1.out)["reverse_ok"], 30);

  const auto inc = run("incidence");
  EXPECT_EQ(inc.code, 0);
  const auto j = json::parse(inc.out);
  EXPECT_EQ(j["abstract_flags"].size(), 45u);
  EXPECT_EQ(j["match"], true);
}

TEST_F(Cli, VerifyAllReportsEveryCriterion) {
  const auto r = run("verify-all --samples 0 --seed 7");
  const auto j = json::parse(r.out);
  ASSERT_EQ(j["criteria"].size(), 9u);
  for (const auto& c : j["criteria"]) {
    EXPECT_EQ(c["skipped"], c["id"] == 8) << c["id"];
  }
  EXPECT_EQ(r.code == 0, j["passed"] == true);
}

TEST_F(Cli, VerifyAllVerdictsDoNotDependOnSeed) {
  std::vector<std::vector<bool>> verdicts;
  for (int seed : {7, 8, 9}) {
    const auto r = run("verify-all --samples 50 --seed " + std::to_string(seed));
    const auto j = json::parse(r.out);
    std::vector<bool> v;
    for (const auto& c : j["criteria"]) v.push_back(c["passed"]);
    verdicts.push_back(v);
    EXPECT_EQ(r.code == 0, j["passed"] == true);
  }
  EXPECT_EQ(verdicts[0], verdicts[1]);
  EXPECT_EQ(verdicts[0], verdicts[2]);
}
