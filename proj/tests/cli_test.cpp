#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>

#include "ddg/formats.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace ddg;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int status = -1;
  std::string out;
};

// stderr is folded into the captured text
Invocation run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + DDG_CLI_PATH + std::string(" ") + args + " 2>&1";
  Invocation r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ddg_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, ConstructFamily) {
  const Invocation r = run("construct --family gh --q 3 --json --out-dir " + path("out"));
  ASSERT_EQ(r.status, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["order"], 728);
  EXPECT_EQ(j["diameter"], 6);
  EXPECT_TRUE(fs::exists(path("out/gh-q3.edges")));
  EXPECT_TRUE(fs::exists(path("out/gh-q3.cert.json")));
}

TEST_F(Cli, NotPrimePowerIsUsageError) {
  const Invocation r = run("construct --family gq --q 6 --out-dir " + path("out"));
  EXPECT_EQ(r.status, 2);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["error"]["code"], "NotPrimePower");
}

TEST_F(Cli, ConstructNamedWritesPlan) {
  const Invocation r = run("construct --named H3K3 --format graph6 --out-dir " + path("out"));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_TRUE(fs::exists(path("out/H3K3.g6")));
  const StoredPlan p = parse_plan_json(read_text_file(path("out/H3K3.plan.json")));
  EXPECT_EQ(p.plan.targets.size(), 6u);

  const Invocation v = run("verify " + path("out/H3K3.g6") + " --expect-order 740 --expect-degree 4 --expect-diameter 6");
  EXPECT_EQ(v.status, 0) << v.out;
}

TEST_F(Cli, VerifyListsFailedExpectations) {
  write_graph_file(path("c7.edges"), test::cycle(7), GraphFormat::kEdgeList);
  const Invocation r = run("verify " + path("c7.edges") + " --expect-diameter 2 --expect-order 8");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("FAILED diameter: expected 2, got 3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("FAILED order: expected 8, got 7"), std::string::npos) << r.out;
}

TEST_F(Cli, VerifyDisconnected) {
  write_graph_file(path("two.dimacs"), build_graph({}, 2), GraphFormat::kDimacs);
  const Invocation r = run("verify " + path("two.dimacs"));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("\"Disconnected\""), std::string::npos) << r.out;
}

TEST_F(Cli, ExportTriangle) {
  write_graph_file(path("k3.edges"), test::complete(3), GraphFormat::kEdgeList);
  const Invocation g6 = run("export --input " + path("k3.edges") + " --format graph6");
  EXPECT_EQ(g6.status, 0);
  EXPECT_EQ(g6.out, "Bw\n");
  const Invocation dim = run("export --input " + path("k3.edges") + " --format dimacs");
  EXPECT_EQ(dim.out, "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
  EXPECT_EQ(run("export --input " + path("k3.edges") + " --format gml").status, 2);
}

TEST_F(Cli, FieldDebug) {
  const Invocation r = run("field-debug --q 4");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("x^2 + x + 1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("multiplication\n0 0 0 0\n0 1 2 3\n0 2 3 1\n0 3 1 2\n"), std::string::npos) << r.out;
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("table --scope medium").status, 2);
  EXPECT_EQ(run("construct --named H3K3 --family gh --q 3").status, 2);
  EXPECT_EQ(run("field-debug --q 4", "DDG_WORKERS=zero").status, 2);
}

TEST_F(Cli, IdenticalRunsIdenticalOutput) {
  const Invocation a = run("construct --named H4K4 --json --seed 1 --out-dir " + path("a"));
  const Invocation b = run("construct --named H4K4 --json --seed 1 --out-dir " + path("a"));
  ASSERT_EQ(a.status, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  const Invocation c = run("construct --named H4K4 --json --out-dir " + path("c"), "DDG_SEED=1");
  EXPECT_EQ(read_text_file(path("a/H4K4.edges")), read_text_file(path("c/H4K4.edges")));
  EXPECT_EQ(read_text_file(path("a/H4K4.plan.json")), read_text_file(path("c/H4K4.plan.json")));
}

TEST_F(Cli, CacheDirectoryIsUsed) {
  const Invocation r = run("construct --family gh --q 2 --out-dir " + path("out"), "DDG_CACHE_DIR=" + path("cache"));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_TRUE(fs::exists(path("cache/gh-q2-v1.edges")));
  EXPECT_TRUE(fs::exists(path("cache/gh-q2-v1.edges.sha256")));
}

TEST_F(Cli, FastTable) {
  const Invocation r = run("table --scope fast --json");
  ASSERT_EQ(r.status, 0) << r.out;
  const auto rows = nlohmann::json::parse(r.out);
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& row : rows) EXPECT_EQ(row["status"], "match");
}
