#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "boolinv/export.hpp"
#include "boolinv/morse.hpp"
#include "json.hpp"
#include "shell.hpp"

namespace boolinv {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = shell::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("boolinv_test_" + name);
}

TEST(Shell, HomologyJson) {
  const Result r = run({"homology", "B2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["betti"], (std::vector<int>{0, 0, 1}));
  EXPECT_EQ(j["f"], (std::vector<int>{1, 2, 2}));
  EXPECT_EQ(j["euler"], -1);
}

TEST(Shell, MorseSummaryLine) {
  const Result r = run({"morse", "D6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("critical: 2 cells, dim 5; acyclic: yes\n"), std::string::npos) << r.out;
}

TEST(Shell, TableExpectedColumn) {
  const Result r = run({"table", "--family", "A", "--upto", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("expected: 0 0 1 0 1 1 1 2\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("computed: 0 0 1 0 1 1 1 2\n"), std::string::npos) << r.out;
}

TEST(Shell, GammaListsPartition) {
  const Result r = run({"gamma", "A4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("P1: 18  P2: 2  P3: 0"), std::string::npos) << r.out;
  const Result d4 = run({"gamma", "D4", "--json"});
  ASSERT_EQ(d4.code, 0);
  EXPECT_EQ(nlohmann::json::parse(d4.out)["gamma"].size(), 5u);
}

TEST(Shell, CheckRunsEverySuite) {
  const Result r = run({"check", "B4"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  for (const char* suite : {"simplicial", "pure", "euler", "recurrence", "patchwork", "morse", "oracle"}) {
    EXPECT_NE(r.out.find(std::string("PASS ") + suite + ":"), std::string::npos) << suite << "\n" << r.out;
  }
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Shell, GraphFileAndOrder) {
  const auto path = temp_file("b3.graph");
  {
    std::ofstream f(path);
    f << "# B3\n3\n1 2 4\n2 3 3\n";
  }
  const Result from_file = run({"homology", "--graph", path.string(), "--json"});
  const Result preset = run({"homology", "B3", "--json"});
  ASSERT_EQ(from_file.code, 0) << from_file.err;
  EXPECT_EQ(nlohmann::json::parse(from_file.out)["betti"], nlohmann::json::parse(preset.out)["betti"]);

  const Result reordered = run({"homology", "B3", "--order", "3,2,1", "--json"});
  ASSERT_EQ(reordered.code, 0) << reordered.err;
  EXPECT_EQ(nlohmann::json::parse(reordered.out)["betti"], nlohmann::json::parse(preset.out)["betti"]);
  std::filesystem::remove(path);
}

TEST(Shell, DotOutput) {
  const auto path = temp_file("d4.dot");
  const Result r = run({"morse", "D4", "--dot", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream f(path);
  std::stringstream text;
  text << f.rdbuf();
  EXPECT_EQ(text.str().rfind("digraph", 0), 0u);
  std::filesystem::remove(path);
}

TEST(Shell, ExitCodes) {
  EXPECT_EQ(run({}).code, shell::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, shell::kUsage);
  EXPECT_EQ(run({"homology"}).code, shell::kUsage);
  EXPECT_EQ(run({"homology", "Q7"}).code, shell::kUsage);
  EXPECT_EQ(run({"homology", "A3", "--graph", "x"}).code, shell::kUsage);
  EXPECT_EQ(run({"homology", "--graph", "/nonexistent/graph"}).code, shell::kUsage);
  EXPECT_EQ(run({"homology", "A3", "--order", "1,1,2"}).code, shell::kUsage);
  EXPECT_EQ(run({"homology", "A6", "--max-cells", "20"}).code, shell::kResource);
  EXPECT_EQ(run({"--help"}).code, shell::kOk);
}

TEST(Export, PosetJson) {
  const FacePoset p = build_complex(family("B2"));
  const auto j = nlohmann::json::parse(poset_json(p, betti_gf2(p)));
  EXPECT_EQ(j["cells"].size(), 5u);
  EXPECT_EQ(j["covers"].size(), 6u);
  EXPECT_EQ(j["betti"], (std::vector<int>{0, 0, 1}));
}

TEST(Export, MatchingJson) {
  const GammaMatching g = build_gamma_matching(family("A5"));
  const auto j = nlohmann::json::parse(matching_json(g.poset, g.matching, g.report));
  EXPECT_EQ(j["critical"].size(), 1u);
  EXPECT_EQ(j["pairs"].size(), g.report.pairs);
  EXPECT_TRUE(j["acyclic"].get<bool>());
}

}  // namespace
}  // namespace boolinv
