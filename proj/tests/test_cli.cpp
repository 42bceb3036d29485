#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace gradedk::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gradedk_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

  std::string bouquet(int even, int odd) {
    std::string edges;
    for (int i = 0; i < even + odd; ++i) {
      if (i) edges += ",";
      edges += R"({"id":"e)" + std::to_string(i) + R"(","source":"v","range":"v","parity":)" +
               (i < odd ? "1" : "0") + "}";
    }
    return write("o" + std::to_string(even + odd) + "_" + std::to_string(odd) + ".graph",
                 R"({"vertices":["v"],"edges":[)" + edges + R"(],"relative_set":"all_regular"})");
  }

  fs::path dir_;
};

TEST_F(CliTest, KTheoryCuntzTwo) {
  const auto r = invoke({"ktheory", bouquet(2, 0)});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("K0^gr = 0, K1^gr = 0"), std::string::npos) << r.out;
}

TEST_F(CliTest, KHomologyCuntzThree) {
  const auto r = invoke({"khomology", bouquet(3, 0)});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("K0_gr = 0, K1_gr = Z/2"), std::string::npos) << r.out;
}

TEST_F(CliTest, MissingFileIsInputError) {
  const auto r = invoke({"ktheory", (dir_ / "missing.graph").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("missing.graph"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, ParseErrorsAndBadFlags) {
  const auto bad = write("bad.graph", R"({"vertices":["a"],"edges":[{"id":"e","source":"a","range":"b","parity":0}]})");
  const auto r = invoke({"ktheory", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("'b'"), std::string::npos) << r.err;

  EXPECT_EQ(invoke({"ktheory", bouquet(2, 0), "--format", "xml"}).code, 2);
  EXPECT_EQ(invoke({"frobnicate", bouquet(2, 0)}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"ktheory"}).code, 2);
}

TEST_F(CliTest, NonRegularRelativeSetIsInputError) {
  const auto f = write("g.graph", R"({"vertices":["a","b"],"edges":[{"id":"e","source":"a","range":"b","parity":0}],"relative_set":["a"]})");
  const auto r = invoke({"all", f});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("'a'"), std::string::npos);
}

TEST_F(CliTest, MachineOutputRoundTrips) {
  const auto r = invoke({"all", bouquet(5, 0), "--format", "machine"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["command"], "all");
  EXPECT_TRUE(doc["input_digest"].get<std::string>().starts_with("sha256:"));
  EXPECT_EQ(group_from_json(doc["groups"]["K0^gr"]), AbelianGroup(0, {4}));
  EXPECT_TRUE(group_from_json(doc["groups"]["K1^gr"]).is_trivial());
  EXPECT_TRUE(group_from_json(doc["groups"]["K0_gr"]).is_trivial());
  EXPECT_EQ(group_from_json(doc["groups"]["K1_gr"]), AbelianGroup(0, {4}));
  EXPECT_TRUE(doc["passed"].get<bool>());
  EXPECT_FALSE(doc["checks"].empty());
}

TEST_F(CliTest, WhitespaceDoesNotChangeMachineOutput) {
  const auto a = write("a.graph", R"({"vertices":["u","v"],"edges":[{"id":"f","source":"u","range":"v","parity":1}]})");
  const auto b = write("b.graph", "{\n  \"edges\" : [ { \"parity\": 1, \"range\": \"v\",\n \"source\": \"u\", \"id\": \"f\" } ],\n  \"vertices\": [\"u\", \"v\"]\n}\n");
  const auto ra = invoke({"check", a, "--format", "machine", "--seed", "9"});
  const auto rb = invoke({"check", b, "--format", "machine", "--seed", "9"});
  EXPECT_EQ(ra.code, 0);
  EXPECT_EQ(ra.out, rb.out);
}

TEST_F(CliTest, ClassicalForcesEvenParity) {
  const auto r = invoke({"classical", bouquet(1, 3), "--format", "machine"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(group_from_json(doc["groups"]["K0^gr"]), AbelianGroup(0, {3}));
  EXPECT_EQ(group_from_json(doc["groups"]["K1_gr"]), AbelianGroup(0, {3}));
}

TEST_F(CliTest, EmitMatricesAndKernelBasis) {
  const auto r = invoke({"ktheory", bouquet(2, 1), "--emit-matrices", "--emit-kernel-basis",
                         "--format", "machine"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["matrices"]["iota - A^t"]["entries"], nlohmann::json::parse(R"([["0"]])"));
  EXPECT_EQ(doc["matrices"]["signed adjacency A"]["entries"], nlohmann::json::parse(R"([["1"]])"));
  EXPECT_EQ(doc["kernel_bases"]["kernel basis of iota - A^t"].size(), 1u);
}

TEST_F(CliTest, SnfDocument) {
  const auto f = write("m.json", R"({"matrix": [[2, 4], [6, "8"]]})");
  const auto r = invoke({"snf", f, "--format", "machine", "--emit-matrices"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["diagonal"], nlohmann::json::parse(R"(["2", "4"])"));
  EXPECT_EQ(group_from_json(doc["groups"]["coker"]), AbelianGroup(0, {2, 4}));
  EXPECT_TRUE(doc["matrices"].contains("U"));

  const auto empty = write("e.json", R"({"matrix": [], "cols": 3})");
  const auto re = invoke({"snf", empty, "--format", "machine"});
  ASSERT_EQ(re.code, 0);
  EXPECT_EQ(group_from_json(nlohmann::json::parse(re.out)["groups"]["ker"]), AbelianGroup::free(3));

  EXPECT_EQ(invoke({"snf", write("r.json", R"({"matrix": [[1, 2], [3]]})")}).code, 2);
  EXPECT_EQ(invoke({"snf", write("x.json", R"({"matrix": [[1.5]]})")}).code, 2);
}

TEST_F(CliTest, TailsSweep) {
  const auto f = write("t.graph", R"({"vertices":["v","w"],"edges":[
      {"id":"e1","source":"v","range":"v","parity":0},
      {"id":"e2","source":"v","range":"v","parity":0}]})");
  const auto ok = invoke({"tails", f, "--at", "w", "--max-length", "4", "--format", "machine"});
  ASSERT_EQ(ok.code, 0) << ok.out << ok.err;
  const auto doc = nlohmann::json::parse(ok.out);
  ASSERT_EQ(doc["tails"].size(), 1u);
  EXPECT_EQ(doc["tails"][0]["lengths"].size(), 4u);
  EXPECT_TRUE(doc["tails"][0]["constant"].get<bool>());

  const auto mixed = invoke({"tails", f, "--at", "v", "--at", "w", "--max-length", "2"});
  EXPECT_EQ(mixed.code, 1);
  EXPECT_NE(mixed.out.find("[FAIL] tail at v"), std::string::npos);
  EXPECT_NE(mixed.out.find("[PASS] tail at w"), std::string::npos);

  EXPECT_EQ(invoke({"tails", f, "--at", "w", "--max-length", "0"}).code, 2);
  EXPECT_EQ(invoke({"tails", f, "--max-length", "2"}).code, 2);
}

TEST_F(CliTest, CheckPassesOnAssortedGraphs) {
  const auto f = write("c.graph", R"({"vertices":["a","b","c","d"],"edges":[
      {"id":"x","source":"a","range":"b","parity":1},
      {"id":"y","source":"b","range":"c","parity":0},
      {"id":"z","source":"c","range":"b","parity":1},
      {"id":"w","source":"c","range":"c","parity":0},
      {"id":"q","source":"b","range":"b","parity":0}],"relative_set":["b"]})");
  const auto r = invoke({"check", f});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
  EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos);
}

TEST(GroupJson, RejectsInconsistentText) {
  auto j = group_to_json(AbelianGroup(1, {2}));
  j["text"] = "Z/2";
  EXPECT_THROW(group_from_json(j), std::invalid_argument);
}

}  // namespace
}  // namespace gradedk::cli
