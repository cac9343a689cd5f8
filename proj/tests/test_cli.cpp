#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "fqzeta/cli.hpp"

using namespace fqzeta;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("fqzeta_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, RelationExample) {
  const auto r = run({"relation", "2", "19", "20", "--method", "initial"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "S(19,20) q=2 [initial]: {(1,20), (1,16), (1,12), (1,8)}\n");
}

TEST(Cli, RelationDiagonalChar2) {
  const auto r = run({"relation", "2", "5", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "S(5,5) q=2 [initial]: {}\n");
}

TEST(Cli, RelationAllMethodsAgree) {
  // In odd characteristic the diagonal set is not empty; every method
  // nevertheless returns the same set.
  const auto r = run({"relation", "3", "4", "4", "--method", "all", "--json"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(doc.at("agree"), true);
  const auto recs = records_from_document(doc);
  ASSERT_EQ(recs.size(), 4u);
  for (const auto& rec : recs) EXPECT_EQ(rec.terms, (std::vector<RecordTerm>{{1, 4}, {1, 2}}));

  const auto q2 = run({"relation", "2", "20", "19", "--method", "all"});
  EXPECT_EQ(q2.code, 0);
  EXPECT_NE(q2.out.find("[closed-q2]"), std::string::npos);
  EXPECT_NE(q2.out.find("agree: true\n"), std::string::npos);
}

TEST(Cli, RelationJson) {
  const auto r = run({"relation", "2", "19", "20", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(doc.begin().key(), "schema_version");
  const auto recs = records_from_document(doc);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].terms, (std::vector<RecordTerm>{{1, 20}, {1, 16}, {1, 12}, {1, 8}}));
  EXPECT_EQ(recs[0].method, "initial");
  EXPECT_FALSE(doc.contains("agree"));
}

TEST(Cli, Gt) {
  EXPECT_EQ(run({"gt", "9", "17"}).out, "1 + 2*t^72 + 2*t^80 + t^152\n");
  EXPECT_EQ(run({"gt", "2", "16"}).out, "1\n");
  const auto r = run({"gt", "2", "19"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '+') + 1, 8);
}

TEST(Cli, Verify) {
  auto r = run({"verify", "2", "19", "20", "--depths", "1,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("depth 1: pass\ndepth 2: pass\n"), std::string::npos);
  EXPECT_NE(r.out.find("result: pass"), std::string::npos);

  r = run({"verify", "3", "3", "2", "--depths", "1,2", "--zeta-precision", "40"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("zeta through t^-40: pass"), std::string::npos);

  r = run({"verify", "2", "3", "5", "--depths", "0", "--zeta-precision", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("depth 0: pass"), std::string::npos);
  EXPECT_EQ(r.out.find("zeta"), std::string::npos);
}

TEST(Cli, VerifyBudgetIsUsageError) {
  const auto r = run({"--max-enum", "2", "verify", "2", "3", "2", "--depths", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Cli, TableCountAndDiagonal) {
  const auto r = run({"table", "2", "--amax", "4"});
  ASSERT_EQ(r.code, 0);
  const auto recs = records_from_document(nlohmann::ordered_json::parse(r.out));
  ASSERT_EQ(recs.size(), 10u);
  std::size_t i = 0;
  for (std::int64_t a = 1; a <= 4; ++a)
    for (std::int64_t b = 1; b <= a; ++b, ++i) {
      EXPECT_EQ(recs[i].a, a);
      EXPECT_EQ(recs[i].b, b);
      if (a == b) EXPECT_TRUE(recs[i].terms.empty());
    }
  const auto capped = records_from_document(nlohmann::ordered_json::parse(run({"table", "3", "--amax", "5", "--bmax", "2"}).out));
  EXPECT_EQ(capped.size(), 9u);
}

TEST(Cli, TableFileIsDeterministic) {
  const auto p1 = temp_file("t1.json"), p2 = temp_file("t2.json");
  auto r1 = run({"table", "2", "--amax", "21", "--out", p1.string(), "--threads", "3", "--verify-depths", "1"});
  ASSERT_EQ(r1.code, 0) << r1.err;
  EXPECT_EQ(r1.out, "wrote 231 records to " + p1.string() + "\n");
  auto r2 = run({"table", "2", "--amax", "21", "--out", p2.string(), "--threads", "1", "--verify-depths", "1"});
  ASSERT_EQ(r2.code, 0);
  const std::string text = slurp(p1);
  EXPECT_EQ(text, slurp(p2));
  const auto recs = records_from_document(nlohmann::ordered_json::parse(text));
  const auto it = std::find_if(recs.begin(), recs.end(), [](const auto& x) { return x.a == 20 && x.b == 19; });
  ASSERT_NE(it, recs.end());
  EXPECT_EQ(it->terms, (std::vector<RecordTerm>{{1, 20}, {1, 16}, {1, 12}, {1, 8}}));
  EXPECT_EQ(it->verified_depths, std::vector<int>{1});
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"relation", "6", "1", "2"}).code, 1);
  EXPECT_EQ(run({"relation", "2", "0", "2"}).code, 1);
  EXPECT_EQ(run({"relation", "2", "1"}).code, 1);
  EXPECT_EQ(run({"relation", "2", "1", "2", "--method", "bogus"}).code, 1);
  EXPECT_EQ(run({"gt", "2", "0"}).code, 1);
  EXPECT_EQ(run({"table", "3", "--amax", "3", "--method", "closed-q2"}).code, 1);
  EXPECT_EQ(run({"table", "2", "--amax", "2", "--out", "/nonexistent-dir/x.json"}).code, 1);
  const auto r = run({"relation", "6", "1", "2"});
  EXPECT_NE(r.err.find("error: "), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SubprocessExitCodes) {
  const std::string exe = FQZETA_CLI_PATH;
  const auto status = [&](const std::string& args) {
    const int raw = std::system((exe + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("relation 2 19 20"), 0);
  EXPECT_EQ(status("relation 6 1 2"), 1);
  EXPECT_EQ(status("verify 3 3 2 --depths 1,2 --zeta-precision 40"), 0);
  EXPECT_EQ(status("gt 9 17"), 0);
  EXPECT_EQ(status("nonsense"), 1);
}
