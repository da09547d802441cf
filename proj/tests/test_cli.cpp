#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ringlab/cli.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ringlab::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("ringlab_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

}  // namespace

TEST(Cli, CheckCleanResidueRing) {
  const auto r = run({"check", "Z/6", "--property", "clean"});
  ASSERT_EQ(r.code, ringlab::kExitOk) << r.err;
  const auto j = r.doc();
  EXPECT_EQ(j["verdict"], true);
  EXPECT_EQ(j["property"], "clean");
  EXPECT_EQ(j["ring"], "Z/6");
}

TEST(Cli, CheckNegativeControls) {
  auto r = run({"check", "UT2(Z/2)", "-p", "dprop"});
  ASSERT_EQ(r.code, ringlab::kExitOk) << r.err;
  EXPECT_EQ(r.doc()["verdict"], false);
  EXPECT_EQ(r.doc()["counterexample"]["a"], json({{1, 0}, {0, 0}}));

  r = run({"check", "M2(Z/2)", "-p", "lring"});
  ASSERT_EQ(r.code, ringlab::kExitOk) << r.err;
  EXPECT_EQ(r.doc()["verdict"], false);
  EXPECT_EQ(r.doc()["counterexample"]["a"], json({{1, 0}, {0, 0}}));
}

TEST(Cli, CheckIntegersStableRange) {
  const auto r = run({"check", "Z", "-p", "sr1"});
  ASSERT_EQ(r.code, ringlab::kExitOk) << r.err;
  EXPECT_EQ(r.doc()["verdict"], false);
  EXPECT_EQ(r.doc()["counterexample"]["a"], "2");
  EXPECT_EQ(r.doc()["counterexample"]["b"], "5");
}

TEST(Cli, CheckEveryFiniteProperty) {
  for (const char* p : {"sr1", "sr2", "asr1-right", "asr1-left", "asr1-2sided", "dyadic", "clean",
                        "exchange", "lring", "dprop"}) {
    const auto r = run({"check", "Z/12", "--property", p});
    ASSERT_EQ(r.code, ringlab::kExitOk) << p << ": " << r.err;
    EXPECT_EQ(r.doc()["verdict"], true) << p;
  }
}

TEST(Cli, CheckRejectsBadInput) {
  EXPECT_EQ(run({"check", "Q", "-p", "sr1"}).code, ringlab::kExitInputError);
  EXPECT_EQ(run({"check", "Z/6", "-p", "nonsense"}).code, ringlab::kExitInputError);
  EXPECT_EQ(run({"check", "Z", "-p", "clean"}).code, ringlab::kExitInputError);
  EXPECT_EQ(run({"check", "Z/1", "-p", "sr1"}).code, ringlab::kExitInputError);
  EXPECT_EQ(run({}).code, ringlab::kExitInputError);
  EXPECT_EQ(run({"bogus"}).code, ringlab::kExitInputError);
  EXPECT_EQ(run({"--help"}).code, ringlab::kExitOk);
}

TEST(Cli, WitnessAsr1) {
  const auto r = run({"witness", "asr1", "4", "2", "3", "--ring", "Z"});
  ASSERT_EQ(r.code, ringlab::kExitOk) << r.err;
  EXPECT_EQ(r.doc()["shifts"], json({"1"}));
  EXPECT_EQ(r.doc()["verdict"], true);
}

TEST(Cli, WitnessOverPolynomials) {
  const auto r = run({"witness", "sr2", "x", "x+1", "x^2", "-r", "F2[x]"});
  ASSERT_EQ(r.code, ringlab::kExitOk) << r.err;
  EXPECT_EQ(r.doc()["shifts"].size(), 2u);
}

TEST(Cli, WitnessPreconditionFailureIsInputError) {
  EXPECT_EQ(run({"witness", "asr1", "4", "2", "2"}).code, ringlab::kExitInputError);
  EXPECT_EQ(run({"witness", "asr1", "4", "2"}).code, ringlab::kExitInputError);
  EXPECT_EQ(run({"witness", "sr3", "1", "2", "3"}).code, ringlab::kExitInputError);
}

TEST(Cli, AdequateAndNeat) {
  auto r = run({"adequate", "12", "10"});
  ASSERT_EQ(r.code, ringlab::kExitOk) << r.err;
  EXPECT_EQ(r.doc()["r"], "3");
  EXPECT_EQ(r.doc()["s"], "4");
  EXPECT_EQ(r.doc()["verified"], true);
  EXPECT_EQ(run({"adequate", "0", "10"}).code, ringlab::kExitInputError);

  r = run({"neat", "6"});
  ASSERT_EQ(r.code, ringlab::kExitOk) << r.err;
  EXPECT_EQ(r.doc()["verdict"], true);
  r = run({"neat", "x^2+x", "--ring", "F2[x]"});
  ASSERT_EQ(r.code, ringlab::kExitOk) << r.err;
  EXPECT_EQ(r.doc()["verdict"], true);
}

TEST(Cli, NegativeArgumentsAfterSeparator) {
  const auto r = run({"adequate", "--", "-12", "10"});
  ASSERT_EQ(r.code, ringlab::kExitOk) << r.err;
  EXPECT_EQ(r.doc()["verified"], true);
}

TEST(Cli, SnfOfIdentityIsIdentity) {
  TempDir dir;
  const auto path = dir.write("id3.json", "[[1,0,0],[0,1,0],[0,0,1]]");
  const auto r = run({"snf", "--input", path, "--certify"});
  ASSERT_EQ(r.code, ringlab::kExitOk) << r.err;
  const json id = {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}};
  EXPECT_EQ(r.doc()["D"], id);
  EXPECT_EQ(r.doc()["P"], id);
  EXPECT_EQ(r.doc()["Q"], id);
  EXPECT_EQ(r.doc()["certified"], true);
}

TEST(Cli, SnfOverPolynomialRing) {
  TempDir dir;
  const auto path = dir.write("m.json", R"({"ring": "F5[x]", "rows": [["x", 0], [1, "x^2"]]})");
  const auto r = run({"snf", "-i", path, "--certify"});
  ASSERT_EQ(r.code, ringlab::kExitOk) << r.err;
  EXPECT_EQ(r.doc()["certified"], true);
}

TEST(Cli, SnfRejectsBadFiles) {
  TempDir dir;
  EXPECT_EQ(run({"snf", "-i", dir.file("missing.json")}).code, ringlab::kExitInputError);
  EXPECT_EQ(run({"snf", "-i", dir.write("bad.json", "[[1,2],[3")}).code, ringlab::kExitInputError);
  EXPECT_EQ(run({"snf", "-i", dir.write("ragged.json", "[[1,2],[3]]")}).code, ringlab::kExitInputError);
  EXPECT_EQ(run({"snf", "-i", dir.write("key.json", R"({"rows": [[1]], "x": 1})")}).code,
            ringlab::kExitInputError);
  EXPECT_EQ(run({"snf"}).code, ringlab::kExitInputError);
}

TEST(Cli, VerifyWritesReport) {
  TempDir dir;
  const auto catalog = dir.write("cat.json", R"({"rings": ["Z/6", "Z/12", "Z"], "bounds": {"reduction_max": 4}})");
  const auto report = dir.file("report.json");
  const auto r = run({"verify", "--suite", "sr1-asr1,Radical-Quotient,triangular-reduction", "--catalog", catalog, "--report", report});
  ASSERT_EQ(r.code, ringlab::kExitOk) << r.err;
  EXPECT_NE(r.out.find("passed"), std::string::npos);
  std::ifstream in(report);
  const json doc = json::parse(in);
  EXPECT_EQ(doc["schema"], "ringlab.report/1");
  EXPECT_EQ(doc["verdicts"].size(), 5u);
  EXPECT_EQ(doc["bounds"]["reduction_max"], 4);
  EXPECT_TRUE(doc["passed"].get<bool>());
  EXPECT_TRUE(doc["metadata"].contains("generated_at"));
}

TEST(Cli, VerifyToStdout) {
  TempDir dir;
  const auto catalog = dir.write("cat.json", R"(["Z/4"])");
  const auto r = run({"verify", "--suite", "asr1-dyadic", "--catalog", catalog});
  ASSERT_EQ(r.code, ringlab::kExitOk) << r.err;
  EXPECT_EQ(r.doc()["summary"]["Verified"], 1);
}

TEST(Cli, VerifyRejectsBadConfiguration) {
  TempDir dir;
  EXPECT_EQ(run({"verify", "--suite", "no-such-suite"}).code, ringlab::kExitInputError);
  EXPECT_EQ(run({"verify", "--catalog", dir.write("c.json", R"(["Q"])")}).code, ringlab::kExitInputError);
  EXPECT_EQ(run({"verify", "--catalog", dir.file("none.json")}).code, ringlab::kExitInputError);
}
