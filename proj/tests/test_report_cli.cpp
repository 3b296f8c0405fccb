#include <gtest/gtest.h>

#include <sstream>

#include "cli_app.hpp"
#include "foliakit/report.hpp"
#include "support/corpus.hpp"

using namespace foliakit;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return CliRun{code, out.str(), err.str()};
}

nlohmann::json cli_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  CliRun r = invoke(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Report, JsonRoundTrip) {
  Report r = link_report(foliakit::testing::load_corpus("borromean"), "borromean");
  nlohmann::json j = r;
  Report back = j.get<Report>();
  EXPECT_EQ(nlohmann::json(back), j);
  for (const char* key : {"input", "invariants", "verdicts", "citations", "version"}) EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Cli, LinkHopfIsSi) {
  auto j = cli_json({"link", "(O1+ U2+);(U1+ O2+)"});
  EXPECT_EQ(j["verdicts"]["SI"]["value"], "true");
}

TEST(Cli, UnknotIsWiNotSi) {
  auto j = cli_json({"link", "( )"});
  EXPECT_EQ(j["verdicts"]["SI"]["value"], "false");
  EXPECT_EQ(j["verdicts"]["WI"]["value"], "true");
}

TEST(Cli, SyntaxErrorExitsTwo) {
  CliRun r = invoke({"link", "(O1+ O1+"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("column"), std::string::npos);
}

TEST(Cli, ClassifySphere) {
  auto j = cli_json({"classify", "S3", "-n", "7"});
  EXPECT_EQ(j["verdicts"]["WI"]["value"], "true");
  EXPECT_EQ(j["verdicts"]["SI"]["value"], "false");
  EXPECT_EQ(j["verdicts"]["Leaf"]["value"], "true");
  EXPECT_FALSE(j["citations"].empty());
}

TEST(Cli, ClassifyLens) {
  auto j = cli_json({"classify", "L(4,1)", "-n", "5"});
  EXPECT_EQ(j["verdicts"]["TWI"]["value"], "true");
  EXPECT_EQ(j["verdicts"]["SI"]["value"], "true");
}

TEST(Cli, ClassifyTorusCodimOne) {
  auto j = cli_json({"classify", "T2", "-n", "3"});
  EXPECT_EQ(j["verdicts"]["WI"]["value"], "false");
}

TEST(Cli, ClassifyWithDiagram) {
  auto j = cli_json({"classify", "custom(1;2,2;yes;no;yes)", "-n", "3", "--diagram",
                     foliakit::testing::corpus_path("hopf")});
  EXPECT_EQ(j["verdicts"]["SI"]["value"], "true");
}

TEST(Cli, ContextErrorsExitThree) {
  EXPECT_EQ(invoke({"classify", "S3", "-n", "3"}).code, 3);
  EXPECT_EQ(invoke({"classify", "T2", "-n", "5", "--semichar"}).code, 3);
  EXPECT_EQ(invoke({"classify", "custom(1;2,2;yes;no;yes)", "-n", "3"}).code, 3);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(invoke({"classify", "Q7", "-n", "9"}).code, 2);
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  EXPECT_EQ(invoke({"orient", "2\n0 0\n"}).code, 2);
}

TEST(Cli, Tables) {
  EXPECT_EQ(cli_json({"table", "stiefel", "-k", "3", "-n", "5"})["invariants"]["group"], "Z2");
  EXPECT_EQ(cli_json({"table", "stiefel", "-k", "2", "-n", "7"})["invariants"]["group"], "Z");
  auto h = cli_json({"table", "homotopy", "-k", "1", "-n", "3", "--frame", "tangent", "-r", "1"});
  EXPECT_EQ(h["invariants"]["group"], "trivial");
}

TEST(Cli, OrientOddCycle) {
  auto j = cli_json({"orient", "3\n0 1\n1 2\n2 0\n"});
  EXPECT_EQ(j["invariants"]["orientable"], false);
}

TEST(Cli, ParallelJobsMatchSequential) {
  std::vector<std::string> files;
  for (const auto& n : foliakit::testing::corpus_names()) files.push_back(foliakit::testing::corpus_path(n));
  std::vector<std::string> seq{"link"}, par{"link", "--jobs", "4"};
  seq.insert(seq.end(), files.begin(), files.end());
  par.insert(par.end(), files.begin(), files.end());
  CliRun a = invoke(seq), b = invoke(par);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}
