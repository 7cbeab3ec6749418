#include <gtest/gtest.h>

#include <sstream>

#include "detideal/cli/app.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<const char*> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "detideal");
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = detideal::cli::run(static_cast<int>(args.size()), args.data(), in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, IdealsAdjacency) {
  Result r = run({"ideals", "--matrix", "adjacency", "--ring", "Zx", "--var", "t", "Dt_"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("k=4: [2, t + 1]"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("k=5: [t^5 - 5*t^3 - 2*t^2 + 2*t]"), std::string::npos);
  EXPECT_NE(r.out.find("corank: 3"), std::string::npos);
}

TEST(Cli, IdealsDistanceJson) {
  Result r = run({"ideals", "-m", "distance", "--var", "t", "--format", "json", "Dt_"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"6\""), std::string::npos);
  EXPECT_NE(r.out.find("\"t - 1\""), std::string::npos);
}

TEST(Cli, CriticalIdealsOfCycle) {
  Result r = run({"ideals", "-m", "adjacency", "-r", "ZX", "--family", "cycle:4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("k=4: [x0*x1*x2*x3 - x0*x1 - x1*x2 - x0*x3 - x2*x3]"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("corank: 2"), std::string::npos);
}

TEST(Cli, Snf) {
  EXPECT_EQ(run({"snf", "-m", "laplacian", "--ring", "Z", "--family", "complete_bipartite:3,3"}).out, "1,1,3,3,9,0\n");
  EXPECT_EQ(run({"snf", "-m", "distlap", "--family", "star:3"}).out, "1,5,0\n");
  EXPECT_EQ(run({"snf", "-m", "adjacency", "-r", "Qx", "--family", "complete_bipartite:3,3"}).out,
            "1, 1, x, x, x, x^3 - 9*x\n");
}

TEST(Cli, SurveyCsv) {
  EXPECT_EQ(run({"survey", "--n", "6", "--matrix", "laplacian", "--mode", "codet-Z"}).out,
            "n,matrix,mode,total,with_mate\n6,laplacian,codet-Z,112,2\n");
  EXPECT_EQ(run({"survey", "--n", "5", "-m", "adjacency", "--mode", "cospectral"}).out,
            "n,matrix,mode,total,with_mate\n5,adjacency,cospectral,21,0\n");
}

TEST(Cli, SurveyFromStdinAndGuards) {
  std::string corpus = run({"gen", "--n", "5"}).out;
  Result r = run({"survey", "-i", "-", "-m", "laplacian", "--mode", "coinvariant"}, corpus);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("5,laplacian,coinvariant,21,8"), std::string::npos) << r.out << r.err;
  EXPECT_EQ(run({"survey", "--n", "9"}).code, 2);
  EXPECT_EQ(run({"survey", "-i", "-", "-m", "laplacian"}, "D??\n").code, 2);  // disconnected
}

TEST(Cli, Gen) {
  EXPECT_EQ(run({"gen", "--n", "1"}).out, "@\n");
  Result r5 = run({"gen", "--n", "5"});
  EXPECT_EQ(std::count(r5.out.begin(), r5.out.end(), '\n'), 21);
  Result r6 = run({"gen", "--n", "6"});
  EXPECT_EQ(std::count(r6.out.begin(), r6.out.end(), '\n'), 112);
  EXPECT_EQ(run({"gen", "--n", "9"}).code, 2);
  EXPECT_EQ(run({"gen", "--n", "0"}).code, 2);
}

TEST(Cli, VerifySuites) {
  for (const char* s : {"c4", "k33", "ltimes", "appendixB", "fig2", "symbolic-bipartite"}) {
    Result r = run({"verify", "--suite", s});
    EXPECT_EQ(r.code, 0) << s << "\n" << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
  }
  EXPECT_EQ(run({"verify", "--suite", "unknown"}).code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"ideals", "-m", "adjacency", "not-graph6!"}).code, 2);
  EXPECT_EQ(run({"ideals", "-m", "bogus", "Dt_"}).code, 2);
  EXPECT_EQ(run({"ideals", "-m", "adjacency", "-r", "ZX", "--family", "path:7"}).code, 3);
  EXPECT_EQ(run({"ideals", "-m", "adjacency", "-r", "ZX", "--override-guard", "--family", "path:7"}).code, 0);
  EXPECT_EQ(run({"ideals", "-m", "distance", "H?????~"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DeterministicOutput) {
  auto a = run({"--workers", "1", "survey", "--n", "6", "--format", "json", "-m", "adjacency"});
  auto b = run({"--workers", "3", "survey", "--n", "6", "--format", "json", "-m", "adjacency"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}
