#include "qcoherent/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace qcs;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qcoherent");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ParseRational) {
  EXPECT_EQ(cli::parse_rational("7/10"), mpq_class(7, 10));
  EXPECT_EQ(cli::parse_rational("0.7"), mpq_class(7, 10));
  EXPECT_EQ(cli::parse_rational("-2.5e-1"), mpq_class(-1, 4));
  EXPECT_EQ(cli::parse_rational("3"), mpq_class(3));
  EXPECT_THROW(cli::parse_rational("abc"), suites::UsageError);
  EXPECT_THROW(cli::parse_rational("1/0"), suites::UsageError);
}

TEST(Cli, ParseSpin) {
  EXPECT_EQ(cli::parse_spin("3"), 6);
  EXPECT_EQ(cli::parse_spin("1/2"), 1);
  EXPECT_EQ(cli::parse_spin("2.5"), 5);
  EXPECT_THROW(cli::parse_spin("1/3"), suites::UsageError);
  EXPECT_THROW(cli::parse_spin("-1"), suites::UsageError);
}

TEST(Cli, ResolutionAtSpinHalf) {
  Result r = run({"verify", "--suite", "resolution", "--max-spin", "1/2", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["summary"]["total"], 3);
  EXPECT_EQ(j["summary"]["passed"], 3);
  EXPECT_EQ(j["summary"]["failed"], 0);
  int diagonal = 0;
  for (const auto& c : j["cases"]) {
    EXPECT_EQ(c["residual"]["kind"], "exact");
    EXPECT_TRUE(c["residual"]["zero"].get<bool>());
    if (c["id"] == "j=1/2 (0,0)" || c["id"] == "j=1/2 (1,1)") ++diagonal;
  }
  EXPECT_EQ(diagonal, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"verify", "--q", "3/2"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"verify", "--max-spin", "1/3"}).code, 2);
  EXPECT_EQ(run({"verify", "--jobs", "0"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "q-limit", "--out", "/nonexistent-dir/x.json"}).code, 2);
}

TEST(Cli, FailureExitsOne) {
  Result r = run({"verify", "--suite", "contraction-rate", "--format", "tsv"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("\tfail\t"), std::string::npos);
}

TEST(Cli, FormatsAndOutFile) {
  const std::string path = ::testing::TempDir() + "qcoherent_report.json";
  Result r = run({"verify", "--suite", "q-limit,h1-tmatrix", "--jobs", "2", "--out", path, "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  auto [cases, summary] = report::from_json(nlohmann::json::parse(f));
  EXPECT_EQ(summary.total, static_cast<int>(cases.size()));
  EXPECT_EQ(cases.front().suite, "q-limit");
  std::remove(path.c_str());

  Result t = run({"verify", "--suite", "q-limit", "--format", "text"});
  EXPECT_NE(t.out.find("PASS q-limit"), std::string::npos);
  Result v = run({"verify", "--suite", "q-limit", "--format", "tsv"});
  EXPECT_EQ(v.out.rfind("suite\tid\tanchor\tstatus", 0), 0u);
}

TEST(Cli, Eval) {
  EXPECT_EQ(run({"eval", "haar(Z)"}).out, "(s^4)/(s^4 + 1)\n");
  EXPECT_EQ(run({"eval", "E x"}).out, "(s^-2)*x E\n");
  EXPECT_EQ(run({"eval", "star(star(x)) - x"}).out, "0\n");
  EXPECT_NEAR(std::stod(run({"eval", "haar(Z)", "--mode", "numeric", "--q", "0.7"}).out), 0.49 / 1.49, 1e-15);
  Result bad = run({"eval", "x + )"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("column 5"), std::string::npos);
}

TEST(Cli, ListSuites) {
  Result r = run({"list-suites", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.size(), suites::registry().size());
  std::set<std::string> names;
  for (const auto& s : j) names.insert(s["name"].get<std::string>());
  for (const char* required : {"rep-relations", "t-matrix", "cs-norm", "resolution", "overlap", "operator-actions", "bargmann", "sphere-relations", "inf-char",
                               "omega-calculus", "complex-calculus", "h1-hopf", "h1-tmatrix", "h1-coherent", "contraction-rate"})
    EXPECT_TRUE(names.count(required)) << required;
}

TEST(Cli, DeterministicForSeed) {
  Result a = run({"verify", "--suite", "properties", "--seed", "3", "--format", "tsv"});
  Result b = run({"verify", "--suite", "properties", "--seed", "3", "--format", "tsv", "--jobs", "3"});
  auto strip = [](const std::string& s) {
    std::istringstream in(s);
    std::string line, out;
    while (std::getline(in, line)) {
      if (line.rfind("#", 0) == 0) continue;
      std::vector<std::string> f;
      std::stringstream ls(line);
      for (std::string cell; std::getline(ls, cell, '\t');) f.push_back(cell);
      if (f.size() > 5) f[5].clear();  // elapsed
      for (const auto& c : f) out += c + "\t";
      out += "\n";
    }
    return out;
  };
  EXPECT_EQ(strip(a.out), strip(b.out));
}
