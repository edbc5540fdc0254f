#include "qcoherent/catalog.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace qcs;
using namespace qcs::suites;

namespace {

SuiteConfig small() {
  SuiteConfig c;
  c.max_twoj = 2;
  return c;
}

}  // namespace

TEST(Catalog, NamesAreUniqueAndBuild) {
  std::set<std::string> names;
  for (const auto& s : registry()) {
    EXPECT_TRUE(names.insert(s.name).second) << s.name;
    auto cs = s.build(small());
    EXPECT_FALSE(cs.empty()) << s.name;
    for (const auto& c : cs) EXPECT_EQ(c.suite, s.name);
  }
}

TEST(Catalog, UnknownSuiteIsUsageError) {
  SuiteConfig c = small();
  c.suites = {"no-such-suite"};
  EXPECT_THROW(collect(c), UsageError);
}

TEST(Catalog, InvalidConfigIsUsageError) {
  SuiteConfig c = small();
  c.q = mpq_class(3, 2);
  EXPECT_THROW(collect(c), UsageError);
  c = small();
  c.jobs = 0;
  EXPECT_THROW(collect(c), UsageError);
}

TEST(Catalog, DuplicatesCollapse) {
  SuiteConfig c = small();
  c.suites = {"cs-norm", "cs-norm"};
  EXPECT_EQ(collect(c).size(), 3u);
}

TEST(Runner, ParallelMatchesSerial) {
  SuiteConfig c = small();
  c.suites = {"q-numbers", "rep-relations", "cs-norm", "h1-tmatrix"};
  auto cases = collect(c);
  auto a = run_cases(cases, 1), b = run_cases(cases, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].id, b[i].id);
    EXPECT_EQ(a[i].status, b[i].status);
    EXPECT_EQ(a[i].residual, b[i].residual);
  }
}

TEST(Runner, ExceptionIsFailure) {
  Case bad{"x", "throws", "", []() -> Outcome { throw std::runtime_error("boom"); }};
  auto r = run_case(bad);
  EXPECT_EQ(r.status, Status::fail);
  EXPECT_NE(r.residual.form.find("boom"), std::string::npos);
}

TEST(Report, JsonRoundTrip) {
  SuiteConfig c = small();
  c.suites = {"rep-relations", "h1-coherent"};
  auto rs = run_cases(collect(c), 1);
  rs.push_back(CaseReport{"s", "i", "a", Status::fail, Residual{true, false, "q - 1", 0, 0}, 1.5, "note"});
  auto s = report::summarize(rs, 12.0);
  auto [back, s2] = report::from_json(nlohmann::json::parse(report::to_json(rs, s).dump()));
  ASSERT_EQ(back.size(), rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    EXPECT_EQ(back[i].id, rs[i].id);
    EXPECT_EQ(back[i].status, rs[i].status);
    EXPECT_EQ(back[i].residual, rs[i].residual);
    EXPECT_EQ(back[i].note, rs[i].note);
  }
  EXPECT_EQ(s2.total, s.total);
  EXPECT_EQ(s2.failed, 1);
}

class SuitePasses : public ::testing::TestWithParam<std::string> {};

TEST_P(SuitePasses, AllCasesPass) {
  SuiteConfig c;
  c.suites = {GetParam()};
  for (const auto& r : run_cases(collect(c), 1))
    EXPECT_EQ(r.status, Status::pass) << r.id << ": " << report::residual_text(r.residual) << " " << r.note;
}

INSTANTIATE_TEST_SUITE_P(Catalog, SuitePasses,
                         ::testing::Values("q-numbers", "q-shifted", "hypergeometric", "jackson", "sum-identities", "norm-series", "slq2-relations",
                                           "star-identities", "haar", "haar-positivity", "hopf-structure", "duality", "properties", "rep-relations",
                                           "t-matrix", "cs-norm", "resolution", "overlap", "operator-actions", "bargmann", "sphere-relations", "inf-char",
                                           "omega-calculus", "complex-calculus", "q-limit", "h1-hopf", "h1-tmatrix", "h1-coherent"),
                         [](const auto& info) {
                           std::string n = info.param;
                           for (char& ch : n)
                             if (ch == '-') ch = '_';
                           return n;
                         });
