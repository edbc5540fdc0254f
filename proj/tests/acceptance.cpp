// Acceptance run: one PASS/FAIL line per criterion.
//   acceptance        all twelve criteria
//   acceptance N      criterion N only

#include "qcoherent/catalog.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

using namespace qcs;
using namespace qcs::suites;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> suites;
  double time_limit_ms = 0;  // 0: none
  void (*tune)(SuiteConfig&) = nullptr;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> c = {
      {1, "resolution of unity, exact, j = 1/2 .. 3, under 60 s", {"resolution"}, 60000},
      {2, "Haar functional closed form on zeta^n, n <= 20, against the q-integral", {"haar"}},
      {3, "coherent-state unit norm for j <= 3; 1phi1 product at q = 0.5, 0.7, 0.9", {"cs-norm", "norm-series"}},
      {4, "star identities on x, y, E, zeta and the embedded generators", {"star-identities", "slq2-relations"}},
      {5, "finite sum identities for 0 <= n <= m <= 12", {"sum-identities"}},
      {6, "q-sphere relations, star map, zeta-xx, expectations, weight zero", {"sphere-relations", "inf-char"}},
      {7, "differential calculus: [x, omega] = 0, x-dx axioms, d(x* x)^n, dx dx*", {"omega-calculus", "complex-calculus"}},
      {8, "polynomial realization: orthonormality, actions, hermiticity", {"bargmann"}},
      {9, "generator actions, annihilator and Gamma on the coherent state", {"operator-actions"}},
      {10,
       "contraction rate at w = 0.5; H_q(1) Hopf axioms and T* T = 1; Fock resolution at N = 40",
       {"contraction-rate", "h1-hopf", "h1-tmatrix", "h1-coherent"},
       0,
       [](SuiteConfig& c) {
         c.w = 0.5;
         c.fock_trunc = 40;
       }},
      {11, "property checks with seed 0 and Haar positivity at q = 0.7", {"properties", "haar-positivity"}, 0, [](SuiteConfig& c) {
         c.seed = 0;
         c.q = mpq_class(7, 10);
       }},
      {12, "q -> 1: fundamental T-matrix and Podles relations within 1e-3", {"q-limit"}},
  };
  return c;
}

bool run_criterion(const Criterion& k) {
  SuiteConfig cfg;
  cfg.max_twoj = 6;
  cfg.suites = k.suites;
  if (k.tune) k.tune(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = run_cases(collect(cfg), 1);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  const auto s = report::summarize(reports, ms);
  bool ok = s.failed == 0 && s.total > 0;
  std::string extra;
  if (k.time_limit_ms > 0 && ms > k.time_limit_ms) {
    ok = false;
    extra = " (time limit exceeded)";
  }
  std::printf("criterion %2d: %s  %s  [%d/%d cases, %.0f ms]%s\n", k.number, ok ? "PASS" : "FAIL", k.title.c_str(), s.passed, s.total, ms, extra.c_str());
  for (const auto& r : reports) {
    if (r.status == report::Status::pass) continue;
    std::printf("    %s / %s: %s\n", r.suite.c_str(), r.id.c_str(), report::residual_text(r.residual).c_str());
    if (!r.note.empty()) std::printf("      %s\n", r.note.c_str());
  }
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 2) {
    std::cerr << "usage: acceptance [criterion]\n";
    return 2;
  }
  int only = 0;
  if (argc == 2) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > static_cast<int>(criteria().size())) {
      std::cerr << "criterion must be 1.." << criteria().size() << "\n";
      return 2;
    }
  }
  int failed = 0;
  for (const auto& k : criteria())
    if (only == 0 || k.number == only) failed += run_criterion(k) ? 0 : 1;
  if (only == 0) std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria().size()) - failed, criteria().size());
  return failed == 0 ? 0 : 1;
}
