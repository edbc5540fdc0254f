#pragma once

// Suite registry and runner: every verification is a named case that yields an
// exact residual or a numeric magnitude; cases run on a small thread pool and
// are reported in registration order.

#include "qcoherent/qanalysis.hpp"
#include "qcoherent/report.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace qcs::suites {

using report::CaseReport;
using report::Residual;
using report::Status;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SuiteConfig {
  std::vector<std::string> suites{"all"};
  int max_twoj = 6;
  mpq_class q{7, 10};
  double tol = 1e-10;
  int trunc = 8;
  double w = 0.5;
  double p = 1.0;
  int fock_trunc = 40;
  int jobs = 1;
  unsigned seed = 0;

  double qd() const { return q.get_d(); }

  NumericConfig numeric() const {
    NumericConfig c;
    c.q_value = qd();
    c.tolerance = tol;
    return c;
  }

  void validate() const {
    if (max_twoj < 0) throw UsageError("max-spin must be non-negative");
    if (!(q > 0 && q < 1)) throw UsageError("q must lie strictly between 0 and 1");
    if (!(tol > 0)) throw UsageError("tolerance must be positive");
    if (trunc <= 0) throw UsageError("trunc must be positive");
    if (!(w > 0)) throw UsageError("w must be positive");
    if (!(p > 0)) throw UsageError("p must be positive");
    if (fock_trunc <= 0) throw UsageError("fock-trunc must be positive");
    if (jobs <= 0) throw UsageError("jobs must be positive");
  }
};

struct Outcome {
  Residual residual;
  std::string note;
};

template <class T>
Outcome exact(const T& residual, std::string note = {}) {
  Outcome o;
  o.residual.exact = true;
  o.residual.zero = residual.is_zero();
  if (!o.residual.zero) o.residual.form = residual.str();
  o.note = std::move(note);
  return o;
}

/// Exact boolean check; `form` describes the mismatch when it fails.
inline Outcome exact_flag(bool ok, const std::string& form = "nonzero", std::string note = {}) {
  Outcome o;
  o.residual.zero = ok;
  if (!ok) o.residual.form = form;
  o.note = std::move(note);
  return o;
}

/// Collects several exact residuals; the first nonzero one is reported.
class ExactCollector {
 public:
  template <class T>
  void add(const std::string& label, const T& r) {
    if (!failed_.empty()) return;
    if (!r.is_zero()) failed_ = label + ": " + r.str();
  }
  void flag(const std::string& label, bool ok, const std::string& detail = "nonzero") {
    if (failed_.empty() && !ok) failed_ = label + ": " + detail;
  }
  Outcome outcome(std::string note = {}) const { return exact_flag(failed_.empty(), failed_, std::move(note)); }

 private:
  std::string failed_;
};

inline Outcome numeric(double magnitude, double threshold, std::string note = {}) {
  Outcome o;
  o.residual.exact = false;
  o.residual.magnitude = magnitude;
  o.residual.threshold = threshold;
  o.note = std::move(note);
  return o;
}

struct Case {
  std::string suite, id, anchor;
  std::function<Outcome()> run;
};

/// Value computed once, on first use, and shared by several cases.
template <class T>
class Shared {
 public:
  explicit Shared(std::function<T()> make) : state_(std::make_shared<State>(std::move(make))) {}
  const T& get() const {
    std::call_once(state_->once, [this] { state_->value.emplace(state_->make()); });
    return *state_->value;
  }

 private:
  struct State {
    explicit State(std::function<T()> m) : make(std::move(m)) {}
    std::function<T()> make;
    std::once_flag once;
    std::optional<T> value;
  };
  std::shared_ptr<State> state_;
};

inline std::string twoj_label(int twoj) { return twoj % 2 ? std::to_string(twoj) + "/2" : std::to_string(twoj / 2); }

struct SuiteInfo {
  std::string name, module, description;
  std::function<std::vector<Case>(const SuiteConfig&)> build;
};

inline CaseReport run_case(const Case& c) {
  CaseReport r;
  r.suite = c.suite;
  r.id = c.id;
  r.anchor = c.anchor;
  auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = c.run();
    r.residual = o.residual;
    r.note = o.note;
    r.status = o.residual.passes() ? Status::pass : Status::fail;
  } catch (const std::exception& e) {
    r.status = Status::fail;
    r.residual.zero = false;
    r.residual.form = std::string("exception: ") + e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// Runs cases on `jobs` workers; results keep the input order.
inline std::vector<CaseReport> run_cases(const std::vector<Case>& cases, int jobs) {
  std::vector<CaseReport> out(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) out[i] = run_case(cases[i]);
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(cases.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace qcs::suites
