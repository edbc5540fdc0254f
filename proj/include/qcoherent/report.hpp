#pragma once

// Case reports and their JSON / TSV / text renderings.

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcs::report {

enum class Status { pass, fail, skipped };

inline std::string to_string(Status s) { return s == Status::pass ? "pass" : s == Status::fail ? "fail" : "skipped"; }

inline Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "skipped") return Status::skipped;
  throw std::invalid_argument("unknown status: " + s);
}

/// Exact cases carry a zero flag and, when nonzero, the printed residual.
/// Numeric cases carry a magnitude and the threshold it was held to.
struct Residual {
  bool exact = true;
  bool zero = true;
  std::string form;
  double magnitude = 0.0;
  double threshold = 0.0;

  bool passes() const { return exact ? zero : magnitude <= threshold; }
  friend bool operator==(const Residual&, const Residual&) = default;
};

struct CaseReport {
  std::string suite, id, anchor;
  Status status = Status::pass;
  Residual residual;
  double elapsed_ms = 0.0;
  std::string note;
};

struct Summary {
  int total = 0, passed = 0, failed = 0, skipped = 0;
  double elapsed_ms = 0.0;
};

inline Summary summarize(const std::vector<CaseReport>& rs, double elapsed_ms) {
  Summary s;
  s.elapsed_ms = elapsed_ms;
  for (const auto& r : rs) {
    ++s.total;
    if (r.status == Status::pass) ++s.passed;
    if (r.status == Status::fail) ++s.failed;
    if (r.status == Status::skipped) ++s.skipped;
  }
  return s;
}

using nlohmann::json;

inline json to_json(const CaseReport& r) {
  json res;
  if (r.residual.exact) {
    res = {{"kind", "exact"}, {"zero", r.residual.zero}};
    if (!r.residual.zero) res["form"] = r.residual.form;
  } else {
    res = {{"kind", "numeric"}, {"magnitude", r.residual.magnitude}, {"threshold", r.residual.threshold}};
  }
  json j = {{"suite", r.suite}, {"id", r.id}, {"anchor", r.anchor}, {"status", to_string(r.status)}, {"residual", res}, {"elapsed_ms", r.elapsed_ms}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline CaseReport case_from_json(const json& j) {
  CaseReport r;
  r.suite = j.at("suite").get<std::string>();
  r.id = j.at("id").get<std::string>();
  r.anchor = j.at("anchor").get<std::string>();
  r.status = status_from_string(j.at("status").get<std::string>());
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  const json& res = j.at("residual");
  r.residual.exact = res.at("kind").get<std::string>() == "exact";
  if (r.residual.exact) {
    r.residual.zero = res.at("zero").get<bool>();
    if (res.contains("form")) r.residual.form = res.at("form").get<std::string>();
  } else {
    r.residual.magnitude = res.at("magnitude").get<double>();
    r.residual.threshold = res.at("threshold").get<double>();
  }
  if (j.contains("note")) r.note = j.at("note").get<std::string>();
  return r;
}

inline json to_json(const std::vector<CaseReport>& rs, const Summary& s) {
  json cases = json::array();
  for (const auto& r : rs) cases.push_back(to_json(r));
  return {{"summary", {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}, {"skipped", s.skipped}, {"elapsed_ms", s.elapsed_ms}}},
          {"cases", cases}};
}

inline std::pair<std::vector<CaseReport>, Summary> from_json(const json& j) {
  std::vector<CaseReport> rs;
  for (const auto& c : j.at("cases")) rs.push_back(case_from_json(c));
  const json& sj = j.at("summary");
  Summary s;
  s.total = sj.at("total").get<int>();
  s.passed = sj.at("passed").get<int>();
  s.failed = sj.at("failed").get<int>();
  s.skipped = sj.value("skipped", 0);
  s.elapsed_ms = sj.at("elapsed_ms").get<double>();
  return {rs, s};
}

inline std::string residual_text(const Residual& r) {
  if (r.exact) return r.zero ? "0" : r.form;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e (<= %.1e)", r.magnitude, r.threshold);
  return buf;
}

inline std::string tsv_field(std::string s) {
  for (char& c : s)
    if (c == '\t' || c == '\n') c = ' ';
  return s;
}

inline std::string to_tsv(const std::vector<CaseReport>& rs, const Summary& s) {
  std::ostringstream os;
  os << "suite\tid\tanchor\tstatus\tresidual\telapsed_ms\tnote\n";
  for (const auto& r : rs)
    os << tsv_field(r.suite) << '\t' << tsv_field(r.id) << '\t' << tsv_field(r.anchor) << '\t' << to_string(r.status) << '\t'
       << tsv_field(residual_text(r.residual)) << '\t' << r.elapsed_ms << '\t' << tsv_field(r.note) << '\n';
  os << "# total=" << s.total << " passed=" << s.passed << " failed=" << s.failed << " elapsed_ms=" << s.elapsed_ms << '\n';
  return os.str();
}

inline std::string to_text(const std::vector<CaseReport>& rs, const Summary& s) {
  std::ostringstream os;
  for (const auto& r : rs) {
    os << (r.status == Status::pass ? "PASS " : r.status == Status::fail ? "FAIL " : "SKIP ") << r.suite << " / " << r.id;
    if (!r.residual.exact) os << "  residual " << residual_text(r.residual);
    if (r.status == Status::fail && r.residual.exact) os << "\n    residual: " << r.residual.form;
    if (!r.note.empty()) os << "\n    note: " << r.note;
    os << '\n';
  }
  os << s.passed << "/" << s.total << " passed, " << s.failed << " failed";
  if (s.skipped) os << ", " << s.skipped << " skipped";
  os << " in " << static_cast<long>(s.elapsed_ms) << " ms\n";
  return os.str();
}

}  // namespace qcs::report
