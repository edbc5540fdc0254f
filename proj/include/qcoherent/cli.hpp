#pragma once

// Command line front end: verify, eval, list-suites.

#include "qcoherent/catalog.hpp"
#include "qcoherent/parser.hpp"

#include <CLI11.hpp>
#include <gmpxx.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <regex>
#include <string>
#include <vector>

namespace qcs::cli {

using suites::UsageError;

/// "7/10", "0.7", "1e-1" -> exact rational.
inline mpq_class parse_rational(const std::string& text) {
  static const std::regex frac(R"(\s*([+-]?\d+)\s*/\s*(\d+)\s*)");
  static const std::regex dec(R"(\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");
  std::smatch m;
  if (std::regex_match(text, m, frac)) {
    mpz_class d(m[2].str(), 10);
    if (d == 0) throw UsageError("zero denominator in '" + text + "'");
    mpq_class v(mpz_class(m[1].str(), 10), d);
    v.canonicalize();
    return v;
  }
  if (std::regex_match(text, m, dec) && (m[2].length() > 0 || m[3].length() > 0)) {
    std::string digits = m[2].str() + m[3].str();
    mpz_class num(digits.empty() ? "0" : digits, 10), den = 1;
    long shift = -static_cast<long>(m[3].length());
    if (m[4].matched) shift += std::stol(m[4].str());
    mpz_class ten = 10, p;
    mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::labs(shift)));
    if (shift >= 0) num *= p;
    else den = p;
    if (m[1].str() == "-") num = -num;
    mpq_class v(num, den);
    v.canonicalize();
    return v;
  }
  throw UsageError("not a number: '" + text + "'");
}

/// Spin as "3", "1/2" or "2.5"; returns 2j.
inline int parse_spin(const std::string& text) {
  mpq_class j = parse_rational(text);
  mpq_class twice = 2 * j;
  twice.canonicalize();
  if (twice.get_den() != 1 || twice < 0) throw UsageError("max-spin must be a non-negative half-integer: '" + text + "'");
  if (twice > 200) throw UsageError("max-spin too large: '" + text + "'");
  return static_cast<int>(twice.get_num().get_si());
}

inline std::string render(const std::vector<report::CaseReport>& rs, const report::Summary& s, const std::string& format) {
  if (format == "json") return report::to_json(rs, s).dump(2) + "\n";
  if (format == "tsv") return report::to_tsv(rs, s);
  return report::to_text(rs, s);
}

inline void write_output(const std::string& path, const std::string& body, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << body;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write output file: " + path);
  f << body;
  if (!f) throw UsageError("cannot write output file: " + path);
}

/// Exit status: 0 all pass, 1 any failure, 2 usage error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and sampled verification of SU_q(2) coherent-state identities"};
  app.require_subcommand(1);

  suites::SuiteConfig cfg;
  std::string spin = "3", q = "7/10", out_path, format = "text";
  std::vector<std::string> names;

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", names, "suite names, or 'all' (repeatable, comma separated)")->delimiter(',');
  verify->add_option("--max-spin", spin, "largest spin j, e.g. 3, 1/2, 2.5")->capture_default_str();
  verify->add_option("--q", q, "numeric q in (0,1), rational or decimal")->capture_default_str();
  verify->add_option("--tol", cfg.tol, "numeric tolerance")->capture_default_str();
  verify->add_option("--trunc", cfg.trunc, "series and degree bound")->capture_default_str();
  verify->add_option("--w", cfg.w, "contraction parameter w")->capture_default_str();
  verify->add_option("--p", cfg.p, "H_q(1) coherent-state parameter p")->capture_default_str();
  verify->add_option("--fock-trunc", cfg.fock_trunc, "Fock space truncation")->capture_default_str();
  verify->add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "seed for random property checks")->capture_default_str();
  verify->add_option("--out", out_path, "report file (default stdout)");
  verify->add_option("--format", format, "json, tsv or text")->check(CLI::IsMember({"json", "tsv", "text"}))->capture_default_str();

  std::string expression, mode = "exact", eval_q = "7/10";
  double eval_tol = 1e-10;
  auto* eval = app.add_subcommand("eval", "evaluate an expression in x, y, E, Z, s, q with star(...) and haar(...)");
  eval->add_option("expression", expression, "expression, e.g. \"haar(Z)\"")->required();
  eval->add_option("--mode", mode, "exact or numeric")->check(CLI::IsMember({"exact", "numeric"}))->capture_default_str();
  eval->add_option("--q", eval_q, "numeric q in (0,1)")->capture_default_str();
  eval->add_option("--tol", eval_tol, "numeric tolerance")->capture_default_str();

  std::string list_format = "text";
  auto* list = app.add_subcommand("list-suites", "list suite names");
  list->add_option("--format", list_format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*list) {
      if (list_format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& s : suites::registry()) j.push_back({{"name", s.name}, {"module", s.module}, {"description", s.description}});
        out << j.dump(2) << "\n";
      } else {
        for (const auto& s : suites::registry()) out << s.name << "\t" << s.module << "\t" << s.description << "\n";
      }
      return 0;
    }

    if (*eval) {
      NumericConfig nc;
      nc.q_value = parse_rational(eval_q).get_d();
      nc.tolerance = eval_tol;
      if (!(nc.q_value > 0 && nc.q_value < 1)) throw UsageError("q must lie strictly between 0 and 1");
      try {
        out << expr::evaluate(expression, mode == "numeric" ? expr::Mode::numeric : expr::Mode::exact, nc) << "\n";
      } catch (const expr::ParseError& e) {
        err << expression << "\n" << std::string(e.position(), ' ') << "^\n" << e.what() << "\n";
        return 2;
      }
      return 0;
    }

    cfg.max_twoj = parse_spin(spin);
    cfg.q = parse_rational(q);
    if (!names.empty()) cfg.suites = names;
    const auto cases = suites::collect(cfg);
    const auto t0 = std::chrono::steady_clock::now();
    const auto reports = suites::run_cases(cases, cfg.jobs);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const auto summary = report::summarize(reports, ms);
    write_output(out_path, render(reports, summary, format), out);
    return summary.failed == 0 ? 0 : 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qcs::cli
