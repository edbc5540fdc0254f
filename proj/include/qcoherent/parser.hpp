#pragma once

// Plain-text expressions over the function algebra:
//   x y E Z s q, integers, decimals, + - * / ^, juxtaposition as product,
//   star(f), haar(f).
// Printed normal forms parse back to the same element.

#include "qcoherent/haar.hpp"

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace qcs::expr {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t pos, const std::string& msg)
      : std::invalid_argument("parse error at column " + std::to_string(pos + 1) + ": " + msg), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

enum class Mode { exact, numeric };

/// Exact element, or a real number once a numeric Haar value has entered.
struct Value {
  AlgElement alg;
  std::optional<double> real;

  bool is_scalar() const {
    if (real) return true;
    if (alg.is_zero()) return true;
    if (alg.size() != 1) return false;
    const auto& [mono, r] = *alg.terms().begin();
    return mono == Mono{} && r.is_constant();
  }
  Scalar scalar() const { return alg.is_zero() ? Scalar() : alg.zeta_part().constant_value(); }
};

inline AlgElement invert(const AlgElement& f) {
  if (f.size() == 1) {
    const auto& [mono, r] = *f.terms().begin();
    if (mono.k == 0 && mono.m == 0) return AlgElement::E(-mono.n) * AlgElement(r.inverse());
  }
  throw std::domain_error("element is not invertible: " + f.str());
}

class Parser {
 public:
  Parser(std::string text, Mode mode, NumericConfig cfg) : src_(normalize(std::move(text))), mode_(mode), cfg_(cfg) {}

  Value parse() {
    Value v = sum();
    skip();
    if (i_ < src_.size()) fail("unexpected '" + std::string(1, src_[i_]) + "'");
    return v;
  }

 private:
  static std::string normalize(std::string s) {
    auto replace_all = [&s](const std::string& from, const std::string& to) {
      for (std::size_t p = s.find(from); p != std::string::npos; p = s.find(from, p + to.size())) s.replace(p, from.size(), to);
    };
    replace_all("\xE2\x88\x92", "-");  // U+2212
    replace_all("\xC2\xB7", "*");      // U+00B7
    return s;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(i_, msg); }

  void skip() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < src_.size() && src_[i_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool starts_primary() {
    skip();
    if (i_ >= src_.size()) return false;
    char c = src_[i_];
    return std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == '.';
  }

  double to_real(const Value& v, std::size_t at) const {
    if (v.real) return *v.real;
    if (!v.is_scalar()) throw ParseError(at, "numeric value combined with a non-scalar element");
    return v.scalar().eval(cfg_.s_value());
  }

  template <class AlgOp, class RealOp>
  Value combine(const Value& a, const Value& b, std::size_t at, AlgOp alg, RealOp real) const {
    if (!a.real && !b.real) return Value{alg(a.alg, b.alg), std::nullopt};
    return Value{AlgElement(), real(to_real(a, at), to_real(b, at))};
  }

  Value sum() {
    Value v = product();
    for (;;) {
      std::size_t at = (skip(), i_);
      if (accept('+')) {
        v = combine(v, product(), at, [](const AlgElement& a, const AlgElement& b) { return a + b; }, [](double a, double b) { return a + b; });
      } else if (accept('-')) {
        v = combine(v, product(), at, [](const AlgElement& a, const AlgElement& b) { return a - b; }, [](double a, double b) { return a - b; });
      } else {
        return v;
      }
    }
  }

  Value product() {
    Value v = unary();
    for (;;) {
      std::size_t at = (skip(), i_);
      if (accept('*') || starts_primary()) {
        v = combine(v, unary(), at, [](const AlgElement& a, const AlgElement& b) { return a * b; }, [](double a, double b) { return a * b; });
      } else if (accept('/')) {
        Value d = unary();
        try {
          v = combine(v, d, at, [](const AlgElement& a, const AlgElement& b) { return a * invert(b); }, [](double a, double b) { return a / b; });
        } catch (const std::domain_error& e) {
          throw ParseError(at, e.what());
        }
      } else {
        return v;
      }
    }
  }

  Value unary() {
    std::size_t at = (skip(), i_);
    if (accept('-')) {
      Value v = unary();
      return combine(Value{AlgElement(-1), std::nullopt}, v, at, [](const AlgElement& a, const AlgElement& b) { return a * b; },
                     [](double a, double b) { return a * b; });
    }
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = primary();
    std::size_t at = (skip(), i_);
    if (!accept('^')) return base;
    skip();
    int sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    skip();
    std::size_t start = i_;
    while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
    if (start == i_) fail("expected an integer exponent");
    const int n = sign * std::stoi(src_.substr(start, i_ - start));
    if (base.real) return Value{AlgElement(), std::pow(*base.real, n)};
    try {
      return Value{n >= 0 ? base.alg.pow(n) : invert(base.alg).pow(-n), std::nullopt};
    } catch (const std::domain_error& e) {
      throw ParseError(at, e.what());
    }
  }

  Value primary() {
    skip();
    if (i_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[i_];
    if (accept('(')) {
      Value v = sum();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");
    const std::size_t start = i_;
    while (i_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[i_]))) ++i_;
    const std::string id = src_.substr(start, i_ - start);
    if (id == "x") return Value{AlgElement::x(), std::nullopt};
    if (id == "y") return Value{AlgElement::y(), std::nullopt};
    if (id == "E") return Value{AlgElement::E(), std::nullopt};
    if (id == "Z") return Value{AlgElement::Z(), std::nullopt};
    if (id == "s") return Value{AlgElement(Scalar::s_pow(1)), std::nullopt};
    if (id == "q") return Value{AlgElement(Scalar::q()), std::nullopt};
    if (id == "star" || id == "haar") {
      expect('(');
      const std::size_t arg_at = (skip(), i_);
      Value v = sum();
      expect(')');
      if (v.real) throw ParseError(arg_at, id + " of a numeric value");
      return id == "star" ? Value{v.alg.star(), std::nullopt} : haar_of(v.alg, arg_at);
    }
    i_ = start;
    fail("unknown identifier '" + id + "'");
  }

  Value haar_of(const AlgElement& f, std::size_t at) const {
    try {
      if (mode_ == Mode::exact) return Value{AlgElement(haar(f)), std::nullopt};
      HaarResult r = haar_eval(f, cfg_);
      if (r.exact) return Value{AlgElement(*r.exact), std::nullopt};
      return Value{AlgElement(), r.value};
    } catch (const std::domain_error& e) {
      throw ParseError(at, e.what());
    }
  }

  Value number() {
    const std::size_t start = i_;
    while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
    std::string digits = src_.substr(start, i_ - start), frac;
    if (i_ < src_.size() && src_[i_] == '.') {
      ++i_;
      const std::size_t f0 = i_;
      while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
      frac = src_.substr(f0, i_ - f0);
    }
    if (digits.empty() && frac.empty()) {
      i_ = start;
      fail("malformed number");
    }
    mpz_class den = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
    mpq_class v(mpz_class((digits.empty() ? "0" : digits) + frac, 10), den);
    v.canonicalize();
    return Value{AlgElement(Scalar(v)), std::nullopt};
  }

  std::string src_;
  std::size_t i_ = 0;
  Mode mode_;
  NumericConfig cfg_;
};

inline Value parse(const std::string& text, Mode mode = Mode::exact, NumericConfig cfg = {}) { return Parser(text, mode, cfg).parse(); }

/// Normal form (exact mode), or a number when the value is scalar in numeric mode.
inline std::string evaluate(const std::string& text, Mode mode = Mode::exact, NumericConfig cfg = {}) {
  Value v = parse(text, mode, cfg);
  if (mode == Mode::exact) return v.alg.is_zero() ? "0" : v.is_scalar() ? v.scalar().str() : v.alg.str();
  if (!v.is_scalar()) return v.alg.str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v.real ? *v.real : v.scalar().eval(cfg.s_value()));
  return buf;
}

}  // namespace qcs::expr
