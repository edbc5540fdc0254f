#pragma once

// Polynomials over Q(s): ScalarPoly in a generic indeterminate, and
// LambdaPoly in the formal symbol Lambda = ln q.

#include "qcoherent/scalar.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace qcs {

class ScalarPoly {
 public:
  ScalarPoly() = default;
  ScalarPoly(Scalar c) {  // NOLINT
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  explicit ScalarPoly(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }
  static ScalarPoly monomial(Scalar c, int degree) {
    std::vector<Scalar> v(static_cast<std::size_t>(degree + 1));
    v.back() = std::move(c);
    return ScalarPoly(std::move(v));
  }
  static ScalarPoly variable() { return monomial(Scalar(1), 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  Scalar operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  friend ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b) {
    std::vector<Scalar> r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b.c_[i];
    return ScalarPoly(std::move(r));
  }
  ScalarPoly operator-() const {
    ScalarPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b) { return a + (-b); }
  friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
    if (a.is_zero() || b.is_zero()) return ScalarPoly();
    std::vector<Scalar> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return ScalarPoly(std::move(r));
  }
  friend ScalarPoly operator*(const ScalarPoly& a, const Scalar& k) {
    if (k.is_zero()) return ScalarPoly();
    ScalarPoly r = a;
    for (auto& c : r.c_) c *= k;
    return r;
  }
  ScalarPoly& operator+=(const ScalarPoly& b) { return *this = *this + b; }
  ScalarPoly& operator*=(const ScalarPoly& b) { return *this = *this * b; }
  friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) { return a.c_ == b.c_; }

  ScalarPoly pow(int n) const {
    ScalarPoly r(Scalar(1));
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
  }

  Scalar eval(const Scalar& x) const {
    Scalar r;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }
  double eval(double s, double x) const {
    double r = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i].eval(s);
    return r;
  }

  /// p(c * X).
  ScalarPoly scaled(const Scalar& c) const {
    ScalarPoly r = *this;
    Scalar f(1);
    for (auto& x : r.c_) {
      x *= f;
      f *= c;
    }
    r.trim();
    return r;
  }

  /// Divide by (1 + g X) if it is a factor.
  bool try_divide_linear(const Scalar& g, ScalarPoly& quotient) const {
    if (is_zero()) {
      quotient = ScalarPoly();
      return true;
    }
    if (degree() < 1) return false;
    // Synthetic division from the top: p = (1 + gX) Q.
    std::vector<Scalar> q(static_cast<std::size_t>(degree()));
    std::vector<Scalar> rem = c_;
    for (int i = degree(); i >= 1; --i) {
      Scalar qi = rem[static_cast<std::size_t>(i)] / g;
      q[static_cast<std::size_t>(i - 1)] = qi;
      rem[static_cast<std::size_t>(i)] = Scalar();
      rem[static_cast<std::size_t>(i - 1)] -= qi;
    }
    if (!rem[0].is_zero()) return false;
    quotient = ScalarPoly(std::move(q));
    return true;
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      std::string cs = c_[i].str();
      if (i == 0) {
        s += cs;
      } else {
        if (!c_[i].is_one()) s += "(" + cs + ")*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

/// Polynomial in Lambda = ln q, evaluated with Lambda = 2 ln s.
class LambdaPoly : public ScalarPoly {
 public:
  using ScalarPoly::ScalarPoly;
  LambdaPoly(ScalarPoly p) : ScalarPoly(std::move(p)) {}  // NOLINT
  static LambdaPoly lambda() { return LambdaPoly(ScalarPoly::variable()); }
  double eval_numeric(double s) const { return ScalarPoly::eval(s, 2.0 * std::log(s)); }
  std::string str() const { return ScalarPoly::str("L"); }
};

}  // namespace qcs
