#pragma once

// Formal square roots over Q(s). A RadicalScalar is u*sqrt(v); sums are kept
// in RadicalCombination grouped by square class, so a zero test is exact:
// square roots of pairwise non-square-related elements are linearly
// independent over Q(s).

#include "qcoherent/scalar.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcs {

/// Sample point used to fix the sign of exact square roots (q = 0.81).
inline constexpr double kSignSample = 0.9;

/// Exact square root w of v with w(kSignSample) > 0, if v is a square in Q(s).
inline std::optional<Scalar> exact_sqrt(const Scalar& v) {
  if (v.is_zero()) return Scalar();
  if (v.shift() % 2 != 0) return std::nullopt;
  auto root_of = [](const IntPoly& p) -> std::optional<IntPoly> {
    mpz_class c = p.content();
    if (p.lead() < 0) return std::nullopt;
    if (!mpz_perfect_square_p(c.get_mpz_t())) return std::nullopt;
    IntPoly prim = p;
    prim.divide_exact(c);
    IntPoly r;
    if (!IntPoly::try_sqrt(prim, r)) return std::nullopt;
    mpz_class sc;
    mpz_sqrt(sc.get_mpz_t(), c.get_mpz_t());
    r.scale(sc);
    return r;
  };
  auto n = root_of(v.num());
  if (!n) return std::nullopt;
  auto d = root_of(v.den());
  if (!d) return std::nullopt;
  Scalar w(v.shift() / 2, *n, *d);
  if (w.eval(kSignSample) < 0) w = -w;
  return w;
}

class RadicalScalar {
 public:
  RadicalScalar() : u_(), v_(1) {}
  RadicalScalar(Scalar u) : u_(std::move(u)), v_(1) {}  // NOLINT
  RadicalScalar(Scalar u, Scalar v) : u_(std::move(u)), v_(std::move(v)) { simplify(); }

  static RadicalScalar sqrt(const Scalar& v) { return RadicalScalar(Scalar(1), v); }

  const Scalar& u() const { return u_; }
  const Scalar& v() const { return v_; }
  bool is_rational() const { return v_.is_one(); }
  bool is_zero() const { return u_.is_zero(); }

  friend RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
    if (a.v_ == b.v_) return RadicalScalar(a.u_ * b.u_ * a.v_);
    return RadicalScalar(a.u_ * b.u_, a.v_ * b.v_);
  }
  friend RadicalScalar operator*(const RadicalScalar& a, const Scalar& c) {
    RadicalScalar r = a;
    r.u_ *= c;
    if (r.u_.is_zero()) r.v_ = Scalar(1);
    return r;
  }
  RadicalScalar operator-() const {
    RadicalScalar r = *this;
    r.u_ = -r.u_;
    return r;
  }

  /// Equality of u1 sqrt(v1) and u2 sqrt(v2): squares agree and signs agree.
  friend bool operator==(const RadicalScalar& a, const RadicalScalar& b) {
    if (a.u_ * a.u_ * a.v_ != b.u_ * b.u_ * b.v_) return false;
    if (a.is_zero()) return true;
    return (a.u_.eval(kSignSample) > 0) == (b.u_.eval(kSignSample) > 0);
  }

  double eval(double s) const {
    double vv = v_.eval(s);
    if (vv < 0) throw std::domain_error("RadicalScalar: negative radicand at evaluation point");
    return u_.eval(s) * std::sqrt(vv);
  }

  std::string str() const {
    if (is_rational()) return u_.str();
    return "(" + u_.str() + ")*sqrt(" + v_.str() + ")";
  }

 private:
  void simplify() {
    if (u_.is_zero() || v_.is_one()) {
      if (u_.is_zero()) v_ = Scalar(1);
      return;
    }
    if (v_.is_zero()) {
      u_ = Scalar();
      v_ = Scalar(1);
      return;
    }
    if (auto w = exact_sqrt(v_)) {
      u_ *= *w;
      v_ = Scalar(1);
    }
  }

  Scalar u_;
  Scalar v_;
};

/// Sum of terms c_i * sqrt(v_i) with coefficients in a Q(s)-module T.
template <class T>
class RadicalCombination {
 public:
  struct Term {
    Scalar radicand;
    T coeff;
  };

  RadicalCombination() = default;
  RadicalCombination(T c) { add(std::move(c), Scalar(1)); }  // NOLINT
  RadicalCombination(T c, const RadicalScalar& r) { add(c * r.u(), r.v()); }

  const std::vector<Term>& terms() const { return terms_; }

  void add(T c, const Scalar& v) {
    if (c.is_zero()) return;
    if (v.is_zero()) return;
    if (v.is_one()) return merge(std::move(c), Scalar(1), Scalar(1));
    if (auto w = exact_sqrt(v)) return merge(std::move(c), Scalar(1), *w);
    for (auto& t : terms_) {
      if (t.radicand.is_one()) continue;
      if (t.radicand == v) return merge(std::move(c), v, Scalar(1));
      if (auto w = exact_sqrt(v / t.radicand)) return merge(std::move(c), t.radicand, *w);
    }
    terms_.push_back({v, std::move(c)});
  }

  bool is_zero() const {
    for (const auto& t : terms_)
      if (!t.coeff.is_zero()) return false;
    return true;
  }

  /// Coefficient of the rational (radical-free) part.
  T rational_part() const {
    for (const auto& t : terms_)
      if (t.radicand.is_one()) return t.coeff;
    return T();
  }
  bool is_rational() const {
    for (const auto& t : terms_)
      if (!t.radicand.is_one() && !t.coeff.is_zero()) return false;
    return true;
  }

  friend RadicalCombination operator+(RadicalCombination a, const RadicalCombination& b) {
    for (const auto& t : b.terms_) a.add(t.coeff, t.radicand);
    return a;
  }
  RadicalCombination operator-() const {
    RadicalCombination r;
    for (const auto& t : terms_) r.terms_.push_back({t.radicand, -t.coeff});
    return r;
  }
  friend RadicalCombination operator-(const RadicalCombination& a, const RadicalCombination& b) { return a + (-b); }
  RadicalCombination& operator+=(const RadicalCombination& b) { return *this = *this + b; }

  friend RadicalCombination operator*(const RadicalCombination& a, const RadicalScalar& r) {
    RadicalCombination out;
    for (const auto& t : a.terms_) {
      if (t.radicand == r.v()) {
        out.add(t.coeff * (r.u() * r.v()), Scalar(1));
      } else {
        out.add(t.coeff * r.u(), t.radicand * r.v());
      }
    }
    return out;
  }
  friend RadicalCombination operator*(const RadicalScalar& r, const RadicalCombination& a) { return a * r; }
  friend RadicalCombination operator*(const RadicalCombination& a, const Scalar& c) { return a * RadicalScalar(c); }

  /// Product with an arbitrary bilinear operation on coefficients.
  template <class U, class V, class Op>
  static RadicalCombination product(const RadicalCombination<U>& a, const RadicalCombination<V>& b, Op op) {
    RadicalCombination out;
    for (const auto& ta : a.terms()) {
      for (const auto& tb : b.terms()) {
        T c = op(ta.coeff, tb.coeff);
        if (ta.radicand == tb.radicand) {
          out.add(c * ta.radicand, Scalar(1));
        } else {
          out.add(std::move(c), ta.radicand * tb.radicand);
        }
      }
    }
    return out;
  }

  /// Apply a Q(s)-linear map termwise.
  template <class Fn>
  auto map(Fn fn) const {
    using R = decltype(fn(std::declval<const T&>()));
    RadicalCombination<R> out;
    for (const auto& t : terms_) out.add(fn(t.coeff), t.radicand);
    return out;
  }

  std::string str() const {
    std::string s;
    for (const auto& t : terms_) {
      if (t.coeff.is_zero()) continue;
      if (!s.empty()) s += " + ";
      if (t.radicand.is_one()) {
        s += "(" + t.coeff.str() + ")";
      } else {
        s += "sqrt(" + t.radicand.str() + ")*(" + t.coeff.str() + ")";
      }
    }
    return s.empty() ? "0" : s;
  }

 private:
  void merge(T c, const Scalar& key, const Scalar& factor) {
    if (!factor.is_one()) c = c * factor;
    for (auto& t : terms_) {
      if (t.radicand == key) {
        t.coeff = t.coeff + c;
        return;
      }
    }
    terms_.push_back({key, std::move(c)});
  }

  std::vector<Term> terms_;
};

using RadSum = RadicalCombination<Scalar>;

template <class T>
double eval_radical_sum(const RadicalCombination<T>& r, double s, auto coeff_eval) {
  double acc = 0.0;
  for (const auto& t : r.terms()) {
    double v = t.radicand.eval(s);
    if (v < 0) throw std::domain_error("RadicalCombination: negative radicand");
    acc += coeff_eval(t.coeff) * std::sqrt(v);
  }
  return acc;
}

}  // namespace qcs
