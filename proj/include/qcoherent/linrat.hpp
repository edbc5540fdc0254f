#pragma once

// Univariate rational functions p(T) / prod (1 + g_i T)^{e_i} over Q(s).
// Every denominator met by the engines is a product of such factors, and
// the set is closed under T -> a T / (1 + b T). Canonical form: distinct
// nonzero g_i, e_i > 0, and no (1 + g_i T) divides p.

#include "qcoherent/lambda_poly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace qcs {

class LinRat {
 public:
  using Den = std::map<Scalar, int>;

  LinRat() = default;
  LinRat(Scalar c) : num_(std::move(c)) {}  // NOLINT
  LinRat(int c) : num_(Scalar(c)) {}        // NOLINT
  LinRat(ScalarPoly p) : num_(std::move(p)) {}  // NOLINT
  LinRat(ScalarPoly p, Den den) : num_(std::move(p)), den_(std::move(den)) { normalize(); }

  static LinRat var() { return LinRat(ScalarPoly::variable()); }
  /// 1 + g T.
  static LinRat linear(const Scalar& g) { return LinRat(ScalarPoly(std::vector<Scalar>{Scalar(1), g})); }
  /// (1 + g T)^{-e}.
  static LinRat inv_linear(const Scalar& g, int e = 1) {
    if (g.is_zero() || e == 0) return LinRat(Scalar(1));
    if (e < 0) return linear(g).pow(-e);
    Den d;
    d[g] = e;
    LinRat r;
    r.num_ = ScalarPoly(Scalar(1));
    r.den_ = std::move(d);
    return r;
  }

  /// prod (1 + g T)^{e_common - e_have}: the factor lifting `have` to `common`.
  static ScalarPoly cofactor(const Den& common, const Den& have) { return missing(common, have); }

  const ScalarPoly& num() const { return num_; }
  const Den& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  bool is_constant() const { return den_.empty() && num_.degree() <= 0; }
  Scalar constant_value() const { return num_[0]; }

  friend LinRat operator+(const LinRat& a, const LinRat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.empty() && b.den_.empty()) return LinRat(a.num_ + b.num_);
    Den common = a.den_;
    for (const auto& [g, e] : b.den_) {
      auto it = common.find(g);
      if (it == common.end()) common[g] = e;
      else it->second = std::max(it->second, e);
    }
    LinRat r;
    r.num_ = a.num_ * missing(common, a.den_) + b.num_ * missing(common, b.den_);
    r.den_ = std::move(common);
    r.normalize();
    return r;
  }
  LinRat operator-() const {
    LinRat r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend LinRat operator-(const LinRat& a, const LinRat& b) { return a + (-b); }

  friend LinRat operator*(const LinRat& a, const LinRat& b) {
    if (a.is_zero() || b.is_zero()) return LinRat();
    if (a.den_.empty() && b.den_.empty()) return LinRat(a.num_ * b.num_);
    LinRat r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    for (const auto& [g, e] : b.den_) r.den_[g] += e;
    r.normalize();
    return r;
  }
  friend LinRat operator*(const LinRat& a, const Scalar& c) {
    if (c.is_zero()) return LinRat();
    LinRat r = a;
    r.num_ = r.num_ * c;
    return r;
  }
  friend LinRat operator*(const Scalar& c, const LinRat& a) { return a * c; }
  LinRat& operator+=(const LinRat& b) { return *this = *this + b; }
  LinRat& operator-=(const LinRat& b) { return *this = *this - b; }
  LinRat& operator*=(const LinRat& b) { return *this = *this * b; }

  friend bool operator==(const LinRat& a, const LinRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const LinRat& a, const LinRat& b) { return !(a == b); }

  LinRat pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    LinRat r(Scalar(1));
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
  }

  /// Inverse; the numerator must split into factors (1 + g T) times a constant
  /// (degree at most one is always fine).
  LinRat inverse() const {
    if (is_zero()) throw std::domain_error("LinRat: inverse of zero");
    ScalarPoly rest = num_;
    Scalar c = rest[0];
    if (c.is_zero()) throw std::domain_error("LinRat: numerator vanishes at T = 0, not invertible in this class");
    rest = rest * c.inverse();
    Den nd;
    while (rest.degree() >= 1) {
      if (rest.degree() == 1) {
        nd[rest[1]] += 1;
        rest = ScalarPoly(Scalar(1));
        break;
      }
      throw std::domain_error("LinRat: cannot invert non-split numerator");
    }
    ScalarPoly newnum(c.inverse());
    for (const auto& [g, e] : den_) newnum *= ScalarPoly(std::vector<Scalar>{Scalar(1), g}).pow(e);
    return LinRat(newnum, nd);
  }

  /// r(c T).
  LinRat scaled(const Scalar& c) const {
    if (c.is_one()) return *this;
    LinRat r;
    r.num_ = num_.scaled(c);
    for (const auto& [g, e] : den_) r.den_[g * c] += e;
    return r;
  }

  /// r(a T / (1 + b T)).
  LinRat mobius(const Scalar& a, const Scalar& b) const {
    if (b.is_zero()) return scaled(a);
    const int d = num_.degree();
    ScalarPoly onebt(std::vector<Scalar>{Scalar(1), b});
    ScalarPoly n;
    Scalar ap(1);
    for (int i = 0; i <= d; ++i) {
      if (!num_[static_cast<std::size_t>(i)].is_zero())
        n += ScalarPoly::monomial(num_[static_cast<std::size_t>(i)] * ap, i) * onebt.pow(d - i);
      ap *= a;
    }
    int net = -d;  // power of (1 + bT) still to apply
    Den nd;
    for (const auto& [g, e] : den_) {
      Scalar ng = b + g * a;
      net += e;
      if (!ng.is_zero()) nd[ng] += e;
    }
    if (net > 0) n *= onebt.pow(net);
    else if (net < 0) nd[b] += -net;
    return LinRat(n, nd);
  }

  /// Taylor coefficients at T = 0 up to and including order n.
  std::vector<Scalar> series(int n) const {
    std::vector<Scalar> out(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n && i <= num_.degree(); ++i) out[static_cast<std::size_t>(i)] = num_[static_cast<std::size_t>(i)];
    for (const auto& [g, e] : den_) {
      for (int rep = 0; rep < e; ++rep) {
        // multiply by 1/(1 + gT) = sum (-g T)^k : out[i] -= g * out[i-1] cumulatively
        for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i)] -= g * out[static_cast<std::size_t>(i - 1)];
      }
    }
    return out;
  }

  double eval(double s, double t) const {
    double v = num_.eval(s, t);
    for (const auto& [g, e] : den_) {
      double f = 1.0 + g.eval(s) * t;
      if (f == 0.0) throw std::domain_error("LinRat: pole at evaluation point");
      v /= std::pow(f, e);
    }
    return v;
  }

  Scalar eval(const Scalar& t) const {
    Scalar v = num_.eval(t);
    for (const auto& [g, e] : den_) v /= (Scalar(1) + g * t).pow(e);
    return v;
  }

  std::string str(const std::string& var = "Z") const {
    std::string s = num_.str(var);
    if (den_.empty()) return s;
    std::string d;
    for (const auto& [g, e] : den_) d += "*(1 + (" + g.str() + ")*" + var + ")^-" + std::to_string(e);
    return "(" + s + ")" + d;
  }

 private:
  static ScalarPoly missing(const Den& common, const Den& have) {
    ScalarPoly f(Scalar(1));
    for (const auto& [g, e] : common) {
      auto it = have.find(g);
      int k = e - (it == have.end() ? 0 : it->second);
      if (k > 0) f *= ScalarPoly(std::vector<Scalar>{Scalar(1), g}).pow(k);
    }
    return f;
  }

  void normalize() {
    for (auto it = den_.begin(); it != den_.end();) {
      if (it->first.is_zero() || it->second == 0) {
        it = den_.erase(it);
        continue;
      }
      if (it->second < 0) {
        num_ *= ScalarPoly(std::vector<Scalar>{Scalar(1), it->first}).pow(-it->second);
        it = den_.erase(it);
        continue;
      }
      ++it;
    }
    if (num_.is_zero()) {
      den_.clear();
      return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
      ScalarPoly q;
      while (it->second > 0 && num_.try_divide_linear(it->first, q)) {
        num_ = std::move(q);
        --it->second;
      }
      if (it->second == 0) it = den_.erase(it);
      else ++it;
    }
  }

  ScalarPoly num_;
  Den den_;
};

}  // namespace qcs
