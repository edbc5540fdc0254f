#pragma once

// Exact elements of Q(s), the coefficient field of every symbolic object.
// The deformation parameter is q = s^2, so half-integer powers of q are
// monomials. Canonical form: s^shift * num / den with num(0) != 0,
// den(0) != 0, gcd(num, den) = 1, integer contents coprime and a positive
// leading coefficient on den.

#include "qcoherent/int_poly.hpp"

#include <cmath>
#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qcs {

/// Half-integer stored as twice its value.
struct HalfInt {
  int twice = 0;

  constexpr HalfInt() = default;
  constexpr static HalfInt from_twice(int t) {
    HalfInt h;
    h.twice = t;
    return h;
  }
  constexpr static HalfInt integer(int n) { return from_twice(2 * n); }

  constexpr bool is_integer() const { return twice % 2 == 0; }
  constexpr int as_int() const { return twice / 2; }
  double value() const { return twice / 2.0; }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice + b.twice); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice - b.twice); }
  friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice); }
  friend constexpr bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) { return a.twice <=> b.twice; }

  std::string str() const {
    if (is_integer()) return std::to_string(as_int());
    return std::to_string(twice) + "/2";
  }
};

class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : num_(mpz_class(v)), den_(mpz_class(1)) {}  // NOLINT implicit on purpose
  Scalar(int v) : Scalar(static_cast<long>(v)) {}               // NOLINT
  explicit Scalar(mpq_class r) {
    r.canonicalize();
    num_ = IntPoly(r.get_num());
    den_ = IntPoly(r.get_den());
  }

  /// s^e * num / den, normalized.
  Scalar(int e, IntPoly num, IntPoly den) : shift_(e), num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static Scalar rational(long p, long q) { return Scalar(mpq_class(p, q)); }
  static Scalar s_pow(int e) {
    Scalar r(1);
    r.shift_ = e;
    return r;
  }
  static Scalar q() { return s_pow(2); }
  /// q^x for half-integer x.
  static Scalar q_pow(HalfInt x) { return s_pow(x.twice); }
  static Scalar q_pow(int n) { return s_pow(2 * n); }
  /// Laurent polynomial from coefficients c[i] multiplying s^(low + i).
  static Scalar laurent(int low, std::vector<mpz_class> c) { return Scalar(low, IntPoly(std::move(c)), IntPoly(mpz_class(1))); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return shift_ == 0 && num_.is_constant() && den_.is_constant() && num_ == den_; }
  /// True when the value is a Laurent polynomial (possibly with rational coefficients).
  bool is_laurent() const { return den_.is_constant(); }
  int shift() const { return shift_; }
  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  Scalar operator-() const {
    Scalar r = *this;
    r.num_.negate();
    return r;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int e = std::min(a.shift_, b.shift_);
    IntPoly an = a.num_.shifted_up(static_cast<std::size_t>(a.shift_ - e));
    IntPoly bn = b.num_.shifted_up(static_cast<std::size_t>(b.shift_ - e));
    Scalar r;
    r.shift_ = e;
    if (a.den_ == b.den_) {
      r.num_ = an + bn;
      r.den_ = a.den_;
    } else if (a.den_.is_constant() && b.den_.is_constant()) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), a.den_[0].get_mpz_t(), b.den_[0].get_mpz_t());
      mpz_class fa = b.den_[0] / g;
      mpz_class fb = a.den_[0] / g;
      an.scale(fa);
      bn.scale(fb);
      r.num_ = an + bn;
      r.den_ = IntPoly(mpz_class(a.den_[0] * fa));
    } else {
      IntPoly g = IntPoly::gcd(a.den_, b.den_);
      IntPoly ca = IntPoly::divide(b.den_, g);
      IntPoly cb = IntPoly::divide(a.den_, g);
      r.num_ = an * ca + bn * cb;
      r.den_ = a.den_ * ca;
    }
    r.normalize();
    return r;
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    Scalar r;
    r.shift_ = a.shift_ + b.shift_;
    if (a.den_.is_constant() && b.den_.is_constant()) {
      r.num_ = a.num_ * b.num_;
      r.den_ = IntPoly(mpz_class(a.den_[0] * b.den_[0]));
      r.normalize_content();
      return r;
    }
    IntPoly g1 = IntPoly::gcd(a.num_, b.den_);
    IntPoly g2 = IntPoly::gcd(b.num_, a.den_);
    auto cut = [](const IntPoly& p, const IntPoly& g) { return g.is_constant() ? p : IntPoly::divide(p, g); };
    r.num_ = cut(a.num_, g1) * cut(b.num_, g2);
    r.den_ = cut(a.den_, g2) * cut(b.den_, g1);
    r.normalize_content();
    return r;
  }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    Scalar r;
    r.shift_ = -shift_;
    r.num_ = den_;
    r.den_ = num_;
    r.fix_sign();
    return r;
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  Scalar pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    Scalar r(1), base = *this;
    while (n > 0) {
      if (n & 1) r *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return r;
  }

  /// Substitution s -> s^k (k may be negative), i.e. q -> q^k.
  Scalar substitute_power(int k) const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Structural total order, used only for container keys.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.shift_ != b.shift_) return a.shift_ < b.shift_;
    if (!(a.num_ == b.num_)) return a.num_ < b.num_;
    return a.den_ < b.den_;
  }

  /// Numeric value at s (so q = s^2).
  double eval(double s) const {
    if (is_zero()) return 0.0;
    double d = den_.eval(s);
    if (d == 0.0) throw std::domain_error("Scalar: pole at evaluation point");
    return std::pow(s, shift_) * num_.eval(s) / d;
  }

  std::string str() const;

 private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
    if (num_.is_zero()) {
      shift_ = 0;
      den_ = IntPoly(mpz_class(1));
      return;
    }
    std::size_t kn = num_.low_order();
    std::size_t kd = den_.low_order();
    if (kn) num_ = num_.shifted_down(kn);
    if (kd) den_ = den_.shifted_down(kd);
    shift_ += static_cast<int>(kn) - static_cast<int>(kd);
    if (!num_.is_constant() && !den_.is_constant()) {
      IntPoly g = IntPoly::gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = IntPoly::divide(num_, g);
        den_ = IntPoly::divide(den_, g);
      }
    }
    normalize_content();
  }

  void normalize_content() {
    if (num_.is_zero()) {
      shift_ = 0;
      den_ = IntPoly(mpz_class(1));
      return;
    }
    mpz_class cn = num_.content();
    mpz_class cd = den_.content();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (g != 1) {
      num_.divide_exact(g);
      den_.divide_exact(g);
    }
    fix_sign();
  }

  void fix_sign() {
    if (den_.lead() < 0) {
      num_.negate();
      den_.negate();
    }
  }

  int shift_ = 0;
  IntPoly num_;
  IntPoly den_{mpz_class(1)};
};

namespace detail {

inline void append_poly(std::ostringstream& os, const IntPoly& p, int low, bool& first) {
  for (std::size_t i = p.size(); i-- > 0;) {
    const mpz_class& c = p[i];
    if (c == 0) continue;
    int e = low + static_cast<int>(i);
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = a == 1;
    if (!unit || e == 0) os << a.get_str();
    if (e != 0) {
      if (!unit) os << "*";
      os << "s";
      if (e != 1) os << "^" << e;
    }
  }
}

}  // namespace detail

inline std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (den_.is_constant()) {
    bool compound = num_.size() - num_.low_order() > 1 && den_[0] != 1;
    if (compound) os << "(";
    detail::append_poly(os, num_, shift_, first);
    if (compound) os << ")";
    if (den_[0] != 1) os << "/" << den_[0].get_str();
    return os.str();
  }
  os << "(";
  detail::append_poly(os, num_, shift_ > 0 ? shift_ : 0, first);
  os << ")/(";
  first = true;
  detail::append_poly(os, den_, shift_ < 0 ? -shift_ : 0, first);
  os << ")";
  return os.str();
}

inline Scalar Scalar::substitute_power(int k) const {
  if (k == 1 || is_zero()) return *this;
  if (k == 0) throw std::domain_error("Scalar: substitution s -> 1 is not supported");
  auto spread = [k](const IntPoly& p, int& extra_shift) {
    int ak = k > 0 ? k : -k;
    std::vector<mpz_class> c(static_cast<std::size_t>(p.degree() * ak + 1), mpz_class(0));
    for (std::size_t i = 0; i < p.size(); ++i) c[i * static_cast<std::size_t>(ak)] = p[i];
    if (k < 0) {
      // p(s^-|k|) = s^{-deg*|k|} * reversed spread
      std::reverse(c.begin(), c.end());
      extra_shift = -p.degree() * ak;
    } else {
      extra_shift = 0;
    }
    return IntPoly(std::move(c));
  };
  int en = 0, ed = 0;
  IntPoly n = spread(num_, en);
  IntPoly d = spread(den_, ed);
  return Scalar(shift_ * k + en - ed, std::move(n), std::move(d));
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace qcs
