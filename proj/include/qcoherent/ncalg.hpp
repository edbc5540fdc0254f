#pragma once

// Normal forms in the function algebra of SU_q(2).
//
// Elements are finite sums  x^k E^n y^m r(Z)  with k = 0 or m = 0, E = e^{z/2}
// (invertible, n in Z), and r a rational function of the central-up-to-scaling
// letter Z = zeta placed on the right. Base rules:
//   E x = q^-1 x E,  E y = q^-1 y E,  x y = y x,
//   r(Z) x = x r(q^2 Z),  r(Z) E = E r(q^2 Z),  r(Z) y = y r(q^2 Z),
//   x E^n y = -q^{n+1} E^{n+2} Z.

#include "qcoherent/linrat.hpp"
#include "qcoherent/qanalysis.hpp"

#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace qcs {

struct Mono {
  int k = 0;  // x degree
  int n = 0;  // E exponent
  int m = 0;  // y degree

  friend bool operator==(const Mono&, const Mono&) = default;
  friend bool operator<(const Mono& a, const Mono& b) { return std::tie(a.k, a.n, a.m) < std::tie(b.k, b.n, b.m); }
  bool is_unit() const { return k == 0 && n == 0 && m == 0; }
  /// Total degree governing coefficient migration: r(Z) w = w r(q^{2 deg} Z).
  int migration() const { return k + n + m; }
};

class AlgElement {
 public:
  using Map = std::map<Mono, LinRat>;

  AlgElement() = default;
  AlgElement(Scalar c) { add_term({}, LinRat(std::move(c))); }  // NOLINT
  AlgElement(int c) : AlgElement(Scalar(c)) {}                  // NOLINT
  AlgElement(LinRat r) { add_term({}, std::move(r)); }          // NOLINT
  AlgElement(Mono mono, LinRat r) {
    if (mono.k > 0 && mono.m > 0) {
      *this = AlgElement(Mono{}, LinRat(1)) * AlgElement::raw(mono) * AlgElement(std::move(r));
    } else {
      add_term(mono, std::move(r));
    }
  }

  static AlgElement x(int k = 1) { return raw({k, 0, 0}); }
  static AlgElement y(int m = 1) { return raw({0, 0, m}); }
  static AlgElement E(int n = 1) { return raw({0, n, 0}); }
  static AlgElement Z() { return AlgElement(LinRat::var()); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  LinRat coefficient_at(int k, int n, int m) const {
    auto it = terms_.find(Mono{k, n, m});
    return it == terms_.end() ? LinRat() : it->second;
  }
  LinRat zeta_part() const { return coefficient_at(0, 0, 0); }

  friend AlgElement operator+(AlgElement a, const AlgElement& b) {
    for (const auto& [mono, r] : b.terms_) a.add_term(mono, r);
    return a;
  }
  AlgElement operator-() const {
    AlgElement r = *this;
    for (auto& [mono, c] : r.terms_) c = -c;
    return r;
  }
  friend AlgElement operator-(const AlgElement& a, const AlgElement& b) { return a + (-b); }
  AlgElement& operator+=(const AlgElement& b) {
    for (const auto& [mono, r] : b.terms_) add_term(mono, r);
    return *this;
  }
  AlgElement& operator-=(const AlgElement& b) { return *this += -b; }

  friend AlgElement operator*(const AlgElement& a, const Scalar& c) {
    if (c.is_zero()) return AlgElement();
    AlgElement r = a;
    for (auto& [mono, v] : r.terms_) v = v * c;
    return r;
  }
  friend AlgElement operator*(const Scalar& c, const AlgElement& a) { return a * c; }

  friend AlgElement operator*(const AlgElement& a, const AlgElement& b) {
    AlgElement out;
    for (const auto& [m1, r1] : a.terms_) {
      for (const auto& [m2, r2] : b.terms_) {
        auto [mono, factor, zpow] = multiply_monomials(m1, m2);
        LinRat c = r1.scaled(Scalar::q_pow(2 * m2.migration())) * r2;
        if (zpow > 0) c = c * LinRat(ScalarPoly::monomial(factor, zpow));
        else c = c * factor;
        out.add_term(mono, std::move(c));
      }
    }
    return out;
  }
  AlgElement& operator*=(const AlgElement& b) { return *this = *this * b; }

  AlgElement pow(int n) const {
    if (n < 0) throw std::domain_error("AlgElement: negative power");
    AlgElement r(1);
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const AlgElement& a, const AlgElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const AlgElement& a, const AlgElement& b) { return !(a == b); }

  /// Product x^{k1}E^{n1}y^{m1} * x^{k2}E^{n2}y^{m2} = factor * mono * Z^zpow.
  static std::tuple<Mono, Scalar, int> multiply_monomials(const Mono& a, const Mono& b) {
    int K = a.k + b.k, N = a.n + b.n, M = a.m + b.m;
    // E^{n1} x^{k2} = q^{-n1 k2} x^{k2} E^{n1};  y^{m1} E^{n2} = q^{m1 n2} E^{n2} y^{m1}
    int qexp2 = 2 * (-a.n * b.k + a.m * b.n);  // in powers of s
    int p = std::min(K, M);
    // reduce x^K E^N y^M p times; step i contributes -q^{N+2i+1} * q^{2(M-1-i)} Z
    Scalar factor = Scalar::s_pow(qexp2);
    for (int i = 0; i < p; ++i) factor *= -Scalar::q_pow(N + 2 * i + 1 + 2 * (M - 1 - i));
    return {Mono{K - p, N + 2 * p, M - p}, factor, p};
  }

  AlgElement star() const;

  /// Apply a map to every coefficient (e.g. numeric specialisation).
  template <class Fn>
  AlgElement map_coefficients(Fn fn) const {
    AlgElement r;
    for (const auto& [mono, c] : terms_) r.add_term(mono, fn(c));
    return r;
  }

  /// Evaluate at commuting values, with Z = -q x E^-2 y; used for q -> 1 checks.
  double eval_commutative(double s, double xv, double Ev, double yv) const {
    double qv = s * s;
    double zv = -qv * xv * yv / (Ev * Ev);
    double acc = 0.0;
    for (const auto& [mono, c] : terms_)
      acc += std::pow(xv, mono.k) * std::pow(Ev, mono.n) * std::pow(yv, mono.m) * c.eval(s, zv);
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [mono, c] : terms_) {
      if (!s.empty()) s += " + ";
      std::string w = monomial_str(mono);
      std::string cs = c.str("Z");
      if (w.empty()) {
        s += "(" + cs + ")";
      } else if (c.is_constant()) {
        s += c.constant_value().is_one() ? w : "(" + cs + ")*" + w;
      } else {
        s += w + "*(" + cs + ")";
      }
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const AlgElement& f) { return os << f.str(); }

  static std::string monomial_str(const Mono& m) {
    std::string w;
    auto part = [&w](const char* g, int e) {
      if (e == 0) return;
      if (!w.empty()) w += " ";
      w += g;
      if (e != 1) w += "^" + std::to_string(e);
    };
    part("x", m.k);
    part("E", m.n);
    part("y", m.m);
    return w;
  }

 private:
  static AlgElement raw(Mono mono) {
    AlgElement r;
    r.terms_.emplace(mono, LinRat(1));
    return r;
  }

  void add_term(const Mono& mono, LinRat c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mono, std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Map terms_;
};

namespace gens {

/// (1 - q^-2 Z)^-1
inline LinRat inv_one_minus_qm2z() { return LinRat::inv_linear(-Scalar::q_pow(-2)); }

inline AlgElement x_star() { return AlgElement(Mono{0, -2, 1}, LinRat(-Scalar::q_pow(-2)) * inv_one_minus_qm2z()); }
inline AlgElement y_star() { return AlgElement(Mono{1, -2, 0}, LinRat(-Scalar::q_pow(2)) * inv_one_minus_qm2z()); }
inline AlgElement E_star() { return AlgElement(Mono{0, -1, 0}, inv_one_minus_qm2z()); }
inline AlgElement Einv_star() { return AlgElement(Mono{0, 1, 0}, LinRat(1) - LinRat::var()); }

}  // namespace gens

inline AlgElement AlgElement::star() const {
  static thread_local std::map<Mono, AlgElement> cache;
  AlgElement out;
  for (const auto& [mono, c] : terms_) {
    auto it = cache.find(mono);
    if (it == cache.end()) {
      AlgElement img(1);
      img *= gens::y_star().pow(mono.m);
      img *= mono.n >= 0 ? gens::E_star().pow(mono.n) : gens::Einv_star().pow(-mono.n);
      img *= gens::x_star().pow(mono.k);
      it = cache.emplace(mono, std::move(img)).first;
    }
    // (w r(Z))* = r(Z) w*; Scalars are real, Z* = Z.
    out += AlgElement(c) * it->second;
  }
  return out;
}

/// Embedded Gauss-decomposition generators.
struct GaussGenerators {
  AlgElement a, b, c, d;
  AlgElement d_inv, a_inv;

  static GaussGenerators make() {
    GaussGenerators g;
    const Scalar sh = Scalar::s_pow(1), shi = Scalar::s_pow(-1);
    g.a = AlgElement::E() + AlgElement::x() * AlgElement::E(-1) * AlgElement::y();
    g.b = sh * AlgElement::x() * AlgElement::E(-1);
    g.c = shi * AlgElement::E(-1) * AlgElement::y();
    g.d = AlgElement::E(-1);
    g.d_inv = AlgElement::E();
    // a = E (1 - Z), so a^-1 = (1 - Z)^-1 E^-1
    g.a_inv = AlgElement(LinRat::inv_linear(Scalar(-1))) * AlgElement::E(-1);
    return g;
  }
};

}  // namespace qcs
