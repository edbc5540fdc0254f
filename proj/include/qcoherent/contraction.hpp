#pragma once

// High-spin contraction: the quantum Heisenberg algebra U_q[h1] and group
// H_q(1), their Hopf structures and pairing, the 3x3 matrix group, Fock-space
// coherent states and the numeric contraction rate.
//
// Exact coefficients live in Scalar with its field variable read as w, so the
// same rational-function arithmetic serves Q(w).

#include "qcoherent/lambda_poly.hpp"
#include "qcoherent/qanalysis.hpp"
#include "qcoherent/scalar.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace qcs::h1 {

inline Scalar w() { return Scalar::s_pow(1); }

inline Scalar factorial(int n) {
  Scalar r(1);
  for (int i = 2; i <= n; ++i) r *= Scalar(i);
  return r;
}

inline Scalar binomial(int n, int k) {
  if (k < 0 || k > n) return Scalar();
  return Scalar(mpq_class(classical_binomial(n, k)));
}

// ---- U_q[h1]: (A+)^k A^m H^l K^c with K = e^{wH/2}, H and K central ----

struct UKey {
  int k = 0, m = 0, l = 0, c = 0;
  friend bool operator==(const UKey&, const UKey&) = default;
  friend bool operator<(const UKey& a, const UKey& b) { return std::tie(a.k, a.m, a.l, a.c) < std::tie(b.k, b.m, b.l, b.c); }
};

class UH {
 public:
  using Map = std::map<UKey, Scalar>;
  UH() = default;
  UH(Scalar c) { add({}, std::move(c)); }  // NOLINT
  UH(int c) : UH(Scalar(c)) {}             // NOLINT
  UH(UKey key, Scalar c) { add(key, std::move(c)); }

  static UH Ad(int n = 1) { return UH(UKey{n, 0, 0, 0}, Scalar(1)); }
  static UH A(int n = 1) { return UH(UKey{0, n, 0, 0}, Scalar(1)); }
  static UH H(int n = 1) { return UH(UKey{0, 0, n, 0}, Scalar(1)); }
  static UH K(int c = 1) { return UH(UKey{0, 0, 0, c}, Scalar(1)); }
  /// sinh(wH)/w = (K^2 - K^-2)/(2w)
  static UH sinh_over_w() { return (K(2) - K(-2)) * (Scalar(1) / (Scalar(2) * w())); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend UH operator+(UH a, const UH& b) {
    for (const auto& [k, v] : b.terms_) a.add(k, v);
    return a;
  }
  UH operator-() const {
    UH r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
  }
  friend UH operator-(const UH& a, const UH& b) { return a + (-b); }
  UH& operator+=(const UH& b) { return *this = *this + b; }
  friend UH operator*(UH a, const Scalar& c) {
    if (c.is_zero()) return UH();
    for (auto& [k, v] : a.terms_) v *= c;
    return a;
  }
  friend UH operator*(const Scalar& c, UH a) { return std::move(a) * c; }
  friend bool operator==(const UH& a, const UH& b) { return a.terms_ == b.terms_; }

  friend UH operator*(const UH& a, const UH& b) {
    UH r;
    for (const auto& [ka, va] : a.terms_)
      for (const auto& [kb, vb] : b.terms_) {
        // A^m (A+)^k' = sum_r r! C(m,r) C(k',r) C^r (A+)^{k'-r} A^{m-r},  C = (K^2 - K^-2)/(2w)
        for (int rr = 0; rr <= std::min(ka.m, kb.k); ++rr) {
          Scalar wick = factorial(rr) * binomial(ka.m, rr) * binomial(kb.k, rr) * (Scalar(1) / (Scalar(2) * w())).pow(rr);
          for (int i = 0; i <= rr; ++i) {
            Scalar coef = va * vb * wick * binomial(rr, i) * ((i % 2) ? Scalar(-1) : Scalar(1));
            int kc = ka.c + kb.c + 2 * (rr - i) - 2 * i;
            r.add(UKey{ka.k + kb.k - rr, ka.m - rr + kb.m, ka.l + kb.l, kc}, coef);
          }
        }
      }
    return r;
  }

  UH pow(int n) const {
    UH r(1);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  Scalar counit() const {
    Scalar s;
    for (const auto& [k, v] : terms_)
      if (k.k == 0 && k.m == 0 && k.l == 0) s += v;
    return s;
  }

  /// S antimultiplicative: S((A+)^k A^m H^l K^c) = K^-c (-H)^l (-A)^m (-A+)^k.
  UH antipode() const {
    UH r;
    for (const auto& [k, v] : terms_) {
      UH t = K(-k.c) * (-H()).pow(k.l) * (-A()).pow(k.m) * (-Ad()).pow(k.k);
      r += t * v;
    }
    return r;
  }

  /// (A+)* = A, A* = A+, H* = H, K* = K; w is real.
  UH star() const {
    UH r;
    for (const auto& [k, v] : terms_) r += (K(k.c) * H(k.l) * Ad(k.m) * A(k.k)) * v;
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, v] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + v.str() + ")";
      if (k.k) s += " A+^" + std::to_string(k.k);
      if (k.m) s += " A^" + std::to_string(k.m);
      if (k.l) s += " H^" + std::to_string(k.l);
      if (k.c) s += " K^" + std::to_string(k.c);
    }
    return s;
  }

 private:
  Map terms_;
  void add(const UKey& k, Scalar v) {
    if (v.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, std::move(v));
      return;
    }
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
};

/// Sums of u (x) v over U_q[h1].
class UHTensor {
 public:
  using Map = std::map<std::pair<UKey, UKey>, Scalar>;
  UHTensor() = default;
  static UHTensor pure(const UH& a, const UH& b) {
    UHTensor t;
    for (const auto& [ka, va] : a.terms())
      for (const auto& [kb, vb] : b.terms()) t.add({ka, kb}, va * vb);
    return t;
  }
  const Map& terms() const { return terms_; }
  friend UHTensor operator+(UHTensor a, const UHTensor& b) {
    for (const auto& [k, v] : b.terms_) a.add(k, v);
    return a;
  }
  friend UHTensor operator*(const UHTensor& a, const UHTensor& b) {
    UHTensor r;
    for (const auto& [ka, va] : a.terms_)
      for (const auto& [kb, vb] : b.terms_) {
        UH l = UH(ka.first, Scalar(1)) * UH(kb.first, Scalar(1));
        UH rr = UH(ka.second, Scalar(1)) * UH(kb.second, Scalar(1));
        r = r + pure(l, rr * (va * vb));
      }
    return r;
  }
  friend bool operator==(const UHTensor& a, const UHTensor& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
  void add(const std::pair<UKey, UKey>& k, Scalar v) {
    if (v.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, std::move(v));
      return;
    }
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
};

/// Delta(X) = X (x) K + K^-1 (x) X for X = A, A+;  Delta(H) = H (x) 1 + 1 (x) H;  Delta(K) = K (x) K.
inline UHTensor coproduct(const UH& u) {
  UHTensor dAd = UHTensor::pure(UH::Ad(), UH::K()) + UHTensor::pure(UH::K(-1), UH::Ad());
  UHTensor dA = UHTensor::pure(UH::A(), UH::K()) + UHTensor::pure(UH::K(-1), UH::A());
  UHTensor dH = UHTensor::pure(UH::H(), UH(1)) + UHTensor::pure(UH(1), UH::H());
  UHTensor out;
  for (const auto& [k, v] : u.terms()) {
    UHTensor t = UHTensor::pure(UH::K(k.c), UH::K(k.c) * v);
    UHTensor p = UHTensor::pure(UH(1), UH(1));
    for (int i = 0; i < k.k; ++i) p = p * dAd;
    for (int i = 0; i < k.m; ++i) p = p * dA;
    for (int i = 0; i < k.l; ++i) p = p * dH;
    out = out + p * t;
  }
  return out;
}

// ---- H_q(1): x^k p(z) y^m with  z x = x (z - w),  y z = (z + w) y,  x y = y x ----

class HG {
 public:
  using Map = std::map<std::pair<int, int>, ScalarPoly>;
  HG() = default;
  HG(Scalar c) { add(0, 0, ScalarPoly(std::move(c))); }  // NOLINT
  HG(int c) : HG(Scalar(c)) {}                          // NOLINT
  HG(int k, ScalarPoly p, int m) { add(k, m, std::move(p)); }

  static HG x(int n = 1) { return HG(n, ScalarPoly(Scalar(1)), 0); }
  static HG y(int n = 1) { return HG(0, ScalarPoly(Scalar(1)), n); }
  static HG z(int n = 1) { return HG(0, ScalarPoly::monomial(Scalar(1), n), 0); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend HG operator+(HG a, const HG& b) {
    for (const auto& [k, p] : b.terms_) a.add(k.first, k.second, p);
    return a;
  }
  HG operator-() const {
    HG r = *this;
    for (auto& [k, p] : r.terms_) p = -p;
    return r;
  }
  friend HG operator-(const HG& a, const HG& b) { return a + (-b); }
  HG& operator+=(const HG& b) { return *this = *this + b; }
  friend HG operator*(HG a, const Scalar& c) {
    if (c.is_zero()) return HG();
    for (auto& [k, p] : a.terms_) p = p * c;
    return a;
  }
  friend HG operator*(const Scalar& c, HG a) { return std::move(a) * c; }
  friend bool operator==(const HG& a, const HG& b) { return a.terms_ == b.terms_; }

  /// (x^k p y^m)(x^k' p' y^m') = x^{k+k'} p(z - k'w) p'(z + m w) y^{m+m'}
  friend HG operator*(const HG& a, const HG& b) {
    HG r;
    for (const auto& [ka, pa] : a.terms_)
      for (const auto& [kb, pb] : b.terms_)
        r.add(ka.first + kb.first, ka.second + kb.second, shift(pa, -Scalar(kb.first) * w()) * shift(pb, Scalar(ka.second) * w()));
    return r;
  }

  HG pow(int n) const {
    HG r(1);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  Scalar counit() const {
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? Scalar() : it->second[0];
  }

  /// x* = -y, y* = -x, z* = -z + x y.
  HG star() const {
    HG zs = -z() + x() * y();
    HG r;
    for (const auto& [k, p] : terms_) {
      HG pz;
      for (std::size_t l = 0; l < p.size(); ++l)
        if (!p[l].is_zero()) pz += zs.pow(static_cast<int>(l)) * p[l];
      r += (-x()).pow(k.second) * pz * (-y()).pow(k.first);
    }
    return r;
  }

  /// S(x) = -x, S(y) = -y, S(z) = -z + x y, antimultiplicative.
  HG antipode() const {
    HG sz = -z() + x() * y();
    HG r;
    for (const auto& [k, p] : terms_) {
      HG pz;
      for (std::size_t l = 0; l < p.size(); ++l)
        if (!p[l].is_zero()) pz += sz.pow(static_cast<int>(l)) * p[l];
      r += (-y()).pow(k.second) * pz * (-x()).pow(k.first);
    }
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, p] : terms_) {
      if (!s.empty()) s += " + ";
      if (k.first) s += "x^" + std::to_string(k.first) + " ";
      s += "(" + p.str("z") + ")";
      if (k.second) s += " y^" + std::to_string(k.second);
    }
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const HG& f) { return os << f.str(); }

 private:
  Map terms_;

  /// p(z + c)
  static ScalarPoly shift(const ScalarPoly& p, const Scalar& c) {
    if (c.is_zero()) return p;
    ScalarPoly r;
    ScalarPoly lin(std::vector<Scalar>{c, Scalar(1)});
    for (std::size_t l = p.size(); l-- > 0;) r = r * lin + ScalarPoly(p[l]);
    return r;
  }

  void add(int k, int m, ScalarPoly p) {
    if (p.is_zero()) return;
    auto it = terms_.find({k, m});
    if (it == terms_.end()) {
      terms_.emplace(std::make_pair(k, m), std::move(p));
      return;
    }
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
};

/// Sums of f (x) g over H_q(1), canonicalised by (k1, m1, k2, m2) -> polynomial in (z1, z2).
class HGTensor {
 public:
  using Key = std::tuple<int, int, int, int>;
  using Coef = std::map<std::pair<int, int>, Scalar>;
  HGTensor() = default;
  static HGTensor pure(const HG& a, const HG& b) {
    HGTensor t;
    for (const auto& [ka, pa] : a.terms())
      for (const auto& [kb, pb] : b.terms()) t.pieces_.push_back({HG(ka.first, pa, ka.second), HG(kb.first, pb, kb.second)});
    return t;
  }
  friend HGTensor operator+(HGTensor a, const HGTensor& b) {
    a.pieces_.insert(a.pieces_.end(), b.pieces_.begin(), b.pieces_.end());
    return a;
  }
  friend HGTensor operator*(const HGTensor& a, const HGTensor& b) {
    HGTensor r;
    for (const auto& [a1, a2] : a.pieces_)
      for (const auto& [b1, b2] : b.pieces_) r.pieces_.push_back({a1 * b1, a2 * b2});
    return r;
  }
  std::map<Key, Coef> canonical() const {
    std::map<Key, Coef> out;
    for (const auto& [f, g] : pieces_)
      for (const auto& [kf, pf] : f.terms())
        for (const auto& [kg, pg] : g.terms()) {
          Coef& c = out[{kf.first, kf.second, kg.first, kg.second}];
          for (std::size_t i = 0; i < pf.size(); ++i)
            for (std::size_t j = 0; j < pg.size(); ++j) {
              Scalar v = pf[i] * pg[j];
              if (v.is_zero()) continue;
              auto key = std::make_pair(static_cast<int>(i), static_cast<int>(j));
              c[key] += v;
              if (c[key].is_zero()) c.erase(key);
            }
        }
    for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
    return out;
  }
  const std::vector<std::pair<HG, HG>>& pieces() const { return pieces_; }
  friend bool operator==(const HGTensor& a, const HGTensor& b) { return a.canonical() == b.canonical(); }
  template <class F, class G>
  HGTensor map_legs(F f, G g) const {
    HGTensor r;
    for (const auto& [a, b] : pieces_) r.pieces_.push_back({f(a), g(b)});
    return r;
  }
  HG multiply() const {
    HG r;
    for (const auto& [a, b] : pieces_) r += a * b;
    return r;
  }

 private:
  std::vector<std::pair<HG, HG>> pieces_;
};

/// Delta(x) = x(x)1 + 1(x)x, Delta(y) likewise, Delta(z) = z(x)1 + 1(x)z + y(x)x.
inline HGTensor coproduct(const HG& f) {
  HGTensor dx = HGTensor::pure(HG::x(), HG(1)) + HGTensor::pure(HG(1), HG::x());
  HGTensor dy = HGTensor::pure(HG::y(), HG(1)) + HGTensor::pure(HG(1), HG::y());
  HGTensor dz = HGTensor::pure(HG::z(), HG(1)) + HGTensor::pure(HG(1), HG::z()) + HGTensor::pure(HG::y(), HG::x());
  HGTensor one = HGTensor::pure(HG(1), HG(1));
  HGTensor out;
  for (const auto& [k, p] : f.terms()) {
    HGTensor t = one;
    for (int i = 0; i < k.first; ++i) t = t * dx;
    HGTensor pz;
    HGTensor zl = one;
    for (std::size_t l = 0; l < p.size(); ++l) {
      if (!p[l].is_zero()) pz = pz + zl * HGTensor::pure(HG(p[l]), HG(1));
      zl = zl * dz;
    }
    t = t * pz;
    for (int i = 0; i < k.second; ++i) t = t * dy;
    out = out + t;
  }
  return out;
}

/// Dual basis e^{klm} = x^k/k! (z - (k-m)w/2)^l/l! y^m/m! against (A+)^k H^l A^m:
/// <x^k z^l y^m, (A+)^k H^L A^m K^c> = k! m! sum_n (cw/2)^n/n! C(l, L+n) c0^{l-L-n} (L+n)!,  c0 = (k-m)w/2.
inline Scalar pair(const HG& f, const UH& u) {
  Scalar total;
  for (const auto& [kf, p] : f.terms())
    for (const auto& [ku, v] : u.terms()) {
      if (kf.first != ku.k || kf.second != ku.m) continue;
      const Scalar c0 = Scalar(mpq_class(kf.first - kf.second, 2)) * w();
      const Scalar kc = Scalar(mpq_class(ku.c, 2)) * w();
      Scalar acc;
      for (std::size_t l = 0; l < p.size(); ++l) {
        if (p[l].is_zero()) continue;
        for (int n = 0; ku.l + n <= static_cast<int>(l); ++n) {
          const int L = ku.l + n;
          acc += p[l] * kc.pow(n) / factorial(n) * binomial(static_cast<int>(l), L) * c0.pow(static_cast<int>(l) - L) * factorial(L);
        }
      }
      total += acc * v * factorial(kf.first) * factorial(kf.second);
    }
  return total;
}

inline Scalar pair_tensor(const HG& f, const HG& g, const UHTensor& t) {
  Scalar s;
  for (const auto& [k, v] : t.terms()) s += pair(f, UH(k.first, Scalar(1))) * pair(g, UH(k.second, Scalar(1))) * v;
  return s;
}

// ---- 3x3 matrix group ----

using Mat3S = std::array<std::array<Scalar, 3>, 3>;
using Mat3H = std::array<std::array<HG, 3>, 3>;

inline Mat3S unit_matrix(int i, int j) {
  Mat3S m;
  m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Scalar(1);
  return m;
}

inline Mat3S mat_mul(const Mat3S& a, const Mat3S& b) {
  Mat3S r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline Mat3S mat_add(Mat3S a, const Mat3S& b, const Scalar& c = Scalar(1)) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) a[i][j] += b[i][j] * c;
  return a;
}

/// pi(A+) = E23, pi(A) = E12, pi(H) = E13 (the unlabeled third matrix), pi(K^c) = 1 + (cw/2) E13.
struct Rep3 {
  static Mat3S Ad() { return unit_matrix(1, 2); }
  static Mat3S A() { return unit_matrix(0, 1); }
  static Mat3S H() { return unit_matrix(0, 2); }
  static Mat3S one() { return mat_add(mat_add(unit_matrix(0, 0), unit_matrix(1, 1)), unit_matrix(2, 2)); }
  static Mat3S K(int c) { return mat_add(one(), H(), Scalar(mpq_class(c, 2)) * w()); }
  static Mat3S pow(const Mat3S& m, int n) {
    Mat3S r = one();
    for (int i = 0; i < n; ++i) r = mat_mul(r, m);
    return r;
  }
  static Mat3S of(const UH& u) {
    Mat3S r;
    for (const auto& [k, v] : u.terms()) r = mat_add(r, mat_mul(mat_mul(mat_mul(pow(Ad(), k.k), pow(A(), k.m)), pow(H(), k.l)), K(k.c)), v);
    return r;
  }
};

inline Mat3H hmat_mul(const Mat3H& a, const Mat3H& b) {
  Mat3H r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

/// exp(f (x) M) for nilpotent M.
inline Mat3H exp_tensor(const HG& f, const Mat3S& m) {
  Mat3H r;
  Mat3S mp = Rep3::one();
  HG fp(1);
  for (int n = 0; n < 3; ++n) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (!mp[i][j].is_zero()) r[i][j] += fp * (mp[i][j] / factorial(n));
    mp = mat_mul(mp, m);
    fp = fp * f;
  }
  return r;
}

/// (id (x) pi) of exp(x (x) K^-1 A+) exp(z (x) H) exp(y (x) K A).
inline Mat3H universal_T() {
  return hmat_mul(hmat_mul(exp_tensor(HG::x(), Rep3::of(UH::K(-1) * UH::Ad())), exp_tensor(HG::z(), Rep3::of(UH::H()))),
                  exp_tensor(HG::y(), Rep3::of(UH::K() * UH::A())));
}

/// (id (x) pi) of T* with * applied on both legs.
inline Mat3H universal_T_star() {
  return hmat_mul(hmat_mul(exp_tensor(HG::y().star(), Rep3::of((UH::K() * UH::A()).star())), exp_tensor(HG::z().star(), Rep3::of(UH::H().star()))),
                  exp_tensor(HG::x().star(), Rep3::of((UH::K(-1) * UH::Ad()).star())));
}

// ---- numerics: Fock space, quadrature, contraction rate ----

/// Gauss-Legendre nodes and weights on [a, b] via the Golub-Welsch eigenproblem.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    double beta = i / std::sqrt(4.0 * i * i - 1.0);
    J(i, i - 1) = J(i - 1, i) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  std::vector<double> x(static_cast<std::size_t>(n)), wts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double v0 = es.eigenvectors()(0, i);
    x[static_cast<std::size_t>(i)] = 0.5 * (b - a) * es.eigenvalues()(i) + 0.5 * (b + a);
    wts[static_cast<std::size_t>(i)] = (b - a) * v0 * v0;
  }
  return {x, wts};
}

/// Truncated Fock matrices: A|n> = sqrt(n sinh(wp)/w)|n-1>, A+|n> = sqrt((n+1) sinh(wp)/w)|n+1>, H = p.
struct FockRep {
  double w = 0.5, p = 1.0;
  int N = 40;
  Eigen::MatrixXd A() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N + 1, N + 1);
    for (int n = 1; n <= N; ++n) m(n - 1, n) = std::sqrt(n * std::sinh(w * p) / w);
    return m;
  }
  Eigen::MatrixXd Ad() const { return A().transpose(); }
  Eigen::MatrixXd H() const { return p * Eigen::MatrixXd::Identity(N + 1, N + 1); }
};

/// <x,z|x,z> at |x| = r with the ordering e^{pz*} e^{pz} = exp(-(e^{2pw}-1)/(2w) |x|^2).
inline double h1_norm(double w, double p, double r, int N) {
  const double lam = (std::exp(2 * p * w) - 1) / (2 * w);
  double term = 1.0, sum = 1.0;
  for (int n = 1; n <= N; ++n) {
    term *= lam * r * r / n;
    sum += term;
  }
  return std::exp(-lam * r * r) * sum;
}

/// max |int dmu |x,z><x,z| - 1| over the (N+1)x(N+1) block.
/// Moving e^{pz} right past x^n gives e^{-pnw} (from z x = x (z - w)); then
/// e^{pz} e^{pz*} = exp(-lam' |x|^2),  dmu = lam'/pi r dr dtheta,  lam' = (1 - e^{-2pw})/(2w).
inline double h1_resolution_defect(double w, double p, int N, int radial_nodes, int angular_nodes) {
  const double lam = (std::exp(2 * p * w) - 1) / (2 * w);
  const double lamp = (1 - std::exp(-2 * p * w)) / (2 * w);
  const double T = 2.0 * N + 80.0;  // in s = lam' r^2
  auto [sn, sw] = gauss_legendre(radial_nodes, 0.0, T);
  auto [tn, tw] = gauss_legendre(angular_nodes, 0.0, 2 * M_PI);
  std::vector<double> logc(static_cast<std::size_t>(N + 1));
  for (int n = 0; n <= N; ++n) logc[static_cast<std::size_t>(n)] = 0.5 * n * std::log(lam) - 0.5 * std::lgamma(n + 1.0) - p * w * n;
  double defect = 0.0;
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= N; ++m) {
      // radial part in s: r^{n+m} e^{-s} r dr = (s/lam')^{(n+m)/2} e^{-s} ds / (2 lam')
      double radial = 0.0;
      for (std::size_t i = 0; i < sn.size(); ++i) {
        double s = sn[i];
        double lt = logc[static_cast<std::size_t>(n)] + logc[static_cast<std::size_t>(m)] + 0.5 * (n + m) * std::log(s / lamp) - s;
        radial += sw[i] * std::exp(lt);
      }
      radial /= 2 * lamp;
      std::complex<double> ang = 0.0;
      for (std::size_t i = 0; i < tn.size(); ++i) ang += tw[i] * std::polar(1.0, (n - m) * tn[i]);
      std::complex<double> v = lamp / M_PI * radial * ang;
      defect = std::max(defect, std::abs(v - (n == m ? 1.0 : 0.0)));
    }
  return defect;
}

/// Refine node counts until the defect stabilises.
inline double h1_resolution_converged(double w, double p, int N, double tol, int* nodes_used = nullptr) {
  int nodes = 2 * N + 40;
  double prev = h1_resolution_defect(w, p, N, nodes, nodes);
  for (int it = 0; it < 4; ++it) {
    nodes *= 2;
    double cur = h1_resolution_defect(w, p, N, nodes, nodes);
    if (std::fabs(cur - prev) < tol) {
      if (nodes_used) *nodes_used = nodes;
      return cur;
    }
    prev = cur;
  }
  throw std::domain_error("h1 resolution quadrature did not stabilise");
}

/// Spin-j contraction residual max |[A_j, A+_j] - sinh(w H_j)/w| with q = e^{w/j},
/// A_j = J-/sqrt j, A+_j = J+/sqrt j, H_j = 2 J0/j.
struct ContractionResidual {
  double printed = 0.0;         // against sinh(wH)/w as printed
  double opposite_sign = 0.0;   // against -sinh(wH)/w, for diagnosis
};

inline ContractionResidual contraction_residual(int twoj, double w) {
  const double j = twoj / 2.0, q = std::exp(w / j);
  auto br = [q](double x) { return (std::pow(q, x) - std::pow(q, -x)) / (q - 1.0 / q); };
  const int dim = twoj + 1;
  Eigen::MatrixXd Jp = Eigen::MatrixXd::Zero(dim, dim), Jm = Jp, Hm = Jp;
  for (int n = 0; n < dim; ++n) {
    double m = -j + n;
    if (n + 1 < dim) Jp(n + 1, n) = std::sqrt(br(j - m) * br(j + m + 1));
    if (n > 0) Jm(n - 1, n) = std::sqrt(br(j + m) * br(j - m + 1));
    Hm(n, n) = 2.0 * m / j;
  }
  Eigen::MatrixXd A = Jm / std::sqrt(j), Ad = Jp / std::sqrt(j);
  Eigen::MatrixXd comm = A * Ad - Ad * A;
  Eigen::MatrixXd target = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) target(n, n) = std::sinh(w * Hm(n, n)) / w;
  return {(comm - target).cwiseAbs().maxCoeff(), (comm + target).cwiseAbs().maxCoeff()};
}

}  // namespace qcs::h1
