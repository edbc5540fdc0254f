#pragma once

// U_q[su(2)]: normal-ordered elements J+^k J0^l J-^m q^{c J0}, the Hopf maps,
// the pairing with the function algebra and the actions realised through it.
//
// Products are computed in a "middle" form J+^k C(J0, K) J-^m with C a
// commutative Cartan polynomial (K = q^{J0}); the stored form moves the
// group-like to the far right: J-^m K^c = q^{cm} K^c J-^m.

#include "qcoherent/ncalg.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace qcs {

struct UMono {
  int k = 0, l = 0, m = 0;
  int c = 0;  // exponent of q^{J0}; integer-valued (see README)

  friend bool operator==(const UMono&, const UMono&) = default;
  friend bool operator<(const UMono& a, const UMono& b) {
    return std::tie(a.k, a.l, a.m, a.c) < std::tie(b.k, b.l, b.m, b.c);
  }
};

namespace detail {

// J0^l K^c  ->  coefficient
using Cartan = std::map<std::pair<int, int>, Scalar>;

inline void cartan_add(Cartan& a, const std::pair<int, int>& key, const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, ins] = a.try_emplace(key, v);
  if (!ins) {
    it->second += v;
    if (it->second.is_zero()) a.erase(it);
  }
}

inline Cartan cartan_mul(const Cartan& a, const Cartan& b) {
  Cartan r;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) cartan_add(r, {ka.first + kb.first, ka.second + kb.second}, va * vb);
  return r;
}

/// C(J0 + a)
inline Cartan cartan_shift(const Cartan& c, int a) {
  if (a == 0) return c;
  Cartan r;
  for (const auto& [key, v] : c) {
    auto [l, e] = key;
    Scalar g = v * Scalar::q_pow(e * a);
    for (int i = 0; i <= l; ++i) {
      mpz_class bin = classical_binomial(l, i);
      mpz_class ap;
      mpz_pow_ui(ap.get_mpz_t(), mpz_class(a).get_mpz_t(), static_cast<unsigned long>(l - i));
      cartan_add(r, {i, e}, g * Scalar(mpq_class(bin * ap)));
    }
  }
  return r;
}

/// sum_{r<k} [2 J0 + 2r]
inline Cartan reorder_sum(int k) {
  Cartan r;
  const Scalar inv = (Scalar::q() - Scalar::q_pow(-1)).inverse();
  for (int t = 0; t < k; ++t) {
    cartan_add(r, {0, 2}, Scalar::q_pow(2 * t) * inv);
    cartan_add(r, {0, -2}, -Scalar::q_pow(-2 * t) * inv);
  }
  return r;
}

using Middle = std::map<std::pair<int, int>, Cartan>;

inline void middle_add(Middle& a, int k, int m, const Cartan& c) {
  if (c.empty()) return;
  Cartan& slot = a[{k, m}];
  for (const auto& [key, v] : c) cartan_add(slot, key, v);
  if (slot.empty()) a.erase({k, m});
}

inline Middle left_jminus(const Middle& w) {
  Middle r;
  for (const auto& [km, c] : w) {
    auto [k, m] = km;
    middle_add(r, k, m + 1, cartan_shift(c, 1));
    if (k > 0) {
      Cartan t = cartan_mul(reorder_sum(k), c);
      for (auto& [key, v] : t) v = -v;
      middle_add(r, k - 1, m, t);
    }
  }
  return r;
}

inline Middle middle_mul(const Middle& a, const Middle& b) {
  Middle out;
  for (const auto& [km2, c2] : b) {
    for (const auto& [km1, c1] : a) {
      Middle w;
      w[km2] = c2;
      for (int i = 0; i < km1.second; ++i) w = left_jminus(w);
      for (const auto& [kmw, cw] : w) middle_add(out, km1.first + kmw.first, kmw.second, cartan_mul(cartan_shift(c1, kmw.first), cw));
    }
  }
  return out;
}

}  // namespace detail

class UElement {
 public:
  using Map = std::map<UMono, Scalar>;

  UElement() = default;
  UElement(Scalar c) { add({}, std::move(c)); }  // NOLINT
  UElement(int c) : UElement(Scalar(c)) {}      // NOLINT
  UElement(UMono mono, Scalar c) { add(mono, std::move(c)); }

  static UElement Jp(int k = 1) { return UElement(UMono{k, 0, 0, 0}, Scalar(1)); }
  static UElement Jm(int m = 1) { return UElement(UMono{0, 0, m, 0}, Scalar(1)); }
  static UElement J0(int l = 1) { return UElement(UMono{0, l, 0, 0}, Scalar(1)); }
  static UElement K(int c = 1) { return UElement(UMono{0, 0, 0, c}, Scalar(1)); }
  /// [2 J0]_q = (K^2 - K^-2)/(q - q^-1)
  static UElement bracket_2J0() {
    Scalar inv = (Scalar::q() - Scalar::q_pow(-1)).inverse();
    return K(2) * inv - K(-2) * inv;
  }
  /// E_{klm} = J+^k J0^l J-^m
  static UElement basis(int k, int l, int m) { return UElement(UMono{k, l, m, 0}, Scalar(1)); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend UElement operator+(UElement a, const UElement& b) {
    for (const auto& [m, v] : b.terms_) a.add(m, v);
    return a;
  }
  UElement operator-() const {
    UElement r = *this;
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
  }
  friend UElement operator-(const UElement& a, const UElement& b) { return a + (-b); }
  UElement& operator+=(const UElement& b) { return *this = *this + b; }
  friend UElement operator*(const UElement& a, const Scalar& c) {
    if (c.is_zero()) return UElement();
    UElement r = a;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
  }
  friend UElement operator*(const Scalar& c, const UElement& a) { return a * c; }
  friend UElement operator*(const UElement& a, const UElement& b) {
    return from_middle(detail::middle_mul(a.to_middle(), b.to_middle()));
  }
  UElement pow(int n) const {
    UElement r(1);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }
  friend bool operator==(const UElement& a, const UElement& b) { return a.terms_ == b.terms_; }

  Scalar counit() const {
    Scalar r;
    for (const auto& [m, v] : terms_)
      if (m.k == 0 && m.l == 0 && m.m == 0) r += v;
    return r;
  }

  /// Antihomomorphism with S(J0) = -J0, S(J+-) = -q^{+-1} J+-, S(K^c) = K^-c.
  UElement antipode() const {
    UElement out;
    for (const auto& [mono, v] : terms_) {
      UElement t = K(-mono.c);
      t = t * (Jm() * (-Scalar::q_pow(-1))).pow(mono.m);
      t = t * (-J0()).pow(mono.l);
      t = t * (Jp() * (-Scalar::q())).pow(mono.k);
      out += t * v;
    }
    return out;
  }

  /// Antilinear antihomomorphism J+* = J-, J0* = J0; real q fixes scalars.
  UElement star() const {
    UElement out;
    for (const auto& [mono, v] : terms_) out += K(mono.c) * Jp(mono.m) * J0(mono.l) * Jm(mono.k) * v;
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, v] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + v.str() + ")";
      if (m.k) s += " J+^" + std::to_string(m.k);
      if (m.l) s += " J0^" + std::to_string(m.l);
      if (m.m) s += " J-^" + std::to_string(m.m);
      if (m.c) s += " K^" + std::to_string(m.c);
    }
    return s;
  }

 private:
  void add(const UMono& m, Scalar v) {
    if (v.is_zero()) return;
    auto [it, ins] = terms_.try_emplace(m, v);
    if (!ins) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  detail::Middle to_middle() const {
    detail::Middle r;
    for (const auto& [mono, v] : terms_) {
      detail::Cartan c;
      c[{mono.l, mono.c}] = v * Scalar::q_pow(mono.c * mono.m);
      detail::middle_add(r, mono.k, mono.m, c);
    }
    return r;
  }
  static UElement from_middle(const detail::Middle& w) {
    UElement r;
    for (const auto& [km, c] : w)
      for (const auto& [key, v] : c) r.add(UMono{km.first, key.first, km.second, key.second}, v * Scalar::q_pow(-key.second * km.second));
    return r;
  }

  Map terms_;
};

/// Finite sums of u (x) v.
class UTensor {
 public:
  using Map = std::map<std::pair<UMono, UMono>, Scalar>;

  UTensor() = default;
  static UTensor pure(const UElement& a, const UElement& b) {
    UTensor t;
    for (const auto& [ma, va] : a.terms())
      for (const auto& [mb, vb] : b.terms()) t.add({ma, mb}, va * vb);
    return t;
  }

  const Map& terms() const { return terms_; }
  friend UTensor operator+(UTensor a, const UTensor& b) {
    for (const auto& [k, v] : b.terms_) a.add(k, v);
    return a;
  }
  friend UTensor operator*(const UTensor& a, const UTensor& b) {
    UTensor r;
    for (const auto& [ka, va] : a.terms_)
      for (const auto& [kb, vb] : b.terms_) {
        UElement left = UElement(ka.first, Scalar(1)) * UElement(kb.first, Scalar(1));
        UElement right = UElement(ka.second, Scalar(1)) * UElement(kb.second, Scalar(1));
        r = r + pure(left, right) * (va * vb);
      }
    return r;
  }
  friend UTensor operator*(const UTensor& a, const Scalar& c) {
    UTensor r;
    for (const auto& [k, v] : a.terms_) r.add(k, v * c);
    return r;
  }
  friend bool operator==(const UTensor& a, const UTensor& b) { return a.terms_ == b.terms_; }

  /// Apply f to the left leg and g to the right leg.
  template <class F, class G>
  UTensor map_legs(F f, G g) const {
    UTensor r;
    for (const auto& [k, v] : terms_) r = r + pure(f(UElement(k.first, Scalar(1))), g(UElement(k.second, Scalar(1)))) * v;
    return r;
  }

  /// m(A (x) B)
  UElement multiply() const {
    UElement r;
    for (const auto& [k, v] : terms_) r += UElement(k.first, Scalar(1)) * UElement(k.second, Scalar(1)) * v;
    return r;
  }

 private:
  void add(const std::pair<UMono, UMono>& k, const Scalar& v) {
    if (v.is_zero()) return;
    auto [it, ins] = terms_.try_emplace(k, v);
    if (!ins) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  Map terms_;
};

/// Algebra-map extension of the generator coproducts.
inline UTensor coproduct(const UElement& u) {
  static thread_local std::map<UMono, UTensor> cache;
  const UTensor dJp = UTensor::pure(UElement::Jp(), UElement::K(1)) + UTensor::pure(UElement::K(-1), UElement::Jp());
  const UTensor dJm = UTensor::pure(UElement::Jm(), UElement::K(1)) + UTensor::pure(UElement::K(-1), UElement::Jm());
  const UTensor dJ0 = UTensor::pure(UElement::J0(), UElement(1)) + UTensor::pure(UElement(1), UElement::J0());
  UTensor out;
  for (const auto& [mono, v] : u.terms()) {
    auto it = cache.find(mono);
    if (it == cache.end()) {
      UTensor t = UTensor::pure(UElement(1), UElement(1));
      for (int i = 0; i < mono.k; ++i) t = t * dJp;
      for (int i = 0; i < mono.l; ++i) t = t * dJ0;
      for (int i = 0; i < mono.m; ++i) t = t * dJm;
      t = t * UTensor::pure(UElement::K(mono.c), UElement::K(mono.c));
      it = cache.emplace(mono, std::move(t)).first;
    }
    out = out + it->second * v;
  }
  return out;
}

/// Closed-form coproduct of the basis monomial E_{klm}.
inline UTensor coproduct_closed_form(int k, int l, int m) {
  UTensor out;
  using U = UElement;
  for (int kp = 0; kp <= k; ++kp)
    for (int lp = 0; lp <= l; ++lp)
      for (int mp = 0; mp <= m; ++mp) {
        Scalar coef = q_binomial(k, kp) * Scalar(mpq_class(classical_binomial(l, lp))) * q_binomial(m, mp);
        U left = U::Jp(k - kp) * U::K(-kp) * U::J0(l - lp) * U::K(-mp) * U::Jm(m - mp);
        U right = U::Jp(kp) * U::K(k - kp) * U::J0(lp) * U::K(m - mp) * U::Jm(mp);
        out = out + UTensor::pure(left, right) * coef;
      }
  return out;
}

/// <x^k e^{t z} y^m, J+^K J0^l J-^M q^{c J0}> with e^{t z} = E^{2t}, n = 2t.
inline Scalar pair_monomial(int k, int n, int m, const UMono& u) {
  if (u.k != k || u.m != m) return Scalar();
  // [k]! [m]! t^l q^{c t + c m + t (k - m)}
  Scalar r = q_factorial(k) * q_factorial(m);
  if (u.l > 0) {
    if (n == 0) return Scalar();
    r *= Scalar(mpq_class(n, 2)).pow(u.l);
  }
  return r * Scalar::q_pow(HalfInt::from_twice(u.c * n + 2 * u.c * m + n * (k - m)));
}

/// <x^k z^ell y^m, u> as a polynomial in Lambda = ln q.
inline LambdaPoly pair_z_power(int k, int ell, int m, const UElement& u) {
  LambdaPoly out;
  for (const auto& [mono, v] : u.terms()) {
    if (mono.k != k || mono.m != m) continue;
    // sum_r (c L)^r / r! * ell!/(ell-l-r)! * ((k-m) L)^{ell-l-r}
    ScalarPoly acc;
    for (int r = 0; mono.l + r <= ell; ++r) {
      int rest = ell - mono.l - r;
      mpz_class fall = 1;
      for (int i = 0; i < mono.l + r; ++i) fall *= (ell - i);
      mpz_class rf = 1;
      for (int i = 2; i <= r; ++i) rf *= i;
      mpz_class cr, km;
      mpz_pow_ui(cr.get_mpz_t(), mpz_class(mono.c).get_mpz_t(), static_cast<unsigned long>(r));
      mpz_pow_ui(km.get_mpz_t(), mpz_class(k - m).get_mpz_t(), static_cast<unsigned long>(rest));
      mpq_class coef(fall * cr * km, rf);
      coef.canonicalize();
      acc += ScalarPoly::monomial(Scalar(coef), r + rest);
    }
    out = LambdaPoly(ScalarPoly(out) + acc * (v * q_factorial(k) * q_factorial(m) * Scalar::q_pow(mono.c * m)));
  }
  return out;
}

/// Pairing of a normal-form element with u. x^k E^n y^m zeta^p is rewritten as
/// (-q)^p q^{-n p - 2 p m} x^{k+p} E^{n-2p} y^{m+p}; only the series order p
/// fixed by the degree match contributes.
inline LambdaPoly pair(const AlgElement& f, const UElement& u) {
  Scalar total;
  for (const auto& [fm, r] : f.terms()) {
    for (const auto& [um, v] : u.terms()) {
      int p = um.k - fm.k;
      if (p < 0 || um.m - fm.m != p) continue;
      std::vector<Scalar> ser = r.series(p);
      const Scalar& rp = ser[static_cast<std::size_t>(p)];
      if (rp.is_zero()) continue;
      Scalar phi = (p % 2 ? Scalar(-1) : Scalar(1)) * Scalar::q_pow(p - fm.n * p - 2 * p * fm.m);
      total += v * rp * phi * pair_monomial(um.k, fm.n - 2 * p, um.m, um);
    }
  }
  return LambdaPoly(ScalarPoly(total));
}

inline Scalar pair_scalar(const AlgElement& f, const UElement& u) { return pair(f, u)[0]; }

/// Sum <f, u1><g, u2> over the coproduct of u.
inline Scalar pair_through_coproduct(const AlgElement& f, const AlgElement& g, const UElement& u) {
  Scalar r;
  const UTensor d = coproduct(u);
  for (const auto& [key, v] : d.terms())
    r += v * pair_scalar(f, UElement(key.first, Scalar(1))) * pair_scalar(g, UElement(key.second, Scalar(1)));
  return r;
}

/// Grading read off the pairing: left from <f, K^c u>, right from <f, u K^c>.
struct Weight {
  HalfInt left, right;
  friend bool operator==(const Weight&, const Weight&) = default;
};

inline Weight weight(const AlgElement& f) {
  std::optional<Weight> w;
  for (const auto& [mono, r] : f.terms()) {
    (void)r;
    // zeta carries (0, 0); x: (1, 0); E: (1/2, 1/2); y: (0, 1)
    Weight t{HalfInt::from_twice(2 * mono.k + mono.n), HalfInt::from_twice(mono.n + 2 * mono.m)};
    if (w && !(*w == t)) throw std::domain_error("weight: element is not homogeneous");
    w = t;
  }
  return w.value_or(Weight{});
}

/// Generator actions Z |> f with <Z |> f, u> = <f, u Z>, on the symbols a, b, c, d, d^-1.
enum class Sym { a, b, c, d, dinv };
enum class Act { Jp, Jm };

inline AlgElement sym_element(Sym s) {
  static thread_local GaussGenerators g = GaussGenerators::make();
  switch (s) {
    case Sym::a: return g.a;
    case Sym::b: return g.b;
    case Sym::c: return g.c;
    case Sym::d: return g.d;
    case Sym::dinv: return g.d_inv;
  }
  return {};
}

/// right weight of a symbol (K^c acts by q^{c w}).
inline HalfInt sym_right_weight(Sym s) {
  switch (s) {
    case Sym::a:
    case Sym::c:
    case Sym::dinv: return HalfInt::from_twice(1);
    default: return HalfInt::from_twice(-1);
  }
}

inline AlgElement act_symbol(Act z, Sym s) {
  // T pi(J+) moves the first column into the second, T pi(J-) the second into the first.
  const auto e = [](Sym t) { return sym_element(t); };
  if (z == Act::Jp) {
    switch (s) {
      case Sym::b: return e(Sym::a);
      case Sym::d: return e(Sym::c);
      case Sym::dinv: return -(e(Sym::dinv) * e(Sym::c) * e(Sym::dinv));
      default: return {};
    }
  }
  switch (s) {
    case Sym::a: return e(Sym::b);
    case Sym::c: return e(Sym::d);
    case Sym::dinv: return {};
    default: return {};
  }
}

/// Z |> (s1 s2 ... sn) via Delta(J+-) = J+- (x) K + K^-1 (x) J+-.
inline AlgElement act_word(Act z, const std::vector<Sym>& w) {
  AlgElement out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    AlgElement term(1);
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j < i) term *= Scalar::q_pow(-sym_right_weight(w[j])) * sym_element(w[j]);
      else if (j == i) term *= act_symbol(z, w[j]);
      else term *= Scalar::q_pow(sym_right_weight(w[j])) * sym_element(w[j]);
    }
    out += term;
  }
  return out;
}

inline AlgElement word_element(const std::vector<Sym>& w) {
  AlgElement r(1);
  for (Sym s : w) r *= sym_element(s);
  return r;
}

inline HalfInt word_right_weight(const std::vector<Sym>& w) {
  HalfInt h;
  for (Sym s : w) h = h + sym_right_weight(s);
  return h;
}

/// Candidate conventions tying the two involutions together (q real, so
/// complex conjugation of pairing values is trivial).
enum class StarConvention { antipode_then_star, star_then_antipode, plain };

inline const char* to_string(StarConvention c) {
  switch (c) {
    case StarConvention::antipode_then_star: return "<f*, u> = <f, S(u)*>";
    case StarConvention::star_then_antipode: return "<f*, u> = <f, S(u*)>";
    case StarConvention::plain: return "<f*, u> = <f, u*>";
  }
  return "";
}

inline bool star_convention_holds(StarConvention conv, const AlgElement& f, const UElement& u) {
  UElement rhs;
  switch (conv) {
    case StarConvention::antipode_then_star: rhs = u.antipode().star(); break;
    case StarConvention::star_then_antipode: rhs = u.star().antipode(); break;
    case StarConvention::plain: rhs = u.star(); break;
  }
  return pair(f.star(), u) == pair(f, rhs);
}

}  // namespace qcs
