#pragma once

// The q-sphere from coherent-state expectation values, the 3D left-covariant
// omega relations, and a complex-coordinate calculus in x, x*, dx, dx*.

#include "qcoherent/csrep.hpp"
#include "qcoherent/ncalg.hpp"
#include "qcoherent/uq.hpp"

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace qcs {

// ---- q-sphere ----

struct SphereCoords {
  AlgRad xm1, x0, x1;
};

inline RadicalScalar sqrt_bracket2() { return RadicalScalar::sqrt(q_number(2)); }

/// x_1 = -q sqrt[2] (1 - zeta) x*,  x_0 = 1 - q^-1 [2] zeta,  x_-1 = sqrt[2] x (1 - zeta).
inline SphereCoords sphere_coords() {
  const AlgElement one_minus_z = AlgElement(1) - AlgElement::Z();
  SphereCoords c;
  c.x1 = AlgRad(-Scalar::q() * (one_minus_z * AlgElement::x().star()), sqrt_bracket2());
  c.x0 = AlgRad(AlgElement(1) - Scalar::q_pow(-1) * q_number(2) * AlgElement::Z());
  c.xm1 = AlgRad(AlgElement::x() * one_minus_z, sqrt_bracket2());
  return c;
}

/// x_-1 = sqrt(1 + q^2) ab,  x_0 = 1 + (q + q^-1) bc,  x_1 = sqrt(1 + q^-2) dc.
inline SphereCoords embedded_sphere_coords() {
  auto g = GaussGenerators::make();
  SphereCoords c;
  c.xm1 = AlgRad(g.a * g.b, RadicalScalar::sqrt(Scalar(1) + Scalar::q_pow(2)));
  c.x0 = AlgRad(AlgElement(1) + (Scalar::q() + Scalar::q_pow(-1)) * (g.b * g.c));
  c.x1 = AlgRad(g.d * g.c, RadicalScalar::sqrt(Scalar(1) + Scalar::q_pow(-2)));
  return c;
}

inline AlgRad rad_mul(const AlgRad& a, const AlgRad& b) { return alg_product(a, b); }

/// The four defining relations, each rearranged to "= 0".
inline std::vector<std::pair<std::string, AlgRad>> podles_residuals(const SphereCoords& c) {
  const Scalar q = Scalar::q(), qi = Scalar::q_pow(-1), w = Scalar(1) - Scalar::q_pow(-2);
  auto x0x0 = rad_mul(c.x0, c.x0);
  auto x1xm1 = rad_mul(c.x1, c.xm1), xm1x1 = rad_mul(c.xm1, c.x1);
  std::vector<std::pair<std::string, AlgRad>> out;
  out.emplace_back("x0^2 - q^-1 x1 x-1 - q x-1 x1 = 1", x0x0 - x1xm1 * qi - xm1x1 * q - AlgRad(AlgElement(1)));
  out.emplace_back("(1-q^-2) x0^2 + q^-1 x-1 x1 - q^-1 x1 x-1 = (1-q^-2) x0", x0x0 * w + xm1x1 * qi - x1xm1 * qi - c.x0 * w);
  out.emplace_back("x-1 x0 - q^-2 x0 x-1 = (1-q^-2) x-1", rad_mul(c.xm1, c.x0) - rad_mul(c.x0, c.xm1) * Scalar::q_pow(-2) - c.xm1 * w);
  out.emplace_back("x0 x1 - q^-2 x1 x0 = (1-q^-2) x1", rad_mul(c.x0, c.x1) - rad_mul(c.x1, c.x0) * Scalar::q_pow(-2) - c.x1 * w);
  return out;
}

/// x1* = -q x-1, x0* = x0, x-1* = -q^-1 x1.
inline std::vector<std::pair<std::string, AlgRad>> sphere_star_residuals(const SphereCoords& c) {
  return {{"x1* = -q x-1", alg_star(c.x1) + c.xm1 * Scalar::q()},
          {"x0* = x0", alg_star(c.x0) - c.x0},
          {"x-1* = -q^-1 x1", alg_star(c.xm1) + c.x1 * Scalar::q_pow(-1)}};
}

/// zeta (1 + q x*x) = q x*x and zeta (1 + q x x*) = q^3 x x*.
inline std::vector<std::pair<std::string, AlgElement>> zeta_xx_residuals() {
  const AlgElement x = AlgElement::x(), xs = x.star(), z = AlgElement::Z();
  const Scalar q = Scalar::q();
  return {{"zeta (1 + q x*x) - q x*x", z * (AlgElement(1) + q * (xs * x)) - q * (xs * x)},
          {"zeta (1 + q x x*) - q^3 x x*", z * (AlgElement(1) + q * (x * xs)) - q.pow(3) * (x * xs)}};
}

struct Expectations {
  AlgRad Xp, Xm, X0;
};

/// <x,z| J+ q^-J0 |x,z>, <x,z| q^-J0 J- |x,z>, <x,z| q^-J0 [J0] |x,z>.
inline Expectations expectation_values(int twoj) {
  SpinRep r = SpinRep::build(twoj);
  CSVector cs = coherent_state(twoj);
  RepMatrix qm = r.q_pow_J0(-1);
  return {expectation(cs, rep_mul(r.Jp, qm)), expectation(cs, rep_mul(qm, r.Jm)), expectation(cs, rep_mul(qm, r.bracket_J0()))};
}

inline Expectations expectation_closed_form(int twoj) {
  const HalfInt j = HalfInt::from_twice(twoj);
  const Scalar b2j = q_number(twoj);
  const AlgElement one_minus_z = AlgElement(1) - AlgElement::Z();
  return {AlgRad(b2j * (one_minus_z * AlgElement::x().star())), AlgRad(b2j * (AlgElement::x() * one_minus_z)),
          AlgRad(Scalar::q_pow(-2) * b2j * AlgElement::Z() - AlgElement(Scalar::q_pow(j) * q_number(j)))};
}

/// Rescaled expectation values; needs 2j > 0.
inline SphereCoords sphere_from_expectations(int twoj) {
  Expectations e = expectation_values(twoj);
  const HalfInt j = HalfInt::from_twice(twoj);
  const Scalar inv = q_number(twoj).inverse();
  SphereCoords c;
  c.x1 = e.Xp * (sqrt_bracket2() * (-Scalar::q() * inv));
  c.x0 = AlgRad(AlgElement(1)) - (e.X0 + AlgRad(AlgElement(Scalar::q_pow(j) * q_number(j)))) * (Scalar::q() * q_number(2) * inv);
  c.xm1 = e.Xm * (sqrt_bracket2() * inv);
  return c;
}

/// Commutative evaluation at real sample values (x, E, y); used for q -> 1 limits.
inline double eval_commutative(const AlgRad& f, double s, double xv, double Ev, double yv) {
  return eval_radical_sum(f, s, [&](const AlgElement& a) { return a.eval_commutative(s, xv, Ev, yv); });
}

/// |x0^2 - x1 x-1 - x-1 x1 - 1| on commuting samples; vanishes only as q -> 1.
inline double classical_sphere_defect(double q, double xv, double Ev, double yv) {
  const double s = std::sqrt(q);
  SphereCoords c = sphere_coords();
  double x1 = eval_commutative(c.x1, s, xv, Ev, yv), x0 = eval_commutative(c.x0, s, xv, Ev, yv), xm1 = eval_commutative(c.xm1, s, xv, Ev, yv);
  return std::fabs(x0 * x0 - 2.0 * x1 * xm1 - 1.0);
}

// ---- omega relations of the 3D left-covariant calculus ----

enum class Omega { w0, w1, w2 };

inline std::string to_string(Omega k) { return k == Omega::w0 ? "w0" : k == Omega::w1 ? "w1" : "w2"; }

/// omega_k g = lambda_k(g) g omega_k as printed for g in {a, b, c, d}; d^-1 by inversion.
inline Scalar omega_factor(Omega k, Sym s) {
  const int e = k == Omega::w1 ? 2 : 1;
  switch (s) {
    case Sym::a:
    case Sym::c:
      return Scalar::q_pow(e);
    case Sym::b:
    case Sym::d:
      return Scalar::q_pow(-e);
    case Sym::dinv:
      return omega_factor(k, Sym::d).inverse();
  }
  return Scalar(1);
}

/// g with omega_k f = g omega_k; x = q^-1/2 b d^-1, y = q^1/2 d^-1 c, E = d^-1.
inline AlgElement omega_pass(Omega k, const AlgElement& f) {
  const Scalar lx = omega_factor(k, Sym::b) * omega_factor(k, Sym::dinv);
  const Scalar ly = omega_factor(k, Sym::dinv) * omega_factor(k, Sym::c);
  const Scalar lE = omega_factor(k, Sym::dinv);
  const Scalar lz = omega_factor(k, Sym::b) * omega_factor(k, Sym::c);
  AlgElement out;
  for (const auto& [m, r] : f.terms()) out += AlgElement(m, r.scaled(lz)) * (lx.pow(m.k) * lE.pow(m.n) * ly.pow(m.m));
  return out;
}

// ---- complex calculus ----

enum class DPart { none = 0, dx = 1, dxs = 2, dxs_dx = 3 };

inline int degree(DPart d) { return d == DPart::none ? 0 : d == DPart::dxs_dx ? 2 : 1; }

/// Forms  sum g(t) M_p D  with t = x* x, M_p = x^p (p > 0) or x*^{-p} (p < 0), D a d-word.
class Form {
 public:
  using Key = std::pair<int, DPart>;

  Form() = default;
  Form(LinRat g, int p = 0, DPart d = DPart::none) { add(p, d, std::move(g)); }  // NOLINT
  static Form x(int k = 1) { return Form(LinRat(1), k); }
  static Form xs(int k = 1) { return Form(LinRat(1), -k); }
  static Form t() { return Form(LinRat::var()); }
  static Form dx() { return Form(LinRat(1), 0, DPart::dx); }
  static Form dxs() { return Form(LinRat(1), 0, DPart::dxs); }

  // Substitutions; each entry is (a, b) for t -> a t / (1 + b t).
  static std::pair<Scalar, Scalar> mu() { return {Scalar::q_pow(-2), omega()}; }
  static std::pair<Scalar, Scalar> nu() { return {Scalar::q_pow(2), -Scalar::q_pow(2) * omega()}; }
  static std::pair<Scalar, Scalar> sigma_dx() { return {Scalar::q_pow(-4), (Scalar(1) - Scalar::q_pow(-4)) * Scalar::q()}; }
  static std::pair<Scalar, Scalar> sigma_dxs() { return {Scalar::q_pow(4), (Scalar(1) - Scalar::q_pow(4)) * Scalar::q()}; }
  static Scalar omega() { return Scalar::q() - Scalar::q_pow(-1); }
  static LinRat f_plus() { return LinRat::inv_linear((Scalar(1) - Scalar::q_pow(4)) * Scalar::q()); }
  static LinRat f_minus() { return LinRat::inv_linear((Scalar(1) - Scalar::q_pow(-4)) * Scalar::q()); }
  /// dx dx* = C(t) dx* dx with C = -q^-2 f_-(t) (1 - q^2 w t)/(1 + w t).
  static LinRat dx_dxs_factor() {
    return LinRat(-Scalar::q_pow(-2)) * f_minus() * LinRat::linear(-Scalar::q_pow(2) * omega()) * LinRat::inv_linear(omega());
  }

  const std::map<Key, LinRat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_degree() const {
    int d = -1;
    for (const auto& [k, v] : terms_) d = std::max(d, degree(k.second));
    return d;
  }

  friend Form operator+(Form a, const Form& b) {
    for (const auto& [k, v] : b.terms_) a.add(k.first, k.second, v);
    return a;
  }
  Form operator-() const {
    Form r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
  }
  friend Form operator-(const Form& a, const Form& b) { return a + (-b); }
  Form& operator+=(const Form& b) { return *this = *this + b; }
  friend Form operator*(Form a, const Scalar& c) {
    if (c.is_zero()) return Form();
    for (auto& [k, v] : a.terms_) v = v * c;
    return a;
  }
  friend Form operator*(const Scalar& c, Form a) { return std::move(a) * c; }
  friend bool operator==(const Form& a, const Form& b) { return (a - b).is_zero(); }

  friend Form operator*(const Form& a, const Form& b) {
    Form r;
    for (const auto& [ka, ga] : a.terms_)
      for (const auto& [kb, gb] : b.terms_) r += term_product(ga, ka.first, ka.second, gb, kb.first, kb.second);
    return r;
  }

  Form pow(int n) const {
    Form r(LinRat(1));
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  /// Exterior derivative with d(x) = dx, d(x*) = dx*, graded Leibniz rule.
  Form d() const {
    Form r;
    for (const auto& [k, g] : terms_) {
      if (k.second == DPart::none) r += d_coefficient(g) * Form(LinRat(1), k.first) + Form(g) * d_power(k.first);
      else if (degree(k.second) == 1) r += (d_coefficient(g) * Form(LinRat(1), k.first) + Form(g) * d_power(k.first)) * Form(LinRat(1), 0, k.second);
    }
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, g] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + g.str("t") + ")";
      if (k.first > 0) s += " x^" + std::to_string(k.first);
      if (k.first < 0) s += " x*^" + std::to_string(-k.first);
      static const char* dn[] = {"", " dx", " dx*", " dx* dx"};
      s += dn[static_cast<int>(k.second)];
    }
    return s;
  }

 private:
  std::map<Key, LinRat> terms_;

  void add(int p, DPart d, LinRat g) {
    if (g.is_zero()) return;
    Key k{p, d};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, std::move(g));
      return;
    }
    it->second += g;
    if (it->second.is_zero()) terms_.erase(it);
  }

  static LinRat subst(const LinRat& g, std::pair<Scalar, Scalar> m, int times = 1) {
    LinRat r = g;
    for (int i = 0; i < times; ++i) r = r.mobius(m.first, m.second);
    return r;
  }

  /// M_p g(t) = g'(t) M_p.
  static LinRat pass_power(const LinRat& g, int p) {
    if (p > 0) return subst(g, mu(), p);
    if (p < 0) return subst(g, nu(), -p);
    return g;
  }

  /// M_p M_r = c(t) M_{p+r}.
  static std::pair<LinRat, int> power_product(int p, int r) {
    LinRat c(1);
    while (p != 0 && r != 0 && ((p > 0) != (r > 0))) {
      if (p > 0) {
        // x^p x* = mu^p(t) x^{p-1}
        c = c * subst(LinRat::var(), mu(), p);
        --p;
        ++r;
      } else {
        // x*^a x = nu^{a-1}(t) x*^{a-1}
        c = c * subst(LinRat::var(), nu(), -p - 1);
        ++p;
        --r;
      }
    }
    return {c, p + r};
  }

  static Form zero_product(const LinRat& g, int p, const LinRat& h, int r) {
    auto [c, s] = power_product(p, r);
    return Form(g * pass_power(h, p) * c, s);
  }

  /// D M_r = Z D for a single differential letter D.
  static Form cross_power(DPart d, int r) {
    Form z(LinRat(1));
    const int n = r > 0 ? r : -r;
    Form letter;
    if (d == DPart::dx) letter = r > 0 ? Form(LinRat(Scalar::q_pow(-2)), 1) : Form(LinRat(Scalar::q_pow(-2)) * f_minus(), -1);
    else letter = r > 0 ? Form(LinRat(Scalar::q_pow(2)) * pass_power(f_plus(), 1), 1) : Form(LinRat(Scalar::q_pow(2)), -1);
    for (int i = 0; i < n; ++i) z = z * letter;
    return z;
  }

  /// D Z = Z' D for a 0-form Z and a single differential letter D.
  static Form cross(DPart d, const Form& z) {
    Form out;
    const auto sig = d == DPart::dx ? sigma_dx() : sigma_dxs();
    for (const auto& [k, g] : z.terms_) out += Form(subst(g, sig)) * cross_power(d, k.first);
    return out;
  }

  static Form term_product(const LinRat& ga, int pa, DPart da, const LinRat& gb, int pb, DPart db) {
    if (degree(da) + degree(db) > 2) return Form();
    if (da == DPart::none && db == DPart::none) return zero_product(ga, pa, gb, pb);
    Form right(gb, pb);
    Form moved;
    if (da == DPart::none) moved = right;
    else if (da == DPart::dxs_dx) moved = cross(DPart::dxs, cross(DPart::dx, right));
    else moved = cross(da, right);
    Form left = Form(ga, pa) * moved;
    DPart out = DPart::none;
    LinRat extra(1);
    if (da == DPart::none) out = db;
    else if (db == DPart::none) out = da;
    else if (da == DPart::dx && db == DPart::dxs) {
      out = DPart::dxs_dx;
      extra = dx_dxs_factor();
    } else if (da == DPart::dxs && db == DPart::dx) {
      out = DPart::dxs_dx;
    } else {
      return Form();  // dx dx = dx* dx* = 0
    }
    if (!(extra == LinRat(1))) left = left * Form(extra);
    Form r;
    for (const auto& [k, g] : left.terms_) r.add(k.first, out, g);
    return r;
  }

  static Form dt() { return dxs() * x() + xs() * dx(); }

  static Form d_power(int p) {
    Form r;
    const int n = p > 0 ? p : -p;
    Form letter = p > 0 ? x() : xs(), dl = p > 0 ? dx() : dxs();
    for (int i = 0; i < n; ++i) r += letter.pow(i) * dl * letter.pow(n - 1 - i);
    return r;
  }

  static Form d_coefficient(const LinRat& g) {
    // g = N(t) prod (1 + c t)^{-e}
    std::vector<Form> factors;
    const ScalarPoly& num = g.num();
    Form dnum;
    for (std::size_t k = 1; k < num.size(); ++k) {
      if (num[k].is_zero()) continue;
      Form dk;
      for (std::size_t i = 0; i < k; ++i) dk += t().pow(static_cast<int>(i)) * dt() * t().pow(static_cast<int>(k - 1 - i));
      dnum += dk * num[k];
    }
    std::vector<LinRat> inv;
    for (const auto& [c, e] : g.den())
      for (int i = 0; i < e; ++i) inv.push_back(LinRat::inv_linear(c));
    LinRat den_all(1);
    for (const auto& f : inv) den_all *= f;
    Form r = dnum * Form(den_all);
    Form numf{LinRat(num)};
    for (std::size_t i = 0; i < inv.size(); ++i) {
      LinRat before(1), after(1);
      for (std::size_t j = 0; j < i; ++j) before *= inv[j];
      for (std::size_t j = i + 1; j < inv.size(); ++j) after *= inv[j];
      const Scalar c = inv[i].den().begin()->first;
      // d (1 + c t)^-1 = -(1 + c t)^-1 c dt (1 + c t)^-1
      Form dinv = Form(inv[i]) * dt() * Form(inv[i]) * (-c);
      r += numf * Form(before) * dinv * Form(after);
    }
    return r;
  }
};

inline std::ostream& operator<<(std::ostream& os, const Form& f) { return os << f.str(); }

/// d applied letterwise to a product of 0-form factors.
inline Form d_word(const std::vector<Form>& factors) {
  Form r;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Form term(LinRat(1));
    for (std::size_t j = 0; j < factors.size(); ++j) term = term * (j == i ? factors[j].d() : factors[j]);
    r += term;
  }
  return r;
}

/// d (x* x)^n as printed.
inline Form dxn_closed_form(int n) {
  const Scalar q = Scalar::q(), w = Form::omega();
  LinRat pref = LinRat(q / w) * LinRat::linear(w) * LinRat::inv_linear(q) * LinRat::var().pow(n - 1);
  LinRat cx = pref * (LinRat(-1) + LinRat(q.pow(2 * n)) * LinRat::inv_linear(-q.pow(2) * w, n));
  LinRat cxs = pref * (LinRat(1) - LinRat(q.pow(-2 * n)) * LinRat::inv_linear(w, n));
  return Form(cx, 1, DPart::dxs) + Form(cxs, -1, DPart::dx);
}

}  // namespace qcs
