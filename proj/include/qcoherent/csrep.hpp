#pragma once

// Spin-j representations, the evaluated universal T-matrix, coherent states
// and the Fock-Bargmann realisation. Vectors carry AlgElement components with
// formal square-root prefactors; every bilinear quantity squares them out.

#include "qcoherent/haar.hpp"
#include "qcoherent/ncalg.hpp"
#include "qcoherent/radical.hpp"

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcs {

using AlgRad = RadicalCombination<AlgElement>;
using RepMatrix = std::vector<std::vector<RadSum>>;

inline RepMatrix rep_zero(int dim) { return RepMatrix(static_cast<std::size_t>(dim), std::vector<RadSum>(static_cast<std::size_t>(dim))); }

inline RepMatrix rep_mul(const RepMatrix& a, const RepMatrix& b) {
  const auto n = a.size();
  RepMatrix r = rep_zero(static_cast<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[k][j].is_zero()) continue;
        r[i][j] += RadSum::product(a[i][k], b[k][j], [](const Scalar& x, const Scalar& y) { return x * y; });
      }
    }
  return r;
}

inline RepMatrix rep_add(const RepMatrix& a, const RepMatrix& b, const Scalar& bscale = Scalar(1)) {
  RepMatrix r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r[i][j] += b[i][j] * bscale;
  return r;
}

inline bool rep_is_zero(const RepMatrix& a) {
  for (const auto& row : a)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

/// Spin-j representation on |j, -j + n>, n = 0..2j.
struct SpinRep {
  int twoj = 0;
  RepMatrix Jp, Jm;

  int dim() const { return twoj + 1; }
  HalfInt m_of(int n) const { return HalfInt::from_twice(2 * n - twoj); }

  static SpinRep build(int twoj) {
    if (twoj < 0) throw std::invalid_argument("spin must be non-negative");
    SpinRep r;
    r.twoj = twoj;
    r.Jp = rep_zero(twoj + 1);
    r.Jm = rep_zero(twoj + 1);
    const HalfInt j = HalfInt::from_twice(twoj);
    for (int n = 0; n <= twoj; ++n) {
      HalfInt m = r.m_of(n);
      if (n < twoj) r.Jp[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(n)] = RadSum(Scalar(1), RadicalScalar::sqrt(q_number(j - m) * q_number(j + m + HalfInt::integer(1))));
      if (n > 0) r.Jm[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n)] = RadSum(Scalar(1), RadicalScalar::sqrt(q_number(j + m) * q_number(j - m + HalfInt::integer(1))));
    }
    return r;
  }

  /// f(J0) for a diagonal function of the weight.
  template <class Fn>
  RepMatrix diagonal(Fn fn) const {
    RepMatrix r = rep_zero(dim());
    for (int n = 0; n <= twoj; ++n) r[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)] = RadSum(fn(m_of(n)));
    return r;
  }
  RepMatrix q_pow_J0(int c) const {
    return diagonal([c](HalfInt m) { return Scalar::q_pow(HalfInt::from_twice(c * m.twice)); });
  }
  RepMatrix bracket_J0() const {
    return diagonal([](HalfInt m) { return q_number(m); });
  }
  RepMatrix bracket_2J0() const {
    return diagonal([](HalfInt m) { return q_number(m + m); });
  }
  RepMatrix J0() const {
    return diagonal([](HalfInt m) { return Scalar(mpq_class(m.twice, 2)); });
  }
  RepMatrix identity() const {
    return diagonal([](HalfInt) { return Scalar(1); });
  }
};

struct CSVector {
  int twoj = 0;
  std::vector<AlgRad> comp;

  friend CSVector operator+(CSVector a, const CSVector& b) {
    for (std::size_t i = 0; i < a.comp.size(); ++i) a.comp[i] += b.comp[i];
    return a;
  }
  friend CSVector operator-(CSVector a, const CSVector& b) {
    for (std::size_t i = 0; i < a.comp.size(); ++i) a.comp[i] = a.comp[i] - b.comp[i];
    return a;
  }
  friend CSVector operator*(const Scalar& c, CSVector a) {
    for (auto& x : a.comp) x = x * c;
    return a;
  }
  bool is_zero() const {
    for (const auto& c : comp)
      if (!c.is_zero()) return false;
    return true;
  }
  /// Left multiplication of every component by an algebra element.
  CSVector left_multiply(const AlgElement& f) const {
    CSVector r = *this;
    for (auto& c : r.comp) c = c.map([&f](const AlgElement& g) { return f * g; });
    return r;
  }
  std::string str() const {
    std::string s;
    for (std::size_t n = 0; n < comp.size(); ++n) s += "[" + std::to_string(n) + "] " + comp[n].str() + "\n";
    return s;
  }
};

inline AlgRad alg_times_rad(const RadSum& r, const AlgElement& f) {
  return r.map([&f](const Scalar& c) { return f * c; });
}

inline AlgRad alg_product(const AlgRad& a, const AlgRad& b) {
  return AlgRad::product(a, b, [](const AlgElement& x, const AlgElement& y) { return x * y; });
}

inline AlgRad alg_star(const AlgRad& a) {
  return a.map([](const AlgElement& f) { return f.star(); });
}

/// Representation matrix acting on a vector with algebra-valued components.
inline CSVector act(const RepMatrix& m, const CSVector& v) {
  CSVector r{v.twoj, std::vector<AlgRad>(v.comp.size())};
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[i][k].is_zero() || v.comp[k].is_zero()) continue;
      r.comp[i] += AlgRad::product(m[i][k], v.comp[k], [](const Scalar& c, const AlgElement& f) { return f * c; });
    }
  return r;
}

/// Component n: q^{nj} [2j n]^{1/2} x^n e^{-jz}.
inline CSVector coherent_state(int twoj) {
  CSVector v{twoj, {}};
  for (int n = 0; n <= twoj; ++n)
    v.comp.emplace_back(Scalar::q_pow(HalfInt::from_twice(n * twoj)) * AlgElement::x(n) * AlgElement::E(-twoj),
                        RadicalScalar::sqrt(q_binomial(twoj, n)));
  return v;
}

/// The alternative ordering e^{-jz} sum q^{-nj} [2j n]^{1/2} x^n.
inline CSVector coherent_state_left_exponential(int twoj) {
  CSVector v{twoj, {}};
  for (int n = 0; n <= twoj; ++n)
    v.comp.emplace_back(AlgElement::E(-twoj) * (Scalar::q_pow(HalfInt::from_twice(-n * twoj)) * AlgElement::x(n)),
                        RadicalScalar::sqrt(q_binomial(twoj, n)));
  return v;
}

inline bool operator==(const CSVector& a, const CSVector& b) { return a.twoj == b.twoj && (a - b).is_zero(); }
inline std::ostream& operator<<(std::ostream& os, const CSVector& v) { return os << v.str(); }

/// <u| v> = sum_n (u_n)* v_n.
inline AlgRad inner(const CSVector& u, const CSVector& v) {
  AlgRad r;
  for (std::size_t n = 0; n < u.comp.size(); ++n) r += alg_product(alg_star(u.comp[n]), v.comp[n]);
  return r;
}

inline bool is_exactly(const AlgRad& r, const AlgElement& value) {
  return r.is_rational() && r.rational_part() == value;
}

/// (id (x) pi_j)(T): (sum_k x^k (J+ q^-J0)^k/(k)_{q^-2}!) E^{2 J0} (sum_m y^m (q^J0 J-)^m/(m)_{q^2}!).
inline std::vector<std::vector<AlgRad>> universal_T(int twoj) {
  SpinRep rep = SpinRep::build(twoj);
  const auto dim = static_cast<std::size_t>(rep.dim());
  RepMatrix P = rep_mul(rep.Jp, rep.q_pow_J0(-1));
  RepMatrix Q = rep_mul(rep.q_pow_J0(1), rep.Jm);
  using AMat = std::vector<std::vector<AlgRad>>;
  AMat A(dim, std::vector<AlgRad>(dim)), B = A, D = A;
  RepMatrix Pk = rep.identity(), Qk = rep.identity();
  for (int k = 0; k <= twoj; ++k) {
    Scalar fa = basic_factorial(k, Scalar::q_pow(-2)).inverse();
    Scalar fb = basic_factorial(k, Scalar::q_pow(2)).inverse();
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        if (!Pk[i][j].is_zero()) A[i][j] += alg_times_rad(Pk[i][j] * fa, AlgElement::x(k));
        if (!Qk[i][j].is_zero()) B[i][j] += alg_times_rad(Qk[i][j] * fb, AlgElement::y(k));
      }
    Pk = rep_mul(Pk, P);
    Qk = rep_mul(Qk, Q);
  }
  for (std::size_t n = 0; n < dim; ++n) D[n][n] = AlgRad(AlgElement::E(rep.m_of(static_cast<int>(n)).twice));
  auto mul = [dim](const AMat& a, const AMat& b) {
    AMat r(dim, std::vector<AlgRad>(dim));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) {
        if (a[i][k].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j)
          if (!b[k][j].is_zero()) r[i][j] += alg_product(a[i][k], b[k][j]);
      }
    return r;
  };
  return mul(mul(A, D), B);
}

/// (2j+1)_{q^2} H[|x,z><x,z|] as a matrix of radical sums.
inline std::vector<std::vector<RadSum>> resolution_matrix(int twoj) {
  CSVector cs = coherent_state(twoj);
  const Scalar scale = basic_number(twoj + 1, Scalar::q_pow(2));
  std::vector<std::vector<RadSum>> r(cs.comp.size(), std::vector<RadSum>(cs.comp.size()));
  for (std::size_t n = 0; n < cs.comp.size(); ++n)
    for (std::size_t m = 0; m < cs.comp.size(); ++m) {
      AlgRad entry = alg_product(cs.comp[n], alg_star(cs.comp[m]));
      r[n][m] = entry.map([&scale](const AlgElement& f) { return haar(f) * scale; });
    }
  return r;
}

/// An operator written as sum_i coef_i * rep_i, coefficients multiplying from the left.
struct CoefOperator {
  std::vector<std::pair<AlgElement, RepMatrix>> terms;
  CSVector apply_to(const CSVector& v) const {
    CSVector r{v.twoj, std::vector<AlgRad>(v.comp.size())};
    for (const auto& [c, m] : terms) r = r + act(m, v).left_multiply(c);
    return r;
  }
};

/// Printed forms of the generator actions on the coherent state.
struct ActionForms {
  static CSVector jplus(int twoj) {
    CSVector v{twoj, std::vector<AlgRad>(static_cast<std::size_t>(twoj + 1))};
    for (int n = 1; n <= twoj; ++n)
      v.comp[static_cast<std::size_t>(n)] = AlgRad(Scalar::q_pow(HalfInt::from_twice((n - 1) * twoj)) * q_number(n) * AlgElement::x(n - 1) * AlgElement::E(-twoj),
                                                   RadicalScalar::sqrt(q_binomial(twoj, n)));
    return v;
  }
  static CSVector jminus(int twoj) {
    CSVector v{twoj, std::vector<AlgRad>(static_cast<std::size_t>(twoj + 1))};
    for (int n = 0; n <= twoj; ++n)
      v.comp[static_cast<std::size_t>(n)] = AlgRad(Scalar::q_pow(HalfInt::from_twice((n + 1) * twoj)) * q_number(twoj - n) * AlgElement::x(n + 1) * AlgElement::E(-twoj),
                                                   RadicalScalar::sqrt(q_binomial(twoj, n)));
    return v;
  }
  static CSVector bracket_j0(int twoj) {
    CSVector v{twoj, std::vector<AlgRad>(static_cast<std::size_t>(twoj + 1))};
    for (int n = 0; n <= twoj; ++n)
      v.comp[static_cast<std::size_t>(n)] = AlgRad(Scalar::q_pow(HalfInt::from_twice(n * twoj)) * q_number(HalfInt::from_twice(2 * n - twoj)) * AlgElement::x(n) * AlgElement::E(-twoj),
                                                   RadicalScalar::sqrt(q_binomial(twoj, n)));
    return v;
  }
};

/// J- + (1 + q^{2j}) x [J0] - q^{2j} x^2 J+
inline CoefOperator annihilator(const SpinRep& rep) {
  const Scalar q2j = Scalar::q_pow(rep.twoj);
  return CoefOperator{{{AlgElement(1), rep.Jm},
                       {(Scalar(1) + q2j) * AlgElement::x(), rep.bracket_J0()},
                       {-q2j * AlgElement::x(2), rep.Jp}}};
}

/// Gamma = (1 - (q^j + q^-j) zeta) q^J0 [J0] - (1 - q^j zeta) x q^J0 J+ + q^{-j-1} e^{-z} y q^J0 J-
inline CoefOperator gamma_operator(const SpinRep& rep) {
  const HalfInt j = HalfInt::from_twice(rep.twoj);
  const Scalar qj = Scalar::q_pow(j), qmj = Scalar::q_pow(-j);
  AlgElement zeta = AlgElement::Z();
  RepMatrix K = rep.q_pow_J0(1);
  return CoefOperator{{{AlgElement(1) - (qj + qmj) * zeta, rep_mul(K, rep.bracket_J0())},
                       {-((AlgElement(1) - qj * zeta) * AlgElement::x()), rep_mul(K, rep.Jp)},
                       {Scalar::q_pow(-j - HalfInt::integer(1)) * AlgElement::E(-2) * AlgElement::y(), rep_mul(K, rep.Jm)}}};
}

/// <x,z| M |x,z>
inline AlgRad expectation(const CSVector& cs, const RepMatrix& m) { return inner(cs, act(m, cs)); }

// ---- Fock-Bargmann realisation ----

/// Psi^j_m = q^{-j(j+m)-(j-m)} [2j, j+m]^{1/2} x^{j+m}; index n = j + m.
inline AlgRad bargmann_basis(int twoj, int n) {
  // exponent -j(j+m) - (j-m) with j+m = n, j-m = 2j-n, in half-units: -(twoj*n)/2 - (twoj - n)
  HalfInt e = HalfInt::from_twice(-twoj * n - 2 * (twoj - n));
  return AlgRad(Scalar::q_pow(e) * AlgElement::x(n), RadicalScalar::sqrt(q_binomial(twoj, n)));
}

/// (f, g) = (2j+1)_{q^2} H[f* e^{-jz*} e^{-jz} g]
inline RadSum bargmann_inner(int twoj, const AlgRad& f, const AlgRad& g) {
  static thread_local std::map<int, AlgElement> weight_cache;
  auto it = weight_cache.find(twoj);
  if (it == weight_cache.end()) it = weight_cache.emplace(twoj, AlgElement::E(-twoj).star() * AlgElement::E(-twoj)).first;
  const AlgElement& w = it->second;
  const Scalar scale = basic_number(twoj + 1, Scalar::q_pow(2));
  AlgRad integrand = alg_product(alg_star(f).map([&w](const AlgElement& a) { return a * w; }), g);
  return integrand.map([&scale](const AlgElement& a) { return haar(a) * scale; });
}

/// Polynomial in x with radical coefficients, for the differential-operator realisation.
using PolyRad = RadicalCombination<ScalarPoly>;

inline PolyRad bargmann_poly(int twoj, int n) {
  HalfInt e = HalfInt::from_twice(-twoj * n - 2 * (twoj - n));
  return PolyRad(ScalarPoly::monomial(Scalar::q_pow(e), n), RadicalScalar::sqrt(q_binomial(twoj, n)));
}

/// J+ = ((2j)_{q^2} x - x^2 D_{q^2}) q^{3/2 - 3j - J0},  J- = D_{q^2} q^{-1/2 + j - J0},  J0 = x d - j.
struct BargmannOps {
  int twoj;

  /// Apply q^{c - J0} to a polynomial, c in half-units.
  ScalarPoly qshift(const ScalarPoly& p, int c_twice) const {
    std::vector<Scalar> out(p.size());
    for (std::size_t n = 0; n < p.size(); ++n) {
      int m_twice = 2 * static_cast<int>(n) - twoj;
      out[n] = p[n] * Scalar::q_pow(HalfInt::from_twice(c_twice - m_twice));
    }
    return ScalarPoly(std::move(out));
  }
  ScalarPoly jplus(const ScalarPoly& p) const {
    const Scalar q2 = Scalar::q_pow(2);
    ScalarPoly t = qshift(p, 3 - 3 * twoj);
    ScalarPoly d = q_derivative(t, q2);
    return ScalarPoly::monomial(basic_number(twoj, q2), 1) * t - ScalarPoly::monomial(Scalar(1), 2) * d;
  }
  ScalarPoly jminus(const ScalarPoly& p) const { return q_derivative(qshift(p, -1 + twoj), Scalar::q_pow(2)); }
  ScalarPoly j0(const ScalarPoly& p) const {
    std::vector<Scalar> out(p.size());
    for (std::size_t n = 0; n < p.size(); ++n) out[n] = p[n] * Scalar(mpq_class(2 * static_cast<int>(n) - twoj, 2));
    return ScalarPoly(std::move(out));
  }
  PolyRad apply(const PolyRad& v, ScalarPoly (BargmannOps::*op)(const ScalarPoly&) const) const {
    return v.map([this, op](const ScalarPoly& p) { return (this->*op)(p); });
  }
};

inline AlgRad poly_to_alg(const PolyRad& p) {
  return p.map([](const ScalarPoly& f) {
    AlgElement r;
    for (std::size_t n = 0; n < f.size(); ++n)
      if (!f[n].is_zero()) r += f[n] * AlgElement::x(static_cast<int>(n));
    return r;
  });
}

}  // namespace qcs
