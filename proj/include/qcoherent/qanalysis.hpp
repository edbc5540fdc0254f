#pragma once

// q-analysis: bracket and basic numbers, q-binomials, q-shifted factorials,
// basic hypergeometric series, the q-derivative and the Jackson integral.
// Exact variants work in Q(s); numeric variants in double precision.

#include "qcoherent/linrat.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qcs {

struct NumericConfig {
  double q_value = 0.7;
  double tolerance = 1e-10;
  int series_cap = 4000;

  double s_value() const { return std::sqrt(q_value); }
  void validate() const {
    if (!(q_value > 0.0 && q_value < 1.0)) throw std::invalid_argument("q must lie in (0,1)");
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (series_cap <= 0) throw std::invalid_argument("series cap must be positive");
  }
};

/// [x]_q = (q^x - q^-x)/(q - q^-1) for half-integer x.
inline Scalar q_number(HalfInt x) {
  if (x.twice == 0) return Scalar();
  if (x.is_integer()) {
    int n = x.as_int();
    int a = n < 0 ? -n : n;
    std::vector<mpz_class> c(static_cast<std::size_t>(4 * (a - 1) + 1), mpz_class(0));
    for (int k = 0; k < a; ++k) c[static_cast<std::size_t>(4 * k)] = 1;
    Scalar r = Scalar::laurent(-2 * (a - 1), std::move(c));
    return n < 0 ? -r : r;
  }
  return (Scalar::q_pow(x) - Scalar::q_pow(-x)) / (Scalar::q() - Scalar::q_pow(-1));
}
inline Scalar q_number(int n) { return q_number(HalfInt::integer(n)); }

/// (n)_base = (1 - base^n)/(1 - base); equals n when base = 1.
inline Scalar basic_number(int n, const Scalar& base) {
  if (base.is_one()) return Scalar(n);
  if (n == 0) return Scalar();
  if (n > 0) {
    Scalar r, p(1);
    for (int k = 0; k < n; ++k) {
      r += p;
      p *= base;
    }
    return r;
  }
  return (Scalar(1) - base.pow(n)) / (Scalar(1) - base);
}

inline Scalar q_factorial(int n) {
  Scalar r(1);
  for (int k = 2; k <= n; ++k) r *= q_number(k);
  return r;
}
inline Scalar basic_factorial(int n, const Scalar& base) {
  Scalar r(1);
  for (int k = 2; k <= n; ++k) r *= basic_number(k, base);
  return r;
}

inline Scalar q_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) throw std::out_of_range("q_binomial: indices out of range");
  Scalar r(1);
  for (int i = 0; i < k; ++i) r = r * q_number(n - i) / q_number(i + 1);
  return r;
}

inline mpz_class classical_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) throw std::out_of_range("classical_binomial: indices out of range");
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// (a; base)_n for finite n >= 0.
inline Scalar q_shifted(const Scalar& a, const Scalar& base, int n) {
  if (n < 0) throw std::out_of_range("q_shifted: negative order");
  Scalar r(1), ab = a;
  for (int k = 0; k < n; ++k) {
    r *= Scalar(1) - ab;
    ab *= base;
  }
  return r;
}

/// (g T; base)_n as a polynomial in T: prod_k (1 - g base^k T).
inline ScalarPoly q_shifted_poly(const Scalar& g, const Scalar& base, int n) {
  ScalarPoly r(Scalar(1));
  Scalar c = g;
  for (int k = 0; k < n; ++k) {
    r *= ScalarPoly(std::vector<Scalar>{Scalar(1), -c});
    c *= base;
  }
  return r;
}

/// 1 / (g T; base)_n as a LinRat.
inline LinRat inv_q_shifted(const Scalar& g, const Scalar& base, int n) {
  LinRat r(Scalar(1));
  Scalar c = g;
  for (int k = 0; k < n; ++k) {
    r *= LinRat::inv_linear(-c);
    c *= base;
  }
  return r;
}

namespace numeric {

inline double q_shifted(double a, double base, int n) {
  double r = 1.0, ab = a;
  for (int k = 0; k < n; ++k) {
    r *= 1.0 - ab;
    ab *= base;
  }
  return r;
}

/// (a; base)_infinity, truncated once the factor is within tolerance of 1.
inline double q_shifted_inf(double a, double base, const NumericConfig& cfg) {
  if (!(std::fabs(base) < 1.0)) throw std::domain_error("q_shifted_inf: |base| must be < 1");
  double r = 1.0, ab = a;
  for (int k = 0; k < cfg.series_cap; ++k) {
    r *= 1.0 - ab;
    ab *= base;
    if (std::fabs(ab) < std::numeric_limits<double>::epsilon() * 1e-3) return r;
  }
  return r;
}

/// r phi s (upper; lower; base, z), summed until |term| < tol * |sum|.
inline double basic_hypergeometric(const std::vector<double>& upper, const std::vector<double>& lower, double base, double z,
                                   const NumericConfig& cfg) {
  if (!(std::fabs(base) < 1.0)) throw std::domain_error("basic_hypergeometric: |base| must be < 1");
  const int r = static_cast<int>(upper.size());
  const int s = static_cast<int>(lower.size());
  const int power = 1 + s - r;
  double sum = 0.0, term = 1.0;
  double prev_abs = std::numeric_limits<double>::infinity();
  int growth = 0;
  for (int n = 0; n < cfg.series_cap; ++n) {
    sum += term;
    if (term == 0.0 || (n > 2 && std::fabs(term) < 1e-17 * std::max(1.0, std::fabs(sum)))) return sum;
    double qn = std::pow(base, n);
    double ratio = z / (1.0 - base * qn);
    for (double a : upper) ratio *= 1.0 - a * qn;
    for (double b : lower) ratio /= 1.0 - b * qn;
    if (power != 0) ratio *= std::pow(-qn, power);
    double next = term * ratio;
    if (std::fabs(next) > prev_abs && std::fabs(next) > std::fabs(term)) {
      if (++growth > 50) throw std::domain_error("basic_hypergeometric: divergent series");
    }
    prev_abs = std::fabs(term);
    term = next;
  }
  throw std::domain_error("basic_hypergeometric: series cap reached before convergence");
}

}  // namespace numeric

/// Exact partial sum of r phi s up to order `order`.
inline Scalar basic_hypergeometric_truncated(const std::vector<Scalar>& upper, const std::vector<Scalar>& lower,
                                             const Scalar& base, const Scalar& z, int order) {
  const int power = 1 + static_cast<int>(lower.size()) - static_cast<int>(upper.size());
  Scalar sum, zn(1);
  for (int n = 0; n <= order; ++n) {
    Scalar t(1);
    for (const auto& a : upper) t *= q_shifted(a, base, n);
    for (const auto& b : lower) t /= q_shifted(b, base, n);
    t /= q_shifted(base, base, n);
    if (power != 0) {
      Scalar sign = (n % 2 == 0) ? Scalar(1) : Scalar(-1);
      Scalar f = sign * base.pow(n * (n - 1) / 2);
      t *= f.pow(power);
    }
    sum += t * zn;
    zn *= z;
  }
  return sum;
}

/// D_base f with f a polynomial: x^n -> (n)_base x^{n-1}.
inline ScalarPoly q_derivative(const ScalarPoly& f, const Scalar& base) {
  std::vector<Scalar> c(f.size() > 0 ? f.size() - 1 : 0);
  for (std::size_t n = 1; n < f.size(); ++n) c[n - 1] = f[n] * basic_number(static_cast<int>(n), base);
  return ScalarPoly(std::move(c));
}

/// int_0^upper f(t) d_base t for polynomial f.
inline Scalar jackson_integral(const ScalarPoly& f, const Scalar& base, const Scalar& upper) {
  Scalar r, up = upper;
  for (std::size_t n = 0; n < f.size(); ++n) {
    if (!f[n].is_zero()) r += f[n] * up / basic_number(static_cast<int>(n) + 1, base);
    up *= upper;
  }
  return r;
}

// ---- finite sum identities behind the norm and Bargmann normalisation ----

struct SumIdentityValue {
  Scalar lhs, rhs;
  bool holds() const { return lhs == rhs; }
};

/// (zeta;q)_m = sum_k q^{mk} (q^-m;q)_k/(q;q)_k zeta^k, compared coefficientwise.
inline std::pair<ScalarPoly, ScalarPoly> sum_identity_shifted_expansion(int m) {
  const Scalar q = Scalar::q();
  ScalarPoly lhs = q_shifted_poly(Scalar(1), q, m);
  std::vector<Scalar> c;
  for (int k = 0; k <= m; ++k) c.push_back(q.pow(m * k) * q_shifted(q.pow(-m), q, k) / q_shifted(q, q, k));
  return {lhs, ScalarPoly(std::move(c))};
}

/// sum_{k<=m-n} q^{(m-n+1)k}/(n+k+1)_q (q^{n-m};q)_k/(q;q)_k
///   = (-1)^n q^{-mn+n(n-1)/2}/(m+1)_q (q;q)_n/(q^-m;q)_n
inline SumIdentityValue sum_identity_truncated(int m, int n) {
  const Scalar q = Scalar::q();
  Scalar lhs;
  for (int k = 0; k <= m - n; ++k)
    lhs += q.pow((m - n + 1) * k) / basic_number(n + k + 1, q) * q_shifted(q.pow(n - m), q, k) / q_shifted(q, q, k);
  Scalar rhs = Scalar::s_pow(-2 * m * n + n * (n - 1)) / basic_number(m + 1, q) * q_shifted(q, q, n) / q_shifted(q.pow(-m), q, n);
  if (n % 2 != 0) rhs = -rhs;
  return {lhs, rhs};
}

/// With a = j+m, b = j-m:
/// sum_{k<=b} (q^-b;q)_k/(q;q)_k q^{a+k}/(a+k+1)_q = q^{ab} (a)_q!(b)_q!/(a+b)_q! q^{a+b}/(a+b+1)_q
inline SumIdentityValue sum_identity_bargmann(int a, int b) {
  const Scalar q = Scalar::q();
  Scalar lhs;
  for (int k = 0; k <= b; ++k) lhs += q_shifted(q.pow(-b), q, k) / q_shifted(q, q, k) * q.pow(a + k) / basic_number(a + k + 1, q);
  Scalar rhs = q.pow(a * b) * basic_factorial(a, q) * basic_factorial(b, q) / basic_factorial(a + b, q) * q.pow(a + b) / basic_number(a + b + 1, q);
  return {lhs, rhs};
}

namespace numeric {

/// Terminating 1phi1(q^{-4j}; q^{-4j} zeta; q^2, zeta) against 1/(q^{-4j} zeta; q^2)_{2j}.
inline std::pair<double, double> norm_series_vs_product(int twoj, double q, double zeta, const NumericConfig& cfg) {
  const double q2 = q * q, a = std::pow(q, -2.0 * twoj), c = a * zeta;
  double series = basic_hypergeometric({a}, {c}, q2, zeta, cfg);
  return {series, 1.0 / q_shifted(c, q2, twoj)};
}

}  // namespace numeric

/// Polynomial evaluated at base * x (the substitution in the Leibniz rule).
inline ScalarPoly dilate(const ScalarPoly& f, const Scalar& c) { return f.scaled(c); }

namespace numeric {

/// (1 - b) U sum_k f(U b^k) b^k for a rational f in one variable.
inline double jackson_integral(const LinRat& f, double s, double base, double upper, const NumericConfig& cfg) {
  if (!(base > 0.0 && base < 1.0)) throw std::domain_error("jackson_integral: base must lie in (0,1)");
  double sum = 0.0, bk = 1.0;
  for (int k = 0; k < cfg.series_cap; ++k) {
    double x = upper * bk;
    for (const auto& [g, e] : f.den()) {
      (void)e;
      if (std::fabs(1.0 + g.eval(s) * x) < 1e-14) throw std::domain_error("jackson_integral: pole on the Jackson lattice");
    }
    double term = f.eval(s, x) * bk;
    sum += term;
    if (k > 4 && std::fabs(term) < cfg.tolerance * 1e-6 * std::max(1.0, std::fabs(sum))) break;
    bk *= base;
  }
  return (1.0 - base) * upper * sum;
}

}  // namespace numeric

}  // namespace qcs
