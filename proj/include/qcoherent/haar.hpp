#pragma once

// Normalized bi-invariant integral: project onto the zeta-part, then
// H[zeta^n] = q^{2n} / (n+1)_{q^2}. Rational zeta-parts fall back to the
// Jackson sum (1 - q^2) sum_k r(q^{2k+2}) q^{2k}.

#include "qcoherent/ncalg.hpp"

#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcs {

struct HaarResult {
  enum class Mode { exact, numeric };
  Mode mode = Mode::exact;
  std::optional<Scalar> exact;
  double value = 0.0;
  int terms_used = 0;
};

inline Scalar haar_zeta_power(int n) {
  static thread_local std::vector<Scalar> memo;
  if (n < static_cast<int>(memo.size())) return memo[static_cast<std::size_t>(n)];
  for (int i = static_cast<int>(memo.size()); i <= n; ++i)
    memo.push_back(Scalar::q_pow(2 * i) / basic_number(i + 1, Scalar::q_pow(2)));
  return memo[static_cast<std::size_t>(n)];
}

/// Exact value on a polynomial zeta-part.
inline Scalar haar_polynomial(const ScalarPoly& r) {
  Scalar acc;
  for (std::size_t n = 0; n < r.size(); ++n)
    if (!r[n].is_zero()) acc += r[n] * haar_zeta_power(static_cast<int>(n));
  return acc;
}

class NonPolynomialZetaPart : public std::domain_error {
 public:
  explicit NonPolynomialZetaPart(const std::string& w) : std::domain_error(w) {}
};

inline Scalar haar(const AlgElement& f) {
  LinRat r = f.zeta_part();
  if (!r.is_polynomial()) throw NonPolynomialZetaPart("haar: zeta-part is not polynomial: " + r.str());
  return haar_polynomial(r.num());
}

/// int_0^1 r(q^2 zeta) d_{q^2} zeta through the Jackson integral.
inline Scalar haar_qintegral(const ScalarPoly& r) {
  const Scalar q2 = Scalar::q_pow(2);
  return jackson_integral(r.scaled(q2), q2, Scalar(1));
}

inline double haar_numeric_zeta(const LinRat& r, const NumericConfig& cfg, int* terms = nullptr) {
  const double s = cfg.s_value();
  const double q2 = cfg.q_value * cfg.q_value;
  double sum = 0.0, q2k = 1.0;
  int k = 0;
  for (; k < cfg.series_cap; ++k) {
    double zeta = q2k * q2;
    for (const auto& [g, e] : r.den()) {
      (void)e;
      if (std::fabs(1.0 + g.eval(s) * zeta) < 1e-13) throw std::domain_error("haar: pole on the Jackson lattice");
    }
    double term = r.eval(s, zeta) * q2k;
    sum += term;
    if (k > 3 && std::fabs(term) <= cfg.tolerance * 1e-4 * std::max(1.0, std::fabs(sum))) break;
    q2k *= q2;
  }
  if (terms) *terms = k + 1;
  return (1.0 - q2) * sum;
}

inline HaarResult haar_eval(const AlgElement& f, const NumericConfig& cfg) {
  HaarResult res;
  LinRat r = f.zeta_part();
  if (r.is_polynomial()) {
    res.exact = haar_polynomial(r.num());
    res.value = res.exact->eval(cfg.s_value());
    return res;
  }
  res.mode = HaarResult::Mode::numeric;
  res.value = haar_numeric_zeta(r, cfg, &res.terms_used);
  return res;
}

}  // namespace qcs
