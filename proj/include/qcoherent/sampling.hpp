#pragma once

// Small random elements for property checks.

#include "qcoherent/ncalg.hpp"
#include "qcoherent/scalar.hpp"

#include <random>
#include <vector>

namespace qcs::sampling {

inline Scalar random_laurent(std::mt19937& rng, int max_terms = 3, int span = 4) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> low(-span, span);
  std::uniform_int_distribution<int> len(1, max_terms);
  std::vector<mpz_class> c(static_cast<std::size_t>(len(rng)));
  for (auto& x : c) x = coef(rng);
  return Scalar::laurent(low(rng), std::move(c));
}

inline Scalar random_scalar(std::mt19937& rng) {
  Scalar n = random_laurent(rng);
  Scalar d = random_laurent(rng);
  if (d.is_zero()) d = Scalar(1);
  return n / d;
}

/// Up to `terms` monomials with k, m <= 2, |n| <= 2 and coefficients that are
/// small polynomials in Z.
inline AlgElement random_element(std::mt19937& rng, int terms = 2) {
  std::uniform_int_distribution<int> deg(0, 2), ex(-2, 2), side(0, 1), zdeg(0, 1), coef(-2, 2);
  AlgElement f;
  for (int t = 0; t < terms; ++t) {
    int d = deg(rng);
    Mono m{side(rng) ? d : 0, ex(rng), 0};
    if (m.k == 0) m.m = d;
    std::vector<Scalar> c(static_cast<std::size_t>(zdeg(rng) + 1));
    for (auto& v : c) v = Scalar(coef(rng)) * Scalar::s_pow(2 * coef(rng));
    f += AlgElement(m, LinRat(ScalarPoly(std::move(c))));
  }
  return f;
}

}  // namespace qcs::sampling
