#pragma once

// The tensor square A (x) A for overlap computations. Elements are kept as
// sums of pure tensors and multiplied legwise; comparison goes through a
// canonical form keyed by (Mono, Mono) with coefficients rational in two
// commuting variables zeta_1, zeta_2 over a common per-variable denominator.

#include "qcoherent/csrep.hpp"
#include "qcoherent/ncalg.hpp"

#include <map>
#include <utility>
#include <vector>

namespace qcs {

struct BiRat {
  std::map<std::pair<int, int>, Scalar> num;
  LinRat::Den d1, d2;

  static BiRat pure(const LinRat& a, const LinRat& b) {
    BiRat r;
    r.d1 = a.den();
    r.d2 = b.den();
    for (std::size_t i = 0; i < a.num().size(); ++i)
      for (std::size_t j = 0; j < b.num().size(); ++j) {
        Scalar c = a.num()[i] * b.num()[j];
        if (!c.is_zero()) r.num[{static_cast<int>(i), static_cast<int>(j)}] += c;
      }
    return r;
  }

  bool is_zero() const {
    for (const auto& [k, v] : num)
      if (!v.is_zero()) return false;
    return true;
  }

  friend BiRat operator+(const BiRat& a, const BiRat& b) {
    auto join = [](LinRat::Den x, const LinRat::Den& y) {
      for (const auto& [g, e] : y) x[g] = std::max(x[g], e);
      return x;
    };
    BiRat r;
    r.d1 = join(a.d1, b.d1);
    r.d2 = join(a.d2, b.d2);
    auto lift = [&r](const BiRat& x) {
      ScalarPoly f1 = LinRat::cofactor(r.d1, x.d1), f2 = LinRat::cofactor(r.d2, x.d2);
      for (const auto& [ij, c] : x.num)
        for (std::size_t u = 0; u < f1.size(); ++u)
          for (std::size_t v = 0; v < f2.size(); ++v) {
            Scalar t = c * f1[u] * f2[v];
            if (!t.is_zero()) r.num[{ij.first + static_cast<int>(u), ij.second + static_cast<int>(v)}] += t;
          }
    };
    lift(a);
    lift(b);
    for (auto it = r.num.begin(); it != r.num.end();) it = it->second.is_zero() ? r.num.erase(it) : std::next(it);
    return r;
  }
};

class AlgTensor {
 public:
  using Pure = std::pair<AlgElement, AlgElement>;

  AlgTensor() = default;
  static AlgTensor pure(AlgElement a, AlgElement b) {
    AlgTensor t;
    t.terms_.emplace_back(std::move(a), std::move(b));
    return t;
  }

  const std::vector<Pure>& terms() const { return terms_; }

  friend AlgTensor operator+(AlgTensor a, const AlgTensor& b) {
    a.terms_.insert(a.terms_.end(), b.terms_.begin(), b.terms_.end());
    return a;
  }
  AlgTensor operator-() const {
    AlgTensor r = *this;
    for (auto& t : r.terms_) t.first = -t.first;
    return r;
  }
  friend AlgTensor operator-(const AlgTensor& a, const AlgTensor& b) { return a + (-b); }
  AlgTensor& operator+=(const AlgTensor& b) { return *this = *this + b; }
  friend AlgTensor operator*(AlgTensor a, const Scalar& c) {
    for (auto& t : a.terms_) t.first = t.first * c;
    return a;
  }
  friend AlgTensor operator*(const AlgTensor& a, const AlgTensor& b) {
    AlgTensor r;
    for (const auto& [a1, a2] : a.terms_)
      for (const auto& [b1, b2] : b.terms_) r.terms_.emplace_back(a1 * b1, a2 * b2);
    return r;
  }
  AlgTensor pow(int n) const {
    AlgTensor r = pure(AlgElement(1), AlgElement(1));
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  std::map<std::pair<Mono, Mono>, BiRat> canonical() const {
    std::map<std::pair<Mono, Mono>, BiRat> out;
    for (const auto& [f, g] : terms_)
      for (const auto& [m1, r1] : f.terms())
        for (const auto& [m2, r2] : g.terms()) {
          auto key = std::make_pair(m1, m2);
          out[key] = out[key] + BiRat::pure(r1, r2);
        }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
  }
  bool is_zero() const { return canonical().empty(); }

  /// The multiplication map a (x) b -> a b.
  AlgElement multiply_legs() const {
    AlgElement r;
    for (const auto& [f, g] : terms_) r += f * g;
    return r;
  }

 private:
  std::vector<Pure> terms_;
};

inline bool operator==(const AlgTensor& a, const AlgTensor& b) { return (a - b).is_zero(); }

using TensorRad = RadicalCombination<AlgTensor>;

/// Definition: sum_n <x_1,z_1| n> (x) <n |x_2,z_2>, star on the first leg.
inline TensorRad overlap_from_states(int twoj) {
  CSVector cs = coherent_state(twoj);
  TensorRad r;
  for (const auto& c : cs.comp)
    r += TensorRad::product(alg_star(c), c, [](const AlgElement& a, const AlgElement& b) { return AlgTensor::pure(a, b); });
  return r;
}

struct OverlapForm {
  AlgTensor prefactor, sum;
};

/// (e^{-j z_1^*} (x) e^{-j z_2}) and sum_n [2j n] (x_1^* (x) x_2)^n.
inline OverlapForm overlap_closed_form(int twoj) {
  OverlapForm f;
  f.prefactor = AlgTensor::pure(AlgElement::E(-twoj).star(), AlgElement::E(-twoj));
  AlgTensor base = AlgTensor::pure(AlgElement::x().star(), AlgElement::x());
  for (int n = 0; n <= twoj; ++n) f.sum += base.pow(n) * q_binomial(twoj, n);
  return f;
}

}  // namespace qcs
