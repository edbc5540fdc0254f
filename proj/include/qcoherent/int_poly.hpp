#pragma once

// Dense univariate polynomials over the integers (GMP), the storage layer
// underneath Scalar. Coefficient i multiplies s^i.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcs {

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(mpz_class c) {
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  explicit IntPoly(std::vector<mpz_class> c) : coeffs_(std::move(c)) { trim(); }

  static IntPoly monomial(mpz_class c, std::size_t degree) {
    IntPoly p;
    if (c == 0) return p;
    p.coeffs_.assign(degree + 1, mpz_class(0));
    p.coeffs_[degree] = std::move(c);
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const mpz_class& operator[](std::size_t i) const { return coeffs_[i]; }
  const mpz_class& lead() const { return coeffs_.back(); }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Number of trailing zero coefficients (power of s dividing the polynomial).
  std::size_t low_order() const {
    std::size_t k = 0;
    while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
    return k;
  }

  IntPoly shifted_down(std::size_t k) const {
    if (k == 0) return *this;
    IntPoly r;
    if (k >= coeffs_.size()) return r;
    r.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
    return r;
  }
  IntPoly shifted_up(std::size_t k) const {
    if (k == 0 || is_zero()) return *this;
    IntPoly r;
    r.coeffs_.assign(k, mpz_class(0));
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
  }

  mpz_class content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  void divide_exact(const mpz_class& d) {
    if (d == 1) return;
    for (auto& c : coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  void scale(const mpz_class& m) {
    if (m == 1) return;
    if (m == 0) {
      coeffs_.clear();
      return;
    }
    for (auto& c : coeffs_) c *= m;
  }
  void negate() {
    for (auto& c : coeffs_) c = -c;
  }

  /// Primitive part with positive leading coefficient.
  IntPoly primitive() const {
    IntPoly r = *this;
    if (r.is_zero()) return r;
    mpz_class c = r.content();
    if (r.lead() < 0) c = -c;
    r.divide_exact(c);
    return r;
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    IntPoly r = big;
    for (std::size_t i = 0; i < small.size(); ++i) r.coeffs_[i] += small.coeffs_[i];
    r.trim();
    return r;
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly nb = b;
    nb.negate();
    return a + nb;
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b.coeffs_[j] == 0) continue;
        mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
      }
    }
    r.trim();
    return r;
  }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Lexicographic order on (degree, coefficients); only used for map keys.
  friend bool operator<(const IntPoly& a, const IntPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
      int c = cmp(a.coeffs_[i], b.coeffs_[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  /// Exact division; returns false if b does not divide a over Z[s].
  static bool try_divide(const IntPoly& a, const IntPoly& b, IntPoly& quotient) {
    if (b.is_zero()) throw std::domain_error("IntPoly: division by zero polynomial");
    quotient = IntPoly();
    if (a.is_zero()) return true;
    if (a.degree() < b.degree()) return false;
    std::vector<mpz_class> rem = a.coeffs_;
    std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), mpz_class(0));
    const mpz_class& lb = b.lead();
    for (int i = a.degree(); i >= b.degree(); --i) {
      mpz_class& top = rem[static_cast<std::size_t>(i)];
      if (top == 0) continue;
      if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
      mpz_class f;
      mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
      std::size_t off = static_cast<std::size_t>(i - b.degree());
      q[off] = f;
      for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(rem[off + j].get_mpz_t(), f.get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    for (const auto& c : rem)
      if (c != 0) return false;
    quotient = IntPoly(std::move(q));
    return true;
  }

  static IntPoly divide(const IntPoly& a, const IntPoly& b) {
    IntPoly q;
    if (!try_divide(a, b, q)) throw std::logic_error("IntPoly: inexact division");
    return q;
  }

  /// Primitive gcd with positive leading coefficient (content is not included).
  static IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    if (a.is_constant() || b.is_constant()) return IntPoly(mpz_class(1));
    IntPoly pa = a.primitive();
    IntPoly pb = b.primitive();
    if (pa == pb) return pa;
    // Both share a factor s^k only if both vanish at 0.
    std::size_t k = std::min(pa.low_order(), pb.low_order());
    if (k > 0) {
      IntPoly g = gcd(pa.shifted_down(k), pb.shifted_down(k));
      return g.shifted_up(k);
    }
    IntPoly g;
    if (heuristic_gcd(pa, pb, g)) return g;
    return prs_gcd(pa, pb);
  }

  double eval(double s) const {
    double r = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * s + coeffs_[i].get_d();
    return r;
  }

  /// Exact square root over Z[s] if one exists (leading coefficient positive).
  static bool try_sqrt(const IntPoly& p, IntPoly& root) {
    root = IntPoly();
    if (p.is_zero()) return true;
    if (p.degree() % 2 != 0 || p.lead() < 0) return false;
    if (!mpz_perfect_square_p(p.lead().get_mpz_t())) return false;
    const int d = p.degree() / 2;
    std::vector<mpz_class> r(static_cast<std::size_t>(d + 1), mpz_class(0));
    mpz_sqrt(r[static_cast<std::size_t>(d)].get_mpz_t(), p.lead().get_mpz_t());
    const mpz_class two_lead = 2 * r[static_cast<std::size_t>(d)];
    for (int k = d - 1; k >= 0; --k) {
      mpz_class acc = p.coeffs_[static_cast<std::size_t>(d + k)];
      for (int i = k + 1; i <= d; ++i) {
        int j = d + k - i;
        if (j <= k || j > d) continue;
        acc -= r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(j)];
      }
      if (!mpz_divisible_p(acc.get_mpz_t(), two_lead.get_mpz_t())) return false;
      mpz_divexact(r[static_cast<std::size_t>(k)].get_mpz_t(), acc.get_mpz_t(), two_lead.get_mpz_t());
    }
    IntPoly cand(std::move(r));
    if (!(cand * cand == p)) return false;
    root = std::move(cand);
    return true;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  mpz_class max_norm() const {
    mpz_class m = 0;
    for (const auto& c : coeffs_) {
      mpz_class a = abs(c);
      if (a > m) m = a;
    }
    return m;
  }

  mpz_class eval_at(const mpz_class& x) const {
    mpz_class r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      r *= x;
      r += coeffs_[i];
    }
    return r;
  }

  // GCDHEU: evaluate at a large integer, take the integer gcd and lift it back
  // by symmetric xi-adic expansion. The candidate is accepted only if it
  // divides both inputs.
  static bool heuristic_gcd(const IntPoly& a, const IntPoly& b, IntPoly& out) {
    mpz_class xi = 2 * std::min(a.max_norm(), b.max_norm()) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
      mpz_class ha = a.eval_at(xi);
      mpz_class hb = b.eval_at(xi);
      mpz_class h;
      mpz_gcd(h.get_mpz_t(), ha.get_mpz_t(), hb.get_mpz_t());
      std::vector<mpz_class> g;
      mpz_class half = xi / 2;
      while (h != 0) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
        if (r > half) r -= xi;
        g.push_back(r);
        h -= r;
        mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
      }
      IntPoly cand = IntPoly(std::move(g)).primitive();
      IntPoly q;
      if (!cand.is_zero() && try_divide(a, cand, q) && try_divide(b, cand, q)) {
        out = std::move(cand);
        return true;
      }
      xi = (xi * 73794) / 27011;
    }
    return false;
  }

  static IntPoly prs_gcd(IntPoly a, IntPoly b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
      IntPoly r = pseudo_remainder(a, b);
      a = std::move(b);
      b = r.is_zero() ? r : r.primitive();
    }
    return a.primitive();
  }

  static IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> rem = a.coeffs_;
    const mpz_class& lb = b.lead();
    int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
      mpz_class top = rem[static_cast<std::size_t>(i)];
      if (top == 0) continue;
      for (auto& c : rem) c *= lb;
      std::size_t off = static_cast<std::size_t>(i - db);
      for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(rem[off + j].get_mpz_t(), top.get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    rem.resize(static_cast<std::size_t>(db));
    return IntPoly(std::move(rem));
  }

  std::vector<mpz_class> coeffs_;
};

}  // namespace qcs
