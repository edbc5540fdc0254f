#pragma once

// Suites for the Heisenberg contraction: U_q[h1] and H_q(1) as Hopf
// *-algebras, their T-matrix, the Fock coherent state, and the spin-j rate.

#include "qcoherent/contraction.hpp"
#include "qcoherent/suites.hpp"

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace qcs::suites {

namespace h1detail {

using namespace qcs::h1;

inline HG random_hg(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, 2), v(-3, 3);
  HG r;
  for (int i = 0; i < 2; ++i) r += HG(d(rng), ScalarPoly::monomial(Scalar(v(rng)) * w().pow(d(rng) % 2), d(rng)), d(rng));
  return r;
}

inline UH random_uh(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, 2), c(-1, 1), v(-3, 3);
  UH r;
  for (int i = 0; i < 2; ++i) r += UH(UKey{d(rng), d(rng), d(rng) % 2, c(rng)}, Scalar(v(rng)));
  return r;
}

inline std::vector<HG> g_basis(int bound) {
  std::vector<HG> out;
  for (int k = 0; k <= bound; ++k)
    for (int l = 0; l <= bound; ++l)
      for (int m = 0; m <= bound; ++m) out.push_back(HG(k, ScalarPoly::monomial(Scalar(1), l), m));
  return out;
}

inline std::vector<UH> u_basis(int bound) {
  std::vector<UH> out;
  for (int k = 0; k <= bound; ++k)
    for (int l = 0; l <= bound; ++l)
      for (int m = 0; m <= bound; ++m)
        for (int c = -1; c <= 1; ++c) out.push_back(UH(UKey{k, m, l, c}, Scalar(1)));
  return out;
}

inline void uh_axioms(ExactCollector& col, const UH& u) {
  const UHTensor d = coproduct(u);
  UH s_left, s_right, c_left, c_right;
  std::map<std::tuple<UKey, UKey, UKey>, Scalar> left, right;
  for (const auto& [k, v] : d.terms()) {
    UH a(k.first, Scalar(1)), b(k.second, Scalar(1));
    s_left += a.antipode() * b * v;
    s_right += a * b.antipode() * v;
    c_left += b * (a.counit() * v);
    c_right += a * (b.counit() * v);
    const UHTensor da = coproduct(a), db = coproduct(b);
    for (const auto& [k2, v2] : da.terms()) left[{k2.first, k2.second, k.second}] += v * v2;
    for (const auto& [k2, v2] : db.terms()) right[{k.first, k2.first, k2.second}] += v * v2;
  }
  std::erase_if(left, [](const auto& p) { return p.second.is_zero(); });
  std::erase_if(right, [](const auto& p) { return p.second.is_zero(); });
  const std::string n = u.str();
  col.flag("coassociativity " + n, left == right);
  col.add("left counit " + n, c_left - u);
  col.add("right counit " + n, c_right - u);
  col.add("left antipode " + n, s_left - UH(u.counit()));
  col.add("right antipode " + n, s_right - UH(u.counit()));
}

inline void hg_axioms(ExactCollector& col, const HG& f) {
  using Slot = std::map<std::tuple<int, int, int>, Scalar>;
  using Triple = std::map<std::tuple<int, int, int, int, int, int>, Slot>;
  auto fold = [](Triple& out, const HG& a, const HG& b, const HG& c) {
    for (const auto& [ka, pa] : a.terms())
      for (const auto& [kb, pb] : b.terms())
        for (const auto& [kc, pc] : c.terms()) {
          auto key6 = std::make_tuple(ka.first, ka.second, kb.first, kb.second, kc.first, kc.second);
          Slot& slot = out[key6];
          for (std::size_t i = 0; i < pa.size(); ++i)
            for (std::size_t j = 0; j < pb.size(); ++j)
              for (std::size_t l = 0; l < pc.size(); ++l) {
                auto key = std::make_tuple(static_cast<int>(i), static_cast<int>(j), static_cast<int>(l));
                slot[key] += pa[i] * pb[j] * pc[l];
                if (slot[key].is_zero()) slot.erase(key);
              }
          if (slot.empty()) out.erase(key6);
        }
  };
  const HGTensor d = coproduct(f);
  Triple left, right;
  HG cl, cr;
  for (const auto& [a, b] : d.pieces()) {
    const HGTensor da = coproduct(a), db = coproduct(b);
    for (const auto& [a1, a2] : da.pieces()) fold(left, a1, a2, b);
    for (const auto& [b1, b2] : db.pieces()) fold(right, a, b1, b2);
    cl += b * a.counit();
    cr += a * b.counit();
  }
  auto ident = [](const HG& g) { return g; };
  auto anti = [](const HG& g) { return g.antipode(); };
  const std::string n = f.str();
  col.flag("coassociativity " + n, left == right);
  col.add("left counit " + n, cl - f);
  col.add("right counit " + n, cr - f);
  col.add("left antipode " + n, d.map_legs(anti, ident).multiply() - HG(f.counit()));
  col.add("right antipode " + n, d.map_legs(ident, anti).multiply() - HG(f.counit()));
}

}  // namespace h1detail

inline std::vector<Case> h1_hopf_cases(const SuiteConfig& cfg) {
  using namespace qcs::h1;
  std::vector<Case> out;
  const unsigned seed = cfg.seed;
  out.push_back({"h1-hopf", "U_q[h1] relations", "Hopf algebra mappings and $*$-involution", [] {
                   ExactCollector c;
                   c.add("[A, A+] - sinh(wH)/w", UH::A() * UH::Ad() - UH::Ad() * UH::A() - UH::sinh_over_w());
                   c.add("[H, A]", UH::H() * UH::A() - UH::A() * UH::H());
                   c.add("K K^-1 - 1", UH::K() * UH::K(-1) - UH(1));
                   c.flag("coproduct respects [A, A+]", coproduct(UH::A()) * coproduct(UH::Ad()) == coproduct(UH::Ad()) * coproduct(UH::A()) + coproduct(UH::sinh_over_w()));
                   return c.outcome();
                 }});
  out.push_back({"h1-hopf", "U_q[h1] Hopf axioms", "Hopf algebra mappings and $*$-involution", [] {
                   ExactCollector c;
                   for (const UH& u : {UH::A(), UH::Ad(), UH::H(), UH::K(), UH::K(-1), UH::A() * UH::Ad(), UH::H() * UH::A()}) h1detail::uh_axioms(c, u);
                   return c.outcome();
                 }});
  out.push_back({"h1-hopf", "U_q[h1] star", "Hopf algebra mappings and $*$-involution", [seed] {
                   ExactCollector c;
                   c.add("A+* - A", UH::Ad().star() - UH::A());
                   c.add("H* - H", UH::H().star() - UH::H());
                   UHTensor d;
                   const UHTensor dA = coproduct(UH::A());
                   for (const auto& [k, v] : dA.terms()) d = d + UHTensor::pure(UH(k.first, Scalar(1)).star(), UH(k.second, Scalar(1)).star() * v);
                   c.flag("Delta(A)^* = Delta(A+)", d == coproduct(UH::Ad()));
                   std::mt19937 rng(seed + 4);
                   for (int i = 0; i < 30; ++i) {
                     UH a = h1detail::random_uh(rng), b = h1detail::random_uh(rng);
                     c.add("involution", a.star().star() - a);
                     c.add("antimultiplicative", (a * b).star() - b.star() * a.star());
                   }
                   return c.outcome();
                 }});
  out.push_back({"h1-hopf", "H_q(1) relations", "The Hopf algebra maps read", [] {
                   HG x = HG::x(), y = HG::y(), z = HG::z();
                   ExactCollector c;
                   c.add("[x, y]", x * y - y * x);
                   c.add("[x, z] - w x", x * z - z * x - x * w());
                   c.add("[y, z] - w y", y * z - z * y - y * w());
                   return c.outcome();
                 }});
  out.push_back({"h1-hopf", "H_q(1) Hopf axioms", "The Hopf algebra maps read", [] {
                   ExactCollector c;
                   for (const HG& f : h1detail::g_basis(2)) h1detail::hg_axioms(c, f);
                   return c.outcome();
                 }});
  out.push_back({"h1-hopf", "H_q(1) star", "with the following involution map", [] {
                   ExactCollector c;
                   c.add("x* + y", HG::x().star() + HG::y());
                   c.add("y* + x", HG::y().star() + HG::x());
                   c.add("z* + z - x y", HG::z().star() + HG::z() - HG::x() * HG::y());
                   for (const HG& f : {HG::x(), HG::y(), HG::z(), HG::z() * HG::x()}) {
                     HGTensor rhs = coproduct(f).map_legs([](const HG& a) { return a.star(); }, [](const HG& b) { return b.star(); });
                     c.flag("Delta(f*) " + f.str(), coproduct(f.star()) == rhs);
                   }
                   return c.outcome("third star relation read as z* = -z + xy");
                 }});
  out.push_back({"h1-hopf", "dual basis", "The dual basis is determined to be", [] {
                   ExactCollector c;
                   c.add("<x, A+> - 1", pair(HG::x(), UH::Ad()) - Scalar(1));
                   c.add("<y, A> - 1", pair(HG::y(), UH::A()) - Scalar(1));
                   c.add("<z, H> - 1", pair(HG::z(), UH::H()) - Scalar(1));
                   for (int k = 0; k <= 2; ++k)
                     for (int l = 0; l <= 2; ++l)
                       for (int m = 0; m <= 2; ++m) {
                         ScalarPoly shifted = ScalarPoly::monomial(Scalar(1), 0);
                         ScalarPoly lin(std::vector<Scalar>{-Scalar(mpq_class(k - m, 2)) * w(), Scalar(1)});
                         for (int i = 0; i < l; ++i) shifted = shifted * lin;
                         HG e = HG(k, shifted, m) * (Scalar(1) / (factorial(k) * factorial(l) * factorial(m)));
                         for (int k2 = 0; k2 <= 2; ++k2)
                           for (int l2 = 0; l2 <= 2; ++l2)
                             for (int m2 = 0; m2 <= 2; ++m2) {
                               Scalar v = pair(e, UH(UKey{k2, m2, l2, 0}, Scalar(1)));
                               c.add("e^{" + std::to_string(k) + std::to_string(l) + std::to_string(m) + "} on " + std::to_string(k2) + std::to_string(l2) + std::to_string(m2),
                                     v - Scalar(k == k2 && l == l2 && m == m2 ? 1 : 0));
                             }
                       }
                   return c.outcome();
                 }});
  out.push_back({"h1-hopf", "duality of product", "The dual basis is determined to be", [] {
                   ExactCollector c;
                   std::vector<HG> fs = h1detail::g_basis(1);
                   for (const HG& f : fs)
                     for (const HG& g : fs)
                       for (const UH& u : h1detail::u_basis(2)) c.add(f.str() + " * " + g.str() + " on " + u.str(), pair(f * g, u) - pair_tensor(f, g, coproduct(u)));
                   return c.outcome();
                 }});
  out.push_back({"h1-hopf", "associativity", "Hopf algebra mappings and $*$-involution", [seed] {
                   ExactCollector c;
                   std::mt19937 rng(seed);
                   for (int i = 0; i < 60; ++i) {
                     HG a = h1detail::random_hg(rng), b = h1detail::random_hg(rng), d = h1detail::random_hg(rng);
                     c.add("H_q(1)", (a * b) * d - a * (b * d));
                     UH u = h1detail::random_uh(rng), v = h1detail::random_uh(rng), t = h1detail::random_uh(rng);
                     c.add("U_q[h1]", (u * v) * t - u * (v * t));
                   }
                   for (int i = 0; i < 15; ++i) {
                     HG a = h1detail::random_hg(rng), b = h1detail::random_hg(rng);
                     c.flag("H_q(1) coproduct multiplicative", coproduct(a * b) == coproduct(a) * coproduct(b));
                     UH u = h1detail::random_uh(rng), v = h1detail::random_uh(rng);
                     c.flag("U_q[h1] coproduct multiplicative", coproduct(u * v) == coproduct(u) * coproduct(v));
                   }
                   return c.outcome();
                 }});
  out.push_back({"h1-hopf", "H_q(1) star involution", "with the following involution map", [seed] {
                   ExactCollector c;
                   std::mt19937 rng(seed + 8);
                   for (int i = 0; i < 30; ++i) {
                     HG a = h1detail::random_hg(rng), b = h1detail::random_hg(rng);
                     c.add("involution", a.star().star() - a);
                     c.add("antimultiplicative", (a * b).star() - b.star() * a.star());
                   }
                   return c.outcome();
                 }});
  out.push_back({"h1-hopf", "w -> 0 limit", "reduce to their counterparts for the one dimensional Heisenberg algebra", [cfg] {
                   FockRep f{1e-7, cfg.p, 12};
                   Eigen::MatrixXd comm = f.A() * f.Ad() - f.Ad() * f.A();
                   Eigen::MatrixXd target = f.H();
                   target(12, 12) = comm(12, 12);  // truncation edge
                   return numeric((comm - target).cwiseAbs().maxCoeff(), 1e-6);
                 }});
  return out;
}

inline std::vector<Case> h1_tmatrix_cases(const SuiteConfig&) {
  using namespace qcs::h1;
  std::vector<Case> out;
  out.push_back({"h1-tmatrix", "three dimensional representation", "the three dimensional representation", [] {
                   ExactCollector c;
                   Mat3S comm = mat_add(mat_mul(Rep3::A(), Rep3::Ad()), mat_mul(Rep3::Ad(), Rep3::A()), Scalar(-1));
                   c.flag("[pi(A), pi(A+)] = pi(sinh(wH)/w)", comm == Rep3::of(UH::sinh_over_w()));
                   c.flag("pi(H)^2 = 0", Rep3::pow(Rep3::H(), 2) == Mat3S{});
                   c.flag("pi(A)^2 = 0", Rep3::pow(Rep3::A(), 2) == Mat3S{});
                   c.flag("pi(A+)^2 = 0", Rep3::pow(Rep3::Ad(), 2) == Mat3S{});
                   return c.outcome("the unit-corner matrix is taken as pi(H)");
                 }});
  out.push_back({"h1-tmatrix", "matrix quantum group", "yields the matrix quantum group", [] {
                   Mat3H T = universal_T(), expect;
                   for (int i = 0; i < 3; ++i) expect[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = HG(1);
                   expect[0][1] = HG::y();
                   expect[0][2] = HG::z();
                   expect[1][2] = HG::x();
                   ExactCollector c;
                   for (std::size_t i = 0; i < 3; ++i)
                     for (std::size_t j = 0; j < 3; ++j) c.add("T[" + std::to_string(i) + "," + std::to_string(j) + "]", T[i][j] - expect[i][j]);
                   return c.outcome();
                 }});
  out.push_back({"h1-tmatrix", "T* T = 1", "It is obvious that", [] {
                   Mat3H p = hmat_mul(universal_T_star(), universal_T());
                   ExactCollector c;
                   for (std::size_t i = 0; i < 3; ++i)
                     for (std::size_t j = 0; j < 3; ++j) c.add("(T*T)[" + std::to_string(i) + "," + std::to_string(j) + "]", p[i][j] - HG(i == j ? 1 : 0));
                   return c.outcome("star of z read as -z + xy");
                 }});
  return out;
}

inline std::vector<Case> h1_coherent_cases(const SuiteConfig& cfg) {
  using namespace qcs::h1;
  std::vector<Case> out;
  const double w = cfg.w, p = cfg.p;
  const int N = cfg.fock_trunc;
  out.push_back({"h1-coherent", "Fock commutator", "its Fock space representation", [w, p, N] {
                   FockRep f{w, p, N};
                   Eigen::MatrixXd c = f.A() * f.Ad() - f.Ad() * f.A();
                   double worst = 0.0;
                   for (int n = 0; n < N; ++n) worst = std::max(worst, std::fabs(c(n, n) - std::sinh(w * p) / w));
                   return numeric(worst, 1e-10);
                 }});
  out.push_back({"h1-coherent", "norm", "normalizes the state appropriately", [w, p, N] {
                   double worst = 0.0;
                   for (double r : {0.0, 0.5, 1.0, 1.7}) worst = std::max(worst, std::fabs(h1_norm(w, p, r, std::max(N, 60)) - 1.0));
                   return numeric(worst, 1e-12);
                 }});
  out.push_back({"h1-coherent", "resolution of unity N=" + std::to_string(N), "it is easy to verify that", [w, p, N] {
                   int nodes = 0;
                   double d = h1_resolution_converged(w, p, N, 1e-12, &nodes);
                   return numeric(d, 1e-8, "quadrature nodes " + std::to_string(nodes));
                 }});
  return out;
}

inline std::vector<Case> contraction_rate_cases(const SuiteConfig& cfg) {
  std::vector<Case> out;
  const double w = cfg.w;
  for (auto [j1, j2] : {std::pair{10, 20}, std::pair{20, 40}}) {
    out.push_back({"contraction-rate", "j=" + std::to_string(j1) + " -> j=" + std::to_string(j2), "transformation of the generators of", [w, j1, j2] {
                     auto a = h1::contraction_residual(2 * j1, w), b = h1::contraction_residual(2 * j2, w);
                     const double ratio = a.printed / b.printed, flipped = a.opposite_sign / b.opposite_sign;
                     char buf[200];
                     std::snprintf(buf, sizeof buf, "residual %.4g -> %.4g (ratio %.4f); against -sinh(wH)/w %.4g -> %.4g (ratio %.4f)", a.printed, b.printed, ratio,
                                   a.opposite_sign, b.opposite_sign, flipped);
                     return numeric(std::fabs(ratio - 2.0) / 2.0, 0.15, buf);
                   }});
  }
  return out;
}

}  // namespace qcs::suites
