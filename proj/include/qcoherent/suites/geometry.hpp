#pragma once

// Suites over spin-j representations, coherent states, the polynomial
// realization, the q-sphere, the differential calculi, and the q -> 1 limits.

#include "qcoherent/csrep.hpp"
#include "qcoherent/geom.hpp"
#include "qcoherent/suites.hpp"
#include "qcoherent/tensor.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace qcs::suites {

namespace detail {

inline RepMatrix commutator(const RepMatrix& a, const RepMatrix& b) { return rep_add(rep_mul(a, b), rep_mul(b, a), Scalar(-1)); }

inline void add_matrix(ExactCollector& c, const std::string& label, const RepMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) c.add(label + "[" + std::to_string(i) + "," + std::to_string(j) + "]", m[i][j]);
}

inline void add_vector(ExactCollector& c, const std::string& label, const CSVector& v) {
  for (std::size_t n = 0; n < v.comp.size(); ++n) c.add(label + "[" + std::to_string(n) + "]", v.comp[n]);
}

}  // namespace detail

inline std::vector<Case> csrep_cases(const SuiteConfig& cfg) {
  std::vector<Case> out;
  const int maxj = cfg.max_twoj;
  for (int twoj = 0; twoj <= maxj; ++twoj) {
    const std::string j = "j=" + twoj_label(twoj);
    out.push_back({"rep-relations", j, "spin-j representation", [twoj] {
                     SpinRep r = SpinRep::build(twoj);
                     ExactCollector c;
                     detail::add_matrix(c, "[J+,J-] - [2J0]", rep_add(detail::commutator(r.Jp, r.Jm), r.bracket_2J0(), Scalar(-1)));
                     detail::add_matrix(c, "[J0,J+] - J+", rep_add(detail::commutator(r.J0(), r.Jp), r.Jp, Scalar(-1)));
                     detail::add_matrix(c, "[J0,J-] + J-", rep_add(detail::commutator(r.J0(), r.Jm), r.Jm));
                     detail::add_matrix(c, "q^J0 J+ q^-J0 - q J+", rep_add(rep_mul(rep_mul(r.q_pow_J0(1), r.Jp), r.q_pow_J0(-1)), r.Jp, -Scalar::q()));
                     return c.outcome();
                   }});
  }
  out.push_back({"t-matrix", "fundamental", "the fundamental representation", [] {
                   auto T = universal_T(1);
                   auto g = GaussGenerators::make();
                   ExactCollector c;
                   c.add("a", T[1][1] - AlgRad(g.a));
                   c.add("b", T[1][0] - AlgRad(g.b));
                   c.add("c", T[0][1] - AlgRad(g.c));
                   c.add("d", T[0][0] - AlgRad(g.d));
                   return c.outcome();
                 }});
  for (int twoj = 0; twoj <= std::min(maxj, 4); ++twoj)
    out.push_back({"t-matrix", "lowest column j=" + twoj_label(twoj), "coherent state from the T-matrix", [twoj] {
                     auto T = universal_T(twoj);
                     CSVector col{twoj, {}};
                     for (auto& row : T) col.comp.push_back(row[0]);
                     ExactCollector c;
                     detail::add_vector(c, "column - state", col - coherent_state(twoj));
                     return c.outcome();
                   }});
  for (int twoj = 0; twoj <= maxj; ++twoj) {
    const std::string j = "j=" + twoj_label(twoj);
    out.push_back({"cs-norm", j, "has unit norm", [twoj] {
                     ExactCollector c;
                     c.add("<x,z|x,z> - 1", inner(coherent_state(twoj), coherent_state(twoj)) - AlgRad(AlgElement(1)));
                     detail::add_vector(c, "orderings", coherent_state(twoj) - coherent_state_left_exponential(twoj));
                     return c.outcome();
                   }});
  }
  for (int twoj = 1; twoj <= maxj; ++twoj) {
    Shared<std::vector<std::vector<RadSum>>> M([twoj] { return resolution_matrix(twoj); });
    for (int n = 0; n <= twoj; ++n)
      for (int m = n; m <= twoj; ++m)
        out.push_back({"resolution", "j=" + twoj_label(twoj) + " (" + std::to_string(n) + "," + std::to_string(m) + ")", "provides the resolution of unity", [M, n, m] {
                         const RadSum& v = M.get()[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
                         return exact(n == m ? v - RadSum(Scalar(1)) : v);
                       }});
  }
  for (int twoj = 0; twoj <= maxj; ++twoj)
    out.push_back({"overlap", "j=" + twoj_label(twoj), "overlap of two coherent states", [twoj] {
                     TensorRad lhs = overlap_from_states(twoj);
                     if (!lhs.is_rational()) return exact_flag(false, "overlap has an irrational part");
                     OverlapForm f = overlap_closed_form(twoj);
                     ExactCollector c;
                     c.flag("closed form", lhs.rational_part() == f.prefactor * f.sum);
                     c.flag("prefactor commutes", f.prefactor * f.sum == f.sum * f.prefactor);
                     c.add("diagonal", lhs.rational_part().multiply_legs() - AlgElement(1));
                     return c.outcome();
                   }});
  for (int twoj = 0; twoj <= maxj; ++twoj)
    out.push_back({"operator-actions", "j=" + twoj_label(twoj), "generators acting on the coherent state", [twoj] {
                     SpinRep r = SpinRep::build(twoj);
                     CSVector cs = coherent_state(twoj);
                     const HalfInt j = HalfInt::from_twice(twoj);
                     ExactCollector c;
                     detail::add_vector(c, "J+", act(r.Jp, cs) - ActionForms::jplus(twoj));
                     detail::add_vector(c, "J-", act(r.Jm, cs) - ActionForms::jminus(twoj));
                     detail::add_vector(c, "[J0]", act(r.bracket_J0(), cs) - ActionForms::bracket_j0(twoj));
                     detail::add_vector(c, "annihilator", annihilator(r).apply_to(cs));
                     detail::add_vector(c, "Gamma", gamma_operator(r).apply_to(cs) - (-Scalar::q_pow(-j) * q_number(j)) * cs);
                     return c.outcome();
                   }});
  const Scalar q2 = Scalar::q_pow(2);
  for (int twoj = 0; twoj <= maxj; ++twoj) {
    const std::string j = "j=" + twoj_label(twoj);
    out.push_back({"bargmann", "orthonormality " + j, "orthonormal polynomial basis", [twoj] {
                     ExactCollector c;
                     for (int n = 0; n <= twoj; ++n)
                       for (int m = 0; m <= twoj; ++m) {
                         RadSum v = bargmann_inner(twoj, bargmann_basis(twoj, n), bargmann_basis(twoj, m));
                         c.add("<" + std::to_string(n) + "|" + std::to_string(m) + ">", n == m ? v - RadSum(Scalar(1)) : v);
                       }
                     return c.outcome();
                   }});
    out.push_back({"bargmann", "generator actions " + j, "action on polynomials", [twoj, q2] {
                     BargmannOps ops{twoj};
                     const HalfInt jj = HalfInt::from_twice(twoj);
                     auto bn = [&q2](HalfInt h) { return basic_number(h.as_int(), q2); };
                     ExactCollector c;
                     for (int n = 0; n <= twoj; ++n) {
                       const HalfInt m = HalfInt::from_twice(2 * n - twoj);
                       PolyRad psi = bargmann_poly(twoj, n);
                       PolyRad up = ops.apply(psi, &BargmannOps::jplus), down = ops.apply(psi, &BargmannOps::jminus);
                       PolyRad up_expect = n < twoj ? bargmann_poly(twoj, n + 1) * RadicalScalar::sqrt(bn(jj - m) * bn(jj + m + HalfInt::integer(1))) : PolyRad();
                       PolyRad down_expect = n > 0 ? bargmann_poly(twoj, n - 1) * RadicalScalar::sqrt(bn(jj + m) * bn(jj - m + HalfInt::integer(1))) : PolyRad();
                       c.add("J+ n=" + std::to_string(n), up - up_expect);
                       c.add("J- n=" + std::to_string(n), down - down_expect);
                       c.add("J0 n=" + std::to_string(n), ops.apply(psi, &BargmannOps::j0) - psi * Scalar(mpq_class(m.twice, 2)));
                     }
                     return c.outcome();
                   }});
    out.push_back({"bargmann", "hermiticity " + j, "hermiticity of the generators", [twoj] {
                     BargmannOps ops{twoj};
                     ExactCollector c;
                     for (int a = 0; a <= twoj; ++a)
                       for (int b = 0; b <= twoj; ++b) {
                         PolyRad pa = bargmann_poly(twoj, a), pb = bargmann_poly(twoj, b);
                         AlgRad fa = poly_to_alg(pa), fb = poly_to_alg(pb);
                         c.add("J+ vs J-", bargmann_inner(twoj, fa, poly_to_alg(ops.apply(pb, &BargmannOps::jplus))) -
                                               bargmann_inner(twoj, poly_to_alg(ops.apply(pa, &BargmannOps::jminus)), fb));
                         c.add("J0", bargmann_inner(twoj, fa, poly_to_alg(ops.apply(pb, &BargmannOps::j0))) -
                                         bargmann_inner(twoj, poly_to_alg(ops.apply(pa, &BargmannOps::j0)), fb));
                       }
                     return c.outcome();
                   }});
  }
  return out;
}

inline std::vector<Case> geom_cases(const SuiteConfig& cfg) {
  std::vector<Case> out;
  auto residual_list = [](const auto& rs) {
    ExactCollector c;
    for (const auto& [name, r] : rs) c.add(name, r);
    return c.outcome();
  };
  out.push_back({"sphere-relations", "Podles relations", "the quantum sphere relations", [residual_list] { return residual_list(podles_residuals(sphere_coords())); }});
  out.push_back({"sphere-relations", "Podles relations embedded", "the quantum sphere relations", [residual_list] { return residual_list(podles_residuals(embedded_sphere_coords())); }});
  out.push_back({"sphere-relations", "embedded equals complex", "sphere coordinates from the group", [] {
                   SphereCoords a = sphere_coords(), b = embedded_sphere_coords();
                   ExactCollector c;
                   c.add("x1", a.x1 - b.x1);
                   c.add("x0", a.x0 - b.x0);
                   c.add("x-1", a.xm1 - b.xm1);
                   return c.outcome();
                 }});
  out.push_back({"sphere-relations", "star map", "star structure of the sphere", [residual_list] { return residual_list(sphere_star_residuals(sphere_coords())); }});
  out.push_back({"sphere-relations", "zeta from x x*", "zeta in terms of x", [residual_list] { return residual_list(zeta_xx_residuals()); }});
  for (int twoj = 0; twoj <= cfg.max_twoj; ++twoj)
    out.push_back({"sphere-relations", "expectations j=" + twoj_label(twoj), "expectation values of the generators", [twoj] {
                     Expectations e = expectation_values(twoj), f = expectation_closed_form(twoj);
                     ExactCollector c;
                     c.add("X+", e.Xp - f.Xp);
                     c.add("X-", e.Xm - f.Xm);
                     c.add("X0", e.X0 - f.X0);
                     if (twoj > 0) {
                       SphereCoords s = sphere_from_expectations(twoj), k = sphere_coords();
                       c.add("rescaled x1", s.x1 - k.x1);
                       c.add("rescaled x0", s.x0 - k.x0);
                       c.add("rescaled x-1", s.xm1 - k.xm1);
                     }
                     return c.outcome();
                   }});
  out.push_back({"inf-char", "right weight zero", "Infinitesimal characterization", [] {
                   SphereCoords c = sphere_coords();
                   ExactCollector col;
                   for (const AlgRad* r : {&c.x1, &c.x0, &c.xm1})
                     for (const auto& t : r->terms()) col.flag("weight", weight(t.coeff).right.twice == 0, std::to_string(weight(t.coeff).right.twice));
                   return col.outcome();
                 }});
  out.push_back({"inf-char", "pairing with q^J0 legs", "Infinitesimal characterization", [] {
                   SphereCoords sc = sphere_coords();
                   ExactCollector c;
                   const std::pair<const char*, const AlgRad*> coords[] = {{"x1", &sc.x1}, {"x0", &sc.x0}, {"x-1", &sc.xm1}};
                   for (auto [name, r] : coords)
                     for (const auto& t : r->terms())
                       for (int k = 0; k <= 3; ++k)
                         for (int l = 0; k + l <= 3; ++l)
                           for (int m = 0; k + l + m <= 3; ++m) {
                             UElement u = UElement::basis(k, l, m);
                             c.add(std::string("(K - K^-1) |> ") + name, pair_scalar(t.coeff, u * UElement::K()) - pair_scalar(t.coeff, u * UElement::K(-1)));
                           }
                   return c.outcome();
                 }});
  out.push_back({"omega-calculus", "printed rules", "the omega commutation rules", [] {
                   auto g = GaussGenerators::make();
                   ExactCollector c;
                   for (Omega k : {Omega::w0, Omega::w1, Omega::w2}) {
                     const std::string n = to_string(k);
                     c.flag(n + " a d", (omega_factor(k, Sym::a) * omega_factor(k, Sym::d)).is_one());
                     c.flag(n + " b c", (omega_factor(k, Sym::b) * omega_factor(k, Sym::c)).is_one());
                     c.add(n + " a", omega_pass(k, g.a) - omega_factor(k, Sym::a) * g.a);
                     c.add(n + " b", omega_pass(k, g.b) - omega_factor(k, Sym::b) * g.b);
                     c.add(n + " c", omega_pass(k, g.c) - omega_factor(k, Sym::c) * g.c);
                     c.add(n + " d", omega_pass(k, g.d) - omega_factor(k, Sym::d) * g.d);
                   }
                   return c.outcome();
                 }});
  out.push_back({"omega-calculus", "[x, omega] = 0", "x commutes with the one-forms", [] {
                   ExactCollector c;
                   for (Omega k : {Omega::w0, Omega::w1, Omega::w2}) {
                     c.add("x " + to_string(k), omega_pass(k, AlgElement::x()) - AlgElement::x());
                     c.add("x* " + to_string(k), omega_pass(k, AlgElement::x().star()) - AlgElement::x().star());
                     c.add("zeta " + to_string(k), omega_pass(k, AlgElement::Z()) - AlgElement::Z());
                   }
                   return c.outcome();
                 }});
  out.push_back({"complex-calculus", "x-dx axioms", "the complex calculus relations", [] {
                   const Scalar q = Scalar::q();
                   Form x = Form::x(), xs = Form::xs(), dx = Form::dx(), dxs = Form::dxs();
                   ExactCollector c;
                   c.add("x dx", x * dx - q.pow(2) * (dx * x));
                   c.add("x* dx*", xs * dxs - q.pow(-2) * (dxs * xs));
                   c.add("dx x*", dx * xs - Form(LinRat(q.pow(-2)) * Form::f_minus()) * xs * dx);
                   c.add("dx* x", dxs * x - q.pow(2) * (x * Form(Form::f_plus()) * dxs));
                   c.add("dx dx", dx * dx);
                   c.add("dx* dx*", dxs * dxs);
                   c.add("x x* relation", x * xs * Form(LinRat::linear(Form::omega())) - q.pow(-2) * Form::t());
                   c.add("d of the relation", d_word({x, xs}) + d_word({x, xs, xs, x}) * Form::omega() - d_word({xs, x}) * Scalar::q_pow(-2));
                   return c.outcome();
                 }});
  out.push_back({"complex-calculus", "d^2 = 0", "nilpotency of d", [] {
                   ExactCollector c;
                   for (const Form& f : {Form::t(), Form::x(2), Form::xs() * Form(LinRat::inv_linear(Scalar::q())), Form::t().pow(2) + Form::x()})
                     c.add("d d " + f.str(), f.d().d());
                   return c.outcome();
                 }});
  for (int n = 1; n <= 4; ++n)
    out.push_back({"complex-calculus", "d (x* x)^n n=" + std::to_string(n), "differential of powers", [n] {
                     Form leibniz = d_word(std::vector<Form>(static_cast<std::size_t>(n), Form::xs() * Form::x()));
                     ExactCollector c;
                     c.add("Leibniz", leibniz - dxn_closed_form(n));
                     c.add("t^n", Form::t().pow(n).d() - dxn_closed_form(n));
                     return c.outcome();
                   }});
  out.push_back({"complex-calculus", "dx dx* compatibility", "compatibility of dx dx*", [] {
                   Form xs = Form::xs(), dx = Form::dx();
                   return exact(-(dx * xs.d()) - (Form(LinRat(Scalar::q_pow(-2)) * Form::f_minus()) * xs).d() * dx);
                 }});
  return out;
}

/// Classical T for j = 1/2 at commuting samples: (1 + x J+) diag(E, 1/E) (1 + y J-).
inline std::vector<Case> qlimit_cases(const SuiteConfig&) {
  std::vector<Case> out;
  const double qv = 1.0 - 1e-4, thr = 1e-3;
  const std::vector<std::array<double, 3>> samples = {{0.3, 1.2, -0.4}, {-0.7, 0.8, 0.2}, {1.1, 1.5, 0.9}};
  out.push_back({"q-limit", "fundamental T-matrix", "yields the usual exponential mapping", [qv, thr, samples] {
                   auto T = universal_T(1);
                   const double s = std::sqrt(qv);
                   double worst = 0.0;
                   for (auto [xv, Ev, yv] : samples) {
                     double classical[2][2] = {{1.0 / Ev, yv / Ev}, {xv / Ev, Ev + xv * yv / Ev}};
                     for (int i = 0; i < 2; ++i)
                       for (int j = 0; j < 2; ++j)
                         worst = std::max(worst, std::fabs(eval_commutative(T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], s, xv, Ev, yv) - classical[i][j]));
                   }
                   return numeric(worst, thr);
                 }});
  out.push_back({"q-limit", "Podles relations", "the classical sphere", [qv, thr, samples] {
                   double worst = 0.0;
                   for (auto [xv, Ev, yv] : samples) worst = std::max(worst, classical_sphere_defect(qv, xv, Ev, yv));
                   return numeric(worst, thr);
                 }});
  return out;
}

}  // namespace qcs::suites
