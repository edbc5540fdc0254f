#pragma once

// Suites over q-calculus, the function algebra, the Haar functional and the
// duality with U_q[su(2)].

#include "qcoherent/haar.hpp"
#include "qcoherent/ncalg.hpp"
#include "qcoherent/sampling.hpp"
#include "qcoherent/suites.hpp"
#include "qcoherent/uq.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace qcs::suites {

namespace detail {

inline AlgElement zpoly(const ScalarPoly& p) { return AlgElement(LinRat(p)); }

inline std::vector<UElement> u_basis(int deg, bool with_grouplikes) {
  std::vector<UElement> out;
  for (int k = 0; k <= deg; ++k)
    for (int l = 0; k + l <= deg; ++l)
      for (int m = 0; k + l + m <= deg; ++m) {
        if (with_grouplikes) {
          for (int c = -1; c <= 1; ++c) out.push_back(UElement(UMono{k, l, m, c}, Scalar(1)));
        } else {
          out.push_back(UElement::basis(k, l, m));
        }
      }
  return out;
}

inline std::vector<std::pair<std::string, AlgElement>> pairing_generators() {
  return {{"x", AlgElement::x()},         {"y", AlgElement::y()},      {"E", AlgElement::E()},
          {"E^-1", AlgElement::E(-1)},    {"E^2", AlgElement::E(2)},   {"Z", AlgElement::Z()},
          {"x E^-1", AlgElement::x() * AlgElement::E(-1)}, {"E^-1 y", AlgElement::E(-1) * AlgElement::y()}};
}

}  // namespace detail

// ---- qcalc ----

inline std::vector<Case> qcalc_cases(const SuiteConfig& cfg) {
  std::vector<Case> out;
  const Scalar q = Scalar::q();
  for (int n = 0; n <= cfg.trunc; ++n)
    out.push_back({"q-numbers", "symmetric n=" + std::to_string(n), "symmetric q-number definition", [n, q] {
                     return exact(q_number(n) * (q - q.inverse()) - (q.pow(n) - q.pow(-n)));
                   }});
  for (int n = 1; n <= cfg.trunc; ++n)
    out.push_back({"q-numbers", "binomial n=" + std::to_string(n), "Gaussian binomial recursion and symmetry", [n, q] {
                     ExactCollector c;
                     for (int k = 1; k < n; ++k) {
                       c.add("pascal k=" + std::to_string(k), q_binomial(n, k) - (q.pow(-k) * q_binomial(n - 1, k) + q.pow(n - k) * q_binomial(n - 1, k - 1)));
                       c.add("symmetry k=" + std::to_string(k), q_binomial(n, k) - q_binomial(n, n - k));
                     }
                     return c.outcome();
                   }});
  const NumericConfig nc = cfg.numeric();
  for (int n = 0; n <= cfg.trunc; ++n)
    out.push_back({"q-shifted", "finite over infinite n=" + std::to_string(n), "useful identities for shifted factorials", [n, nc, cfg] {
                     const double a = 0.3, qv = nc.q_value;
                     double lhs = numeric::q_shifted(a, qv, n);
                     double rhs = numeric::q_shifted_inf(a, qv, nc) / numeric::q_shifted_inf(a * std::pow(qv, n), qv, nc);
                     return numeric(std::fabs(lhs - rhs), std::max(cfg.tol, 1e-12));
                   }});
  out.push_back({"hypergeometric", "q-binomial theorem", "basic hypergeometric series", [nc, cfg] {
                   const double qv = nc.q_value, a = 0.25, z = 0.4;
                   double series = numeric::basic_hypergeometric({a}, {}, qv, z, nc);
                   double product = numeric::q_shifted_inf(a * z, qv, nc) / numeric::q_shifted_inf(z, qv, nc);
                   return numeric(std::fabs(series - product), cfg.tol);
                 }});
  out.push_back({"hypergeometric", "terminating exact vs numeric", "basic hypergeometric series", [nc, cfg, q] {
                   const double qv = nc.q_value;
                   Scalar ex = basic_hypergeometric_truncated({q.pow(-4)}, {q.pow(2)}, q, q.pow(3), cfg.trunc + 4);
                   double num = numeric::basic_hypergeometric({std::pow(qv, -4)}, {qv * qv}, qv, std::pow(qv, 3), nc);
                   return numeric(std::fabs(ex.eval(nc.s_value()) - num), std::max(cfg.tol, 1e-10));
                 }});
  for (int n = 0; n <= cfg.trunc; ++n)
    out.push_back({"jackson", "derivative and integral n=" + std::to_string(n), "q-derivative and Jackson integral", [n, q] {
                     ExactCollector c;
                     ScalarPoly f = ScalarPoly::monomial(Scalar(1), n);
                     ScalarPoly expect = n == 0 ? ScalarPoly() : ScalarPoly::monomial(basic_number(n, q), n - 1);
                     c.add("D x^n", q_derivative(f, q) - expect);
                     c.add("int x^n", jackson_integral(f, q, Scalar(1)) - basic_number(n + 1, q).inverse());
                     Scalar up = Scalar::rational(3, 2) * q;
                     c.add("fundamental theorem", jackson_integral(q_derivative(f, q), q, up) - (f.eval(up) - f.eval(Scalar())));
                     return c.outcome();
                   }});
  out.push_back({"jackson", "integration by parts", "Integral by parts", [q] {
                   ScalarPoly ff = ScalarPoly::monomial(Scalar(1), 2), gg = ScalarPoly::monomial(Scalar(1), 3);
                   Scalar lhs = jackson_integral(q_derivative(ff, q) * dilate(gg, q), q, Scalar(1));
                   Scalar rhs = Scalar(1) - jackson_integral(ff * q_derivative(gg, q), q, Scalar(1));
                   return exact(lhs - rhs);
                 }});
  return out;
}

inline std::vector<Case> sum_identity_cases(const SuiteConfig&) {
  std::vector<Case> out;
  constexpr int kMax = 12;
  for (int m = 0; m <= kMax; ++m) {
    out.push_back({"sum-identities", "shifted expansion m=" + std::to_string(m), "q-binomial expansion of the shifted factorial", [m] {
                     auto [l, r] = sum_identity_shifted_expansion(m);
                     return exact(l - r);
                   }});
    out.push_back({"sum-identities", "truncated m=" + std::to_string(m), "truncated normalisation sum", [m] {
                     ExactCollector c;
                     for (int n = 0; n <= m; ++n) {
                       auto v = sum_identity_truncated(m, n);
                       c.add("n=" + std::to_string(n), v.lhs - v.rhs);
                     }
                     return c.outcome();
                   }});
    out.push_back({"sum-identities", "polynomial inner product m=" + std::to_string(m), "identity behind the polynomial normalisation", [m] {
                     ExactCollector c;
                     for (int n = 0; n <= m; ++n) {
                       auto v = sum_identity_bargmann(m - n, n);
                       c.add("n=" + std::to_string(n), v.lhs - v.rhs);
                     }
                     return c.outcome();
                   }});
  }
  return out;
}

inline std::vector<Case> norm_series_cases(const SuiteConfig& cfg) {
  std::vector<Case> out;
  std::vector<double> qs = {0.5, 0.7, 0.9};
  if (std::find(qs.begin(), qs.end(), cfg.qd()) == qs.end()) qs.push_back(cfg.qd());
  for (double qv : qs)
    out.push_back({"norm-series", "q=" + std::to_string(qv).substr(0, 4), "special case of the 1phi1 summation", [qv, cfg] {
                     NumericConfig nc = cfg.numeric();
                     double worst = 0.0;
                     for (int twoj = 1; twoj <= std::max(1, cfg.max_twoj); ++twoj)
                       for (double zeta : {0.1, 0.3}) {
                         auto [series, product] = numeric::norm_series_vs_product(twoj, qv, zeta, nc);
                         worst = std::max(worst, std::fabs(series - product) / std::max(1.0, std::fabs(product)));
                       }
                     return numeric(worst, cfg.tol);
                   }});
  return out;
}

// ---- ncalg ----

inline std::vector<Case> slq2_cases(const SuiteConfig&) {
  std::vector<Case> out;
  const Scalar q = Scalar::q(), qi = Scalar::q_pow(-1);
  struct Rel {
    const char* id;
    std::function<AlgElement(const GaussGenerators&)> r;
  };
  std::vector<Rel> rels = {
      {"ab = q^-1 ba", [qi](const GaussGenerators& g) { return g.a * g.b - qi * g.b * g.a; }},
      {"ac = q^-1 ca", [qi](const GaussGenerators& g) { return g.a * g.c - qi * g.c * g.a; }},
      {"bd = q^-1 db", [qi](const GaussGenerators& g) { return g.b * g.d - qi * g.d * g.b; }},
      {"cd = q^-1 dc", [qi](const GaussGenerators& g) { return g.c * g.d - qi * g.d * g.c; }},
      {"bc = cb", [](const GaussGenerators& g) { return g.b * g.c - g.c * g.b; }},
      {"[a,d] = (q^-1 - q) bc", [q, qi](const GaussGenerators& g) { return g.a * g.d - g.d * g.a - (qi - q) * g.b * g.c; }},
      {"ad - q^-1 bc = 1", [qi](const GaussGenerators& g) { return g.a * g.d - qi * g.b * g.c - AlgElement(1); }},
      {"zeta = -q bc", [q](const GaussGenerators& g) { return -q * g.b * g.c - AlgElement::Z(); }},
  };
  for (const auto& rel : rels)
    out.push_back({"slq2-relations", rel.id, "familiar defining relations of the quantum group", [rel] { return exact(rel.r(GaussGenerators::make())); }});
  out.push_back({"slq2-relations", "base rules", "one parameter reduction of the relations", [q] {
                   ExactCollector c;
                   AlgElement x = AlgElement::x(), y = AlgElement::y(), E = AlgElement::E();
                   c.add("E x", E * x - q.inverse() * x * E);
                   c.add("E y", E * y - q.inverse() * y * E);
                   c.add("x y", x * y - y * x);
                   c.add("zeta", -q * x * AlgElement::E(-2) * y - AlgElement::Z());
                   return c.outcome();
                 }});
  return out;
}

inline std::vector<Case> star_identity_cases(const SuiteConfig& cfg) {
  std::vector<Case> out;
  const Scalar q = Scalar::q(), q2 = Scalar::q_pow(2), qm2 = Scalar::q_pow(-2);
  using detail::zpoly;
  out.push_back({"star-identities", "embedded generators", "the real form is defined by", [q] {
                   auto g = GaussGenerators::make();
                   ExactCollector c;
                   c.add("d*", g.d.star() - g.a);
                   c.add("a*", g.a.star() - g.d);
                   c.add("b*", g.b.star() + q.inverse() * g.c);
                   c.add("c*", g.c.star() + q * g.b);
                   c.add("zeta*", AlgElement::Z().star() - AlgElement::Z());
                   return c.outcome();
                 }});
  for (int twoj = 0; twoj <= cfg.max_twoj; ++twoj)
    out.push_back({"star-identities", "exponentials 2j=" + std::to_string(twoj), "may be proved by induction", [twoj, q2, qm2] {
                     AlgElement ejz = AlgElement::E(twoj), emjz = AlgElement::E(-twoj);
                     AlgElement ejzs = ejz.star(), emjzs = emjz.star();
                     ExactCollector c;
                     c.add("e^{jz*} e^{jz}", ejzs * ejz * zpoly(q_shifted_poly(Scalar(1), q2, twoj)) - AlgElement(1));
                     c.add("e^{jz} e^{jz*}", ejz * ejzs * zpoly(q_shifted_poly(qm2, qm2, twoj)) - AlgElement(1));
                     c.add("e^{-jz*} e^{-jz}", emjzs * emjz - zpoly(q_shifted_poly(qm2, qm2, twoj)));
                     c.add("e^{-jz} e^{-jz*}", emjz * emjzs - zpoly(q_shifted_poly(Scalar(1), q2, twoj)));
                     return c.outcome();
                   }});
  for (int n = 1; n <= 6; ++n)
    out.push_back({"star-identities", "powers n=" + std::to_string(n), "the identities given below hold", [n, q2, qm2] {
                     AlgElement xs = AlgElement::x().star();
                     AlgElement xn = AlgElement::x(n), xsn = xs.pow(n);
                     AlgElement zn = zpoly(ScalarPoly::monomial(Scalar(1), n));
                     ExactCollector c;
                     c.add("x*^n x^n", xsn * xn * zpoly(q_shifted_poly(Scalar(1), q2, n)) - Scalar::q_pow(n * (n - 2)) * zn);
                     c.add("x^n x*^n", xn * xsn * zpoly(q_shifted_poly(qm2, qm2, n)) - Scalar::q_pow(-n * (n + 2)) * zn);
                     return c.outcome();
                   }});
  out.push_back({"star-identities", "x x* relations cleared", "x and x* satisfy the relations", [q] {
                   AlgElement x = AlgElement::x(), xs = x.star();
                   const Scalar w = q - q.inverse();
                   AlgElement xsx = xs * x, xxs = x * xs;
                   ExactCollector c;
                   c.add("first", xxs * (AlgElement(1) + w * xsx) - Scalar::q_pow(-2) * xsx);
                   c.add("second", xsx * (AlgElement(1) - Scalar::q_pow(2) * w * xxs) - Scalar::q_pow(2) * xxs);
                   return c.outcome();
                 }});
  out.push_back({"star-identities", "antipode kinship", "close kinship to the antipode", [q] {
                   auto g = GaussGenerators::make();
                   const Scalar sh = Scalar::s_pow(1), shi = Scalar::s_pow(-1);
                   ExactCollector c;
                   c.add("S(x) = y*", shi * g.a_inv * (-q * g.b) - AlgElement::y().star());
                   c.add("S(y) = x*", sh * (-q.inverse() * g.c) * g.a_inv - AlgElement::x().star());
                   c.add("S(E) = E*", g.a_inv - AlgElement::E().star());
                   return c.outcome();
                 }});
  return out;
}

// ---- haar ----

inline std::vector<Case> haar_cases(const SuiteConfig&) {
  std::vector<Case> out;
  const Scalar q2 = Scalar::q_pow(2);
  for (int n = 0; n <= 20; ++n)
    out.push_back({"haar", "zeta^" + std::to_string(n), "Integration of zeta^n is computed", [n, q2] {
                     ScalarPoly zn = ScalarPoly::monomial(Scalar(1), n);
                     Scalar closed = Scalar::q_pow(2 * n) / basic_number(n + 1, q2);
                     ExactCollector c;
                     c.add("closed form", haar(detail::zpoly(zn)) - closed);
                     c.add("q-integral", haar_qintegral(zn) - closed);
                     return c.outcome();
                   }});
  out.push_back({"haar", "unbalanced monomials", "From the invariance under the action", [] {
                   ExactCollector c;
                   for (int k = 1; k <= 3; ++k)
                     for (int n = -3; n <= 3; ++n) {
                       c.add("x^k E^n", haar(AlgElement::x(k) * AlgElement::E(n)));
                       c.add("E^n y^k", haar(AlgElement::E(n) * AlgElement::y(k)));
                     }
                   for (int n = -3; n <= 3; ++n)
                     if (n != 0) c.add("E^n", haar(AlgElement::E(n)));
                   c.add("H[1]", haar(AlgElement(1)) - Scalar(1));
                   return c.outcome();
                 }});
  out.push_back({"haar", "invariance under the actions", "the left and the right invariance", [] {
                   std::vector<Sym> alphabet = {Sym::a, Sym::b, Sym::c, Sym::d};
                   std::vector<std::vector<Sym>> words = {{}};
                   for (int len = 1; len <= 3; ++len) {
                     std::vector<std::vector<Sym>> next;
                     for (const auto& w : words)
                       if (static_cast<int>(w.size()) == len - 1)
                         for (Sym s : alphabet) {
                           auto v = w;
                           v.push_back(s);
                           next.push_back(v);
                         }
                     words.insert(words.end(), next.begin(), next.end());
                   }
                   ExactCollector c;
                   for (const auto& w : words) {
                     c.add("J+ |>", haar(act_word(Act::Jp, w)));
                     c.add("J- |>", haar(act_word(Act::Jm, w)));
                     AlgElement f = word_element(w);
                     c.add("q^J0 |>", haar(Scalar::q_pow(word_right_weight(w)) * f) - haar(f));
                   }
                   return c.outcome();
                 }});
  return out;
}

/// H[f* f] >= -tol for random f at the configured q.
inline std::vector<Case> haar_positivity_cases(const SuiteConfig& cfg, int samples = 50) {
  std::vector<Case> out;
  out.push_back({"haar-positivity", "f = x", "positivity of the Haar state", [cfg] {
                   AlgElement x = AlgElement::x();
                   double v = haar_eval(x.star() * x, cfg.numeric()).value;
                   return numeric(std::max(0.0, -v), cfg.tol, "H[x* x] = " + std::to_string(v));
                 }});
  out.push_back({"haar-positivity", "random seed=" + std::to_string(cfg.seed), "positivity of the Haar state", [cfg, samples] {
                   std::mt19937 rng(cfg.seed);
                   double worst = 0.0, smallest = 1e300;
                   for (int i = 0; i < samples; ++i) {
                     AlgElement f = sampling::random_element(rng);
                     if (f.is_zero()) continue;
                     double v = haar_eval(f.star() * f, cfg.numeric()).value;
                     smallest = std::min(smallest, v);
                     worst = std::max(worst, -v);
                   }
                   return numeric(worst, cfg.tol, "smallest H[f* f] = " + std::to_string(smallest));
                 }});
  return out;
}

// ---- duality ----

inline std::vector<Case> hopf_cases(const SuiteConfig&) {
  using U = UElement;
  std::vector<Case> out;
  out.push_back({"hopf-structure", "defining relations", "generated by three elements", [] {
                   ExactCollector c;
                   c.add("[J+,J-]", U::Jp() * U::Jm() - U::Jm() * U::Jp() - U::bracket_2J0());
                   c.add("[J0,J+]", U::J0() * U::Jp() - U::Jp() * U::J0() - U::Jp());
                   c.add("[J0,J-]", U::J0() * U::Jm() - U::Jm() * U::J0() + U::Jm());
                   c.add("K J+", U::K() * U::Jp() - Scalar::q() * U::Jp() * U::K());
                   return c.outcome();
                 }});
  for (int deg = 0; deg <= 4; ++deg)
    out.push_back({"hopf-structure", "coproduct degree " + std::to_string(deg), "we start by listing the coproduct structure", [deg] {
                     ExactCollector c;
                     for (int k = 0; k <= deg; ++k)
                       for (int l = 0; k + l <= deg; ++l) {
                         int m = deg - k - l;
                         U u = U::basis(k, l, m);
                         UTensor d = coproduct(u);
                         std::string tag = "E" + std::to_string(k) + std::to_string(l) + std::to_string(m);
                         c.flag(tag + " closed form", d == coproduct_closed_form(k, l, m));
                         std::map<std::tuple<UMono, UMono, UMono>, Scalar> left, right;
                         auto acc = [](auto& mp, const auto& key, const Scalar& v) {
                           mp[key] += v;
                           if (mp[key].is_zero()) mp.erase(key);
                         };
                         U cl, cr;
                         for (const auto& [key, v] : d.terms()) {
                           const UTensor dl = coproduct(U(key.first, Scalar(1))), dr = coproduct(U(key.second, Scalar(1)));
                           for (const auto& [k2, v2] : dl.terms()) acc(left, std::make_tuple(k2.first, k2.second, key.second), v * v2);
                           for (const auto& [k2, v2] : dr.terms()) acc(right, std::make_tuple(key.first, k2.first, k2.second), v * v2);
                           cl += U(key.second, Scalar(1)) * (v * U(key.first, Scalar(1)).counit());
                           cr += U(key.first, Scalar(1)) * (v * U(key.second, Scalar(1)).counit());
                         }
                         c.flag(tag + " coassociativity", left == right);
                         c.add(tag + " left counit", cl - u);
                         c.add(tag + " right counit", cr - u);
                       }
                     return c.outcome();
                   }});
  out.push_back({"hopf-structure", "antipode", "antipode on generators", [] {
                   ExactCollector c;
                   for (const U& u : {U::Jp(), U::Jm(), U::J0(), U::K(), U::Jp() * U::Jm()}) {
                     UTensor d = coproduct(u);
                     c.add("m(S x id)D " + u.str(), d.map_legs([](const U& a) { return a.antipode(); }, [](const U& b) { return b; }).multiply() - U(u.counit()));
                     c.add("m(id x S)D " + u.str(), d.map_legs([](const U& a) { return a; }, [](const U& b) { return b.antipode(); }).multiply() - U(u.counit()));
                   }
                   return c.outcome();
                 }});
  return out;
}

inline std::vector<Case> pairing_cases(const SuiteConfig&) {
  using U = UElement;
  std::vector<Case> out;
  out.push_back({"duality", "low-index pairings", "their dual relations with the known basis", [] {
                   ExactCollector c;
                   c.add("<x,J+>", pair_scalar(AlgElement::x(), U::Jp()) - Scalar(1));
                   c.add("<x,J->", pair_scalar(AlgElement::x(), U::Jm()));
                   c.add("<y,J->", pair_scalar(AlgElement::y(), U::Jm()) - Scalar(1));
                   c.add("<E^2,J0>", pair_scalar(AlgElement::E(2), U::J0()) - Scalar(1));
                   c.add("<1,1>", pair_scalar(AlgElement(1), U(1)) - Scalar(1));
                   c.add("<x^2,J+^2>", pair_scalar(AlgElement::x(2), U::Jp(2)) - q_number(2));
                   return c.outcome();
                 }});
  auto gens = detail::pairing_generators();
  for (const auto& [fn, f] : gens)
    out.push_back({"duality", "product duality f=" + fn, "two sets of structure constants", [f = f, gens] {
                     ExactCollector c;
                     for (const auto& [gn, g] : gens)
                       for (const auto& u : detail::u_basis(3, true))
                         c.add("g=" + gn + " u=" + u.str(), pair_scalar(f * g, u) - pair_through_coproduct(f, g, u));
                     return c.outcome();
                   }});
  out.push_back({"duality", "symbol actions", "the left and the right action", [] {
                   ExactCollector c;
                   auto us = detail::u_basis(3, true);
                   for (Sym s : {Sym::a, Sym::b, Sym::c, Sym::d, Sym::dinv})
                     for (auto [act, z] : {std::pair{Act::Jp, U::Jp()}, std::pair{Act::Jm, U::Jm()}}) {
                       AlgElement img = act_symbol(act, s);
                       for (const auto& u : us) c.add("action", pair_scalar(img, u) - pair_scalar(sym_element(s), u * z));
                     }
                   return c.outcome();
                 }});
  out.push_back({"duality", "star convention", "pairing convention between the two stars", [] {
                   std::vector<AlgElement> fs = {AlgElement::x(), AlgElement::y(), AlgElement::E(), AlgElement::E(-1)};
                   std::vector<U> us = {U::Jp(), U::Jm(), U::K(), U::K(-1), U::J0(), U(1)};
                   std::string note;
                   bool any = false;
                   for (auto conv : {StarConvention::antipode_then_star, StarConvention::star_then_antipode, StarConvention::plain}) {
                     bool all = true;
                     for (const auto& f : fs)
                       for (const auto& u : us) all = all && star_convention_holds(conv, f, u);
                     any = any || all;
                     note += std::string(note.empty() ? "" : "; ") + to_string(conv) + (all ? " holds" : " fails");
                   }
                   return exact_flag(any, "no convention holds", note);
                 }});
  return out;
}

// ---- property suites ----

inline std::vector<Case> property_cases(const SuiteConfig& cfg) {
  std::vector<Case> out;
  const unsigned seed = cfg.seed;
  out.push_back({"properties", "associativity 200 triples", "engine associativity", [seed] {
                   std::mt19937 rng(seed);
                   ExactCollector c;
                   for (int i = 0; i < 200; ++i) {
                     AlgElement f = sampling::random_element(rng), g = sampling::random_element(rng), h = sampling::random_element(rng);
                     c.add("triple " + std::to_string(i), (f * g) * h - f * (g * h));
                   }
                   return c.outcome();
                 }});
  out.push_back({"properties", "star involution 100 elements", "star is involutive", [seed] {
                   std::mt19937 rng(seed + 1);
                   ExactCollector c;
                   for (int i = 0; i < 100; ++i) {
                     AlgElement f = sampling::random_element(rng);
                     c.add("element " + std::to_string(i), f.star().star() - f);
                   }
                   for (int i = 0; i < 30; ++i) {
                     AlgElement f = sampling::random_element(rng), g = sampling::random_element(rng);
                     c.add("antimultiplicative " + std::to_string(i), (f * g).star() - g.star() * f.star());
                   }
                   return c.outcome();
                 }});
  out.push_back({"properties", "normalization idempotence", "normal form is idempotent", [seed] {
                   std::mt19937 rng(seed + 2);
                   ExactCollector c;
                   for (int i = 0; i < 100; ++i) {
                     AlgElement f = sampling::random_element(rng, 3) * sampling::random_element(rng, 3);
                     AlgElement rebuilt;
                     for (const auto& [m, r] : f.terms()) {
                       c.flag("mixed monomial", m.k == 0 || m.m == 0);
                       c.flag("zero coefficient", !r.is_zero());
                       rebuilt += AlgElement(m, r);
                     }
                     c.add("renormalised " + std::to_string(i), rebuilt - f);
                     c.add("unit " + std::to_string(i), AlgElement(1) * f * AlgElement(1) - f);
                   }
                   return c.outcome();
                 }});
  auto pos = haar_positivity_cases(cfg, 100);
  for (auto& p : pos) {
    p.suite = "properties";
    p.id = "haar positivity " + p.id;
  }
  out.insert(out.end(), pos.begin(), pos.end());
  return out;
}

}  // namespace qcs::suites
