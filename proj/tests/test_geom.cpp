#include "qcoherent/geom.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qcs;

namespace {

void expect_all_zero(const std::vector<std::pair<std::string, AlgRad>>& rs) {
  for (const auto& [name, r] : rs) EXPECT_TRUE(r.is_zero()) << name << ": " << r.str();
}

Form random_form(std::mt19937& rng, bool allow_one_forms) {
  std::uniform_int_distribution<int> p(-2, 2), c(-2, 2), dd(0, allow_one_forms ? 2 : 0);
  Form f;
  for (int i = 0; i < 2; ++i) {
    LinRat g = LinRat(Scalar(c(rng)) + Scalar::q()) * (i == 0 ? LinRat(1) : LinRat::var());
    if (c(rng) > 0) g = g * LinRat::inv_linear(Form::omega());
    f += Form(g, p(rng), static_cast<DPart>(dd(rng)));
  }
  return f;
}

}  // namespace

TEST(Sphere, PodlesRelationsComplexCoordinates) { expect_all_zero(podles_residuals(sphere_coords())); }

TEST(Sphere, PodlesRelationsEmbeddedCoordinates) { expect_all_zero(podles_residuals(embedded_sphere_coords())); }

TEST(Sphere, EmbeddedAgreesWithComplex) {
  SphereCoords a = sphere_coords(), b = embedded_sphere_coords();
  EXPECT_TRUE((a.x0 - b.x0).is_zero());
  EXPECT_TRUE((a.x1 - b.x1).is_zero()) << a.x1.str() << " vs " << b.x1.str();
  EXPECT_TRUE((a.xm1 - b.xm1).is_zero()) << a.xm1.str() << " vs " << b.xm1.str();
}

TEST(Sphere, StarMap) { expect_all_zero(sphere_star_residuals(sphere_coords())); }

TEST(Sphere, ZetaInTermsOfX) {
  for (const auto& [name, r] : zeta_xx_residuals()) EXPECT_TRUE(r.is_zero()) << name << ": " << r.str();
}

TEST(Sphere, ExpectationValues) {
  for (int twoj = 0; twoj <= 6; ++twoj) {
    Expectations e = expectation_values(twoj), c = expectation_closed_form(twoj);
    EXPECT_TRUE((e.Xp - c.Xp).is_zero()) << twoj << ": " << e.Xp.str();
    EXPECT_TRUE((e.Xm - c.Xm).is_zero()) << twoj << ": " << e.Xm.str();
    EXPECT_TRUE((e.X0 - c.X0).is_zero()) << twoj << ": " << e.X0.str();
  }
  Expectations zero = expectation_values(0);
  EXPECT_TRUE(zero.Xp.is_zero() && zero.Xm.is_zero() && zero.X0.is_zero());
}

TEST(Sphere, RescaledExpectationsAreCoordinates) {
  SphereCoords c = sphere_coords();
  for (int twoj = 1; twoj <= 6; ++twoj) {
    SphereCoords e = sphere_from_expectations(twoj);
    EXPECT_TRUE((e.x1 - c.x1).is_zero()) << twoj;
    EXPECT_TRUE((e.x0 - c.x0).is_zero()) << twoj;
    EXPECT_TRUE((e.xm1 - c.xm1).is_zero()) << twoj;
  }
}

TEST(Sphere, CoordinatesHaveRightWeightZero) {
  SphereCoords c = sphere_coords();
  for (const AlgRad* r : {&c.x1, &c.x0, &c.xm1})
    for (const auto& t : r->terms()) EXPECT_EQ(weight(t.coeff).right.twice, 0);
}

TEST(Sphere, ClassicalLimit) {
  for (auto [xv, Ev, yv] : {std::tuple{0.3, 1.2, -0.4}, std::tuple{-0.7, 0.8, 0.2}}) {
    EXPECT_LT(classical_sphere_defect(1.0 - 1e-6, xv, Ev, yv), 1e-4);
  }
}

TEST(OmegaCalculus, PrintedRules) {
  auto g = GaussGenerators::make();
  EXPECT_EQ(omega_factor(Omega::w1, Sym::a), Scalar::q_pow(2));
  EXPECT_EQ(omega_factor(Omega::w0, Sym::dinv), Scalar::q());
  for (Omega k : {Omega::w0, Omega::w1, Omega::w2}) {
    // the algebra relations ad - q^-1 bc = 1 and bc = cb need these products to be 1
    EXPECT_TRUE((omega_factor(k, Sym::a) * omega_factor(k, Sym::d)).is_one());
    EXPECT_TRUE((omega_factor(k, Sym::b) * omega_factor(k, Sym::c)).is_one());
    EXPECT_EQ(omega_pass(k, g.a), omega_factor(k, Sym::a) * g.a);
    EXPECT_EQ(omega_pass(k, g.b), omega_factor(k, Sym::b) * g.b);
    EXPECT_EQ(omega_pass(k, g.c), omega_factor(k, Sym::c) * g.c);
    EXPECT_EQ(omega_pass(k, g.d), omega_factor(k, Sym::d) * g.d);
  }
}

TEST(OmegaCalculus, ComplexCoordinatesCommuteWithOmegas) {
  for (Omega k : {Omega::w0, Omega::w1, Omega::w2}) {
    EXPECT_EQ(omega_pass(k, AlgElement::x()), AlgElement::x()) << to_string(k);
    EXPECT_EQ(omega_pass(k, AlgElement::x().star()), AlgElement::x().star()) << to_string(k);
    EXPECT_EQ(omega_pass(k, AlgElement::Z()), AlgElement::Z());
  }
}

TEST(ComplexCalculus, FpmForms) {
  const Scalar q = Scalar::q();
  LinRat t = LinRat::var();
  EXPECT_EQ(Form::f_plus() * LinRat::linear((Scalar(1) - q.pow(4)) * q), LinRat(1));
  LinRat zeta = LinRat(q) * t * LinRat::inv_linear(q);
  EXPECT_EQ((LinRat(1) - zeta) * (LinRat(1) - LinRat(q.pow(4)) * zeta).inverse(), Form::f_plus());
  EXPECT_EQ((LinRat(1) - zeta) * (LinRat(1) - LinRat(q.pow(-4)) * zeta).inverse(), Form::f_minus());
}

TEST(ComplexCalculus, AxiomsAsProducts) {
  const Scalar q = Scalar::q();
  Form x = Form::x(), xs = Form::xs(), dx = Form::dx(), dxs = Form::dxs();
  EXPECT_EQ(x * dx, q.pow(2) * (dx * x));
  EXPECT_EQ(xs * dxs, q.pow(-2) * (dxs * xs));
  EXPECT_EQ(dx * xs, Form(LinRat(q.pow(-2)) * Form::f_minus()) * xs * dx);
  EXPECT_EQ(dxs * x, q.pow(2) * (x * Form(Form::f_plus()) * dxs));
  EXPECT_TRUE((dx * dx).is_zero());
  EXPECT_TRUE((dxs * dxs).is_zero());
  EXPECT_EQ(xs * x, Form::t());
  EXPECT_EQ(x * xs * Form(LinRat::linear(Form::omega())), q.pow(-2) * Form::t());
}

TEST(ComplexCalculus, CrossingIdentities) {
  const Scalar q = Scalar::q(), w = Form::omega();
  Form x = Form::x(), xs = Form::xs(), dx = Form::dx(), dxs = Form::dxs();
  LinRat t = LinRat::var();
  // letterwise dx (x* x) against the printed rule
  EXPECT_EQ(dx * xs * x, Form(LinRat(q.pow(-4)) * t * Form::f_minus()) * dx);
  EXPECT_EQ(dx * Form::t(), Form(LinRat(q.pow(-4)) * t * Form::f_minus()) * dx);
  EXPECT_EQ(dxs * xs * x, Form(LinRat(q.pow(4)) * t * Form::f_plus()) * dxs);
  EXPECT_EQ(dxs * Form::t(), Form(LinRat(q.pow(4)) * t * Form::f_plus()) * dxs);
  EXPECT_EQ(x * Form(t * Form::f_plus()), Form(LinRat(q.pow(-2)) * t * LinRat::inv_linear(-q.pow(2) * w)) * x);
  EXPECT_EQ(xs * Form(t * Form::f_minus()), Form(LinRat(q.pow(2)) * t * LinRat::inv_linear(w)) * xs);
}

TEST(ComplexCalculus, Associativity) {
  std::mt19937 rng(0);
  for (int i = 0; i < 60; ++i) {
    Form a = random_form(rng, true), b = random_form(rng, true), c = random_form(rng, true);
    ASSERT_EQ((a * b) * c, a * (b * c)) << a << " | " << b << " | " << c;
  }
}

TEST(ComplexCalculus, GradingAdditive) {
  std::mt19937 rng(1);
  for (int i = 0; i < 30; ++i) {
    Form a = random_form(rng, true), b = random_form(rng, true);
    Form p = a * b;
    if (!p.is_zero()) {
      EXPECT_LE(p.max_degree(), a.max_degree() + b.max_degree());
    }
  }
}

TEST(ComplexCalculus, DerivationRespectsRelation) {
  Form x = Form::x(), xs = Form::xs();
  const Scalar w = Form::omega();
  // x x* (1 + w x* x) - q^-2 x* x = 0 as a word, then d of the word
  Form rel = d_word({x, xs}) + d_word({x, xs, xs, x}) * w - d_word({xs, x}) * Scalar::q_pow(-2);
  EXPECT_TRUE(rel.is_zero()) << rel;
  EXPECT_TRUE((x * xs + x * xs * xs * x * w - xs * x * Scalar::q_pow(-2)).is_zero());
}

TEST(ComplexCalculus, DSquaredVanishes) {
  for (const Form& f : {Form::t(), Form::x(2), Form::xs() * Form(LinRat::inv_linear(Scalar::q())), Form::t().pow(2) + Form::x()}) {
    EXPECT_TRUE(f.d().d().is_zero()) << f << " -> " << f.d().d();
  }
}

TEST(ComplexCalculus, PowersOfT) {
  for (int n = 1; n <= 4; ++n) {
    Form leibniz = d_word(std::vector<Form>(static_cast<std::size_t>(n), Form::xs() * Form::x()));
    EXPECT_EQ(leibniz, dxn_closed_form(n)) << n << ": " << leibniz;
    EXPECT_EQ(Form::t().pow(n).d(), dxn_closed_form(n)) << n;
  }
}

TEST(ComplexCalculus, DxDxStarCompatibility) {
  // d applied to dx x* = q^-2 f_-(t) x* dx
  Form xs = Form::xs(), dx = Form::dx();
  Form lhs = -(dx * xs.d());
  Form rhs = (Form(LinRat(Scalar::q_pow(-2)) * Form::f_minus()) * xs).d() * dx;
  EXPECT_EQ(lhs, rhs) << lhs << " vs " << rhs;
}
