#include "qcoherent/haar.hpp"
#include "qcoherent/ncalg.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace qcs;

namespace {

const Scalar q = Scalar::q();
AlgElement X(int k = 1) { return AlgElement::x(k); }
AlgElement Y(int m = 1) { return AlgElement::y(m); }
AlgElement E(int n = 1) { return AlgElement::E(n); }
AlgElement zeta() { return AlgElement::Z(); }
AlgElement zpoly(const ScalarPoly& p) { return AlgElement(LinRat(p)); }

}  // namespace

TEST(Multiply, BaseRelations) {
  EXPECT_EQ(E() * X(), Scalar::q_pow(-1) * X() * E());
  EXPECT_EQ(E() * Y(), Scalar::q_pow(-1) * Y() * E());
  EXPECT_EQ(X() * Y(), Y() * X());
  EXPECT_EQ(E() * E(-1), AlgElement(1));
  EXPECT_EQ(zeta() * X(), Scalar::q_pow(2) * X() * zeta());
  EXPECT_EQ(zeta() * Y(), Scalar::q_pow(2) * Y() * zeta());
  EXPECT_EQ(zeta() * E(), Scalar::q_pow(2) * E() * zeta());
  EXPECT_EQ(-q * X() * E(-2) * Y(), zeta());
}

TEST(Multiply, UnitIsNeutral) {
  std::mt19937 rng(1);
  for (int i = 0; i < 20; ++i) {
    AlgElement f = fixtures::random_element(rng, 3);
    EXPECT_EQ(AlgElement(1) * f, f);
    EXPECT_EQ(f * AlgElement(1), f);
  }
}

TEST(Multiply, Associativity200) {
  std::mt19937 rng(0);
  for (int i = 0; i < 200; ++i) {
    AlgElement f = fixtures::random_element(rng), g = fixtures::random_element(rng), h = fixtures::random_element(rng);
    ASSERT_EQ((f * g) * h, f * (g * h)) << f.str() << " | " << g.str() << " | " << h.str();
  }
}

TEST(Multiply, MixedMonomialsNeverStored) {
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    AlgElement f = fixtures::random_element(rng, 3) * fixtures::random_element(rng, 3);
    for (const auto& [m, c] : f.terms()) EXPECT_TRUE(m.k == 0 || m.m == 0);
  }
}

TEST(Gauss, SLq2Relations) {
  auto g = GaussGenerators::make();
  const Scalar qi = Scalar::q_pow(-1);
  EXPECT_TRUE((g.a * g.b - qi * g.b * g.a).is_zero());
  EXPECT_TRUE((g.a * g.c - qi * g.c * g.a).is_zero());
  EXPECT_TRUE((g.b * g.d - qi * g.d * g.b).is_zero());
  EXPECT_TRUE((g.c * g.d - qi * g.d * g.c).is_zero());
  EXPECT_TRUE((g.b * g.c - g.c * g.b).is_zero());
  EXPECT_TRUE((g.a * g.d - g.d * g.a - (qi - q) * g.b * g.c).is_zero());
  EXPECT_TRUE((g.a * g.d - qi * g.b * g.c - AlgElement(1)).is_zero());
  EXPECT_EQ(-q * g.b * g.c, zeta());
  EXPECT_EQ(g.a, E() * (AlgElement(1) - zeta()));
  EXPECT_EQ(g.a * g.a_inv, AlgElement(1));
  EXPECT_EQ(g.a_inv * g.a, AlgElement(1));
}

TEST(Gauss, InverseFormulas) {
  auto g = GaussGenerators::make();
  EXPECT_EQ(X(), Scalar::s_pow(-1) * g.b * g.d_inv);
  EXPECT_EQ(Y(), Scalar::s_pow(1) * g.d_inv * g.c);
}

TEST(Star, GeneratorImages) {
  auto g = GaussGenerators::make();
  EXPECT_EQ(g.d.star(), g.a);
  EXPECT_EQ(g.a.star(), g.d);
  EXPECT_EQ(g.b.star(), -Scalar::q_pow(-1) * g.c);
  EXPECT_EQ(g.c.star(), -q * g.b);
  EXPECT_EQ(zeta().star(), zeta());
  EXPECT_EQ(E().star() * g.a, AlgElement(1));
  // printed forms with (1 - zeta)^{-1} on the left
  AlgElement inv = AlgElement(LinRat::inv_linear(Scalar(-1)));
  EXPECT_EQ(X().star(), -(inv * Y() * E(-2)));
  EXPECT_EQ(Y().star(), -(inv * E(-2) * X()));
  EXPECT_EQ(E().star(), inv * E(-1));
}

TEST(Star, InvolutiveAndAntimultiplicative) {
  std::mt19937 rng(0);
  for (int i = 0; i < 100; ++i) {
    AlgElement f = fixtures::random_element(rng);
    ASSERT_EQ(f.star().star(), f) << f.str();
  }
  for (int i = 0; i < 50; ++i) {
    AlgElement f = fixtures::random_element(rng), g = fixtures::random_element(rng);
    ASSERT_EQ((f * g).star(), g.star() * f.star());
  }
}

TEST(StarIdentities, EzOneAndTwo) {
  const Scalar q2 = Scalar::q_pow(2), qm2 = Scalar::q_pow(-2);
  for (int twoj = 0; twoj <= 6; ++twoj) {
    AlgElement ejz = E(twoj), emjz = E(-twoj);
    AlgElement ejzs = ejz.star(), emjzs = emjz.star();
    EXPECT_TRUE((ejzs * ejz * zpoly(q_shifted_poly(Scalar(1), q2, twoj)) - AlgElement(1)).is_zero());
    EXPECT_TRUE((ejz * ejzs * zpoly(q_shifted_poly(qm2, qm2, twoj)) - AlgElement(1)).is_zero());
    EXPECT_EQ(emjzs * emjz, zpoly(q_shifted_poly(qm2, qm2, twoj)));
    EXPECT_EQ(emjz * emjzs, zpoly(q_shifted_poly(Scalar(1), q2, twoj)));
  }
}

TEST(StarIdentities, XnXsn) {
  const Scalar q2 = Scalar::q_pow(2), qm2 = Scalar::q_pow(-2);
  AlgElement xs = X().star();
  for (int n = 1; n <= 6; ++n) {
    AlgElement xn = X().pow(n), xsn = xs.pow(n);
    AlgElement zn = zpoly(ScalarPoly::monomial(Scalar(1), n));
    EXPECT_TRUE((xsn * xn * zpoly(q_shifted_poly(Scalar(1), q2, n)) - Scalar::q_pow(n * (n - 2)) * zn).is_zero()) << n;
    EXPECT_TRUE((xn * xsn * zpoly(q_shifted_poly(qm2, qm2, n)) - Scalar::q_pow(-n * (n + 2)) * zn).is_zero()) << n;
  }
}

TEST(StarIdentities, XnXsnAtOne) {
  AlgElement xs = X().star();
  EXPECT_TRUE((xs * X() * (AlgElement(1) - zeta()) - Scalar::q_pow(-1) * zeta()).is_zero());
}

TEST(StarIdentities, XXstarClearedForms) {
  AlgElement xs = X().star();
  const Scalar w = q - Scalar::q_pow(-1);
  AlgElement xsx = xs * X(), xxs = X() * xs;
  EXPECT_TRUE((xxs * (AlgElement(1) + w * xsx) - Scalar::q_pow(-2) * xsx).is_zero());
  EXPECT_TRUE((xsx * (AlgElement(1) - Scalar::q_pow(2) * w * xxs) - Scalar::q_pow(2) * xxs).is_zero());
}

TEST(StarIdentities, AntipodeKinship) {
  auto g = GaussGenerators::make();
  const Scalar sh = Scalar::s_pow(1), shi = Scalar::s_pow(-1);
  // S(a)=d, S(b)=-q b, S(c)=-q^-1 c, S(d)=a, S(d^-1)=a^-1, antimultiplicative
  AlgElement Sx = shi * g.a_inv * (-q * g.b);
  AlgElement Sy = sh * (-Scalar::q_pow(-1) * g.c) * g.a_inv;
  AlgElement SE = g.a_inv;
  EXPECT_EQ(Sx, Y().star());
  EXPECT_EQ(Sy, X().star());
  EXPECT_EQ(SE, E().star());
}

TEST(Projection, CoefficientAndZetaPart) {
  EXPECT_EQ((AlgElement(1) - zeta()).zeta_part(), LinRat(1) - LinRat::var());
  EXPECT_EQ((X() * E(-1)).coefficient_at(1, -1, 0), LinRat(1));
  EXPECT_EQ((X() * E(-2) * Y()).zeta_part(), LinRat(-Scalar::q_pow(-1)) * LinRat::var());
}

TEST(Printing, ConstantAndZetaCoefficients) {
  EXPECT_EQ(AlgElement().str(), "0");
  EXPECT_FALSE((E() * X()).str().empty());
}

TEST(Haar, Examples) {
  EXPECT_EQ(haar(AlgElement(1)), Scalar(1));
  EXPECT_EQ(haar(zeta()), Scalar::q_pow(2) / (Scalar(1) + Scalar::q_pow(2)));
  EXPECT_EQ(haar(X() * E(-1)), Scalar());
  EXPECT_THROW(haar(X().star() * X()), NonPolynomialZetaPart);
}

TEST(Haar, ClosedFormMatchesQIntegral) {
  const Scalar q2 = Scalar::q_pow(2);
  for (int n = 0; n <= 20; ++n) {
    ScalarPoly zn = ScalarPoly::monomial(Scalar(1), n);
    Scalar closed = Scalar::q_pow(2 * n) / basic_number(n + 1, q2);
    EXPECT_EQ(haar(zpoly(zn)), closed);
    EXPECT_EQ(haar_qintegral(zn), closed);
  }
  EXPECT_EQ(haar_qintegral(ScalarPoly::monomial(Scalar(1), 2)),
            Scalar::q_pow(4) / (Scalar(1) + Scalar::q_pow(2) + Scalar::q_pow(4)));
}

TEST(Haar, VanishesOnUnbalancedMonomials) {
  for (int k = 1; k <= 3; ++k)
    for (int n = -3; n <= 3; ++n) {
      EXPECT_TRUE(haar(X(k) * E(n)).is_zero());
      EXPECT_TRUE(haar(E(n) * Y(k)).is_zero());
    }
  for (int n = -3; n <= 3; ++n) {
    if (n != 0) {
      EXPECT_TRUE(haar(E(n)).is_zero());
    }
  }
}

TEST(Haar, NumericFallbackAndPositivity) {
  NumericConfig cfg;
  auto r = haar_eval(X().star() * X(), cfg);
  EXPECT_EQ(r.mode, HaarResult::Mode::numeric);
  // oracle: (1 - q^2) sum_k q^{-1} z/(1 - z) q^{2k}, z = q^{2k+2}
  double q2 = 0.49, oracle = 0.0;
  for (int k = 0; k < 200; ++k) {
    double z = std::pow(q2, k + 1);
    oracle += (1.0 / 0.7) * z / (1.0 - z) * std::pow(q2, k);
  }
  oracle *= 1.0 - q2;
  EXPECT_NEAR(r.value, oracle, 1e-12);
  EXPECT_GT(r.value, 0.0);
  AlgElement f = X() + E(-1);
  EXPECT_GT(haar_eval(f.star() * f, cfg).value, 0.0);
  auto exact = haar_eval(zeta() * zeta(), cfg);
  EXPECT_TRUE(exact.exact.has_value());
  EXPECT_NEAR(exact.value, std::pow(0.7, 4) / (1 + 0.49 + std::pow(0.49, 2)), 1e-12);
}
