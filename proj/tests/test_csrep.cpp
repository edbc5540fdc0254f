#include "qcoherent/csrep.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace qcs;

namespace {

constexpr int kMaxTwoJ = 6;

RepMatrix commutator(const RepMatrix& a, const RepMatrix& b) { return rep_add(rep_mul(a, b), rep_mul(b, a), Scalar(-1)); }

}  // namespace

TEST(SpinRep, DefiningRelations) {
  for (int twoj = 0; twoj <= kMaxTwoJ; ++twoj) {
    SpinRep r = SpinRep::build(twoj);
    EXPECT_TRUE(rep_is_zero(rep_add(commutator(r.Jp, r.Jm), r.bracket_2J0(), Scalar(-1)))) << twoj;
    EXPECT_TRUE(rep_is_zero(rep_add(commutator(r.J0(), r.Jp), r.Jp, Scalar(-1))));
    EXPECT_TRUE(rep_is_zero(rep_add(commutator(r.J0(), r.Jm), r.Jm)));
    RepMatrix conj = rep_mul(rep_mul(r.q_pow_J0(1), r.Jp), r.q_pow_J0(-1));
    EXPECT_TRUE(rep_is_zero(rep_add(conj, r.Jp, -Scalar::q())));
    RepMatrix p = r.identity(), m = r.identity();
    for (int i = 0; i <= twoj; ++i) {
      p = rep_mul(p, r.Jp);
      m = rep_mul(m, r.Jm);
    }
    EXPECT_TRUE(rep_is_zero(p));
    EXPECT_TRUE(rep_is_zero(m));
  }
}

TEST(UniversalT, FundamentalIsGaussMatrix) {
  auto T = universal_T(1);
  auto g = GaussGenerators::make();
  // index 1 is m = +1/2
  EXPECT_TRUE(is_exactly(T[1][1], g.a)) << T[1][1].str();
  EXPECT_TRUE(is_exactly(T[1][0], g.b)) << T[1][0].str();
  EXPECT_TRUE(is_exactly(T[0][1], g.c)) << T[0][1].str();
  EXPECT_TRUE(is_exactly(T[0][0], g.d)) << T[0][0].str();
}

TEST(UniversalT, LowestWeightColumnIsCoherentState) {
  for (int twoj = 0; twoj <= 4; ++twoj) {
    auto T = universal_T(twoj);
    CSVector col{twoj, {}};
    for (auto& row : T) col.comp.push_back(row[0]);
    EXPECT_EQ(col, coherent_state(twoj)) << twoj;
  }
}

TEST(CoherentState, OrderingsAgree) {
  for (int twoj = 0; twoj <= kMaxTwoJ; ++twoj) EXPECT_EQ(coherent_state(twoj), coherent_state_left_exponential(twoj));
}

TEST(CoherentState, NormIsOne) {
  for (int twoj = 0; twoj <= kMaxTwoJ; ++twoj) {
    AlgRad n = inner(coherent_state(twoj), coherent_state(twoj));
    EXPECT_TRUE(is_exactly(n, AlgElement(1))) << twoj << ": " << n.str();
  }
}

TEST(CoherentState, NormSummationIdentityNumeric) {
  // sum_n [2j n] q^{2nj} q^{n(n-2)} w^n/(w;q^2)_n = 1/(w;q^2)_{2j}, w = q^{-4j} zeta
  const double q = 0.7, q2 = q * q;
  for (int twoj = 1; twoj <= 6; ++twoj) {
    for (double zeta : {0.05, 0.2, 0.37}) {
      double w = std::pow(q, -2.0 * twoj) * zeta, lhs = 0.0;
      for (int n = 0; n <= twoj; ++n)
        lhs += q_binomial(twoj, n).eval(std::sqrt(q)) * std::pow(q, n * twoj) * std::pow(q, n * (n - 2)) * std::pow(w, n) / numeric::q_shifted(w, q2, n);
      EXPECT_NEAR(lhs, 1.0 / numeric::q_shifted(w, q2, twoj), 1e-9 * std::fabs(lhs));
    }
  }
}

TEST(CoherentState, ResolutionOfUnity) {
  for (int twoj = 0; twoj <= kMaxTwoJ; ++twoj) {
    auto M = resolution_matrix(twoj);
    for (std::size_t n = 0; n < M.size(); ++n)
      for (std::size_t m = 0; m < M.size(); ++m) {
        if (n == m) {
          EXPECT_TRUE(M[n][m].is_rational() && M[n][m].rational_part().is_one()) << twoj << " " << n;
        } else {
          EXPECT_TRUE(M[n][m].is_zero()) << twoj << " " << n << " " << m;
        }
      }
  }
}

TEST(CoherentState, GeneratorActions) {
  for (int twoj = 0; twoj <= kMaxTwoJ; ++twoj) {
    SpinRep r = SpinRep::build(twoj);
    CSVector cs = coherent_state(twoj);
    EXPECT_EQ(act(r.Jp, cs), ActionForms::jplus(twoj)) << twoj;
    EXPECT_EQ(act(r.Jm, cs), ActionForms::jminus(twoj)) << twoj;
    EXPECT_EQ(act(r.bracket_J0(), cs), ActionForms::bracket_j0(twoj)) << twoj;
  }
}

TEST(CoherentState, Annihilator) {
  for (int twoj = 0; twoj <= kMaxTwoJ; ++twoj) {
    SpinRep r = SpinRep::build(twoj);
    EXPECT_TRUE(annihilator(r).apply_to(coherent_state(twoj)).is_zero()) << twoj;
  }
}

TEST(CoherentState, GammaEigenvalue) {
  for (int twoj = 0; twoj <= kMaxTwoJ; ++twoj) {
    SpinRep r = SpinRep::build(twoj);
    CSVector cs = coherent_state(twoj);
    const HalfInt j = HalfInt::from_twice(twoj);
    CSVector expect = (-Scalar::q_pow(-j) * q_number(j)) * cs;
    EXPECT_EQ(gamma_operator(r).apply_to(cs), expect) << twoj;
  }
}

TEST(Bargmann, Orthonormal) {
  for (int twoj = 0; twoj <= 5; ++twoj)
    for (int n = 0; n <= twoj; ++n)
      for (int m = 0; m <= twoj; ++m) {
        RadSum v = bargmann_inner(twoj, bargmann_basis(twoj, n), bargmann_basis(twoj, m));
        if (n == m) {
          EXPECT_TRUE(v.is_rational() && v.rational_part().is_one()) << twoj << " " << n << ": " << v.str();
        } else {
          EXPECT_TRUE(v.is_zero()) << twoj << " " << n << " " << m;
        }
      }
}

TEST(Bargmann, GeneratorMatrixElements) {
  const Scalar q2 = Scalar::q_pow(2);
  for (int twoj = 0; twoj <= kMaxTwoJ; ++twoj) {
    BargmannOps ops{twoj};
    const HalfInt j = HalfInt::from_twice(twoj);
    for (int n = 0; n <= twoj; ++n) {
      const HalfInt m = HalfInt::from_twice(2 * n - twoj);
      PolyRad psi = bargmann_poly(twoj, n);
      PolyRad up = ops.apply(psi, &BargmannOps::jplus), down = ops.apply(psi, &BargmannOps::jminus);
      auto bn = [&q2](HalfInt h) { return basic_number(h.as_int(), q2); };
      PolyRad up_expect = n < twoj ? bargmann_poly(twoj, n + 1) * RadicalScalar::sqrt(bn(j - m) * bn(j + m + HalfInt::integer(1))) : PolyRad();
      PolyRad down_expect = n > 0 ? bargmann_poly(twoj, n - 1) * RadicalScalar::sqrt(bn(j + m) * bn(j - m + HalfInt::integer(1))) : PolyRad();
      EXPECT_TRUE((up - up_expect).is_zero()) << twoj << " " << n << ": " << up.str();
      EXPECT_TRUE((down - down_expect).is_zero()) << twoj << " " << n << ": " << down.str();
      EXPECT_TRUE((ops.apply(psi, &BargmannOps::j0) - psi * Scalar(mpq_class(m.twice, 2))).is_zero());
    }
  }
}

TEST(Bargmann, Hermiticity) {
  for (int twoj = 1; twoj <= 4; ++twoj) {
    BargmannOps ops{twoj};
    for (int a = 0; a <= twoj; ++a)
      for (int b = 0; b <= twoj; ++b) {
        PolyRad pa = bargmann_poly(twoj, a), pb = bargmann_poly(twoj, b);
        AlgRad fa = poly_to_alg(pa), fb = poly_to_alg(pb);
        RadSum lhs = bargmann_inner(twoj, fa, poly_to_alg(ops.apply(pb, &BargmannOps::jplus)));
        RadSum rhs = bargmann_inner(twoj, poly_to_alg(ops.apply(pa, &BargmannOps::jminus)), fb);
        EXPECT_TRUE((lhs - rhs).is_zero()) << twoj << " " << a << " " << b;
        RadSum l0 = bargmann_inner(twoj, fa, poly_to_alg(ops.apply(pb, &BargmannOps::j0)));
        RadSum r0 = bargmann_inner(twoj, poly_to_alg(ops.apply(pa, &BargmannOps::j0)), fb);
        EXPECT_TRUE((l0 - r0).is_zero());
      }
  }
}

TEST(Bargmann, BasicNumbersVersusSymmetric) {
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(basic_number(n, Scalar::q_pow(2)), Scalar::q_pow(n - 1) * q_number(n));
}
