#include "qcoherent/tensor.hpp"

#include <gtest/gtest.h>

using namespace qcs;

TEST(BiRat, AdditionOverCommonDenominators) {
  LinRat inv = LinRat::inv_linear(Scalar(-1));
  BiRat a = BiRat::pure(inv, LinRat(1)), b = BiRat::pure(LinRat::var() * inv, LinRat(1));
  // 1/(1-z) - z/(1-z) = 1
  BiRat c = a + BiRat::pure(-(LinRat::var() * inv), LinRat(1)) + BiRat::pure(LinRat(-1), LinRat(1));
  EXPECT_TRUE(c.is_zero());
  EXPECT_FALSE((a + b).is_zero());
}

TEST(AlgTensor, LegwiseProductAndMultiplicationMap) {
  AlgElement x = AlgElement::x(), e = AlgElement::E();
  AlgTensor t = AlgTensor::pure(x, e) * AlgTensor::pure(e, x);
  EXPECT_EQ(t, AlgTensor::pure(x * e, e * x));
  EXPECT_EQ(t.multiply_legs(), x * e * e * x);
  EXPECT_FALSE(AlgTensor::pure(x, e) == AlgTensor::pure(e, x));
}

TEST(Overlap, MatchesClosedForm) {
  for (int twoj = 0; twoj <= 6; ++twoj) {
    TensorRad lhs = overlap_from_states(twoj);
    ASSERT_TRUE(lhs.is_rational()) << twoj;
    OverlapForm f = overlap_closed_form(twoj);
    EXPECT_EQ(lhs.rational_part(), f.prefactor * f.sum) << twoj;
  }
}

TEST(Overlap, PrefactorCommutesWithSum) {
  for (int twoj = 0; twoj <= 6; ++twoj) {
    OverlapForm f = overlap_closed_form(twoj);
    EXPECT_EQ(f.prefactor * f.sum, f.sum * f.prefactor) << twoj;
  }
}

TEST(Overlap, DiagonalReducesToNorm) {
  for (int twoj = 0; twoj <= 6; ++twoj) EXPECT_EQ(overlap_from_states(twoj).rational_part().multiply_legs(), AlgElement(1)) << twoj;
}

TEST(Overlap, SpinHalfHasTwoTerms) {
  OverlapForm f = overlap_closed_form(1);
  EXPECT_EQ(f.sum, AlgTensor::pure(AlgElement(1), AlgElement(1)) + AlgTensor::pure(AlgElement::x().star(), AlgElement::x()));
}
