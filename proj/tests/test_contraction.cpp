#include "qcoherent/contraction.hpp"

#include <gtest/gtest.h>

#include <iostream>
#include <random>

using namespace qcs;
using namespace qcs::h1;

namespace {

std::vector<UH> u_basis(int bound) {
  std::vector<UH> out;
  for (int k = 0; k <= bound; ++k)
    for (int l = 0; l <= bound; ++l)
      for (int m = 0; m <= bound; ++m)
        for (int c = -1; c <= 1; ++c) out.push_back(UH(UKey{k, m, l, c}, Scalar(1)));
  return out;
}

std::vector<HG> g_basis(int bound) {
  std::vector<HG> out;
  for (int k = 0; k <= bound; ++k)
    for (int l = 0; l <= bound; ++l)
      for (int m = 0; m <= bound; ++m) out.push_back(HG(k, ScalarPoly::monomial(Scalar(1), l), m));
  return out;
}

HG random_hg(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, 2), v(-3, 3);
  HG r;
  for (int i = 0; i < 2; ++i) r += HG(d(rng), ScalarPoly::monomial(Scalar(v(rng)) * w().pow(d(rng) % 2), d(rng)), d(rng));
  return r;
}

UH random_uh(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, 2), c(-1, 1), v(-3, 3);
  UH r;
  for (int i = 0; i < 2; ++i) r += UH(UKey{d(rng), d(rng), d(rng) % 2, c(rng)}, Scalar(v(rng)));
  return r;
}

}  // namespace

TEST(HeisenbergAlgebra, Relations) {
  EXPECT_EQ(UH::A() * UH::Ad() - UH::Ad() * UH::A(), UH::sinh_over_w());
  EXPECT_EQ(UH::H() * UH::A(), UH::A() * UH::H());
  EXPECT_EQ(UH::K() * UH::K(-1), UH(1));
  std::mt19937 rng(1);
  for (int i = 0; i < 40; ++i) {
    UH a = random_uh(rng), b = random_uh(rng), c = random_uh(rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(HeisenbergAlgebra, HopfAxioms) {
  // coproduct respects [A, A+] = sinh(wH)/w
  UHTensor lhs = coproduct(UH::A()) * coproduct(UH::Ad());
  UHTensor rhs = coproduct(UH::Ad()) * coproduct(UH::A());
  EXPECT_EQ(lhs, rhs + coproduct(UH::sinh_over_w()));
  std::mt19937 rng(3);
  for (int i = 0; i < 15; ++i) {
    UH a = random_uh(rng), b = random_uh(rng);
    ASSERT_EQ(coproduct(a * b), coproduct(a) * coproduct(b));
  }
  for (const UH& u : {UH::A(), UH::Ad(), UH::H(), UH::K(), UH::A() * UH::Ad(), UH::H() * UH::A()}) {
    UHTensor d = coproduct(u);
    UH s_left, s_right, c_left, c_right;
    std::map<std::tuple<UKey, UKey, UKey>, Scalar> left, right;
    for (const auto& [k, v] : d.terms()) {
      UH a(k.first, Scalar(1)), b(k.second, Scalar(1));
      s_left += a.antipode() * b * v;
      s_right += a * b.antipode() * v;
      c_left += b * (a.counit() * v);
      c_right += a * (b.counit() * v);
      const UHTensor da = coproduct(a), db = coproduct(b);
      for (const auto& [k2, v2] : da.terms()) {
        auto& e = left[{k2.first, k2.second, k.second}];
        e += v * v2;
      }
      for (const auto& [k2, v2] : db.terms()) {
        auto& e = right[{k.first, k2.first, k2.second}];
        e += v * v2;
      }
    }
    std::erase_if(left, [](const auto& p) { return p.second.is_zero(); });
    std::erase_if(right, [](const auto& p) { return p.second.is_zero(); });
    EXPECT_EQ(left, right) << u.str();
    EXPECT_EQ(c_left, u);
    EXPECT_EQ(c_right, u);
    EXPECT_EQ(s_left, UH(u.counit())) << u.str();
    EXPECT_EQ(s_right, UH(u.counit())) << u.str();
  }
}

TEST(HeisenbergAlgebra, Star) {
  EXPECT_EQ(UH::Ad().star(), UH::A());
  EXPECT_EQ(UH::H().star(), UH::H());
  std::mt19937 rng(4);
  for (int i = 0; i < 30; ++i) {
    UH a = random_uh(rng), b = random_uh(rng);
    ASSERT_EQ(a.star().star(), a);
    ASSERT_EQ((a * b).star(), b.star() * a.star());
  }
  // Delta(A)^{* (x) *} = Delta(A+)
  UHTensor d;
  const UHTensor dA = coproduct(UH::A());
  for (const auto& [k, v] : dA.terms()) d = d + UHTensor::pure(UH(k.first, Scalar(1)).star(), UH(k.second, Scalar(1)).star() * v);
  EXPECT_EQ(d, coproduct(UH::Ad()));
}

TEST(HeisenbergGroup, Relations) {
  HG x = HG::x(), y = HG::y(), z = HG::z();
  EXPECT_EQ(x * y, y * x);
  EXPECT_EQ(x * z - z * x, x * w());
  EXPECT_EQ(y * z - z * y, y * w());
  std::mt19937 rng(0);
  for (int i = 0; i < 60; ++i) {
    HG a = random_hg(rng), b = random_hg(rng), c = random_hg(rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(HeisenbergGroup, HopfAxioms) {
  std::mt19937 rng(6);
  for (int i = 0; i < 15; ++i) {
    HG a = random_hg(rng), b = random_hg(rng);
    ASSERT_EQ(coproduct(a * b), coproduct(a) * coproduct(b));
  }
  auto ident = [](const HG& f) { return f; };
  for (const HG& f : g_basis(2)) {
    HGTensor d = coproduct(f);
    // coassociativity through (Delta (x) id) and (id (x) Delta) as maps into triple tensors
    std::map<std::tuple<int, int, int, int, int, int>, std::map<std::tuple<int, int, int>, Scalar>> left, right;
    auto fold = [](auto& out, const HG& a, const HG& b, const HG& c) {
      for (const auto& [ka, pa] : a.terms())
        for (const auto& [kb, pb] : b.terms())
          for (const auto& [kc, pc] : c.terms()) {
            auto& slot = out[{ka.first, ka.second, kb.first, kb.second, kc.first, kc.second}];
            for (std::size_t i = 0; i < pa.size(); ++i)
              for (std::size_t j = 0; j < pb.size(); ++j)
                for (std::size_t l = 0; l < pc.size(); ++l) {
                  auto key = std::make_tuple(static_cast<int>(i), static_cast<int>(j), static_cast<int>(l));
                  slot[key] += pa[i] * pb[j] * pc[l];
                  if (slot[key].is_zero()) slot.erase(key);
                }
            if (slot.empty()) out.erase({ka.first, ka.second, kb.first, kb.second, kc.first, kc.second});
          }
    };
    for (const auto& [a, b] : d.pieces()) {
      const HGTensor da = coproduct(a), db = coproduct(b);
      for (const auto& [a1, a2] : da.pieces()) fold(left, a1, a2, b);
      for (const auto& [b1, b2] : db.pieces()) fold(right, a, b1, b2);
    }
    EXPECT_EQ(left, right) << f.str();
    HG cl, cr;
    for (const auto& [a, b] : d.pieces()) {
      cl += b * a.counit();
      cr += a * b.counit();
    }
    EXPECT_EQ(cl, f);
    EXPECT_EQ(cr, f);
    EXPECT_EQ(d.map_legs([](const HG& a) { return a.antipode(); }, ident).multiply(), HG(f.counit())) << f.str();
    EXPECT_EQ(d.map_legs(ident, [](const HG& b) { return b.antipode(); }).multiply(), HG(f.counit())) << f.str();
  }
}

TEST(HeisenbergGroup, Star) {
  EXPECT_EQ(HG::x().star(), -HG::y());
  EXPECT_EQ(HG::z().star(), -HG::z() + HG::x() * HG::y());
  std::mt19937 rng(8);
  for (int i = 0; i < 30; ++i) {
    HG a = random_hg(rng), b = random_hg(rng);
    ASSERT_EQ(a.star().star(), a);
    ASSERT_EQ((a * b).star(), b.star() * a.star());
  }
  // Delta commutes with *
  for (const HG& f : {HG::x(), HG::y(), HG::z(), HG::z() * HG::x()}) {
    HGTensor lhs = coproduct(f.star());
    HGTensor rhs = coproduct(f).map_legs([](const HG& a) { return a.star(); }, [](const HG& b) { return b.star(); });
    EXPECT_EQ(lhs, rhs) << f.str();
  }
}

TEST(Pairing, DualBasis) {
  EXPECT_EQ(pair(HG::x(), UH::Ad()), Scalar(1));
  EXPECT_EQ(pair(HG::y(), UH::A()), Scalar(1));
  EXPECT_EQ(pair(HG::z(), UH::H()), Scalar(1));
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
              EXPECT_EQ(v, Scalar(k == k2 && l == l2 && m == m2 ? 1 : 0)) << k << l << m << " " << k2 << l2 << m2;
            }
      }
}

TEST(Pairing, DualityOfProduct) {
  std::vector<HG> fs = g_basis(1);
  for (const HG& f : fs)
    for (const HG& g : fs)
      for (const UH& u : u_basis(2)) ASSERT_EQ(pair(f * g, u), pair_tensor(f, g, coproduct(u))) << f.str() << " * " << g.str() << " on " << u.str();
}

TEST(MatrixGroup, RepresentationAndT) {
  Mat3S comm = mat_add(mat_mul(Rep3::A(), Rep3::Ad()), mat_mul(Rep3::Ad(), Rep3::A()), Scalar(-1));
  EXPECT_EQ(comm, Rep3::of(UH::sinh_over_w()));
  Mat3H T = universal_T();
  Mat3H expect;
  for (int i = 0; i < 3; ++i) expect[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = HG(1);
  expect[0][1] = HG::y();
  expect[0][2] = HG::z();
  expect[1][2] = HG::x();
  EXPECT_EQ(T, expect);
  Mat3H prod = hmat_mul(universal_T_star(), T);
  Mat3H one;
  for (int i = 0; i < 3; ++i) one[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = HG(1);
  EXPECT_EQ(prod, one);
}

TEST(Numerics, GaussLegendre) {
  auto [x, wt] = gauss_legendre(20, 0.0, 2.0);
  double s = 0.0, s3 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += wt[i];
    s3 += wt[i] * x[i] * x[i] * x[i];
  }
  EXPECT_NEAR(s, 2.0, 1e-13);
  EXPECT_NEAR(s3, 4.0, 1e-13);
}

TEST(Numerics, FockCommutator) {
  FockRep f{0.5, 1.0, 20};
  Eigen::MatrixXd c = f.A() * f.Ad() - f.Ad() * f.A();
  for (int n = 0; n < 20; ++n) EXPECT_NEAR(c(n, n), std::sinh(0.5) / 0.5, 1e-12);
  FockRep small{1e-6, 1.3, 5};
  Eigen::MatrixXd c2 = small.A() * small.Ad() - small.Ad() * small.A();
  EXPECT_NEAR(c2(0, 0), 1.3, 1e-9);
}

TEST(Numerics, CoherentNormAndResolution) {
  for (double r : {0.0, 0.5, 1.0, 1.7}) EXPECT_NEAR(h1_norm(0.5, 1.0, r, 60), 1.0, 1e-12) << r;
  double d = h1_resolution_converged(0.5, 1.0, 40, 1e-12);
  EXPECT_LE(d, 1e-8);
}

TEST(Numerics, ContractionResidualTrend) {
  for (int twoj : {20, 40, 80}) {
    auto r = contraction_residual(twoj, 0.5);
    std::cout << "j=" << twoj / 2 << " residual=" << r.printed << " opposite_sign=" << r.opposite_sign << "\n";
  }
  // with the opposite sign the residual is O(1/j^2)
  auto a = contraction_residual(20, 0.5), b = contraction_residual(40, 0.5);
  EXPECT_NEAR(a.opposite_sign / b.opposite_sign, 4.0, 0.2);
}
