#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qei/errors.hpp"
#include "qei/fresnel.hpp"
#include "qei/uniaxial_medium.hpp"

using namespace qei;

namespace {

Covec4 random_covector(std::mt19937_64& gen) {
  std::normal_distribution<double> n;
  return Covec4(n(gen), n(gen), n(gen), n(gen));
}

}  // namespace

class FresnelByXi : public ::testing::TestWithParam<double> {};

TEST_P(FresnelByXi, FactorizesIntoConeProduct) {
  const double xi = GetParam();
  const FresnelContext ctx = uniaxial_context(xi);
  std::mt19937_64 gen(11);
  for (int i = 0; i < 200; ++i) {
    const Covec4 k = random_covector(gen);
    // -k0^2 + k1^2 + k2^2 + k3^2 and (1 + xi^2)(-k0^2 + k1^2) + k2^2 + k3^2
    const double N = -k[0] * k[0] + k[1] * k[1] + k[2] * k[2] + k[3] * k[3];
    const double Z = (1 + xi * xi) * (-k[0] * k[0] + k[1] * k[1]) + k[2] * k[2] + k[3] * k[3];
    const double n2 = k.c.squaredNorm();
    EXPECT_NEAR(fresnel_eval(ctx, k), N * Z, 1e-11 * (1 + n2 * n2));
  }
}

TEST_P(FresnelByXi, GaugeIndependent) {
  const FresnelContext ctx = uniaxial_context(GetParam());
  std::mt19937_64 gen(12);
  for (int i = 0; i < 50; ++i) {
    const Covec4 k = random_covector(gen);
    const double a = fresnel_eval(ctx, k, GaugeVector::coordinate_max());
    const double b = fresnel_eval(ctx, k, GaugeVector::fixed(Vec4(1.0, 0.2, -0.3, 0.1)));
    EXPECT_NEAR(a, b, 1e-10 * (1 + std::abs(a)));
  }
}

TEST_P(FresnelByXi, SecondAdjugateSymmetricAndQuadratic) {
  const FresnelContext ctx = uniaxial_context(GetParam());
  std::mt19937_64 gen(13);
  for (int i = 0; i < 20; ++i) {
    const Covec4 k = random_covector(gen);
    const Mat4 Q = second_adjugate_Q(ctx, k);
    EXPECT_LT((Q - Q.transpose()).norm(), 1e-12 * (1 + Q.norm()));
    const Mat4 Q3 = second_adjugate_Q(ctx, Covec4(Eigen::Vector4d(3.0 * k.c)));
    EXPECT_LT((Q3 - 9.0 * Q).norm(), 1e-11 * (1 + Q3.norm()));
  }
}

TEST_P(FresnelByXi, QuasiInverseMatchesClosedForm) {
  const double xi = GetParam();
  const FresnelContext ctx = uniaxial_context(xi);
  std::mt19937_64 gen(14);
  for (int i = 0; i < 50; ++i) {
    const CCovec4 k = complexify(random_covector(gen));
    const CMat4 E = quasi_inverse(ctx, k, GaugeVector::meromorphic(xi));
    const CMat4 want = quasi_inverse_closed_form(xi, k);
    EXPECT_LT((E - want).norm(), 1e-9 * want.norm());
  }
}

TEST_P(FresnelByXi, RestrictionCoefficientsReproducePolynomial) {
  const FresnelContext ctx = uniaxial_context(GetParam());
  const Covec4 base(0.3, -1.1, 0.4, 0.2), dir(1.0, 0.1, 0.0, -0.2);
  const auto c = restriction_coefficients(ctx, base, dir);
  for (double t : {-1.7, 0.4, 2.5}) {
    const Covec4 k(Eigen::Vector4d(base.c + t * dir.c));
    double p = 0.0;
    for (int i = 4; i >= 0; --i) p = p * t + c[i];
    EXPECT_NEAR(p, fresnel_eval(ctx, k), 1e-10 * (1 + std::abs(p)));
  }
}

INSTANTIATE_TEST_SUITE_P(Xi, FresnelByXi, ::testing::Values(0.0, 0.5, 1.0, 2.0));

TEST(Fresnel, OrientationMakesReferencePositive) {
  for (double xi : {0.0, 0.7, 3.0}) {
    const FresnelContext ctx = uniaxial_context(xi);
    EXPECT_GT(fresnel_eval(ctx, ctx.n0), 0.0);
    EXPECT_NEAR(std::abs(ctx.orientation), 1.0, 0.0);
  }
}

TEST(Fresnel, HyperbolicWithRespectToTimelikeOnly) {
  const FresnelContext ctx = uniaxial_context(1.0);
  EXPECT_TRUE(is_hyperbolic(ctx, Covec4(1, 0, 0, 0), 500).hyperbolic);
  EXPECT_TRUE(is_hyperbolic(ctx, Covec4(1.5, 0.3, 0.2, 0.1), 500).hyperbolic);
  const auto bad = is_hyperbolic(ctx, Covec4(0, 1, 0, 0), 500);
  EXPECT_FALSE(bad.hyperbolic);
  EXPECT_GT(bad.worst_imag, 0.0);
}

TEST(Fresnel, GardingCone) {
  const FresnelContext ctx = uniaxial_context(1.0);
  EXPECT_TRUE(in_hyperbolicity_cone(ctx, Covec4(1, 0, 0, 0)));
  EXPECT_TRUE(in_hyperbolicity_cone(ctx, Covec4(2, 0.5, 0.5, 0.5)));
  EXPECT_FALSE(in_hyperbolicity_cone(ctx, Covec4(-1, 0, 0, 0)));
  EXPECT_FALSE(in_hyperbolicity_cone(ctx, Covec4(0, 1, 0, 0)));
  // interstitial: inside the extraordinary cone only
  EXPECT_FALSE(in_hyperbolicity_cone(ctx, Covec4(1, 0, 1.2, 0)));
}

TEST(Fresnel, QuasiInverseRefusesCharacteristicCovector) {
  const FresnelContext ctx = uniaxial_context(1.0);
  try {
    quasi_inverse(ctx, complexify(Covec4(1, 0, 0, 1)), GaugeVector::coordinate_max());
    FAIL() << "expected NearNullCovector";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NearNullCovector);
  }
}

TEST(Fresnel, DegenerateReferenceCovector) {
  const auto chi = build_uniaxial_chi(1.0, Vec4(1, 0, 0, 0), Vec4(0, 1, 0, 0));
  EXPECT_THROW(make_context(chi, Covec4(1, 0, 0, 1)), Error);
}

TEST(Fresnel, QuasiInverseDegreeMinusTwo) {
  const FresnelContext ctx = uniaxial_context(1.0);
  const GaugeVector gauge = GaugeVector::coordinate_max();
  std::mt19937_64 gen(15);
  for (int i = 0; i < 20; ++i) {
    const Covec4 k = random_covector(gen);
    const CMat4 E = quasi_inverse(ctx, complexify(k), gauge);
    for (double s : {2.0, -1.0}) {
      const CMat4 Es = quasi_inverse(ctx, complexify(Covec4(Eigen::Vector4d(s * k.c))), gauge);
      EXPECT_LT((Es - E / (s * s)).norm(), 1e-10 * E.norm() / (s * s));
    }
  }
}

TEST(Fresnel, ConeIsConvex) {
  const FresnelContext ctx = uniaxial_context(1.0);
  std::mt19937_64 gen(16);
  std::normal_distribution<double> n;
  auto draw = [&] {
    for (;;) {
      const Covec4 k(std::abs(n(gen)) * 2 + 0.1, n(gen), n(gen), n(gen));
      if (in_hyperbolicity_cone(ctx, k)) return k;
    }
  };
  for (int i = 0; i < 500; ++i) {
    const Covec4 a = draw(), b = draw();
    for (double t : {0.1, 0.5, 0.9})
      EXPECT_TRUE(in_hyperbolicity_cone(ctx, Covec4(Eigen::Vector4d((1 - t) * a.c + t * b.c))));
  }
}
