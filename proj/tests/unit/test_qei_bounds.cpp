#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qei/errors.hpp"
#include "qei/numerics.hpp"
#include "qei/observer_norm.hpp"
#include "qei/qei_bounds.hpp"

using namespace qei;

namespace {

constexpr double kPi = std::numbers::pi;

// int (t^2 - 1)^2 exp(-t^2) dt by Gauss-Legendre on [-12, 12]
double gaussian_gpp_oracle() {
  return integrate_gl([](double t) { return std::pow(t * t - 1, 2) * std::exp(-t * t); }, -12, 12, 200);
}

}  // namespace

TEST(CCoefficient, Values) {
  EXPECT_DOUBLE_EQ(C_coefficient(0.0, 1.3, 0.4), 2.0);
  EXPECT_DOUBLE_EQ(C_coefficient(1.0, 0.0, 0.4), 3.0);
  // sinh a sin b = 1/sqrt(2) at xi = 1
  EXPECT_NEAR(C_coefficient(1.0, std::asinh(1 / std::sqrt(2.0)), kPi / 2), 9.0, 1e-12);
}

TEST(CCoefficient, FrameReconstruction) {
  for (double xi : {0.0, 0.4, 1.0, 2.0})
    for (double alpha : {0.0, 0.3, 0.9})
      for (double beta : {0.0, 0.5, 1.2, 2.8}) {
        if (!is_subluminal(xi, alpha, beta)) continue;
        const double c = C_coefficient(xi, alpha, beta);
        EXPECT_NEAR(C_from_frame(xi, alpha, beta), c, 1e-10 * c);
      }
}

TEST(CCoefficient, PoleGuard) {
  try {
    C_coefficient(1.0, std::asinh(1.0), kPi / 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OnExtraordinaryCone);
  }
}

TEST(CCoefficient, MonotoneTowardPole) {
  for (double xi : {0.5, 1.0, 2.0}) {
    double prev = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double s = (i / 200.0) / xi;  // sinh a sin b on [0, 1/xi)
      const double c = C_coefficient(xi, std::asinh(s), kPi / 2);
      EXPECT_GT(c, prev);
      prev = c;
    }
    EXPECT_GT(C_coefficient(xi, std::asinh(0.99999 / xi), kPi / 2), 1e8);
  }
}

TEST(GppNorm, GaussianClosedFormAgainstQuadrature) {
  const double oracle = gaussian_gpp_oracle();
  EXPECT_NEAR(oracle, 1.329340388179137, 1e-12);
  EXPECT_NEAR(gpp_norm_sq(GaussianSmearing{1.0, 0.0}), oracle, 1e-12);
  EXPECT_NEAR(gpp_norm_sq(GaussianSmearing{2.0, 5.0}), oracle / 8, 1e-12);
}

TEST(GppNorm, SampledMatchesClosedForm) {
  for (double sigma : {1.0, 0.5, 3.0}) {
    const double closed = gpp_norm_sq(GaussianSmearing{sigma, 0.0});
    const double sampled = gpp_norm_sq(sample_gaussian(GaussianSmearing{sigma, 0.0}));
    EXPECT_NEAR(sampled, closed, 1e-6 * closed);
  }
}

TEST(GppNorm, SampledErrors) {
  SampledSmearing tiny{0.0, 0.1, std::vector<double>(10, 0.0)};
  EXPECT_THROW(gpp_norm_sq(tiny), Error);
  SampledSmearing coarse = sample_gaussian(GaussianSmearing{1.0, 0.0}, 8.0, 2);
  coarse.samples.resize(80, 0.0);
  for (std::size_t i = 5; i + 5 < coarse.samples.size(); ++i) coarse.samples[i] = (i % 2) ? 1.0 : -1.0;
  try {
    gpp_norm_sq(coarse);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GridTooCoarse);
  }
}

TEST(QeiBound, Examples) {
  const QEIBoundResult maxwell = qei_bound(0.0, 0.4, 1.0, {NormKind::SR, 1.0}, GaussianSmearing{1.0, 0.0});
  EXPECT_NEAR(maxwell.bound, -3 * std::sqrt(kPi) / (32 * kPi * kPi), 1e-15);
  EXPECT_DOUBLE_EQ(maxwell.C, 2.0);
  EXPECT_DOUBLE_EQ(maxwell.aleph, 1.0);

  const QEIBoundResult rest = qei_bound(1.0, 0.0, 0.0, {NormKind::SR, 1.0}, GaussianSmearing{1.0, 0.0});
  EXPECT_NEAR(rest.bound, -3 * (3 * std::sqrt(kPi) / 4) / (16 * kPi * kPi), 1e-15);
  EXPECT_NEAR(rest.bound, -rest.C * rest.gpp_norm_sq / (4 * std::pow(2 * kPi, 2) * std::pow(rest.aleph, 4)), 0.0);
}

TEST(QeiBound, NormalizationModes) {
  const GaussianSmearing g{1.0, 0.0};
  const QEIBoundResult sr = qei_bound(0.5, 0.3, 0.8, {NormKind::SR, 1.0}, g);
  const QEIBoundResult ex = qei_bound(0.5, 0.3, 0.8, {NormKind::Explicit, 2.0}, g);
  EXPECT_NEAR(ex.bound, sr.bound / 16, 1e-16);
  const QEIBoundResult uc = qei_bound(0.5, 0.3, 0.8, {NormKind::UC, 1.0}, g);
  EXPECT_NEAR(uc.aleph, aleph_uc(0.5, 0.3, 0.8, NormMode::Numeric).aleph, 1e-14);
  EXPECT_THROW(qei_bound(0.5, 0.3, 0.8, {NormKind::Explicit, -1.0}, g), Error);
}

TEST(QeiBound, NotSubluminal) {
  try {
    qei_bound(1.0, std::asinh(2.0), kPi / 2, {NormKind::SR, 1.0}, GaussianSmearing{1.0, 0.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSubluminal);
    EXPECT_NE(std::string(e.what()).find("sinh^2(alpha) sin^2(beta)"), std::string::npos);
  }
}

TEST(QeiBound, DivergesTowardTheCone) {
  const GaussianSmearing g{1.0, 0.0};
  double prev = 0.0;
  for (double f : {0.0, 0.5, 0.9, 0.99, 0.999}) {
    const double b = qei_bound(1.0, std::asinh(f), kPi / 2, {NormKind::SR, 1.0}, g).bound;
    EXPECT_LT(b, prev);
    prev = b;
  }
  EXPECT_LT(prev, -1e3);
}

TEST(Pipeline, MatchesClosedForm) {
  const GaussianSmearing g{1.0, 0.0};
  const double closed = qei_bound(0.0, 0.0, 0.0, {NormKind::SR, 1.0}, g).bound;
  EXPECT_NEAR(qei_bound_pipeline(0.0, 0.0, 0.0, 1.0, sample_gaussian(g)), closed, 1e-2 * std::abs(closed));
  const double c2 = qei_bound(1.2, 0.5, 1.0, {NormKind::SR, 1.0}, g).bound;
  EXPECT_NEAR(qei_bound_pipeline(1.2, 0.5, 1.0, 1.0, sample_gaussian(g)), c2, 1e-2 * std::abs(c2));
}

TEST(Pipeline, ZeroSmearing) {
  SampledSmearing z{-4.0, 1.0 / 16, std::vector<double>(129, 0.0)};
  EXPECT_EQ(qei_bound_pipeline(1.0, 0.0, 0.0, 1.0, z), 0.0);
}

TEST(Pipeline, WidthScaling) {
  const double a = qei_bound_pipeline(0.5, 0.2, 0.3, 1.0, sample_gaussian(GaussianSmearing{1.0, 0.0}));
  const double b = qei_bound_pipeline(0.5, 0.2, 0.3, 1.0, sample_gaussian(GaussianSmearing{2.0, 0.0}));
  EXPECT_NEAR(b / a, 1.0 / 8.0, 1e-3);
}

TEST(Pipeline, RandomSubluminalAgreement) {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> ux(0.0, 2.0), ua(0.0, 1.2), ub(0.0, kPi);
  int done = 0;
  while (done < 10) {
    const double xi = ux(gen), alpha = ua(gen), beta = ub(gen);
    if (xi * xi * std::pow(std::sinh(alpha) * std::sin(beta), 2) > 0.8) continue;
    const GaussianSmearing g{1.0, 0.0};
    const double closed = qei_bound(xi, alpha, beta, {NormKind::SR, 1.0}, g).bound;
    EXPECT_NEAR(qei_bound_pipeline(xi, alpha, beta, 1.0, sample_gaussian(g)), closed, 1e-2 * std::abs(closed));
    ++done;
  }
}

TEST(AppendixA, IdentityOnBothCones) {
  const Vec4 rest(1, 0, 0, 0), boost(std::cosh(1.0), std::sinh(1.0), 0, 0);
  for (MetricChoice which : {MetricChoice::Eta, MetricChoice::Zeta})
    for (const Vec4& u : {rest, boost}) {
      const AppendixAResult r = appendix_a_oracle(u, u, 1.0, 1.0, which);
      EXPECT_LT(r.rel_error, 1e-4);
      EXPECT_GT(r.rhs, 0.0);  // -g(u,u) / g(u,u)^2 > 0
    }
}

TEST(AppendixA, OddIntegrandVanishes) {
  const AppendixAResult r = appendix_a_oracle(Vec4(1, 0, 0, 0), Vec4(0, 1, 0, 0), 1.0, 1.0, MetricChoice::Eta);
  EXPECT_EQ(r.rhs, 0.0);
  EXPECT_LT(std::abs(r.lhs), 1e-12);
}

TEST(AppendixA, RequiresTimelikeU) {
  try {
    appendix_a_oracle(Vec4(0, 1, 0, 0), Vec4(1, 0, 0, 0), 1.0, 1.0, MetricChoice::Eta);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotTimelike);
  }
}

TEST(QeiBound, NeverPositive) {
  std::mt19937_64 gen(91);
  std::uniform_real_distribution<double> ux(0.0, 3.0), ua(-2.0, 2.0), ub(0.0, 2 * kPi), us(0.1, 5.0);
  for (int i = 0; i < 300; ++i) {
    const double xi = ux(gen), alpha = ua(gen), beta = ub(gen);
    if (!is_subluminal(xi, alpha, beta)) continue;
    const QEIBoundResult r = qei_bound(xi, alpha, beta, {NormKind::SR, 1.0}, GaussianSmearing{us(gen), 0.0});
    EXPECT_LT(r.bound, 0.0);
    EXPECT_GE(r.C, 2.0);
  }
}
