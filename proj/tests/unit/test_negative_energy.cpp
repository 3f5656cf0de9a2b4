#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qei/errors.hpp"
#include "qei/negative_energy.hpp"

using namespace qei;

namespace {

constexpr double kPi = std::numbers::pi;

const WavePacketSpec kInterluminal{1.0, std::asinh(2.0), kPi / 2, 1.0};

// 1/2 X1_22 (b_2.F / 2)^2 with b_2.F = 2 tau0^{-2} the only non-zero contraction
double rho_origin_oracle(const WavePacketSpec& s) {
  const double sh = std::sinh(s.alpha) * std::sin(s.beta);
  return 0.5 * (1.0 - s.xi * s.xi * sh * sh) * std::pow(s.tau0, -4);
}

}  // namespace

TEST(PacketProfile, TermByTermValue) {
  // frozen from an independent evaluation of the three Gaussian profiles
  const WavePacketSpec s{1.0, 0.5, 0.7, 1.0};
  const cd f = packet_profile(s, Eigen::Vector3d(1.0, 0.0, 1.0));
  EXPECT_NEAR(f.real(), 0.0, 1e-16);
  EXPECT_NEAR(f.imag(), -0.011628462052342834, 1e-15);
}

TEST(PacketProfile, RestOnlyKeepsF31) {
  const WavePacketSpec s{1.0, 0.0, 0.3, 1.0};
  const Eigen::Vector3d k(0.4, 0.2, -0.6);
  const double wt = std::sqrt(0.16 + 0.4 / 2);
  const cd f31 = cd(0, 4) * wt * k(2) / (5 * std::pow(kPi, 1.5) * 4) * std::exp(-wt * wt);
  EXPECT_LT(std::abs(packet_profile(s, k) - f31), 1e-15);
}

TEST(PacketProfile, OddnessInK3) {
  // at beta = 0 only the k3-odd terms survive
  const WavePacketSpec s{1.3, 0.6, 0.0, 0.8};
  const Eigen::Vector3d k(0.3, 0.5, 0.7), kf(0.3, 0.5, -0.7);
  EXPECT_LT(std::abs(packet_profile(s, k) + packet_profile(s, kf)), 1e-15);
}

TEST(FieldStrength, ClosedForms) {
  const CField6 f = field_strength_origin(kInterluminal);
  EXPECT_NEAR(f(0).real(), -2.0, 1e-14);
  EXPECT_NEAR(f(4).real(), std::sqrt(5.0), 1e-14);
  EXPECT_NEAR(std::abs(f(2)), 0.0, 1e-14);
  for (int i : {1, 3, 5}) EXPECT_EQ(f(i), cd(0.0));
  const CField6 rest = field_strength_origin(WavePacketSpec{2.0, 0.0, 1.0, 1.0});
  EXPECT_NEAR(rest(4).real(), 0.25, 1e-15);
  EXPECT_EQ(rest(0), cd(0.0));
}

TEST(FieldStrength, QuadratureMatchesClosedForm) {
  std::mt19937_64 gen(41);
  std::uniform_real_distribution<double> ut(0.5, 2.0), ua(0.0, 2.0), ub(0.0, kPi), ux(0.0, 2.0);
  for (int i = 0; i < 5; ++i) {
    const WavePacketSpec s{ut(gen), ua(gen), ub(gen), ux(gen)};
    const CField6 q = field_strength_origin(s, FieldMethod::Quadrature);
    const CField6 c = field_strength_origin(s, FieldMethod::ClosedForm);
    EXPECT_LT((q - c).cwiseAbs().maxCoeff(), 1e-4 * c.cwiseAbs().maxCoeff());
  }
}

TEST(FieldStrength, OddNodeCountRejected) {
  EXPECT_THROW(packet_quadrature(kInterluminal, 47), Error);
  EXPECT_THROW(packet_quadrature(WavePacketSpec{0.0, 0, 0, 1}, 48), Error);
}

TEST(RhoOrigin, MatchesOracleOnGrid) {
  for (double xi : {0.0, 0.7, 1.5})
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        const WavePacketSpec s{1.2, 0.5 * i, kPi * j / 5 + 0.1, xi};
        const double want = rho_origin_oracle(s);
        EXPECT_NEAR(rho_origin(s), want, 1e-8 * std::max(1.0, std::abs(want)));
      }
}

TEST(RhoOrigin, SignDichotomy) {
  EXPECT_LT(rho_origin(kInterluminal), 0.0);
  EXPECT_NEAR(rho_origin(kInterluminal), -1.5, 1e-12);
  EXPECT_GT(rho_origin(WavePacketSpec{1.0, std::asinh(0.5), kPi / 2, 1.0}), 0.0);
  EXPECT_NEAR(rho_origin(WavePacketSpec{1.0, std::asinh(1.0), kPi / 2, 1.0}), 0.0, 1e-14);
  EXPECT_DOUBLE_EQ(rho_origin_reference(kInterluminal), -12.0);
}

TEST(RhoAlong, NegativeNearOrigin) {
  const QuadratureSpec q = packet_quadrature(kInterluminal, 40);
  EXPECT_NEAR(rho_along(kInterluminal, 0.0, q), rho_origin(kInterluminal), 1e-6);
  // negative on |tau| < 0.09 tau0 and symmetric about the origin
  double prev = rho_along(kInterluminal, -0.08, q);
  for (double tau : {-0.06, -0.04, -0.02, 0.0, 0.02, 0.04, 0.06, 0.08}) {
    const double r = rho_along(kInterluminal, tau, q);
    EXPECT_LT(r, 0.0);
    EXPECT_LT(std::abs(r - prev), 0.5);
    EXPECT_NEAR(r, rho_along(kInterluminal, -tau, q), 1e-9);
    prev = r;
  }
  EXPECT_GT(rho_along(kInterluminal, 0.15, q), 0.0);
}

TEST(NParticle, LinearInN) {
  const GaussianSmearing g{0.1, 0.0};
  const double one = n_particle_energy(kInterluminal, 1, g, 32);
  EXPECT_LT(one, 0.0);
  EXPECT_NEAR(n_particle_energy(kInterluminal, 10, g, 32), 10 * one, 1e-12 * std::abs(one) * 10);
  EXPECT_THROW(n_particle_energy(kInterluminal, 0, g, 32), Error);
}

TEST(PacketNorm, PositiveAndScaleFree) {
  const WavePacketSpec a{1.0, 0.0, 0.0, 1.0};
  const double n1 = packet_norm_sq(a);
  EXPECT_GT(n1, 0.0);
  EXPECT_TRUE(std::isfinite(n1));
  // every profile term is dimensionless once tau0 rescales k
  const WavePacketSpec b{3.0, 0.0, 0.0, 1.0};
  EXPECT_NEAR(packet_norm_sq(b), n1, 1e-8 * n1);
  EXPECT_GT(packet_norm_sq(kInterluminal), 0.0);
}

TEST(Kernel, RestValue) {
  EXPECT_NEAR(rs_kernel_diagonal(1.0, Eigen::Vector3d(0, 0, 1), frame_from_worldline(0, 0, 1)), 0.5, 1e-12);
}

TEST(Kernel, PositiveAndHomogeneous) {
  std::mt19937_64 gen(51);
  std::normal_distribution<double> n;
  for (double alpha : {0.0, 0.4, 0.8}) {
    const ObserverFrame of = frame_from_worldline(alpha, 1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
      const Eigen::Vector3d k(n(gen), n(gen), n(gen));
      const double r = rs_kernel_diagonal(1.0, k, of);
      EXPECT_GT(r, 0.0);
      EXPECT_NEAR(rs_kernel_diagonal(1.0, 2.5 * k, of), 2.5 * r, 1e-12 * r);
    }
  }
}

TEST(Kernel, RejectsInterluminalFrame) {
  const ObserverFrame of = frame_from_worldline(std::asinh(2.0), kPi / 2, 1.0);
  try {
    rs_kernel_diagonal(1.0, Eigen::Vector3d(0, 0, 1), of);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSubluminal);
  }
}
