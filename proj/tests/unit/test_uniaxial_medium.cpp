#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qei/errors.hpp"
#include "qei/uniaxial_medium.hpp"

using namespace qei;

TEST(UniaxialMedium, QVectorFromAxisData) {
  // q_a = (k.X) U_a - (k.U) X_a with U_a = (-1,0,0,0), X_a = (0,xi,0,0)
  const double xi = 0.7;
  const Covec4 k(1.3, -0.4, 2.0, 0.5);
  const double kX = xi * k[1], kU = k[0];
  const Eigen::Vector4d want = kX * Eigen::Vector4d(-1, 0, 0, 0) - kU * Eigen::Vector4d(0, xi, 0, 0);
  EXPECT_LT((q_vector(xi, k).c - want).norm(), 1e-15);
  const CCovec4 qc = q_vector(xi, complexify(k));
  EXPECT_LT((qc.c.real() - want).norm(), 1e-15);
}

TEST(UniaxialMedium, ClosedFormQuasiInverseSolvesSymbol) {
  const double xi = 1.4;
  const auto chi = build_uniaxial_chi(xi, Vec4(1, 0, 0, 0), Vec4(0, xi, 0, 0));
  const GaugeVector gauge = GaugeVector::meromorphic(xi);
  std::mt19937_64 gen(5);
  std::normal_distribution<double> n;
  for (int i = 0; i < 30; ++i) {
    const CCovec4 k(cd(n(gen), 0.3 * n(gen)), n(gen), n(gen), n(gen));
    const CMat4 E = quasi_inverse_closed_form(xi, k);
    const CMat4 pi = CMat4::Identity() - gauge(k).c * k.c.transpose();
    EXPECT_LT((principal_symbol(chi, k) * E - pi).norm(), 1e-10 * pi.norm());
  }
}

TEST(UniaxialMedium, ModeFrequenciesAndPolarizations) {
  const ModeData m = mode_data(1.0, Eigen::Vector3d(1, 2, 2));
  EXPECT_DOUBLE_EQ(m.omega, 3.0);
  EXPECT_NEAR(m.omega_tilde, std::sqrt(5.0), 1e-15);
  // v = (0, 0, k3, -k2) / |k_perp|
  const double s = std::sqrt(8.0);
  EXPECT_NEAR(m.v[2], 2 / s, 1e-15);
  EXPECT_NEAR(m.v[3], -2 / s, 1e-15);
  // v_tilde = (0, s^2 / (1 + xi^2), -k1 k2, -k1 k3) / (omega_tilde s)
  const double d = std::sqrt(5.0) * s;
  EXPECT_NEAR(m.v_tilde[1], 4.0 / d, 1e-15);
  EXPECT_NEAR(m.v_tilde[2], -2.0 / d, 1e-15);
  EXPECT_NEAR(m.v_tilde[3], -2.0 / d, 1e-15);
  EXPECT_FALSE(m.axis_degenerate);
}

TEST(UniaxialMedium, OpticAxisLimit) {
  for (double k1 : {1.5, -0.5}) {
    const ModeData m = mode_data(1.0, Eigen::Vector3d(k1, 0, 0));
    EXPECT_TRUE(m.axis_degenerate);
    EXPECT_DOUBLE_EQ(m.omega, m.omega_tilde);
    EXPECT_LT((m.v.c - Eigen::Vector4d(0, 0, 0, -1)).norm(), 1e-15);
    EXPECT_LT((m.v_tilde.c - Eigen::Vector4d(0, 0, -std::copysign(1.0, k1), 0)).norm(), 1e-15);
  }
}

TEST(UniaxialMedium, ResiduesOffAxis) {
  for (const Eigen::Vector3d k : {Eigen::Vector3d(0.3, 1.0, -0.2), Eigen::Vector3d(-2.0, 0.5, 0.7)}) {
    const ResidueResiduals r = residue_check(1.0, k);
    EXPECT_LT(r.ordinary, 1e-6);
    EXPECT_LT(r.extraordinary, 1e-6);
  }
  const ResidueResiduals r = residue_check(0.4, Eigen::Vector3d(0.1, 0.0, 1.0));
  EXPECT_LT(std::max(r.ordinary, r.extraordinary), 1e-6);
}

TEST(UniaxialMedium, ResiduesRefuseMergedPoles) {
  try {
    residue_check(1.0, Eigen::Vector3d(1, 0, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PolesMerged);
  }
  // xi = 0: ordinary and extraordinary frequencies coincide everywhere
  EXPECT_THROW(residue_check(0.0, Eigen::Vector3d(0.3, 1, 0)), Error);
}

TEST(UniaxialMedium, VacuumModeWeight) {
  const double xi = 1.0;
  const Eigen::Vector3d k(0.5, 1.0, -0.3);
  const ModeData m = mode_data(xi, k);
  Eigen::Vector4cd j = Eigen::Vector4cd::Zero(), jt = Eigen::Vector4cd::Zero();
  j(3) = cd(0.0, 2.0);
  jt(1) = 1.0;
  const double want = std::norm(m.v[3] * j(3)) / (2 * m.omega) + std::norm(m.v_tilde[1] * jt(1)) / (2 * m.omega_tilde);
  EXPECT_NEAR(vacuum_mode_weight(xi, k, j, jt), want, 1e-14);
  EXPECT_EQ(vacuum_mode_weight(xi, k, Eigen::Vector4cd::Zero(), Eigen::Vector4cd::Zero()), 0.0);
}

TEST(UniaxialMedium, PolarizationsStayBoundedTowardAxis) {
  for (double xi : {0.5, 1.0, 3.0})
    for (double eps : {1e-1, 1e-4, 1e-8}) {
      const ModeData m = mode_data(xi, Eigen::Vector3d(0.8, eps, 0.0));
      EXPECT_LE(m.v.c.norm(), 2.0);
      EXPECT_LE(m.v_tilde.c.norm(), 2.0);
    }
}

TEST(UniaxialMedium, ResidueTensorsAreRankOneOnTransverseVectors) {
  std::mt19937_64 gen(71);
  std::normal_distribution<double> n;
  for (int i = 0; i < 50; ++i) {
    const double xi = 1.0;
    const Eigen::Vector3d kv(n(gen), n(gen), n(gen));
    const ModeData m = mode_data(xi, kv);
    for (int mode = 0; mode < 2; ++mode) {
      const Covec4 k = mode ? m.k_tilde() : m.k();
      const Covec4& v = mode ? m.v_tilde : m.v;
      const CMat4 R = (mode ? m.U_tilde : m.U) - (v.c * v.c.transpose()).cast<cd>();
      // a basis of vectors z with k.z = 0
      Eigen::Matrix<double, 4, 3> Z;
      Z << -k[1], -k[2], -k[3], k[0], 0, 0, 0, k[0], 0, 0, 0, k[0];
      EXPECT_LT((Z.transpose().cast<cd>() * R * Z.cast<cd>()).norm(), 1e-9 * (1 + R.norm()) * k.c.squaredNorm());
    }
  }
}
