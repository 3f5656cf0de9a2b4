#pragma once

#include <array>
#include <optional>
#include <utility>

#include <Eigen/Dense>

#include "qei/tensor_core.hpp"

namespace qei {

// Components in the order (01, 02, 03, 23, 31, 12).
using Field6 = Eigen::Matrix<double, 6, 1>;
using CField6 = Eigen::Matrix<cd, 6, 1>;
using Mat3 = Eigen::Matrix3d;
using EMBasis = Eigen::Matrix<double, 6, 6>;  // rows b_1, b_2, b_3, e_1, e_2, e_3

inline constexpr std::array<std::pair<int, int>, 6> kFormPairs{{{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}}};

Mat4 to_two_form(const Field6& f);
CMat4 to_two_form(const CField6& f);
Field6 from_two_form(const Mat4& F);

// b^{ab} F_ab summed over all index pairs, i.e. twice the six-component sum.
double pair(const Field6& bivector, const Field6& form);

struct Chi12 {
  Rank4 chi1;
  Rank4 chi2;
};

// chi1 = chi lam lam lam lam, chi2 = -4 chi n u lam n u lam with lam_a^b = delta - n_a u^b.
Chi12 chi12_split(const ConstitutiveDensity& chi, const Frame& frame);

// (1/8) eps^{-1} chi (F F - 4 n u F F)
double rho_direct(const ConstitutiveDensity& chi, const Frame& frame, const Field6& F);
// (1/8) eps^{-1} (chi1 + chi2) F F
double rho_split(const Chi12& split, const Frame& frame, const Field6& F);

EMBasis em_basis(double alpha, double beta);

struct EnergyMatrices {
  Mat3 X1 = Mat3::Zero();  // magnetic block, acts on b-contractions
  Mat3 X2 = Mat3::Zero();  // electric block, acts on e-contractions
  std::optional<Mat3> Y1;
  std::optional<Mat3> Y2;
  EMBasis basis = EMBasis::Zero();

  const Mat3& Y1_or_throw() const;
  const Mat3& Y2_or_throw() const;
};

// Built from chi12_split and em_basis for the crystal at rest and the
// (alpha, beta) observer with aleph = 1.
EnergyMatrices energy_matrices(double xi, double alpha, double beta);

// Principal square root; NotPositive carries the eigenvalues.
Mat3 principal_sqrt(const Mat3& X, double rel_tol = 1e-12);

struct SwecVerdict {
  bool holds = false;
  bool boundary = false;
  bool closed_form_holds = false;
  Eigen::Vector3d eig_X1 = Eigen::Vector3d::Zero();
  Eigen::Vector3d eig_X2 = Eigen::Vector3d::Zero();
  double tol = 0.0;
};

// tol defaults to 1e-12 times the trace of each matrix
SwecVerdict swec_check(double xi, double alpha, double beta, std::optional<double> tol = std::nullopt);

double classical_rho(const ConstitutiveDensity& chi, const Frame& frame, const Field6& F);
// complex_mode: (1/8) eps^{-1} chi (conj(F) F - 4 n u Re(conj(F) F)); otherwise Re F is used
double classical_rho(const ConstitutiveDensity& chi, const Frame& frame, const CField6& F, bool complex_mode);

struct SumOfSquares {
  Eigen::Vector3d electric = Eigen::Vector3d::Zero();
  Eigen::Vector3d magnetic = Eigen::Vector3d::Zero();
};

// magnetic^B = 1/2 (F.b_A) Y1^{AB}, electric^B = 1/2 (F.e_A) Y2^{AB}
SumOfSquares sum_of_squares_fields(const Field6& F, const EnergyMatrices& m);

// 1/2 (E(t).E(t') + B(t).B(t')); the diagonal is the energy density
double classical_point_split(const Field6& F1, const Field6& F2, const EnergyMatrices& m);

}  // namespace qei
