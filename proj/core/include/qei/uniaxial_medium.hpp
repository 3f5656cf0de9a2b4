#pragma once

#include <Eigen/Dense>

#include "qei/causal.hpp"
#include "qei/fresnel.hpp"

namespace qei {

// q_a = (k.X) U_a - (k.U) X_a in the crystal rest frame.
CCovec4 q_vector(double xi, const CCovec4& k);
Covec4 q_vector(double xi, const Covec4& k);

// eta_ab / eta^{-1}(k,k) - (k + i q)_a (k + i q)_b / (zeta^{-1}(k,k) eta^{-1}(k,k))
CMat4 quasi_inverse_closed_form(double xi, const CCovec4& k);

struct ModeData {
  Eigen::Vector3d kvec = Eigen::Vector3d::Zero();
  double omega = 0.0;
  double omega_tilde = 0.0;
  Covec4 v;
  Covec4 v_tilde;
  CMat4 U = CMat4::Zero();        // at k_0 = omega
  CMat4 U_tilde = CMat4::Zero();  // at k_0 = omega_tilde
  // k_2 = k_3 = 0: v, v_tilde are the azimuth phi = 0 limits and U, U_tilde
  // hold their rank-1 parts v v, v_tilde v_tilde (the residue formulas are singular there).
  bool axis_degenerate = false;

  Covec4 k() const { return Covec4(omega, kvec(0), kvec(1), kvec(2)); }
  Covec4 k_tilde() const { return Covec4(omega_tilde, kvec(0), kvec(1), kvec(2)); }
};

ModeData mode_data(double xi, const Eigen::Vector3d& kvec);

struct ResidueResiduals {
  double ordinary = 0.0;
  double extraordinary = 0.0;
};

// Contour residues of the chi-built quasi-inverse (meromorphic gauge) at
// k_0 = omega and omega_tilde against -U/(2 omega), -U_tilde/(2 omega_tilde).
// Relative Frobenius errors.
ResidueResiduals residue_check(double xi, const Eigen::Vector3d& kvec, int nodes = 256);

// |v.j(k)|^2 / (2 omega) + |v_tilde.j(k_tilde)|^2 / (2 omega_tilde)
double vacuum_mode_weight(double xi, const Eigen::Vector3d& kvec, const Eigen::Vector4cd& j_at_k,
                          const Eigen::Vector4cd& j_at_k_tilde);

}  // namespace qei
