#include "qei/uniaxial_medium.hpp"

#include <cmath>

#include "qei/errors.hpp"
#include "qei/numerics.hpp"

namespace qei {

namespace {

const cd I(0.0, 1.0);

CMat4 outer(const Eigen::Vector4cd& a, const Eigen::Vector4cd& b) { return a * b.transpose(); }

}  // namespace

CCovec4 q_vector(double xi, const CCovec4& k) {
  // U_a = (-1,0,0,0), X_a = (0,xi,0,0), k.X = xi k_1, k.U = k_0
  return CCovec4(-xi * k.c(1), -xi * k.c(0), cd(0.0), cd(0.0));
}

Covec4 q_vector(double xi, const Covec4& k) { return Covec4(q_vector(xi, complexify(k)).c.real()); }

CMat4 quasi_inverse_closed_form(double xi, const CCovec4& k) {
  const BiMetric b = uniaxial_bimetric(xi);
  const cd n = b.eta_inv(k, k), z = b.zeta_inv(k, k);
  if (std::abs(n) == 0.0 || std::abs(z) == 0.0) throw Error(ErrorCode::NearNullCovector, "closed form has a pole at k");
  const Eigen::Vector4cd kq = k.c + I * q_vector(xi, k).c;
  return b.eta.g.cast<cd>() / n - outer(kq, kq) / (z * n);
}

ModeData mode_data(double xi, const Eigen::Vector3d& kvec) {
  if (kvec.norm() == 0.0) throw Error(ErrorCode::ZeroMomentum, "mode data need k != 0");
  ModeData m;
  m.kvec = kvec;
  const Frequencies f = frequencies(xi, kvec);
  m.omega = f.omega;
  m.omega_tilde = f.omega_tilde;
  const double k1 = kvec(0), k2 = kvec(1), k3 = kvec(2);
  const double perp2 = k2 * k2 + k3 * k3;
  const double x2 = xi * xi;

  if (perp2 == 0.0) {
    m.axis_degenerate = true;
    m.v = Covec4(0, 0, 0, -1);
    m.v_tilde = Covec4(0, 0, k1 > 0 ? -1.0 : 1.0, 0);
    m.U = outer(m.v.c.cast<cd>(), m.v.c.cast<cd>());
    m.U_tilde = outer(m.v_tilde.c.cast<cd>(), m.v_tilde.c.cast<cd>());
    return m;
  }

  const double s = std::sqrt(perp2);
  m.v = Covec4(0, 0, k3 / s, -k2 / s);
  m.v_tilde = Covec4(Eigen::Vector4d(0, perp2 / (1 + x2), -k1 * k2, -k1 * k3) / (m.omega_tilde * s));

  const Metric4 eta = minkowski();
  const InverseMetric4 eta_inv = minkowski_inverse();
  {
    const CCovec4 k = complexify(m.k());
    const CCovec4 q = q_vector(xi, k);
    const Eigen::Vector4cd kq = k.c + I * q.c;
    m.U = eta.g.cast<cd>() + outer(kq, kq) / eta_inv(q, q);
  }
  {
    const CCovec4 k = complexify(m.k_tilde());
    const CCovec4 q = q_vector(xi, k);
    const Eigen::Vector4cd kq = k.c + I * q.c;
    m.U_tilde = -outer(kq, kq) / ((1 + x2) * eta_inv(q, q));
  }
  return m;
}

ResidueResiduals residue_check(double xi, const Eigen::Vector3d& kvec, int nodes) {
  const ModeData m = mode_data(xi, kvec);
  const double perp2 = kvec(1) * kvec(1) + kvec(2) * kvec(2);
  const double radius = 0.25 * std::abs(m.omega - m.omega_tilde);
  if (perp2 <= 1e-12 * kvec.squaredNorm() || radius <= 1e-9 * m.omega)
    throw Error(ErrorCode::PolesMerged, "ordinary and extraordinary poles coincide");

  const FresnelContext ctx = uniaxial_context(xi);
  const GaugeVector kappa = GaugeVector::meromorphic(xi);
  auto E = [&](cd k0) { return quasi_inverse(ctx, CCovec4(k0, kvec(0), kvec(1), kvec(2)), kappa); };

  ResidueResiduals out;
  const CMat4 want_o = -m.U / (2.0 * m.omega);
  const CMat4 want_e = -m.U_tilde / (2.0 * m.omega_tilde);
  out.ordinary = (contour_residue(E, m.omega, radius, nodes) - want_o).norm() / want_o.norm();
  out.extraordinary = (contour_residue(E, m.omega_tilde, radius, nodes) - want_e).norm() / want_e.norm();
  return out;
}

double vacuum_mode_weight(double xi, const Eigen::Vector3d& kvec, const Eigen::Vector4cd& j_at_k,
                          const Eigen::Vector4cd& j_at_k_tilde) {
  const ModeData m = mode_data(xi, kvec);
  const cd a = m.v.c.cast<cd>().dot(j_at_k);  // dot() conjugates the real left operand only
  const cd b = m.v_tilde.c.cast<cd>().dot(j_at_k_tilde);
  return std::norm(a) / (2.0 * m.omega) + std::norm(b) / (2.0 * m.omega_tilde);
}

}  // namespace qei
