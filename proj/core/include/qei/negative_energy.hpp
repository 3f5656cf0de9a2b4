#pragma once

#include <Eigen/Dense>

#include "qei/energy_density.hpp"
#include "qei/numerics.hpp"
#include "qei/qei_bounds.hpp"

namespace qei {

struct WavePacketSpec {
  double tau0 = 1.0;
  double alpha = 0.0;
  double beta = 0.0;
  double xi = 0.0;
};

// f = -f01 sinh(a) sin(b) + f03 sinh(a) cos(b) + f31 cosh(a)
cd packet_profile(const WavePacketSpec& spec, const Eigen::Vector3d& kvec);

// Cube radius 8/tau0 along k_1 and 8 (1 + xi^2)^{1/2}/tau0 across the axis;
// even node counts keep the optic axis off the grid.
QuadratureSpec packet_quadrature(const WavePacketSpec& spec, int nodes = 48);

enum class FieldMethod { Quadrature, ClosedForm };

// F_ab(x) = -i int (kt_a w_b - kt_b w_a) f exp(-i kt.x) d^3k with kt = (omega_tilde, kvec)
// and w = (k_2^2 + k_3^2)^{1/2} v_tilde.
CField6 field_strength_at(const WavePacketSpec& spec, const Vec4& x, const QuadratureSpec& q);
CField6 field_strength_origin(const WavePacketSpec& spec, FieldMethod method = FieldMethod::ClosedForm,
                              int nodes = 48);

// Complex-mode classical energy density along gamma(tau) = tau u (aleph = 1).
double rho_along(const WavePacketSpec& spec, double tau, const QuadratureSpec& q);
double rho_origin(const WavePacketSpec& spec, FieldMethod method = FieldMethod::ClosedForm, int nodes = 48);
// 4 (1 - xi^2 sinh^2 alpha sin^2 beta) tau0^{-4}
double rho_origin_reference(const WavePacketSpec& spec);

// (2 pi)^3 int 2 omega_tilde (k_2^2 + k_3^2) |f|^2 d^3k
double packet_norm_sq(const WavePacketSpec& spec, int nodes = 48);

// n times <Psi| :rho(g^2): |Psi> / <Psi|Psi> = n * 2 int g^2 rho dtau / packet_norm_sq
double n_particle_energy(const WavePacketSpec& spec, int n, const GaussianSmearing& g, int nodes = 48,
                         int time_nodes = 16);

// -eta^{-1}(k, n) (k.gamma-dot) / (2 omega) with k = (omega, kvec)
double rs_kernel_diagonal(double xi, const Eigen::Vector3d& kvec, const ObserverFrame& frame);

}  // namespace qei
