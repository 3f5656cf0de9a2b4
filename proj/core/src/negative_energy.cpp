#include "qei/negative_energy.hpp"

#include <cmath>
#include <numbers>

#include "qei/causal.hpp"
#include "qei/errors.hpp"
#include "qei/fresnel.hpp"

namespace qei {

namespace {

constexpr double kPi = std::numbers::pi;
const cd I(0.0, 1.0);

ConstitutiveDensity crystal_chi(double xi) {
  const BiMetric b = uniaxial_bimetric(xi);
  return build_uniaxial_chi(xi, b.U, b.X);
}

}  // namespace

cd packet_profile(const WavePacketSpec& spec, const Eigen::Vector3d& k) {
  const double x2 = spec.xi * spec.xi, t0 = spec.tau0;
  const double wt = std::sqrt(k(0) * k(0) + (k(1) * k(1) + k(2) * k(2)) / (1.0 + x2));
  const double gauss = std::exp(-(wt * t0) * (wt * t0));
  const double pi32 = std::pow(kPi, 1.5);
  const cd f01 = I * std::pow(t0, 3) / (pi32 * (1 + x2)) * gauss;
  const cd f03 = -4.0 * I * k(0) * k(2) * std::pow(t0, 5) / (pi32 * (1 + x2) * (1 + x2)) * gauss;
  const cd f31 = 4.0 * I * wt * k(2) * std::pow(t0, 5) / (5.0 * pi32 * (1 + x2) * (1 + x2)) * gauss;
  const double sh = std::sinh(spec.alpha), ch = std::cosh(spec.alpha);
  return -f01 * sh * std::sin(spec.beta) + f03 * sh * std::cos(spec.beta) + f31 * ch;
}

QuadratureSpec packet_quadrature(const WavePacketSpec& spec, int nodes) {
  if (!(spec.tau0 > 0.0)) throw Error(ErrorCode::InvalidInput, "tau0 must be positive");
  if (nodes < 8 || nodes % 2 != 0) throw Error(ErrorCode::GridTooCoarse, "need an even node count >= 8");
  QuadratureSpec q;
  q.nodes = {nodes, nodes, nodes};
  const double across = 8.0 * std::sqrt(1.0 + spec.xi * spec.xi) / spec.tau0;
  q.radius = {8.0 / spec.tau0, across, across};
  return q;
}

CField6 field_strength_at(const WavePacketSpec& spec, const Vec4& x, const QuadratureSpec& q) {
  const double x2 = spec.xi * spec.xi;
  auto integrand = [&](const std::array<double, 3>& k, cd* out) {
    const double perp2 = k[1] * k[1] + k[2] * k[2];
    const double wt = std::sqrt(k[0] * k[0] + perp2 / (1.0 + x2));
    const Eigen::Vector4d kt(wt, k[0], k[1], k[2]);
    const Eigen::Vector4d w = Eigen::Vector4d(0.0, perp2 / (1.0 + x2), -k[0] * k[1], -k[0] * k[2]) / wt;
    const double phase = wt * x[0] + k[0] * x[1] + k[1] * x[2] + k[2] * x[3];
    const cd f = packet_profile(spec, Eigen::Vector3d(k[0], k[1], k[2])) * std::polar(1.0, -phase);
    for (int i = 0; i < 6; ++i) {
      auto [a, b] = kFormPairs[i];
      out[i] = -I * (kt(a) * w(b) - kt(b) * w(a)) * f;
    }
  };
  const std::vector<cd> r = integrate_box(q, 6, integrand);
  CField6 F;
  for (int i = 0; i < 6; ++i) F(i) = r[i];
  return F;
}

CField6 field_strength_origin(const WavePacketSpec& spec, FieldMethod method, int nodes) {
  if (method == FieldMethod::Quadrature) return field_strength_at(spec, Vec4(0, 0, 0, 0), packet_quadrature(spec, nodes));
  const double t2 = 1.0 / (spec.tau0 * spec.tau0);
  const double sh = std::sinh(spec.alpha), ch = std::cosh(spec.alpha);
  CField6 F = CField6::Zero();
  F(0) = -t2 * sh * std::sin(spec.beta);  // 01
  F(2) = t2 * sh * std::cos(spec.beta);   // 03
  F(4) = t2 * ch;                          // 31
  return F;
}

double rho_along(const WavePacketSpec& spec, double tau, const QuadratureSpec& q) {
  const ObserverFrame of = frame_from_worldline(spec.alpha, spec.beta, 1.0);
  const Vec4 x(tau * of.velocity().c);
  return classical_rho(crystal_chi(spec.xi), of.frame, field_strength_at(spec, x, q), true);
}

double rho_origin(const WavePacketSpec& spec, FieldMethod method, int nodes) {
  const ObserverFrame of = frame_from_worldline(spec.alpha, spec.beta, 1.0);
  return classical_rho(crystal_chi(spec.xi), of.frame, field_strength_origin(spec, method, nodes), true);
}

double rho_origin_reference(const WavePacketSpec& spec) {
  const double s = std::sinh(spec.alpha) * std::sin(spec.beta);
  return 4.0 * (1.0 - spec.xi * spec.xi * s * s) / std::pow(spec.tau0, 4);
}

double packet_norm_sq(const WavePacketSpec& spec, int nodes) {
  const double x2 = spec.xi * spec.xi;
  auto integrand = [&](const std::array<double, 3>& k, cd* out) {
    const double perp2 = k[1] * k[1] + k[2] * k[2];
    const double wt = std::sqrt(k[0] * k[0] + perp2 / (1.0 + x2));
    out[0] = 2.0 * wt * perp2 * std::norm(packet_profile(spec, Eigen::Vector3d(k[0], k[1], k[2])));
  };
  return std::pow(2.0 * kPi, 3) * integrate_box(packet_quadrature(spec, nodes), 1, integrand)[0].real();
}

double n_particle_energy(const WavePacketSpec& spec, int n, const GaussianSmearing& g, int nodes, int time_nodes) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "n must be >= 1");
  const QuadratureSpec q = packet_quadrature(spec, nodes);
  // g^2 is a Gaussian of width sigma / sqrt(2); six of those widths cover it to 1e-15
  const double half = 6.0 * g.sigma;
  const double smeared = integrate_gl(
      [&](double t) {
        const double z = (t - g.center) / g.sigma;
        return std::exp(-z * z) * rho_along(spec, t, q);
      },
      g.center - half, g.center + half, time_nodes);
  const double single = 2.0 * smeared / packet_norm_sq(spec, nodes);
  return n * single;
}

double rs_kernel_diagonal(double xi, const Eigen::Vector3d& kvec, const ObserverFrame& frame) {
  const Frequencies f = frequencies(xi, kvec);
  const BiMetric b = uniaxial_bimetric(xi);
  const Vec4 v = frame.velocity();
  if (!(v[0] > 0.0) || !(b.zeta(v, v) < 0.0)) throw Error(ErrorCode::NotSubluminal, "frame is not subluminal");
  const Covec4 k(f.omega, kvec(0), kvec(1), kvec(2));
  return -b.eta_inv(k, frame.n()) * dot(k, v) / (2.0 * f.omega);
}

}  // namespace qei
