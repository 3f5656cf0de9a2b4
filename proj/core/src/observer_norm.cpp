#include "qei/observer_norm.hpp"

#include <cmath>

#include "qei/causal.hpp"
#include "qei/errors.hpp"
#include "qei/fresnel.hpp"

namespace qei {

namespace {

void require_subluminal(const BiMetric& b, const Vec4& xdot) {
  if (!(xdot[0] > 0.0) || !(b.zeta(xdot, xdot) < 0.0))
    throw Error(ErrorCode::NotSubluminal, "velocity is not future-directed zeta-timelike");
}

Covec4 series_seed(const BiMetric& b, const Vec4& x) {
  const double xx = b.eta(x, x), xu = b.eta(x, b.U), xX = b.eta(x, b.X);
  const double x2 = b.xi * b.xi;
  const Eigen::Vector4d xl = b.eta.g * x.c;
  const Eigen::Vector4d Ul = b.eta.g * b.U.c, Xl = b.eta.g * b.X.c;
  Eigen::Vector4d k = xl / xx + (xX * xX - x2 * xu * xu) * xl / (2 * xx * xx) + (x2 * xu * Ul - xX * Xl) / (2 * xx);
  return Covec4(k);
}

bool in_cone(const BiMetric& b, const Covec4& k) { return k[0] > 0.0 && b.eta_inv(k, k) < 0.0; }

}  // namespace

bool is_subluminal(double xi, double alpha, double beta) {
  const double s = std::sinh(alpha) * std::sin(beta);
  return xi * xi * s * s < 1.0;
}

Covec4 legendre_inverse(double xi, const Vec4& xdot) {
  const BiMetric b = uniaxial_bimetric(xi);
  require_subluminal(b, xdot);
  Covec4 k = series_seed(b, xdot);
  if (!in_cone(b, k)) k = Covec4(b.eta.g * xdot.c / b.eta(xdot, xdot));

  const double target = xdot.c.norm();
  auto residual = [&](const Covec4& kk) { return (legendre_map(b, kk).c - xdot.c).norm(); };
  double r = residual(k);
  for (int it = 0; it < 50; ++it) {
    if (r <= 1e-12 * target) return k;
    const Eigen::Vector4d step = legendre_jacobian(b, k).partialPivLu().solve(legendre_map(b, k).c - xdot.c);
    double lam = 1.0;
    Covec4 trial(k.c - step);
    double rt = in_cone(b, trial) ? residual(trial) : INFINITY;
    for (int h = 0; h < 30 && !(rt < r); ++h) {
      lam *= 0.5;
      trial = Covec4(k.c - lam * step);
      rt = in_cone(b, trial) ? residual(trial) : INFINITY;
    }
    if (!(rt < r)) break;
    k = trial;
    r = rt;
  }
  if (r <= 1e-12 * target) return k;
  throw Error(ErrorCode::NewtonDiverged, "Legendre inversion did not converge", {k[0], k[1], k[2], k[3]});
}

double pstar(double xi, const Vec4& xdot, NormMode mode) {
  const BiMetric b = uniaxial_bimetric(xi);
  require_subluminal(b, xdot);
  if (mode == NormMode::Series) {
    const double r = std::sqrt(std::abs(b.eta(xdot, xdot)));
    const double xu = b.eta(xdot, b.U), xX = b.eta(xdot, b.X);
    return r + (xi * xi * xu * xu - xX * xX) / (4.0 * r);
  }
  const Covec4 k = legendre_inverse(xi, xdot);
  return std::pow(b.eta_inv(k, k) * b.zeta_inv(k, k), -0.25);
}

NormalizationResult aleph_uc(double xi, double alpha, double beta, NormMode mode) {
  if (!is_subluminal(xi, alpha, beta))
    throw Error(ErrorCode::NotSubluminal, "sinh^2(alpha) sin^2(beta) >= xi^-2");
  NormalizationResult res;
  res.mode = mode;
  const double s = std::sinh(alpha) * std::sin(beta);
  if (mode == NormMode::Series) {
    res.aleph = 1.0 - xi * xi / 4.0 * (1.0 + s * s);
    return res;
  }
  const Vec4 u(std::cosh(alpha), std::sinh(alpha) * std::cos(beta), 0.0, s);
  res.aleph = 1.0 / pstar(xi, u, NormMode::Numeric);
  res.residual = std::abs(pstar(xi, Vec4(res.aleph * u.c), NormMode::Numeric) - 1.0);
  return res;
}

}  // namespace qei
