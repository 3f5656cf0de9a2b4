#include "qei/causal.hpp"

#include <cmath>

#include "qei/errors.hpp"

namespace qei {

namespace {

const BiMetric& require_bimetric(const FresnelContext& ctx) {
  if (!ctx.factorization) throw Error(ErrorCode::InvalidInput, "classification needs a bi-metric context");
  return *ctx.factorization;
}

}  // namespace

std::string_view to_string(CovectorClass c) {
  switch (c) {
    case CovectorClass::HyperbolicFuture: return "hyperbolic_future";
    case CovectorClass::HyperbolicPast: return "hyperbolic_past";
    case CovectorClass::OrdinaryNull: return "ordinary_null";
    case CovectorClass::ExtraordinaryNull: return "extraordinary_null";
    case CovectorClass::DoublyNull: return "doubly_null";
    case CovectorClass::Interstitial: return "interstitial";
    case CovectorClass::Spacelike: return "spacelike";
  }
  return "unknown";
}

std::string_view to_string(VectorClass c) {
  switch (c) {
    case VectorClass::SubluminalFuture: return "subluminal_future";
    case VectorClass::SubluminalPast: return "subluminal_past";
    case VectorClass::InterluminalFuture: return "interluminal_future";
    case VectorClass::InterluminalPast: return "interluminal_past";
    case VectorClass::SlowNull: return "slow_null";
    case VectorClass::FastNull: return "fast_null";
    case VectorClass::Superluminal: return "superluminal";
  }
  return "unknown";
}

CovectorClass classify_covector(const FresnelContext& ctx, const Covec4& k, double tol) {
  const BiMetric& b = require_bimetric(ctx);
  const double k2 = k.c.squaredNorm();
  if (k2 == 0.0) throw Error(ErrorCode::DegenerateInput, "zero covector");
  const double n = b.eta_inv(k, k), z = b.zeta_inv(k, k);
  const bool n0 = std::abs(n) <= tol * k2, z0 = std::abs(z) <= tol * k2;

  if (n0 && z0) {
    if (b.xi == 0.0) return CovectorClass::OrdinaryNull;
    // both cones touch only along the optic axis rays X +- xi U
    const Covec4 Xl = b.eta.lower(b.X), Ul = b.eta.lower(b.U);
    for (double s : {1.0, -1.0}) {
      Eigen::Vector4d ray = Xl.c + s * b.xi * Ul.c;
      double along = ray.dot(k.c) / ray.squaredNorm();
      if ((k.c - along * ray).norm() <= std::sqrt(tol) * std::sqrt(k2)) return CovectorClass::DoublyNull;
    }
    throw Error(ErrorCode::DegenerateInput, "both quadratic forms vanish away from the optic axis");
  }
  if (n0) return CovectorClass::OrdinaryNull;
  if (z0) return CovectorClass::ExtraordinaryNull;
  if (n < 0.0) return dot(k, b.U) > 0.0 ? CovectorClass::HyperbolicFuture : CovectorClass::HyperbolicPast;
  if (z < 0.0) return CovectorClass::Interstitial;
  return CovectorClass::Spacelike;
}

VectorClass classify_vector(const FresnelContext& ctx, const Vec4& z, double tol) {
  const BiMetric& b = require_bimetric(ctx);
  const double z2 = z.c.squaredNorm();
  if (z2 == 0.0) throw Error(ErrorCode::DegenerateInput, "zero vector");
  const double e = b.eta(z, z), s = b.zeta(z, z);
  const bool future = z[0] > 0.0;
  if (std::abs(s) <= tol * z2) return VectorClass::SlowNull;
  if (s < 0.0) return future ? VectorClass::SubluminalFuture : VectorClass::SubluminalPast;
  if (std::abs(e) <= tol * z2) return VectorClass::FastNull;
  if (e < 0.0) return future ? VectorClass::InterluminalFuture : VectorClass::InterluminalPast;
  return VectorClass::Superluminal;
}

Vec4 legendre_map(const BiMetric& b, const Covec4& k) {
  const double n = b.eta_inv(k, k), z = b.zeta_inv(k, k);
  return Vec4(0.5 * (b.eta_inv.g * k.c / n + b.zeta_inv.g * k.c / z));
}

Mat4 legendre_jacobian(const BiMetric& b, const Covec4& k) {
  const Eigen::Vector4d ek = b.eta_inv.g * k.c, zk = b.zeta_inv.g * k.c;
  const double n = k.c.dot(ek), z = k.c.dot(zk);
  return 0.5 * (b.eta_inv.g / n - 2.0 * ek * ek.transpose() / (n * n) + b.zeta_inv.g / z -
                2.0 * zk * zk.transpose() / (z * z));
}

Vec4 legendre_map(const FresnelContext& ctx, const Covec4& k) {
  const double g = fresnel_eval(ctx, k);
  const double scale = std::pow(k.c.norm(), 4) * std::max(1.0, std::pow(ctx.chi.t.norm(), 3));
  if (std::abs(g) <= ctx.null_tol * scale) throw Error(ErrorCode::NearNullCovector, "Legendre map undefined on the null set");
  if (ctx.factorization) return legendre_map(*ctx.factorization, k);

  const double h = 1e-5 * k.c.norm();
  Vec4 grad;
  for (int a = 0; a < 4; ++a) {
    auto at = [&](double s) {
      Covec4 kk = k;
      kk[a] += s * h;
      return fresnel_eval(ctx, kk);
    };
    grad[a] = (-at(2) + 8.0 * at(1) - 8.0 * at(-1) + at(-2)) / (12.0 * h);
  }
  return Vec4(grad.c / (4.0 * g));
}

Frequencies frequencies(double xi, const Eigen::Vector3d& kvec) {
  if (kvec.norm() == 0.0) throw Error(ErrorCode::ZeroMomentum, "frequencies need k != 0");
  const double perp = kvec(1) * kvec(1) + kvec(2) * kvec(2);
  return {kvec.norm(), std::sqrt(kvec(0) * kvec(0) + perp / (1.0 + xi * xi))};
}

}  // namespace qei
