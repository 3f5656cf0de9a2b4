#pragma once

#include <string_view>

#include <Eigen/Dense>

#include "qei/fresnel.hpp"

namespace qei {

enum class CovectorClass {
  HyperbolicFuture,
  HyperbolicPast,
  OrdinaryNull,
  ExtraordinaryNull,
  DoublyNull,
  Interstitial,
  Spacelike,
};

enum class VectorClass {
  SubluminalFuture,
  SubluminalPast,
  InterluminalFuture,
  InterluminalPast,
  SlowNull,
  FastNull,
  Superluminal,
};

std::string_view to_string(CovectorClass c);
std::string_view to_string(VectorClass c);

// Requires a bi-metric context. Forms within tol * |k|^2 of zero count as null.
CovectorClass classify_covector(const FresnelContext& ctx, const Covec4& k, double tol = 1e-10);
VectorClass classify_vector(const FresnelContext& ctx, const Vec4& z, double tol = 1e-10);

// (1 / 4G) dG/dk
Vec4 legendre_map(const FresnelContext& ctx, const Covec4& k);
Vec4 legendre_map(const BiMetric& b, const Covec4& k);
// d(legendre_map)/dk for the bi-metric form; entry (a, b) is dx^a / dk_b.
Mat4 legendre_jacobian(const BiMetric& b, const Covec4& k);

struct Frequencies {
  double omega = 0.0;
  double omega_tilde = 0.0;
};

Frequencies frequencies(double xi, const Eigen::Vector3d& kvec);

}  // namespace qei
