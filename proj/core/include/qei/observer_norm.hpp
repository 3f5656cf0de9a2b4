#pragma once

#include "qei/tensor_core.hpp"

namespace qei {

enum class NormMode { Numeric, Series };

struct NormalizationResult {
  double aleph = 1.0;
  NormMode mode = NormMode::Numeric;
  double residual = 0.0;  // |P*(aleph u) - 1| in numeric mode, 0 for the series
};

// Damped Newton inversion of the bi-metric Legendre map, seeded by the
// second-order inverse series. NewtonDiverged carries the last iterate.
Covec4 legendre_inverse(double xi, const Vec4& xdot);

// numeric: P(k(xdot))^{-1/4} with P = eta^{-1}(k,k) zeta^{-1}(k,k).
// series: |eta(x,x)|^{1/2} + (xi^2 eta(x,U)^2 - eta(x,X)^2) / (4 |eta(x,x)|^{1/2}).
double pstar(double xi, const Vec4& xdot, NormMode mode);

// numeric: 1 / P*(u) for the unit-rapidity direction u.
// series: 1 - xi^2/4 (1 + sinh^2 alpha sin^2 beta).
NormalizationResult aleph_uc(double xi, double alpha, double beta, NormMode mode);

bool is_subluminal(double xi, double alpha, double beta);

}  // namespace qei
