#pragma once

#include <variant>
#include <vector>

#include "qei/observer_norm.hpp"
#include "qei/tensor_core.hpp"

namespace qei {

struct GaussianSmearing {
  double sigma = 1.0;
  double center = 0.0;
};

// samples g(t0 + j h), j = 0..n-1
struct SampledSmearing {
  double t0 = 0.0;
  double h = 1.0;
  std::vector<double> samples;
};

using SmearingFunction = std::variant<GaussianSmearing, SampledSmearing>;

// exp(-(t - c)^2 / (2 sigma^2)) on [c - half_width sigma, c + half_width sigma], h = sigma / per_sigma
SampledSmearing sample_gaussian(const GaussianSmearing& g, double half_width = 8.0, int per_sigma = 64);

// 1 + (1 + xi^2) (1 - xi^2 sinh^2 alpha sin^2 beta)^{-2}
double C_coefficient(double xi, double alpha, double beta);

// aleph^4 (n.v / eta(v,v)^2 + w n.v / zeta(v,v)^2) with v = gamma-dot and
// w = |det zeta_ab|^{1/2} = 1/(1 + xi^2), the zeta-volume weight of the extraordinary term.
double C_from_frame(double xi, double alpha, double beta, double aleph = 1.0);

double gpp_norm_sq(const SmearingFunction& g);

enum class NormKind { SR, UC, Explicit };

struct Normalization {
  NormKind kind = NormKind::SR;
  double value = 1.0;  // used for Explicit
};

struct QEIBoundResult {
  double C = 0.0;
  double aleph = 1.0;
  double gpp_norm_sq = 0.0;
  double bound = 0.0;
  double xi = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  Normalization normalization;
};

// UC resolves aleph through the numeric Legendre inversion.
double resolve_aleph(double xi, double alpha, double beta, const Normalization& norm);

// -C ||g''||^2 / (4 (2 pi)^2 aleph^4); NotSubluminal outside the subluminal cone.
QEIBoundResult qei_bound(double xi, double alpha, double beta, const Normalization& norm, const SmearingFunction& g);

// -C / (pi (2 pi)^2 aleph^4) int_0^inf dbeta' int_0^inf kappa^3 |hat g(kappa + beta')|^2 dkappa
// on the grid of the discrete transform.
double qei_bound_pipeline(double xi, double alpha, double beta, double aleph, const SampledSmearing& g);

enum class MetricChoice { Eta, Zeta };

struct AppendixAResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_error = 0.0;  // absolute error when rhs vanishes
};

// lhs = (2 pi)^{-3} int (k.u)(k.v) / (2 w) hat f(k.u) d^3k with k = (w, kvec) on the chosen cone,
// rhs = -g(u,v) / (4 pi^2 g(u,u)^2) int_0^inf kappa^3 hat f(kappa) dkappa, f a centred Gaussian.
AppendixAResult appendix_a_oracle(const Vec4& u, const Vec4& v, double sigma, double xi, MetricChoice which,
                                  int nodes = 64);

}  // namespace qei
