#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "qei/tensor_core.hpp"

namespace qei {

// eta and zeta of the uniaxial crystal together with the factorization density theta:
// G(k) = theta eta^{-1}(k,k) zeta^{-1}(k,k).
struct BiMetric {
  double xi = 0.0;
  Vec4 U;
  Vec4 X;
  Metric4 eta;
  Metric4 zeta;
  InverseMetric4 eta_inv;
  InverseMetric4 zeta_inv;
  double theta = 1.0;
};

// Crystal rest frame: U = d_0, X = xi d_1.
BiMetric uniaxial_bimetric(double xi);

struct FresnelContext {
  ConstitutiveDensity chi;
  std::optional<BiMetric> factorization;
  Covec4 n0;
  double orientation = 1.0;  // sign making G(n0) > 0
  double null_tol = 1e-10;
};

// Picks the orientation sign from the raw adjugate value at n0.
FresnelContext make_context(const ConstitutiveDensity& chi, const Covec4& n0,
                            std::optional<BiMetric> factorization = std::nullopt);
FresnelContext uniaxial_context(double xi);

class GaugeVector {
public:
  using Rule = std::function<CVec4(const CCovec4&)>;

  explicit GaugeVector(Rule rule) : rule_(std::move(rule)) {}

  // z / (k.z) with z the coordinate basis vector maximizing |k.z|
  static GaugeVector coordinate_max();
  static GaugeVector fixed(const Vec4& z);
  // (k^# + i q^#) / eta^{-1}(k,k), crystal rest frame
  static GaugeVector meromorphic(double xi);

  CVec4 operator()(const CCovec4& k) const { return rule_(k); }

private:
  Rule rule_;
};

// Oriented Fresnel quartic adj(M)_{ab} kappa^a kappa^b.
cd fresnel_eval(const FresnelContext& ctx, const CCovec4& k, const GaugeVector& kappa);
double fresnel_eval(const FresnelContext& ctx, const Covec4& k, const GaugeVector& kappa);
double fresnel_eval(const FresnelContext& ctx, const Covec4& k);

// Oriented second adjugate, (1/8) eps eps chi chi k k; no gauge dependence.
CMat4 second_adjugate_Q(const FresnelContext& ctx, const CCovec4& k);
Mat4 second_adjugate_Q(const FresnelContext& ctx, const Covec4& k);

// E_ab = Q_cd pi^c_a pi^d_b / G with pi^c_a = delta^c_a - kappa^c k_a.
CMat4 quasi_inverse(const FresnelContext& ctx, const CCovec4& k, const GaugeVector& kappa);

// Coefficients (low to high) of t -> G(base + t dir).
std::array<double, 5> restriction_coefficients(const FresnelContext& ctx, const Covec4& base, const Covec4& dir);

struct HyperbolicityReport {
  bool hyperbolic = true;
  Covec4 witness;        // offending covector when not hyperbolic
  cd witness_root{};     // root with the largest relative imaginary part
  double worst_imag = 0.0;
};

HyperbolicityReport is_hyperbolic(const FresnelContext& ctx, const Covec4& n, int trial_count,
                                  std::uint64_t seed = 20240611);

// Garding test: every root of s -> G(k + s n0) real and negative.
bool in_hyperbolicity_cone(const FresnelContext& ctx, const Covec4& k);

}  // namespace qei
