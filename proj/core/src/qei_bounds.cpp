#include "qei/qei_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qei/errors.hpp"
#include "qei/fresnel.hpp"
#include "qei/numerics.hpp"

namespace qei {

namespace {

constexpr double kPi = std::numbers::pi;

double s2_of(double alpha, double beta) {
  const double s = std::sinh(alpha) * std::sin(beta);
  return s * s;
}

void require_subluminal(double xi, double alpha, double beta) {
  if (!is_subluminal(xi, alpha, beta))
    throw Error(ErrorCode::NotSubluminal, "sinh^2(alpha) sin^2(beta) >= xi^-2: the worldline is not subluminal");
}

}  // namespace

SampledSmearing sample_gaussian(const GaussianSmearing& g, double half_width, int per_sigma) {
  SampledSmearing s;
  s.h = g.sigma / per_sigma;
  const int n = 2 * static_cast<int>(std::lround(half_width * per_sigma)) + 1;
  s.t0 = g.center - half_width * g.sigma;
  s.samples.resize(n);
  for (int j = 0; j < n; ++j) {
    const double t = (s.t0 + j * s.h - g.center) / g.sigma;
    s.samples[j] = std::exp(-0.5 * t * t);
  }
  return s;
}

double C_coefficient(double xi, double alpha, double beta) {
  const double x2 = xi * xi;
  const double d = 1.0 - x2 * s2_of(alpha, beta);
  if (std::abs(d) <= 1e-9) throw Error(ErrorCode::OnExtraordinaryCone, "worldline lies on the extraordinary cone");
  return 1.0 + (1.0 + x2) / (d * d);
}

double C_from_frame(double xi, double alpha, double beta, double aleph) {
  const BiMetric b = uniaxial_bimetric(xi);
  const ObserverFrame of = frame_from_worldline(alpha, beta, aleph);
  const Vec4 v = of.velocity();
  const double nv = dot(of.n(), v);
  const double ev = b.eta(v, v), zv = b.zeta(v, v);
  if (std::abs(zv) <= 1e-9 * aleph * aleph) throw Error(ErrorCode::OnExtraordinaryCone, "worldline lies on the extraordinary cone");
  const double w = std::sqrt(std::abs(b.zeta.g.determinant()));
  return std::pow(aleph, 4) * (nv / (ev * ev) + w * nv / (zv * zv));
}

double gpp_norm_sq(const SmearingFunction& g) {
  if (const auto* ga = std::get_if<GaussianSmearing>(&g)) {
    if (!(ga->sigma > 0.0)) throw Error(ErrorCode::InvalidInput, "sigma must be positive");
    return 3.0 * std::sqrt(kPi) / (4.0 * std::pow(ga->sigma, 3));
  }
  const auto& s = std::get<SampledSmearing>(g);
  if (s.samples.size() < 66) throw Error(ErrorCode::GridTooCoarse, "need at least 64 interior samples");
  const std::vector<double> d2 = spectral_second_derivative(s.samples, s.h);
  CompensatedSum acc;
  for (double x : d2) acc.add(x * x);
  return acc.sum * s.h;
}

double resolve_aleph(double xi, double alpha, double beta, const Normalization& norm) {
  switch (norm.kind) {
    case NormKind::SR: return 1.0;
    case NormKind::UC: return aleph_uc(xi, alpha, beta, NormMode::Numeric).aleph;
    case NormKind::Explicit:
      if (!(norm.value > 0.0)) throw Error(ErrorCode::InvalidInput, "aleph must be positive");
      return norm.value;
  }
  return 1.0;
}

QEIBoundResult qei_bound(double xi, double alpha, double beta, const Normalization& norm, const SmearingFunction& g) {
  require_subluminal(xi, alpha, beta);
  QEIBoundResult r;
  r.xi = xi;
  r.alpha = alpha;
  r.beta = beta;
  r.normalization = norm;
  r.C = C_coefficient(xi, alpha, beta);
  r.aleph = resolve_aleph(xi, alpha, beta, norm);
  r.gpp_norm_sq = gpp_norm_sq(g);
  r.bound = -r.C / (4.0 * std::pow(2.0 * kPi, 2) * std::pow(r.aleph, 4)) * r.gpp_norm_sq;
  return r;
}

double qei_bound_pipeline(double xi, double alpha, double beta, double aleph, const SampledSmearing& g) {
  require_subluminal(xi, alpha, beta);
  if (g.samples.size() < 66) throw Error(ErrorCode::GridTooCoarse, "need at least 64 interior samples");
  double peak = 0.0;
  for (double x : g.samples) peak = std::max(peak, std::abs(x));
  if (peak == 0.0) return 0.0;
  // endpoint and tail checks shared with the spectral derivative
  (void)spectral_second_derivative(g.samples, g.h);

  const Spectrum s = fourier_transform(g.samples, g.t0, g.h, 16);
  std::vector<double> p;  // |hat g(m dtheta)|^2, m >= 0, truncated at 1e-12 of the peak modulus
  const std::size_t zero = s.theta.size() / 2;
  double gmax = 0.0;
  for (std::size_t m = zero; m < s.theta.size(); ++m) gmax = std::max(gmax, std::abs(s.value[m]));
  for (std::size_t m = zero; m < s.theta.size(); ++m) {
    if (std::abs(s.value[m]) < 1e-12 * gmax && m > zero) break;
    p.push_back(std::norm(s.value[m]));
  }
  const int M = static_cast<int>(p.size());
  if (M < 8) throw Error(ErrorCode::GridTooCoarse, "transform grid resolves fewer than 8 frequencies");
  const double d = s.dtheta;

  // 2D trapezoid over (beta', kappa) = (i d, j d)
  CompensatedSum outer;
  for (int i = 0; i < M; ++i) {
    CompensatedSum inner;
    for (int j = 0; i + j < M; ++j) {
      const double kap = j * d;
      const double wj = (j == 0) ? 0.5 : 1.0;
      inner.add(wj * kap * kap * kap * p[i + j]);
    }
    const double wi = (i == 0) ? 0.5 : 1.0;
    outer.add(wi * inner.sum * d);
  }
  const double integral = outer.sum * d;
  const double C = C_coefficient(xi, alpha, beta);
  return -C / (kPi * std::pow(2.0 * kPi, 2) * std::pow(aleph, 4)) * integral;
}

AppendixAResult appendix_a_oracle(const Vec4& u, const Vec4& v, double sigma, double xi, MetricChoice which,
                                  int nodes) {
  if (!(sigma > 0.0)) throw Error(ErrorCode::InvalidInput, "sigma must be positive");
  const BiMetric b = uniaxial_bimetric(which == MetricChoice::Eta ? 0.0 : xi);
  const Metric4& g = which == MetricChoice::Eta ? b.eta : b.zeta;
  const double guu = g(u, u);
  if (!(guu < 0.0) || !(u[0] > 0.0)) throw Error(ErrorCode::NotTimelike, "u must be future timelike for the chosen metric");
  const double x2 = which == MetricChoice::Eta ? 0.0 : xi * xi;

  auto fhat = [sigma](double kap) { return sigma * std::sqrt(2.0 * kPi) * std::exp(-0.5 * sigma * sigma * kap * kap); };

  // spherical coordinates; the radial cut adapts to the decay rate of hat f(k.u) along each direction
  const GaussRule ct = gauss_legendre(nodes, -1.0, 1.0);
  const GaussRule ph = gauss_legendre(nodes, 0.0, 2.0 * kPi);
  const GaussRule rr = gauss_legendre(nodes, 0.0, 1.0);
  CompensatedSum acc;
  for (int i = 0; i < nodes; ++i) {
    const double c = ct.x[i], sn = std::sqrt(1.0 - c * c);
    for (int j = 0; j < nodes; ++j) {
      const Eigen::Vector3d dir(sn * std::cos(ph.x[j]), sn * std::sin(ph.x[j]), c);
      const double w_dir = std::sqrt(dir(0) * dir(0) + (dir(1) * dir(1) + dir(2) * dir(2)) / (1.0 + x2));
      const Covec4 kd(w_dir, dir(0), dir(1), dir(2));
      const double ku = dot(kd, u), kv = dot(kd, v);
      const double R = 14.0 / (sigma * ku);
      CompensatedSum radial;
      for (int l = 0; l < nodes; ++l) {
        const double r = R * rr.x[l];
        // r^2 dr from the measure, (k.u)(k.v) ~ r^2, 1/(2 omega) ~ 1/r
        radial.add(rr.w[l] * R * r * r * r * ku * kv / (2.0 * w_dir) * fhat(r * ku));
      }
      acc.add(ct.w[i] * ph.w[j] * radial.sum);
    }
  }
  AppendixAResult out;
  out.lhs = acc.sum / std::pow(2.0 * kPi, 3);
  const double moment = integrate_gl([&](double k) { return k * k * k * fhat(k); }, 0.0, 14.0 / sigma, 128);
  out.rhs = -g(u, v) / (4.0 * kPi * kPi * guu * guu) * moment;
  const double err = std::abs(out.lhs - out.rhs);
  out.rel_error = std::abs(out.rhs) > 1e-300 ? err / std::abs(out.rhs) : err;
  return out;
}

}  // namespace qei
