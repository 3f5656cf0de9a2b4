#include "qei/fresnel.hpp"

#include <cmath>
#include <random>

#include "qei/errors.hpp"
#include "qei/numerics.hpp"

namespace qei {

namespace {

template <class T>
T det3(const Eigen::Matrix<T, 4, 4>& m, int skip_row, int skip_col) {
  int r[3], c[3];
  for (int i = 0, n = 0; i < 4; ++i)
    if (i != skip_row) r[n++] = i;
  for (int i = 0, n = 0; i < 4; ++i)
    if (i != skip_col) c[n++] = i;
  auto e = [&](int i, int j) { return m(r[i], c[j]); };
  return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
         e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

CMat4 adjugate(const CMat4& m) {
  CMat4 adj;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) adj(j, i) = ((i + j) % 2 == 0 ? 1.0 : -1.0) * det3(m, i, j);
  return adj;
}

cd raw_fresnel(const ConstitutiveDensity& chi, const CCovec4& k, const CVec4& kappa) {
  CMat4 adj = adjugate(principal_symbol(chi, k));
  return (kappa.c.transpose() * adj * kappa.c)(0, 0);
}

double rel_scale(const Eigen::Vector4cd& k) { return std::pow(k.norm(), 4); }

}  // namespace

BiMetric uniaxial_bimetric(double xi) {
  if (!(xi >= 0.0) || !std::isfinite(xi)) throw Error(ErrorCode::InvalidInput, "xi must be finite and >= 0");
  BiMetric b;
  b.xi = xi;
  b.U = Vec4(1, 0, 0, 0);
  b.X = Vec4(0, xi, 0, 0);
  b.eta = minkowski();
  b.eta_inv = minkowski_inverse();
  const double x2 = xi * xi;
  const Covec4 Ul = b.eta.lower(b.U), Xl = b.eta.lower(b.X);
  b.zeta = Metric4(b.eta.g + x2 / (1 + x2) * Ul.c * Ul.c.transpose() - Xl.c * Xl.c.transpose() / (1 + x2));
  b.zeta_inv = InverseMetric4(b.eta_inv.g - x2 * b.U.c * b.U.c.transpose() + b.X.c * b.X.c.transpose());
  b.theta = 1.0;
  return b;
}

FresnelContext make_context(const ConstitutiveDensity& chi, const Covec4& n0, std::optional<BiMetric> factorization) {
  FresnelContext ctx;
  ctx.chi = chi;
  ctx.n0 = n0;
  ctx.factorization = std::move(factorization);
  ctx.orientation = 1.0;
  double g = fresnel_eval(ctx, n0);
  if (std::abs(g) <= ctx.null_tol * std::pow(n0.c.norm(), 4) * std::max(1.0, std::pow(chi.t.norm(), 3)))
    throw Error(ErrorCode::DegenerateInput, "orientation covector is characteristic");
  ctx.orientation = g > 0 ? 1.0 : -1.0;
  return ctx;
}

FresnelContext uniaxial_context(double xi) {
  BiMetric b = uniaxial_bimetric(xi);
  ConstitutiveDensity chi = build_uniaxial_chi(xi, b.U, b.X);
  return make_context(chi, Covec4(1, 0, 0, 0), b);
}

GaugeVector GaugeVector::coordinate_max() {
  return GaugeVector([](const CCovec4& k) {
    int best = 0;
    for (int i = 1; i < 4; ++i)
      if (std::abs(k.c(i)) > std::abs(k.c(best))) best = i;
    if (k.c(best) == cd(0.0)) throw Error(ErrorCode::InvalidInput, "gauge vector undefined at k = 0");
    CVec4 z;
    z.c(best) = 1.0 / k.c(best);
    return z;
  });
}

GaugeVector GaugeVector::fixed(const Vec4& z) {
  return GaugeVector([z](const CCovec4& k) {
    cd kz = dot(k, z);
    if (std::abs(kz) == 0.0) throw Error(ErrorCode::InvalidInput, "k.z vanishes for the fixed gauge vector");
    return CVec4(z.c.cast<cd>() / kz);
  });
}

GaugeVector GaugeVector::meromorphic(double xi) {
  BiMetric b = uniaxial_bimetric(xi);
  return GaugeVector([b](const CCovec4& k) {
    // q_a = (k.X) U_a - (k.U) X_a
    const Covec4 Ul = b.eta.lower(b.U), Xl = b.eta.lower(b.X);
    CCovec4 q(dot(k, b.X) * Ul.c.cast<cd>() - dot(k, b.U) * Xl.c.cast<cd>());
    cd n = b.eta_inv(k, k);
    if (std::abs(n) == 0.0) throw Error(ErrorCode::NearNullCovector, "meromorphic gauge has a pole at eta^{-1}(k,k) = 0");
    const cd I(0.0, 1.0);
    return CVec4((b.eta_inv.raise(k).c + I * b.eta_inv.raise(q).c) / n);
  });
}

cd fresnel_eval(const FresnelContext& ctx, const CCovec4& k, const GaugeVector& kappa) {
  if (k.c.norm() == 0.0) return 0.0;
  return ctx.orientation * raw_fresnel(ctx.chi, k, kappa(k));
}

double fresnel_eval(const FresnelContext& ctx, const Covec4& k, const GaugeVector& kappa) {
  return fresnel_eval(ctx, complexify(k), kappa).real();
}

double fresnel_eval(const FresnelContext& ctx, const Covec4& k) {
  return fresnel_eval(ctx, k, GaugeVector::coordinate_max());
}

CMat4 second_adjugate_Q(const FresnelContext& ctx, const CCovec4& k) {
  // T^{a1 c1 b1} = chi^{a1 c1 b1 d1} k_d1, S^{a2 b2 d2} = chi^{a2 c2 b2 d2} k_c2
  std::array<cd, 64> T{}, S{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        cd t = 0.0, s = 0.0;
        for (int d = 0; d < 4; ++d) {
          t += ctx.chi(a, b, c, d) * k.c(d);
          s += ctx.chi(a, d, b, c) * k.c(d);
        }
        T[(a * 4 + b) * 4 + c] = t;
        S[(a * 4 + b) * 4 + c] = s;
      }

  // Q_ab = 1/8 eps_{b c1 a1 a2} eps_{a d2 b1 b2} T^{a1 c1 b1} S^{a2 b2 d2}
  CMat4 Q = CMat4::Zero();
  for (const auto& p1 : permutations4()) {
    const int b = p1.p[0], c1 = p1.p[1], a1 = p1.p[2], a2 = p1.p[3];
    for (const auto& p2 : permutations4()) {
      const int a = p2.p[0], d2 = p2.p[1], b1 = p2.p[2], b2 = p2.p[3];
      Q(a, b) += double(p1.sign * p2.sign) * T[(a1 * 4 + c1) * 4 + b1] * S[(a2 * 4 + b2) * 4 + d2];
    }
  }
  return ctx.orientation * Q / 8.0;
}

Mat4 second_adjugate_Q(const FresnelContext& ctx, const Covec4& k) {
  return second_adjugate_Q(ctx, complexify(k)).real();
}

CMat4 quasi_inverse(const FresnelContext& ctx, const CCovec4& k, const GaugeVector& kappa) {
  CVec4 kap = kappa(k);
  cd g = ctx.orientation * raw_fresnel(ctx.chi, k, kap);
  double scale = rel_scale(k.c) * std::max(1.0, std::pow(ctx.chi.t.norm(), 3));
  if (std::abs(g) <= ctx.null_tol * scale) throw Error(ErrorCode::NearNullCovector, "Fresnel polynomial vanishes at k");
  CMat4 pi = CMat4::Identity() - kap.c * k.c.transpose();  // pi(c, a)
  CMat4 Q = second_adjugate_Q(ctx, k);
  return pi.transpose() * Q * pi / g;
}

std::array<double, 5> restriction_coefficients(const FresnelContext& ctx, const Covec4& base, const Covec4& dir) {
  static const double ts[5] = {-2.0, -1.0, 0.0, 1.0, 2.0};
  Eigen::Matrix<double, 5, 5> V;
  Eigen::Matrix<double, 5, 1> y;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) V(i, j) = std::pow(ts[i], j);
    y(i) = fresnel_eval(ctx, Covec4(base.c + ts[i] * dir.c));
  }
  Eigen::Matrix<double, 5, 1> c = V.fullPivLu().solve(y);
  return {c(0), c(1), c(2), c(3), c(4)};
}

HyperbolicityReport is_hyperbolic(const FresnelContext& ctx, const Covec4& n, int trial_count, std::uint64_t seed) {
  const Covec4 nu(n.c / n.c.norm());
  if (std::abs(fresnel_eval(ctx, nu)) <= ctx.null_tol * std::max(1.0, std::pow(ctx.chi.t.norm(), 3)))
    throw Error(ErrorCode::DegenerateInput, "hyperbolicity direction is characteristic");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  HyperbolicityReport rep;
  for (int t = 0; t < trial_count; ++t) {
    Covec4 x(normal(rng), normal(rng), normal(rng), normal(rng));
    x.c /= x.c.norm();
    PolyRoots r = quartic_real_roots(restriction_coefficients(ctx, x, nu));
    for (std::size_t i = 0; i < r.roots.size(); ++i) {
      double rel = std::abs(r.roots[i].imag()) / (1.0 + std::abs(r.roots[i].real()));
      if (!r.real[i] && rel > rep.worst_imag) {
        rep.hyperbolic = false;
        rep.worst_imag = rel;
        rep.witness = x;
        rep.witness_root = r.roots[i];
      }
    }
  }
  return rep;
}

bool in_hyperbolicity_cone(const FresnelContext& ctx, const Covec4& k) {
  if (k.c.norm() == 0.0) return false;
  const Covec4 ku(k.c / k.c.norm());
  const Covec4 nu(ctx.n0.c / ctx.n0.c.norm());
  if (!(fresnel_eval(ctx, ku) > 0.0)) return false;
  PolyRoots r = quartic_real_roots(restriction_coefficients(ctx, ku, nu));
  if (r.degree < 4) return false;
  // a root of multiplicity m comes back smeared by about eps^{1/m}; k = n0 has m = 4
  for (const cd& z : r.roots)
    if (std::abs(z.imag()) > 1e-3 * (1.0 + std::abs(z.real())) || !(z.real() < 0.0)) return false;
  return true;
}

}  // namespace qei
