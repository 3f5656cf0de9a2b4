#include "qei_verify/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "qei/causal.hpp"
#include "qei/energy_density.hpp"
#include "qei/errors.hpp"
#include "qei/fresnel.hpp"
#include "qei/negative_energy.hpp"
#include "qei/observer_norm.hpp"
#include "qei/qei_bounds.hpp"
#include "qei/uniaxial_medium.hpp"

namespace qei::verify {

namespace {

constexpr double kPi = std::numbers::pi;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Covec4 random_covector(std::mt19937_64& gen) {
  std::normal_distribution<double> n(0.0, 1.0);
  return Covec4(n(gen), n(gen), n(gen), n(gen));
}

// k with k_2^2 + k_3^2 >= 0.01 |k|^2, away from the optic axis
Eigen::Vector3d random_off_axis(std::mt19937_64& gen) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    Eigen::Vector3d k(n(gen), n(gen), n(gen));
    if (k(1) * k(1) + k(2) * k(2) >= 0.01 * k.squaredNorm()) return k;
  }
}

struct Worldline {
  double xi, alpha, beta;
};

// subluminal with a margin: xi^2 sinh^2 alpha sin^2 beta <= 0.8
Worldline random_subluminal(std::mt19937_64& gen, double xi_lo, double xi_hi) {
  std::uniform_real_distribution<double> ux(xi_lo, xi_hi), ua(0.0, 1.5), ub(0.0, kPi);
  for (;;) {
    Worldline w{ux(gen), ua(gen), ub(gen)};
    const double s = std::sinh(w.alpha) * std::sin(w.beta);
    if (w.xi * w.xi * s * s <= 0.8) return w;
  }
}

Check finish(Check c, Clock::time_point t0, double budget_s) {
  c.seconds = seconds_since(t0);
  if (budget_s > 0.0 && c.seconds > budget_s) {
    c.pass = false;
    c.detail += fmt::format(" runtime {:.2f} s over the {:.0f} s budget", c.seconds, budget_s);
  }
  return c;
}

Check diagnostic(std::string name, std::string detail, double residual = 0.0) {
  Check c;
  c.criterion = 0;
  c.name = std::move(name);
  c.pass = true;
  c.residual = residual;
  c.detail = std::move(detail);
  return c;
}

}  // namespace

std::vector<Check> check_fresnel_factorization(const Options& opts) {
  const auto t0 = Clock::now();
  std::mt19937_64 gen(opts.seed + 1);
  Check c{1, "fresnel_factorization"};
  c.tolerance = 1e-9;
  double worst = 0.0;
  for (double xi : {0.0, 0.5, 1.0, 2.0}) {
    const FresnelContext ctx = uniaxial_context(xi);
    const BiMetric& b = *ctx.factorization;
    for (int i = 0; i < 1000; ++i) {
      const Covec4 k = random_covector(gen);
      const double lhs = fresnel_eval(ctx, k);
      const double rhs = b.eta_inv(k, k) * b.zeta_inv(k, k);
      const double n2 = k.c.squaredNorm();
      worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + n2 * n2));
    }
  }
  c.residual = worst;
  c.pass = worst <= c.tolerance;
  c.detail = "xi in {0,0.5,1,2}, 1000 covectors each";
  return {finish(c, t0, 1.0)};
}

std::vector<Check> check_quasi_inverse(const Options& opts) {
  const auto t0 = Clock::now();
  std::mt19937_64 gen(opts.seed + 2);
  Check c{2, "quasi_inverse_identity"};
  c.tolerance = 1e-8;
  const double xis[] = {0.5, 1.0, 2.0};
  FresnelContext ctxs[] = {uniaxial_context(xis[0]), uniaxial_context(xis[1]), uniaxial_context(xis[2])};
  const GaugeVector gauge = GaugeVector::coordinate_max();
  double worst = 0.0;
  int used = 0;
  while (used < 500) {
    const FresnelContext& ctx = ctxs[used % 3];
    const BiMetric& b = *ctx.factorization;
    const Covec4 k = random_covector(gen);
    const double n2 = k.c.squaredNorm();
    if (std::abs(b.eta_inv(k, k)) < 1e-3 * n2 || std::abs(b.zeta_inv(k, k)) < 1e-3 * n2) continue;
    const CCovec4 kc = complexify(k);
    const CMat4 E = quasi_inverse(ctx, kc, gauge);
    const CMat4 M = principal_symbol(ctx.chi, kc);
    const CMat4 pi = CMat4::Identity() - gauge(kc).c * kc.c.transpose();
    worst = std::max(worst, (M * E - pi).norm() / pi.norm());
    ++used;
  }
  c.residual = worst;
  c.pass = worst <= c.tolerance;
  c.detail = "500 non-characteristic covectors, xi in {0.5,1,2}";
  return {finish(c, t0, 1.0)};
}

std::vector<Check> check_residues(const Options& opts) {
  const auto t0 = Clock::now();
  std::mt19937_64 gen(opts.seed + 3);
  Check c{3, "mode_residues"};
  c.tolerance = 1e-6;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const ResidueResiduals r = residue_check(1.0, random_off_axis(gen));
    worst = std::max({worst, r.ordinary, r.extraordinary});
  }
  c.residual = worst;
  c.pass = worst <= c.tolerance;
  c.detail = "xi = 1, 100 off-axis momenta, both poles";
  return {finish(c, t0, 5.0)};
}

std::vector<Check> check_polarizations(const Options& opts) {
  const auto t0 = Clock::now();
  std::mt19937_64 gen(opts.seed + 4);
  Check c{4, "polarization_contract"};
  c.tolerance = 1e-10;
  double worst = 0.0;
  const double xis[] = {0.5, 1.0, 2.0};
  for (int i = 0; i < 1000; ++i) {
    const double xi = xis[i % 3];
    const BiMetric b = uniaxial_bimetric(xi);
    const ConstitutiveDensity chi = build_uniaxial_chi(xi, b.U, b.X);
    const ModeData m = mode_data(xi, random_off_axis(gen));
    const Covec4 k = m.k(), kt = m.k_tilde();
    const double nk = k.c.norm(), nkt = kt.c.norm();
    const double terms[] = {
        std::abs(b.eta_inv(m.v, m.v) - 1.0),
        std::abs(b.zeta_inv(m.v_tilde, m.v_tilde) - 1.0),
        std::abs(dot(m.v, b.U)),
        std::abs(dot(m.v_tilde, b.U)),
        std::abs(b.eta_inv(k, m.v)) / nk,
        std::abs(b.zeta_inv(kt, m.v_tilde)) / nkt,
        (principal_symbol(chi, k) * m.v.c).norm() / (nk * nk),
        (principal_symbol(chi, kt) * m.v_tilde.c).norm() / (nkt * nkt),
    };
    for (double t : terms) worst = std::max(worst, t);
  }
  c.residual = worst;
  c.pass = worst <= c.tolerance;
  c.detail = "1000 momenta; contractions scaled by |k|";
  return {finish(c, t0, 0.0)};
}

std::vector<Check> check_energy_matrices(const Options& opts) {
  (void)opts;
  const auto t0 = Clock::now();
  Check c{5, "energy_matrices_swec"};
  c.tolerance = 1e-10;
  double worst = 0.0;
  for (double xi : {0.5, 1.0})
    for (int i = 0; i < 20; ++i)
      for (int j = 0; j < 20; ++j) {
        const double alpha = 2.5 * i / 19.0, beta = kPi * j / 19.0;
        const double s2 = std::pow(std::sinh(alpha) * std::sin(beta), 2);
        const EnergyMatrices m = energy_matrices(xi, alpha, beta);
        const Mat3 x1 = Eigen::Vector3d(1.0, 1.0 - xi * xi * s2, 1.0).asDiagonal();
        const Mat3 x2 = Eigen::Vector3d(1.0 + xi * xi * (1.0 + s2), 1.0, 1.0).asDiagonal();
        worst = std::max(worst, (m.X1 - x1).cwiseAbs().maxCoeff() / std::max(1.0, x1.norm()));
        worst = std::max(worst, (m.X2 - x2).cwiseAbs().maxCoeff() / std::max(1.0, x2.norm()));
      }
  double worst_boundary = 0.0;
  for (double xi : {0.5, 1.0, 2.0})
    for (double beta : {kPi / 2, kPi / 3}) {
      double lo = 0.0, hi = std::asinh(2.0 / (xi * std::sin(beta)));
      if (!swec_check(xi, lo, beta).holds || swec_check(xi, hi, beta).holds) {
        worst_boundary = 1.0;
        continue;
      }
      while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (swec_check(xi, mid, beta).holds ? lo : hi) = mid;
      }
      worst_boundary = std::max(worst_boundary, std::abs(std::sinh(lo) * std::sin(beta) - 1.0 / xi));
    }
  c.residual = worst;
  c.pass = worst <= c.tolerance && worst_boundary <= 1e-6;
  c.detail = fmt::format("20x20x2 grid; sWEC flip |sinh a sin b - 1/xi| = {:.2e} (tol 1e-06)", worst_boundary);
  return {finish(c, t0, 0.0)};
}

std::vector<Check> check_c_coefficient(const Options& opts) {
  (void)opts;
  const auto t0 = Clock::now();
  Check c{6, "c_coefficient"};
  c.tolerance = 1e-12;
  double limits = 0.0, frame = 0.0;
  for (int i = 0; i <= 10; ++i)
    for (int j = 0; j <= 10; ++j) {
      const double alpha = 0.2 * i, beta = kPi * j / 10.0, xi = 0.2 * i;
      limits = std::max(limits, std::abs(C_coefficient(0.0, alpha, beta) - 2.0));
      limits = std::max(limits, std::abs(C_coefficient(xi, 0.0, beta) - (2.0 + xi * xi)) / (2.0 + xi * xi));
    }
  for (double xi : {0.3, 1.0, 1.7})
    for (int i = 0; i <= 10; ++i)
      for (int j = 0; j <= 10; ++j) {
        const double alpha = 0.15 * i, beta = kPi * j / 10.0;
        if (!is_subluminal(xi, alpha, beta)) continue;
        const double cc = C_coefficient(xi, alpha, beta);
        frame = std::max(frame, std::abs(C_from_frame(xi, alpha, beta) - cc) / cc);
      }
  c.residual = limits;
  c.pass = limits <= 1e-12 && frame <= 1e-10;
  c.detail = fmt::format("limits xi->0 and alpha=0; frame reconstruction {:.2e} (tol 1e-10)", frame);
  return {finish(c, t0, 0.0)};
}

std::vector<Check> check_rest_frame_bound(const Options& opts) {
  (void)opts;
  const auto t0 = Clock::now();
  Check c{7, "rest_frame_bound"};
  c.tolerance = 1e-12;
  // sigma with ||g''||^2 = 3 sqrt(pi) / (4 sigma^3) = 1
  const GaussianSmearing unit{std::cbrt(0.75 * std::sqrt(kPi)), 0.0};
  double worst = 0.0;
  for (double xi : {0.0, 0.5, 1.0, 2.0}) {
    const double b = qei_bound(xi, 0.0, 0.0, {NormKind::SR, 1.0}, unit).bound;
    const double want = -(2.0 + xi * xi) / (16.0 * kPi * kPi);
    worst = std::max(worst, std::abs(b - want) / std::abs(want));
  }
  const double maxwell = qei_bound(0.0, 0.0, 0.0, {NormKind::SR, 1.0}, GaussianSmearing{1.0, 0.0}).bound;
  const double want = -3.0 * std::sqrt(kPi) / (32.0 * kPi * kPi);
  const double maxwell_err = std::abs(maxwell - want);
  c.residual = worst;
  c.pass = worst <= 1e-12 && maxwell_err <= 1e-10;
  c.detail = fmt::format("Gaussian sigma=1, xi=0: {:.8f} vs {:.8f} (|diff| {:.1e}, tol 1e-10)", maxwell, want,
                         maxwell_err);
  return {finish(c, t0, 0.0)};
}

std::vector<Check> check_pipeline(const Options& opts) {
  const auto t0 = Clock::now();
  std::mt19937_64 gen(opts.seed + 8);
  std::uniform_real_distribution<double> usig(0.5, 2.0);
  Check c{8, "pipeline_equivalence"};
  c.tolerance = 1e-2;
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const Worldline w = random_subluminal(gen, 0.0, 1.5);
    const GaussianSmearing g{usig(gen), 0.0};
    const double closed = qei_bound(w.xi, w.alpha, w.beta, {NormKind::SR, 1.0}, g).bound;
    const double numeric = qei_bound_pipeline(w.xi, w.alpha, w.beta, 1.0, sample_gaussian(g));
    worst = std::max(worst, std::abs(numeric - closed) / std::abs(closed));
  }
  c.residual = worst;
  c.pass = worst <= c.tolerance;
  c.detail = "10 subluminal worldlines, g sampled on [-8s,8s] with h = s/64";
  return {finish(c, t0, 10.0)};
}

std::vector<Check> check_appendix_a(const Options& opts) {
  (void)opts;
  const auto t0 = Clock::now();
  Check c{9, "appendix_a_identity"};
  c.tolerance = 1e-4;
  const double xi = 1.0;
  const Vec4 rest(1, 0, 0, 0);
  const Vec4 boost(std::cosh(1.0), std::sinh(1.0), 0, 0);
  const Vec4 other(1.0, 0.3, -0.2, 0.1);
  double worst = 0.0;
  for (MetricChoice which : {MetricChoice::Eta, MetricChoice::Zeta})
    for (const Vec4& u : {rest, boost})
      for (const Vec4& v : {u, other}) {
        const AppendixAResult r = appendix_a_oracle(u, v, 1.0, xi, which);
        worst = std::max(worst, r.rel_error);
      }
  const AppendixAResult odd = appendix_a_oracle(rest, Vec4(0, 1, 0, 0), 1.0, xi, MetricChoice::Eta);
  c.residual = worst;
  c.pass = worst <= c.tolerance && odd.rel_error <= 1e-12;
  c.detail = fmt::format("eta and zeta cones, u in {{rest, alpha=1}}; odd case |lhs| = {:.1e}", std::abs(odd.lhs));
  return {finish(c, t0, 30.0)};
}

std::vector<Check> check_normalization(const Options& opts) {
  const auto t0 = Clock::now();
  std::mt19937_64 gen(opts.seed + 10);
  Check c{10, "normalization_series"};
  c.tolerance = 3.5;
  const double xis[] = {0.2, 0.1, 0.05};
  double min_order = 1e300, max_scaled = 0.0;
  double min_order_fixed = 1e300, max_scaled_fixed = 0.0;
  for (int i = 0; i < 10; ++i) {
    const Worldline w = random_subluminal(gen, 0.2, 0.2);
    double err[3], err_fixed[3];
    for (int j = 0; j < 3; ++j) {
      const double xi = xis[j];
      const double s2 = std::pow(std::sinh(w.alpha) * std::sin(w.beta), 2);
      const double num = aleph_uc(xi, w.alpha, w.beta, NormMode::Numeric).aleph;
      const double ser = aleph_uc(xi, w.alpha, w.beta, NormMode::Series).aleph;
      err[j] = std::abs(num - ser);
      err_fixed[j] = std::abs(num - (1.0 + xi * xi / 4.0 * (1.0 + s2)));
      max_scaled = std::max(max_scaled, err[j] / std::pow(xi, 4));
      max_scaled_fixed = std::max(max_scaled_fixed, err_fixed[j] / std::pow(xi, 4));
    }
    for (int j = 0; j < 2; ++j) {
      min_order = std::min(min_order, std::log2(err[j] / err[j + 1]));
      min_order_fixed = std::min(min_order_fixed, std::log2(err_fixed[j] / err_fixed[j + 1]));
    }
  }
  c.residual = min_order;
  c.pass = min_order >= c.tolerance;
  c.detail = fmt::format("min observed order {:.3f}, max |num-series|/xi^4 = {:.3g}", min_order, max_scaled);
  std::vector<Check> out{finish(c, t0, 10.0)};
  if (opts.diagnostics)
    out.push_back(diagnostic("normalization_series_plus_sign",
                             fmt::format("1 + xi^2/4 (1 + s^2): min order {:.3f}, max |num-series|/xi^4 = {:.3g}",
                                         min_order_fixed, max_scaled_fixed),
                             min_order_fixed));
  return out;
}

std::vector<Check> check_counterexample(const Options& opts) {
  const auto t0 = Clock::now();
  std::mt19937_64 gen(opts.seed + 11);
  Check c{11, "counterexample"};
  c.tolerance = 1e-8;
  const WavePacketSpec main{1.0, std::asinh(2.0), kPi / 2, 1.0};
  std::vector<WavePacketSpec> specs{main};
  std::uniform_real_distribution<double> ut(0.5, 2.0), ua(0.0, 2.0), ub(0.0, kPi), ux(0.0, 2.0);
  for (int i = 0; i < 4; ++i) specs.push_back({ut(gen), ua(gen), ub(gen), ux(gen)});

  double field_err = 0.0, rho_err = 0.0, ratio_lo = 1e300, ratio_hi = -1e300;
  for (const WavePacketSpec& s : specs) {
    const CField6 fq = field_strength_origin(s, FieldMethod::Quadrature, opts.counterexample_nodes);
    const CField6 fc = field_strength_origin(s, FieldMethod::ClosedForm);
    field_err = std::max(field_err, (fq - fc).cwiseAbs().maxCoeff() / fc.cwiseAbs().maxCoeff());
    const double rho = rho_origin(s);
    const double ref = rho_origin_reference(s);
    rho_err = std::max(rho_err, std::abs(rho - ref) / std::abs(ref));
    ratio_lo = std::min(ratio_lo, rho / ref);
    ratio_hi = std::max(ratio_hi, rho / ref);
  }

  const double rho_main = rho_origin(main);
  const GaussianSmearing bump{0.1 * main.tau0, 0.0};
  const double single = n_particle_energy(main, 1, bump, opts.counterexample_nodes);
  bool decreasing = single < 0.0;
  double prev = single;
  for (int n = 2; n <= 5; ++n) {
    const double e = n_particle_energy(main, n, bump, opts.counterexample_nodes);
    decreasing = decreasing && e < prev;
    prev = e;
  }

  c.residual = rho_err;
  c.pass = field_err <= 1e-4 && rho_err <= 1e-8 && std::abs(rho_main + 12.0) <= 12.0 * 1e-8 && decreasing;
  c.detail = fmt::format("F(0) quadrature err {:.2e} (tol 1e-04); rho(0) at xi=1, sinh a=2, b=pi/2: {:.10g} (reference -12); "
                         "n-particle strictly decreasing: {} (single {:.4g})",
                         field_err, rho_main, decreasing ? "yes" : "no", single);
  std::vector<Check> out{finish(c, t0, 60.0)};
  if (opts.diagnostics)
    out.push_back(diagnostic("counterexample_rho_ratio",
                             fmt::format("rho(0) / reference closed form in [{:.12g}, {:.12g}] over {} packets",
                                         ratio_lo, ratio_hi, specs.size()),
                             ratio_hi - ratio_lo));
  return out;
}

std::vector<Check> check_kernel_positivity(const Options& opts) {
  const auto t0 = Clock::now();
  std::mt19937_64 gen(opts.seed + 12);
  Check c{12, "kernel_positivity"};
  c.tolerance = 1e-12;
  double min_r = 1e300;
  for (int f = 0; f < 10; ++f) {
    const Worldline w = random_subluminal(gen, 1.0, 1.0);
    const ObserverFrame of = frame_from_worldline(w.alpha, w.beta, 1.0);
    for (int i = 0; i < 100; ++i) {
      const Eigen::Vector3d k = random_off_axis(gen);
      min_r = std::min(min_r, rs_kernel_diagonal(w.xi, k, of) / k.norm());
    }
  }
  const double rest = rs_kernel_diagonal(1.0, Eigen::Vector3d(0, 0, 1), frame_from_worldline(0.0, 0.0, 1.0));
  c.residual = std::abs(rest - 0.5);
  c.pass = min_r > 0.0 && c.residual <= c.tolerance;
  c.detail = fmt::format("min r/|k| over 1000 momenta in 10 frames = {:.4g}", min_r);
  return {finish(c, t0, 0.0)};
}

bool is_known_suite(std::string_view s) {
  return s == "all" || s == "fresnel" || s == "residues" || s == "appendix_a" || s == "swec" || s == "qei" ||
         s == "counterexample" || s == "normalization";
}

std::vector<Check> run_suite(std::string_view suite, const Options& opts) {
  using Fn = std::vector<Check> (*)(const Options&);
  std::vector<Fn> fns;
  if (suite == "all")
    fns = {check_fresnel_factorization, check_quasi_inverse, check_residues,  check_polarizations,
           check_energy_matrices,       check_c_coefficient, check_rest_frame_bound, check_pipeline,
           check_appendix_a,            check_normalization, check_counterexample,   check_kernel_positivity};
  else if (suite == "fresnel")
    fns = {check_fresnel_factorization, check_quasi_inverse};
  else if (suite == "residues")
    fns = {check_residues, check_polarizations};
  else if (suite == "swec")
    fns = {check_energy_matrices};
  else if (suite == "qei")
    fns = {check_c_coefficient, check_rest_frame_bound, check_pipeline};
  else if (suite == "appendix_a")
    fns = {check_appendix_a};
  else if (suite == "normalization")
    fns = {check_normalization};
  else if (suite == "counterexample")
    fns = {check_counterexample, check_kernel_positivity};
  else
    throw Error(ErrorCode::InvalidInput, fmt::format("unknown suite '{}'", suite));

  std::vector<Check> out;
  for (Fn fn : fns) {
    try {
      for (Check& c : fn(opts)) out.push_back(std::move(c));
    } catch (const std::exception& e) {
      out.push_back(Check{0, "exception", false, 0.0, 0.0, 0.0, e.what()});
    }
  }
  return out;
}

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string format_line(const Check& c) {
  if (c.criterion == 0 && c.pass) return fmt::format("[INFO] {:<28} {}", c.name, c.detail);
  return fmt::format("[{}] {:02d} {:<25} residual={:.3e} tol={:.1e} ({:.2f} s) {}", c.pass ? "PASS" : "FAIL",
                     c.criterion, c.name, c.residual, c.tolerance, c.seconds, c.detail);
}

}  // namespace qei::verify
