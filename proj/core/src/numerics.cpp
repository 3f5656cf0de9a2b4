#include "qei/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include <fftw3.h>
#include <gsl/gsl_integration.h>

#include "qei/errors.hpp"

namespace qei {

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// In-place complex DFT, sign = +1 uses exp(+i ...).
void dft(std::vector<cd>& data, int sign) {
  const int n = static_cast<int>(data.size());
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan = fftw_plan_dft_1d(n, buf, buf, sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
}

double angular_frequency(std::size_t m, std::size_t n, double h) {
  double k = m < n / 2 ? static_cast<double>(m) : static_cast<double>(m) - static_cast<double>(n);
  return 2.0 * kPi * k / (static_cast<double>(n) * h);
}

struct MappedRule {
  std::vector<double> x, w;
};

MappedRule mapped_rule(int n, double r, Mapping mapping) {
  GaussRule g = gauss_legendre(n, -1.0, 1.0);
  MappedRule out{g.x, g.w};
  if (mapping == Mapping::Linear) {
    for (int i = 0; i < n; ++i) {
      out.x[i] = r * g.x[i];
      out.w[i] = r * g.w[i];
    }
    return out;
  }
  // x = r atanh(t tanh(lam)) / lam clusters nodes near the origin
  const double lam = 2.0, th = std::tanh(lam);
  for (int i = 0; i < n; ++i) {
    double t = g.x[i];
    out.x[i] = r * std::atanh(t * th) / lam;
    out.w[i] = g.w[i] * r * th / (lam * (1.0 - t * t * th * th));
  }
  return out;
}

}  // namespace

bool PolyRoots::all_real() const {
  return std::all_of(real.begin(), real.end(), [](bool b) { return b; });
}

PolyRoots polynomial_roots(std::span<const double> coeffs, double tol) {
  double scale = 0.0;
  for (double c : coeffs) scale = std::max(scale, std::abs(c));
  int deg = static_cast<int>(coeffs.size()) - 1;
  while (deg > 0 && std::abs(coeffs[deg]) <= 1e-14 * scale) --deg;
  PolyRoots out;
  out.degree = deg;
  if (deg <= 0) return out;

  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -coeffs[i] / coeffs[deg];
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  for (int i = 0; i < deg; ++i) {
    cd r = es.eigenvalues()(i);
    out.roots.push_back(r);
    out.real.push_back(std::abs(r.imag()) <= tol * (1.0 + std::abs(r.real())));
  }
  return out;
}

PolyRoots quartic_real_roots(const std::array<double, 5>& coeffs, double tol) {
  return polynomial_roots(std::span<const double>(coeffs.data(), coeffs.size()), tol);
}

GaussRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "Gauss-Legendre needs at least one node");
  gsl_integration_glfixed_table* t = gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(n));
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) gsl_integration_glfixed_point(a, b, static_cast<std::size_t>(i), &r.x[i], &r.w[i], t);
  gsl_integration_glfixed_table_free(t);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int i, int j) { return r.x[i] < r.x[j]; });
  GaussRule sorted;
  for (int i : order) {
    sorted.x.push_back(r.x[i]);
    sorted.w.push_back(r.w[i]);
  }
  return sorted;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int n) {
  GaussRule g = gauss_legendre(n, a, b);
  CompensatedSum s;
  for (int i = 0; i < n; ++i) s.add(g.w[i] * f(g.x[i]));
  return s.sum;
}

void CompensatedSum::add(double x) {
  double y = x - comp;
  double t = sum + y;
  comp = (t - sum) - y;
  sum = t;
}

std::vector<cd> integrate_box(const QuadratureSpec& spec, int n_out,
                              const std::function<void(const std::array<double, 3>&, cd*)>& f) {
  std::array<MappedRule, 3> rules;
  for (int ax = 0; ax < 3; ++ax) {
    if (spec.nodes[ax] < 2) throw Error(ErrorCode::GridTooCoarse, "need at least two nodes per axis");
    rules[ax] = mapped_rule(spec.nodes[ax], spec.radius[ax], spec.mapping);
  }
  const int n0 = spec.nodes[0];

  // one compensated partial sum per outer slab, combined in slab order
  std::vector<std::vector<CompensatedSum>> slab(n0, std::vector<CompensatedSum>(2 * n_out));
  auto do_slab = [&](int i) {
    std::vector<cd> vals(n_out);
    std::array<double, 3> k{};
    k[0] = rules[0].x[i];
    for (int j = 0; j < spec.nodes[1]; ++j) {
      k[1] = rules[1].x[j];
      for (int l = 0; l < spec.nodes[2]; ++l) {
        k[2] = rules[2].x[l];
        double w = rules[0].w[i] * rules[1].w[j] * rules[2].w[l];
        f(k, vals.data());
        for (int o = 0; o < n_out; ++o) {
          slab[i][2 * o].add(w * vals[o].real());
          slab[i][2 * o + 1].add(w * vals[o].imag());
        }
      }
    }
  };

  int threads = 1;
  if (spec.reduction == Reduction::CompensatedParallel) {
    threads = spec.threads > 0 ? spec.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min(threads, n0);
  }
  if (threads <= 1) {
    for (int i = 0; i < n0; ++i) do_slab(i);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (int i = t; i < n0; i += threads) do_slab(i);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<cd> out(n_out);
  for (int o = 0; o < n_out; ++o) {
    CompensatedSum re, im;
    for (int i = 0; i < n0; ++i) {
      re.add(slab[i][2 * o].sum);
      im.add(slab[i][2 * o + 1].sum);
    }
    out[o] = cd(re.sum, im.sum);
  }
  return out;
}

CMat4 contour_residue(const std::function<CMat4(cd)>& fn, cd center, double radius, int nodes, double tol) {
  if (!(radius > 0.0) || nodes < 4) throw Error(ErrorCode::InvalidInput, "contour needs radius > 0 and >= 4 nodes");
  auto trapezoid = [&](int n) {
    CMat4 acc = CMat4::Zero();
    for (int j = 0; j < n; ++j) {
      cd e = std::polar(1.0, 2.0 * kPi * j / n);
      acc += fn(center + radius * e) * e;
    }
    return CMat4(acc * (radius / n));
  };
  CMat4 coarse = trapezoid(nodes);
  CMat4 fine = trapezoid(2 * nodes);
  double diff = (fine - coarse).norm();
  if (diff > tol * std::max(1.0, fine.norm()))
    throw Error(ErrorCode::NonConvergent, "contour residue changed by " + std::to_string(diff) + " under node doubling");
  return fine;
}

Spectrum fourier_transform(std::span<const double> samples, double t0, double h, int pad_factor) {
  if (samples.empty() || !(h > 0.0)) throw Error(ErrorCode::InvalidInput, "empty sample grid");
  const std::size_t n = next_pow2(samples.size() * static_cast<std::size_t>(std::max(1, pad_factor)));
  std::vector<cd> data(n, cd(0.0));
  for (std::size_t j = 0; j < samples.size(); ++j) data[j] = samples[j];
  dft(data, +1);
  Spectrum s;
  s.dtheta = 2.0 * kPi / (static_cast<double>(n) * h);
  s.theta.resize(n);
  s.value.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    // shift to ascending order: index m maps to frequency slot (m + n/2) mod n
    std::size_t src = (m + n / 2) % n;
    double th = angular_frequency(src, n, h);
    s.theta[m] = th;
    s.value[m] = h * std::polar(1.0, th * t0) * data[src];
  }
  return s;
}

std::vector<double> spectral_second_derivative(std::span<const double> samples, double h) {
  const std::size_t n = samples.size();
  if (n < 8 || !(h > 0.0)) throw Error(ErrorCode::InvalidInput, "need at least 8 samples and h > 0");
  double peak = 0.0;
  for (double x : samples) peak = std::max(peak, std::abs(x));
  std::vector<double> out(n, 0.0);
  if (peak == 0.0) return out;
  if (std::abs(samples.front()) > 1e-12 * peak || std::abs(samples.back()) > 1e-12 * peak)
    throw Error(ErrorCode::InvalidInput, "samples must vanish at both grid ends");

  const std::size_t np = 4 * n;
  std::vector<cd> data(np, cd(0.0));
  for (std::size_t j = 0; j < n; ++j) data[j] = samples[j];
  dft(data, -1);

  const double nyquist = kPi / h;
  double total = 0.0, tail = 0.0;
  for (std::size_t m = 0; m < np; ++m) {
    double th = angular_frequency(m, np, h);
    if (np % 2 == 0 && m == np / 2) th = 0.0;
    double e = std::pow(th, 4) * std::norm(data[m]);
    total += e;
    if (std::abs(th) > 0.75 * nyquist) tail += e;
    data[m] *= -th * th;
  }
  if (total > 0.0 && tail > 0.01 * total)
    throw Error(ErrorCode::GridTooCoarse, "spectral tail carries " + std::to_string(100.0 * tail / total) + "% of the energy");

  dft(data, +1);
  for (std::size_t j = 0; j < n; ++j) out[j] = data[j].real() / static_cast<double>(np);
  return out;
}

}  // namespace qei
