#pragma once

#include <array>
#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "qei/tensor_core.hpp"

namespace qei {

struct PolyRoots {
  std::vector<cd> roots;
  std::vector<bool> real;
  int degree = 0;

  bool all_real() const;
};

// Roots of sum_i c[i] t^i through companion-matrix eigenvalues. A root counts as
// real when |Im| <= tol (1 + |Re|). Vanishing leading coefficients lower the degree.
PolyRoots polynomial_roots(std::span<const double> coeffs, double tol = 1e-8);
PolyRoots quartic_real_roots(const std::array<double, 5>& coeffs, double tol = 1e-8);

struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

GaussRule gauss_legendre(int n, double a, double b);
double integrate_gl(const std::function<double(double)>& f, double a, double b, int n);

enum class Mapping { Linear, TanhRescaled };
enum class Reduction { Sequential, CompensatedParallel };

struct QuadratureSpec {
  std::array<int, 3> nodes{48, 48, 48};
  Mapping mapping = Mapping::TanhRescaled;
  std::array<double, 3> radius{8.0, 8.0, 8.0};
  Reduction reduction = Reduction::CompensatedParallel;
  int threads = 0;  // 0 picks hardware concurrency
};

// Product rule on [-r0,r0] x [-r1,r1] x [-r2,r2]. The integrand writes n_out
// values per node. Results are bit-identical for any thread count.
std::vector<cd> integrate_box(const QuadratureSpec& spec, int n_out,
                              const std::function<void(const std::array<double, 3>&, cd*)>& f);

// Kahan accumulator
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x);
};

// (1/2 pi i) times the contour integral on |z - center| = radius. Checked by node doubling.
CMat4 contour_residue(const std::function<CMat4(cd)>& fn, cd center, double radius, int nodes = 256,
                      double tol = 1e-8);

struct Spectrum {
  std::vector<double> theta;  // ascending
  std::vector<cd> value;
  double dtheta = 0.0;
};

// hat f(theta) = int f(t) exp(i theta t) dt for samples f(t0 + j h), zero padded
// to pad_factor times the sample count (rounded up to a power of two).
Spectrum fourier_transform(std::span<const double> samples, double t0, double h, int pad_factor = 4);

// g'' through transform, multiply by -theta^2, inverse; zero padding x4.
std::vector<double> spectral_second_derivative(std::span<const double> samples, double h);

}  // namespace qei
