#include "qei/tensor_core.hpp"

#include <algorithm>
#include <cmath>

#include "qei/errors.hpp"

namespace qei {

namespace {

Signature signature_of(const Mat4& g, double tol) {
  Eigen::SelfAdjointEigenSolver<Mat4> es(g);
  const auto& ev = es.eigenvalues();
  double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  Signature s;
  for (int i = 0; i < 4; ++i) {
    if (std::abs(ev(i)) <= tol * scale) ++s.zero;
    else if (ev(i) < 0) ++s.negative;
    else ++s.positive;
  }
  return s;
}

std::array<Permutation, 24> make_permutations() {
  std::array<Permutation, 24> out{};
  std::array<int, 4> p{0, 1, 2, 3};
  int n = 0;
  do {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[i] > p[j]) ++inv;
    out[n++] = Permutation{p, inv % 2 == 0 ? 1 : -1};
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

Signature Metric4::signature(double tol) const { return signature_of(g, tol); }
Signature InverseMetric4::signature(double tol) const { return signature_of(g, tol); }

Metric4 minkowski() { return Metric4(Eigen::Vector4d(-1, 1, 1, 1).asDiagonal().toDenseMatrix()); }
InverseMetric4 minkowski_inverse() {
  return InverseMetric4(Eigen::Vector4d(-1, 1, 1, 1).asDiagonal().toDenseMatrix());
}

double Rank4::norm() const {
  double s = 0;
  for (double x : v_) s += x * x;
  return std::sqrt(s);
}

Rank4& Rank4::operator+=(const Rank4& o) {
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

Rank4 operator+(Rank4 a, const Rank4& b) { return a += b; }

bool ConstitutiveDensity::has_pair_antisymmetry(double tol) const {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double x = t(a, b, c, d);
          if (std::abs(x + t(b, a, c, d)) > tol || std::abs(x + t(a, b, d, c)) > tol) return false;
        }
  return true;
}

bool ConstitutiveDensity::has_exchange_symmetry(double tol) const {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          if (std::abs(t(a, b, c, d) - t(c, d, a, b)) > tol) return false;
  return true;
}

const std::array<Permutation, 24>& permutations4() {
  static const std::array<Permutation, 24> perms = make_permutations();
  return perms;
}

ConstitutiveDensity build_uniaxial_chi(double xi, const Vec4& U, const Vec4& X) {
  if (!(xi >= 0.0) || !std::isfinite(xi)) throw Error(ErrorCode::InvalidInput, "xi must be finite and >= 0");
  const Metric4 eta = minkowski();
  const double tol = 1e-12;
  if (std::abs(eta(U, U) + 1.0) > tol) throw Error(ErrorCode::InvalidInput, "U must satisfy eta(U,U) = -1");
  if (std::abs(eta(X, U)) > tol) throw Error(ErrorCode::InvalidInput, "X must be eta-orthogonal to U");
  if (std::abs(eta(X, X) - xi * xi) > tol * std::max(1.0, xi * xi))
    throw Error(ErrorCode::InvalidInput, "X must satisfy eta(X,X) = xi^2");

  const Mat4 ei = minkowski_inverse().g;
  ConstitutiveDensity chi;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double metric = ei(c, a) * ei(b, d) - ei(c, b) * ei(a, d);
          double axis = (X[a] * U[b] - X[b] * U[a]) * (X[d] * U[c] - X[c] * U[d]);
          chi.t(a, b, c, d) = metric + axis;
        }
  return chi;
}

ConstitutiveDensity maxwell_chi() { return build_uniaxial_chi(0.0, Vec4(1, 0, 0, 0), Vec4()); }

Frame Frame::from_legs(const Mat4& legs) {
  Frame f;
  f.legs = legs;
  f.duals = legs.inverse();
  f.density = legs.determinant();
  return f;
}

ObserverFrame frame_from_worldline(double alpha, double beta, double aleph) {
  if (!(aleph > 0.0)) throw Error(ErrorCode::InvalidInput, "aleph must be positive");
  const double ch = std::cosh(alpha), sh = std::sinh(alpha);
  const double cb = std::cos(beta), sb = std::sin(beta);
  Mat4 legs;
  legs.col(0) << aleph * ch, aleph * sh * cb, 0.0, aleph * sh * sb;
  legs.col(1) << sh / aleph, ch * cb / aleph, 0.0, ch * sb / aleph;
  legs.col(2) << 0.0, 0.0, 1.0, 0.0;
  legs.col(3) << 0.0, -sb, 0.0, cb;
  ObserverFrame of;
  of.alpha = alpha;
  of.beta = beta;
  of.aleph = aleph;
  of.frame = Frame::from_legs(legs);
  // n is known in closed form; avoid inversion round-off in the leg that matters most
  of.frame.duals.row(0) << ch / aleph, -sh * cb / aleph, 0.0, -sh * sb / aleph;
  return of;
}

}  // namespace qei
