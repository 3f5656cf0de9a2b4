#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace qei {

using cd = std::complex<double>;
using Mat4 = Eigen::Matrix4d;
using CMat4 = Eigen::Matrix4cd;

// Contravariant components z^a.
template <class T>
struct BasicVec4 {
  Eigen::Matrix<T, 4, 1> c = Eigen::Matrix<T, 4, 1>::Zero();

  BasicVec4() = default;
  BasicVec4(T a0, T a1, T a2, T a3) { c << a0, a1, a2, a3; }
  explicit BasicVec4(const Eigen::Matrix<T, 4, 1>& m) : c(m) {}

  T operator[](int i) const { return c(i); }
  T& operator[](int i) { return c(i); }
};

// Covariant components k_a.
template <class T>
struct BasicCovec4 {
  Eigen::Matrix<T, 4, 1> c = Eigen::Matrix<T, 4, 1>::Zero();

  BasicCovec4() = default;
  BasicCovec4(T a0, T a1, T a2, T a3) { c << a0, a1, a2, a3; }
  explicit BasicCovec4(const Eigen::Matrix<T, 4, 1>& m) : c(m) {}

  T operator[](int i) const { return c(i); }
  T& operator[](int i) { return c(i); }
};

using Vec4 = BasicVec4<double>;
using Covec4 = BasicCovec4<double>;
using CVec4 = BasicVec4<cd>;
using CCovec4 = BasicCovec4<cd>;

inline CVec4 complexify(const Vec4& v) { return CVec4(v.c.cast<cd>()); }
inline CCovec4 complexify(const Covec4& k) { return CCovec4(k.c.cast<cd>()); }

// k_a z^a; only defined between opposite variances.
template <class A, class B>
auto dot(const BasicCovec4<A>& k, const BasicVec4<B>& z) {
  using R = decltype(A{} * B{});
  R s{};
  for (int i = 0; i < 4; ++i) s += k.c(i) * z.c(i);
  return s;
}

template <class A, class B>
auto dot(const BasicVec4<B>& z, const BasicCovec4<A>& k) {
  return dot(k, z);
}

struct Signature {
  int negative = 0;
  int zero = 0;
  int positive = 0;
  bool operator==(const Signature&) const = default;
};

// g_ab, acts on pairs of vectors.
struct Metric4 {
  Mat4 g = Mat4::Zero();

  Metric4() = default;
  explicit Metric4(const Mat4& m) : g(0.5 * (m + m.transpose())) {}

  template <class T>
  T operator()(const BasicVec4<T>& a, const BasicVec4<T>& b) const {
    return a.c.dot(g.cast<T>() * b.c);
  }
  double operator()(const Vec4& a, const Vec4& b) const { return a.c.dot(g * b.c); }
  Covec4 lower(const Vec4& v) const { return Covec4(g * v.c); }
  Signature signature(double tol = 1e-12) const;
};

// g^ab, acts on pairs of covectors.
struct InverseMetric4 {
  Mat4 g = Mat4::Zero();

  InverseMetric4() = default;
  explicit InverseMetric4(const Mat4& m) : g(0.5 * (m + m.transpose())) {}

  // bilinear, no conjugation
  template <class T>
  T operator()(const BasicCovec4<T>& a, const BasicCovec4<T>& b) const {
    return (a.c.transpose() * g.cast<T>() * b.c)(0, 0);
  }
  template <class T>
  BasicVec4<T> raise(const BasicCovec4<T>& k) const {
    return BasicVec4<T>(g.cast<T>() * k.c);
  }
  Signature signature(double tol = 1e-12) const;
};

Metric4 minkowski();
InverseMetric4 minkowski_inverse();

class Rank4 {
public:
  static constexpr int index(int a, int b, int c, int d) { return ((a * 4 + b) * 4 + c) * 4 + d; }

  double operator()(int a, int b, int c, int d) const { return v_[index(a, b, c, d)]; }
  double& operator()(int a, int b, int c, int d) { return v_[index(a, b, c, d)]; }

  const std::array<double, 256>& data() const { return v_; }
  double norm() const;
  Rank4& operator+=(const Rank4& o);

private:
  std::array<double, 256> v_{};
};

Rank4 operator+(Rank4 a, const Rank4& b);

// chi^{abcd}, a tensor density of weight +1.
struct ConstitutiveDensity {
  Rank4 t;
  int weight = 1;

  double operator()(int a, int b, int c, int d) const { return t(a, b, c, d); }
  bool has_pair_antisymmetry(double tol = 0.0) const;
  bool has_exchange_symmetry(double tol = 0.0) const;
};

struct Permutation {
  std::array<int, 4> p;
  int sign;
};

// All 24 permutations of (0,1,2,3) with their parities.
const std::array<Permutation, 24>& permutations4();

ConstitutiveDensity build_uniaxial_chi(double xi, const Vec4& U, const Vec4& X);
ConstitutiveDensity maxwell_chi();

// M^{ab}(k) = chi^{acbd} k_c k_d
template <class T>
Eigen::Matrix<T, 4, 4> principal_symbol(const ConstitutiveDensity& chi, const BasicCovec4<T>& k) {
  Eigen::Matrix<T, 4, 4> m = Eigen::Matrix<T, 4, 4>::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      T s{};
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) s += chi(a, c, b, d) * k.c(c) * k.c(d);
      m(a, b) = s;
    }
  return m;
}

struct Frame {
  Mat4 legs;   // column a holds e_a
  Mat4 duals;  // row a holds e^{*a}
  double density = 1.0;

  static Frame from_legs(const Mat4& legs);
  Vec4 leg(int a) const { return Vec4(Eigen::Vector4d(legs.col(a))); }
  Covec4 dual(int a) const { return Covec4(Eigen::Vector4d(duals.row(a).transpose())); }
};

struct ObserverFrame {
  double alpha = 0.0;
  double beta = 0.0;
  double aleph = 1.0;
  Frame frame;

  Vec4 velocity() const { return frame.leg(0); }
  Covec4 n() const { return frame.dual(0); }
};

// e = {aleph u, w / aleph, q, p}; see the README for the ordering.
ObserverFrame frame_from_worldline(double alpha, double beta, double aleph);

}  // namespace qei
