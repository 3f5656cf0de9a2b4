#include "qei/energy_density.hpp"

#include <cmath>

#include "qei/errors.hpp"
#include "qei/fresnel.hpp"

namespace qei {

namespace {

template <class F6, class M>
M two_form(const F6& f) {
  M F = M::Zero();
  for (int i = 0; i < 6; ++i) {
    auto [a, b] = kFormPairs[i];
    F(a, b) = f(i);
    F(b, a) = -f(i);
  }
  return F;
}

// out^{efgh} = t^{abcd} L_a^e L_b^f L_c^g L_d^h, one slot at a time
Rank4 transform_all(const Rank4& t, const Mat4& L) {
  Rank4 cur = t;
  for (int slot = 0; slot < 4; ++slot) {
    Rank4 next;
    for (int i0 = 0; i0 < 4; ++i0)
      for (int i1 = 0; i1 < 4; ++i1)
        for (int i2 = 0; i2 < 4; ++i2)
          for (int i3 = 0; i3 < 4; ++i3) {
            int idx[4] = {i0, i1, i2, i3};
            const int out = idx[slot];
            double s = 0.0;
            for (int a = 0; a < 4; ++a) {
              idx[slot] = a;
              s += cur(idx[0], idx[1], idx[2], idx[3]) * L(a, out);
            }
            next(i0, i1, i2, i3) = s;
          }
    cur = next;
  }
  return cur;
}

Eigen::Vector3d sym_eigenvalues(const Mat3& X) {
  Eigen::SelfAdjointEigenSolver<Mat3> es;
  es.computeDirect(X, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace

Mat4 to_two_form(const Field6& f) { return two_form<Field6, Mat4>(f); }
CMat4 to_two_form(const CField6& f) { return two_form<CField6, CMat4>(f); }

Field6 from_two_form(const Mat4& F) {
  Field6 f;
  for (int i = 0; i < 6; ++i) f(i) = F(kFormPairs[i].first, kFormPairs[i].second);
  return f;
}

double pair(const Field6& bivector, const Field6& form) { return 2.0 * bivector.dot(form); }

Chi12 chi12_split(const ConstitutiveDensity& chi, const Frame& frame) {
  const Eigen::Vector4d u = frame.legs.col(0);
  const Eigen::Vector4d n = frame.duals.row(0).transpose();
  const Mat4 lam = Mat4::Identity() - n * u.transpose();  // lam(a, b) = delta_a^b - n_a u^b

  Chi12 out;
  out.chi1 = transform_all(chi.t, lam);

  // chi2^{efgh} = -4 chi^{abcd} n_a u^e lam_b^f n_c u^g lam_d^h
  Eigen::Matrix4d P = Mat4::Zero();  // P(b, d) = chi^{abcd} n_a n_c
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) P(b, d) += chi(a, b, c, d) * n(a) * n(c);
  const Mat4 Pl = lam.transpose() * P * lam;  // (f, h)
  for (int e = 0; e < 4; ++e)
    for (int f = 0; f < 4; ++f)
      for (int g = 0; g < 4; ++g)
        for (int h = 0; h < 4; ++h) out.chi2(e, f, g, h) = -4.0 * u(e) * u(g) * Pl(f, h);
  return out;
}

double rho_direct(const ConstitutiveDensity& chi, const Frame& frame, const Field6& f) {
  return classical_rho(chi, frame, CField6(f.cast<cd>()), true);
}

double rho_split(const Chi12& split, const Frame& frame, const Field6& f) {
  const Mat4 F = to_two_form(f);
  const Rank4 sum = split.chi1 + split.chi2;
  double s = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) s += sum(a, b, c, d) * F(a, b) * F(c, d);
  return s / (8.0 * frame.density);
}

EMBasis em_basis(double alpha, double beta) {
  const double ch = std::cosh(alpha), sh = std::sinh(alpha);
  const double cb = std::cos(beta), sb = std::sin(beta);
  const double C = 1.0 + sh * sh * sb * sb;
  const double rc = 1.0 / std::sqrt(C);
  EMBasis B;
  B.row(0) << 0, -sh * sb, 0, 1 + (ch - 1) * sb * sb, 0, (1 - ch) * cb * sb;
  B.row(1) << sh * sb, 0, -sh * cb, 0, ch, 0;
  B.row(2) << 0, sh * cb, 0, (1 - ch) * cb * sb, 0, 1 + (ch - 1) * cb * cb;
  B.row(3) << rc * C, 0, -rc * sh * sh * cb * sb, 0, rc * ch * sh * sb, 0;
  B.row(4) << 0, ch, 0, -sh * sb, 0, sh * cb;
  B.row(5) << 0, 0, -rc * ch, 0, rc * sh * cb, 0;
  return B;
}

const Mat3& EnergyMatrices::Y1_or_throw() const {
  if (!Y1) {
    Eigen::Vector3d ev = sym_eigenvalues(X1);
    throw Error(ErrorCode::NotPositive, "X1 is not positive semi-definite", {ev(0), ev(1), ev(2)});
  }
  return *Y1;
}

const Mat3& EnergyMatrices::Y2_or_throw() const {
  if (!Y2) {
    Eigen::Vector3d ev = sym_eigenvalues(X2);
    throw Error(ErrorCode::NotPositive, "X2 is not positive semi-definite", {ev(0), ev(1), ev(2)});
  }
  return *Y2;
}

EnergyMatrices energy_matrices(double xi, double alpha, double beta) {
  const BiMetric b = uniaxial_bimetric(xi);
  const ConstitutiveDensity chi = build_uniaxial_chi(xi, b.U, b.X);
  const ObserverFrame of = frame_from_worldline(alpha, beta, 1.0);
  const Chi12 split = chi12_split(chi, of.frame);

  EnergyMatrices m;
  m.basis = em_basis(alpha, beta);
  // columns of the inverse are 2-forms dual to the basis: b_A^{ab} F^(B)_ab = 2 delta_AB
  const EMBasis dual = m.basis.inverse();
  std::array<Mat4, 6> forms;
  for (int J = 0; J < 6; ++J) forms[J] = to_two_form(Field6(dual.col(J)));

  auto contract = [](const Rank4& t, const Mat4& F, const Mat4& G) {
    double s = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int bb = 0; bb < 4; ++bb)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) s += t(a, bb, c, d) * F(a, bb) * G(c, d);
    return s;
  };
  for (int A = 0; A < 3; ++A)
    for (int B = 0; B < 3; ++B) {
      m.X1(A, B) = contract(split.chi1, forms[A], forms[B]) / 4.0;
      m.X2(A, B) = contract(split.chi2, forms[3 + A], forms[3 + B]) / 4.0;
    }
  m.X1 = 0.5 * (m.X1 + m.X1.transpose()).eval();
  m.X2 = 0.5 * (m.X2 + m.X2.transpose()).eval();
  try {
    m.Y1 = principal_sqrt(m.X1);
  } catch (const Error&) {
  }
  try {
    m.Y2 = principal_sqrt(m.X2);
  } catch (const Error&) {
  }
  return m;
}

Mat3 principal_sqrt(const Mat3& X, double rel_tol) {
  Eigen::SelfAdjointEigenSolver<Mat3> es;
  es.computeDirect(X);
  Eigen::Vector3d ev = es.eigenvalues();
  const double tol = rel_tol * std::max(1.0, std::abs(X.trace()));
  if (ev.minCoeff() < -tol) throw Error(ErrorCode::NotPositive, "matrix is indefinite", {ev(0), ev(1), ev(2)});
  Eigen::Vector3d root = ev.cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * root.asDiagonal() * es.eigenvectors().transpose();
}

SwecVerdict swec_check(double xi, double alpha, double beta, std::optional<double> tol) {
  const EnergyMatrices m = energy_matrices(xi, alpha, beta);
  SwecVerdict v;
  v.eig_X1 = sym_eigenvalues(m.X1);
  v.eig_X2 = sym_eigenvalues(m.X2);
  const double t1 = tol ? *tol : 1e-12 * std::abs(m.X1.trace());
  const double t2 = tol ? *tol : 1e-12 * std::abs(m.X2.trace());
  v.tol = std::max(t1, t2);
  const double m1 = v.eig_X1.minCoeff(), m2 = v.eig_X2.minCoeff();
  v.holds = m1 > t1 && m2 > t2;
  v.boundary = std::abs(m1) <= t1 || std::abs(m2) <= t2;
  const double s = std::sinh(alpha) * std::sin(beta);
  v.closed_form_holds = xi * xi * s * s < 1.0;
  return v;
}

double classical_rho(const ConstitutiveDensity& chi, const Frame& frame, const Field6& f) {
  return rho_split(chi12_split(chi, frame), frame, f);
}

double classical_rho(const ConstitutiveDensity& chi, const Frame& frame, const CField6& f, bool complex_mode) {
  if (!complex_mode) return classical_rho(chi, frame, Field6(f.real()));
  const CMat4 F = to_two_form(f);
  const CMat4 Fb = F.conjugate();
  const Eigen::Vector4d u = frame.legs.col(0);
  const Eigen::Vector4d n = frame.duals.row(0).transpose();
  // uF_b = u^e conj(F)_eb
  const Eigen::Vector4cd uF = Fb.transpose() * u.cast<cd>();
  cd s = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          const double x = chi(a, b, c, d);
          if (x == 0.0) continue;
          s += x * (Fb(a, b) * F(c, d) - 4.0 * n(a) * (uF(b) * F(c, d)).real());
        }
  return s.real() / (8.0 * frame.density);
}

SumOfSquares sum_of_squares_fields(const Field6& f, const EnergyMatrices& m) {
  const Mat3& Y1 = m.Y1_or_throw();
  const Mat3& Y2 = m.Y2_or_throw();
  Eigen::Vector3d yb, ye;
  for (int A = 0; A < 3; ++A) {
    yb(A) = 0.5 * pair(Field6(m.basis.row(A).transpose()), f);
    ye(A) = 0.5 * pair(Field6(m.basis.row(3 + A).transpose()), f);
  }
  SumOfSquares out;
  out.magnetic = Y1.transpose() * yb;
  out.electric = Y2.transpose() * ye;
  return out;
}

double classical_point_split(const Field6& F1, const Field6& F2, const EnergyMatrices& m) {
  const SumOfSquares a = sum_of_squares_fields(F1, m), b = sum_of_squares_fields(F2, m);
  return 0.5 * (a.electric.dot(b.electric) + a.magnetic.dot(b.magnetic));
}

}  // namespace qei
