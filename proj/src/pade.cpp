#include "ratcheb/pade.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "ratcheb/errors.hpp"

namespace ratcheb {

namespace {

Eigen::MatrixXcd hankel_matrix(const HoloFunction& f, int m, int n) {
  Eigen::MatrixXcd h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = f.taylor(m - n + 1 + i + j);
  return h;
}

double hankel_scale(const Eigen::MatrixXcd& h) {
  double scale = 1.0;
  for (Eigen::Index i = 0; i < h.size(); ++i) scale = std::max(scale, std::abs(h.data()[i]));
  return scale;
}

// Unknowns (p_0..p_m, q_0..q_n); row k encodes the z^k coefficient of p - q f.
Eigen::MatrixXcd taylor_matching_system(const HoloFunction& f, int m, int n) {
  const int rows = m + n + 1;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(rows, m + n + 2);
  for (int k = 0; k < rows; ++k) {
    if (k <= m) a(k, k) = 1.0;
    for (int j = 0; j <= std::min(k, n); ++j) a(k, m + 1 + j) = -f.taylor(k - j);
  }
  return a;
}

RationalFunction from_coefficients(const Eigen::VectorXcd& v, int m, int n) {
  std::vector<cplx> p(v.data(), v.data() + m + 1);
  std::vector<cplx> q(v.data() + m + 1, v.data() + m + n + 2);
  return RationalFunction(ComplexPolynomial(std::move(p)), ComplexPolynomial(std::move(q)), m, n);
}

double factorial(int k) {
  double out = 1.0;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

}  // namespace

cplx hankel_det(const HoloFunction& f, int m, int n) {
  if (m < 0 || n < 0) throw Error(Errc::InvalidArgument, "negative degree");
  if (n == 0) return 1.0;
  return hankel_matrix(f, m, n).partialPivLu().determinant();
}

bool hankel_degenerate(const HoloFunction& f, int m, int n) {
  if (n == 0) return false;
  const auto h = hankel_matrix(f, m, n);
  return std::abs(h.partialPivLu().determinant()) <= kDegeneracyTolerance * hankel_scale(h);
}

cplx leading_coeff(const HoloFunction& f, int m, int n) {
  if (hankel_degenerate(f, m, n))
    throw Error(Errc::DegeneratePade, "D_{m,n}(" + f.name() + ") vanishes numerically");
  return -hankel_det(f, m + 1, n + 1) / hankel_det(f, m, n);
}

PadeResult pade_approx(const HoloFunction& f, int m, int n) {
  if (m < 0 || n < 0) throw Error(Errc::InvalidArgument, "negative degree");
  const bool degenerate = hankel_degenerate(f, m, n);
  const Eigen::MatrixXcd a = taylor_matching_system(f, m, n);

  Eigen::VectorXcd v;
  if (!degenerate) {
    // Append the normalization q_0 = 1 and take the least-norm solution.
    Eigen::MatrixXcd full(a.rows() + 1, a.cols());
    full << a, Eigen::RowVectorXcd::Zero(a.cols());
    full(a.rows(), m + 1) = 1.0;
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(full.rows());
    rhs(a.rows()) = 1.0;
    v = full.completeOrthogonalDecomposition().solve(rhs);
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
    v = svd.matrixV().col(a.cols() - 1);
  }

  PadeResult out{from_coefficients(v, m, n)};
  out.degenerate = degenerate || out.r.degenerate();
  out.hankel_mn = hankel_det(f, m, n);
  out.hankel_m1n1 = hankel_det(f, m + 1, n + 1);
  out.a_mn = degenerate ? cplx{0.0} : -out.hankel_m1n1 / out.hankel_mn;
  return out;
}

cplx amn_exp_closed_form(int m, int n) {
  if (m < 0 || n < 0) throw Error(Errc::InvalidArgument, "negative degree");
  const double sign = ((n + 1) % 2 == 0) ? 1.0 : -1.0;
  return sign * factorial(m) * factorial(n) / (factorial(m + n) * factorial(m + n + 1));
}

cplx taylor_leading_coeff(const HoloFunction& f, int m) {
  if (m < 0) throw Error(Errc::InvalidArgument, "negative degree");
  return -f.deriv(m + 1, 0.0) / factorial(m + 1);
}

}  // namespace ratcheb
