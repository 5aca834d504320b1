#include "ratcheb/newton_pade.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "ratcheb/errors.hpp"

namespace ratcheb {

namespace {

constexpr double kResidualTolerance = 1e-8;
constexpr double kPoleMargin = 10.0;

double factorial(int k) {
  double out = 1.0;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

Eigen::VectorXcd stacked(const RationalFunction& r) {
  Eigen::VectorXcd v(r.m() + r.n() + 2);
  for (int k = 0; k <= r.m(); ++k) v(k) = r.num().coeff(k);
  for (int k = 0; k <= r.n(); ++k) v(r.m() + 1 + k) = r.den().coeff(k);
  return v;
}

}  // namespace

InterpolationResult interpolate(const HoloFunction& f, const NodeMultiset& nodes, int m, int n) {
  if (m < 0 || n < 0) throw Error(Errc::InvalidArgument, "negative degree");
  if (static_cast<int>(nodes.size()) != m + n + 1)
    throw Error(Errc::InvalidArgument, "interpolation needs exactly m + n + 1 nodes");

  const int rows = m + n + 1;
  Eigen::MatrixXcd system(rows, m + n + 2);
  for (int k = 0; k <= m; ++k) {
    const auto col = dd_full_table(monomial(k), nodes);
    for (int j = 0; j < rows; ++j) system(j, k) = col[static_cast<size_t>(j)];
  }
  for (int k = 0; k <= n; ++k) {
    const auto col = dd_full_table(times_monomial(f, k), nodes);
    for (int j = 0; j < rows; ++j) system(j, m + 1 + k) = -col[static_cast<size_t>(j)];
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(system, Eigen::ComputeFullV);
  const Eigen::VectorXcd null_vec = svd.matrixV().col(m + n + 1);
  if (!null_vec.allFinite())
    throw Error(Errc::NoNontrivialSolution, "null direction is not finite");

  std::vector<cplx> p(null_vec.data(), null_vec.data() + m + 1);
  std::vector<cplx> q(null_vec.data() + m + 1, null_vec.data() + m + n + 2);
  ComplexPolynomial den(std::move(q));
  if (den.is_zero()) throw Error(Errc::NoNontrivialSolution, "null direction has a zero denominator");

  InterpolationResult out{RationalFunction(ComplexPolynomial(std::move(p)), std::move(den), m, n), nodes};
  out.linearized_residual = (system * stacked(out.r)).cwiseAbs().maxCoeff();

  double f_scale = 0.0;
  for (const auto& z : nodes.nodes()) f_scale = std::max(f_scale, std::abs(f(z)));
  const double scale = std::max(1.0, out.r.den().max_abs_coeff() * f_scale);
  if (!(out.linearized_residual <= kResidualTolerance * scale))
    throw Error(Errc::NoNontrivialSolution, "linearized residual above tolerance");

  out.degenerate = out.r.degenerate();
  out.hermite_valid = !out.degenerate;
  if (out.hermite_valid) {
    const double margin = kPoleMargin * nodes.confluency_threshold();
    for (const auto& pole : out.r.poles())
      for (const auto& z : nodes.distinct())
        if (std::abs(pole - z) <= margin) out.hermite_valid = false;
  }
  return out;
}

DeterminantValues determinant_denominator_remainder(const HoloFunction& f, const NodeMultiset& nodes,
                                                    int m, int n, cplx z) {
  if (m < 0 || n < 0) throw Error(Errc::InvalidArgument, "negative degree");
  if (static_cast<int>(nodes.size()) != m + n + 1)
    throw Error(Errc::InvalidArgument, "interpolation needs exactly m + n + 1 nodes");
  if (!f.contains(z)) throw Error(Errc::NodeOutsideDomain, "evaluation point outside the domain");

  const auto& x = nodes.nodes();
  const auto dd = [&](int first, int last) -> cplx {
    if (last < first) return 0.0;
    return dd_recursive(f, NodeMultiset(std::vector<cplx>(x.begin() + first, x.begin() + last + 1)));
  };

  Eigen::MatrixXcd h(n + 1, n + 1);
  Eigen::MatrixXcd e(n + 1, n + 1);
  for (int row = 0; row <= n; ++row) {
    const int s = n - row;
    for (int col = 0; col < n; ++col) {
      const cplx entry = dd(s, m + 1 + col);
      h(row, col) = entry;
      e(row, col) = entry;
    }
    cplx prod = 1.0;
    for (int k = 0; k < s; ++k) prod *= (z - x[static_cast<size_t>(k)]);
    h(row, n) = prod;
    std::vector<cplx> tail(x.begin() + s, x.end());
    tail.push_back(z);
    e(row, n) = dd_recursive(f, NodeMultiset(std::move(tail)));
  }
  return {h.partialPivLu().determinant(), -e.partialPivLu().determinant()};
}

HermiteReport hermite_check(const InterpolationResult& result, const HoloFunction& f) {
  if (!result.hermite_valid)
    throw Error(Errc::PoleAtNode, "interpolant is degenerate or has a pole at a node");
  HermiteReport report;
  report.passed = true;
  const auto& distinct = result.nodes.distinct();
  const auto& mult = result.nodes.multiplicities();
  for (size_t j = 0; j < distinct.size(); ++j) {
    const auto series = result.r.taylor_at(distinct[j], mult[j] - 1);
    for (int l = 0; l < mult[j]; ++l) {
      const cplx r_l = series[static_cast<size_t>(l)] * factorial(l);
      const cplx f_l = f.deriv(l, distinct[j]);
      const double dev = std::abs(r_l - f_l);
      report.max_deviation = std::max(report.max_deviation, dev);
      if (!(dev <= 1e-7 * (1.0 + std::abs(f_l)))) report.passed = false;
      ++report.conditions;
    }
  }
  return report;
}

InterpolationResult interp_at_scaled_cheb(const HoloFunction& f, int m, int n, const DomainSpec& K,
                                          double eps) {
  if (!(eps > 0.0)) throw Error(Errc::InvalidArgument, "eps must be positive");
  if (!(eps * K.max_abs() < f.domain_radius()))
    throw Error(Errc::NodeOutsideDomain, "eps K leaves the holomorphy disk of " + f.name());
  const auto cheb = cheb_system(K, m + n + 1);
  std::vector<cplx> nodes = cheb.nodes;
  for (auto& z : nodes) z *= eps;
  return interpolate(f, NodeMultiset(std::move(nodes)), m, n);
}

}  // namespace ratcheb
