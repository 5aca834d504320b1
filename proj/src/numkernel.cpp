#include "ratcheb/numkernel.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "ratcheb/errors.hpp"

namespace ratcheb {

namespace {

double max_abs(std::span<const cplx> v) {
  double out = 0.0;
  for (const auto& c : v) out = std::max(out, std::abs(c));
  return out;
}

// Derivative value alongside the polynomial value, for Newton polishing.
std::pair<cplx, cplx> eval_with_derivative(const std::vector<cplx>& c, cplx z) {
  cplx value = c.back();
  cplx deriv = 0.0;
  for (size_t k = c.size() - 1; k-- > 0;) {
    deriv = deriv * z + value;
    value = value * z + c[k];
  }
  return {value, deriv};
}

int defect_of(const ComplexPolynomial& num, const ComplexPolynomial& den, int m, int n,
              double tol) {
  if (num.is_zero()) return std::min(m, n);
  int common = 0;
  if (num.degree() >= 1 && den.degree() >= 1) {
    auto num_roots = poly_roots(num);
    const auto den_roots = poly_roots(den);
    std::vector<bool> used(num_roots.size(), false);
    for (const auto& b : den_roots) {
      double best = 0.0;
      int best_idx = -1;
      for (size_t i = 0; i < num_roots.size(); ++i) {
        if (used[i]) continue;
        const double dist = std::abs(num_roots[i] - b);
        if (dist <= tol * std::max(1.0, std::abs(num_roots[i])) &&
            (best_idx < 0 || dist < best)) {
          best = dist;
          best_idx = static_cast<int>(i);
        }
      }
      if (best_idx >= 0) {
        used[static_cast<size_t>(best_idx)] = true;
        ++common;
      }
    }
  }
  const int reduced_m = num.degree() - common;
  const int reduced_n = den.degree() - common;
  return std::max(0, std::min(m - reduced_m, n - reduced_n));
}

}  // namespace

ComplexPolynomial::ComplexPolynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  const double cut = kTrimTolerance * max_abs(coeffs_);
  while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= cut) coeffs_.pop_back();
  if (coeffs_.size() == 1 && std::abs(coeffs_[0]) == 0.0) coeffs_[0] = 0.0;
}

ComplexPolynomial ComplexPolynomial::from_roots(std::span<const cplx> roots, cplx lead) {
  std::vector<cplx> c{lead};
  for (const auto& root : roots) {
    c.push_back(0.0);
    for (size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - root * c[k];
    c[0] = -root * c[0];
  }
  return ComplexPolynomial(std::move(c));
}

bool ComplexPolynomial::is_zero() const noexcept {
  return coeffs_.size() == 1 && coeffs_[0] == cplx{0.0};
}

double ComplexPolynomial::max_abs_coeff() const noexcept { return max_abs(coeffs_); }

cplx ComplexPolynomial::operator()(cplx z) const noexcept {
  cplx acc = coeffs_.back();
  for (size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * z + coeffs_[k];
  return acc;
}

ComplexPolynomial ComplexPolynomial::derivative() const {
  if (degree() == 0) return ComplexPolynomial{};
  std::vector<cplx> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return ComplexPolynomial(std::move(d));
}

ComplexPolynomial ComplexPolynomial::taylor_shift(cplx center) const {
  // Repeated synthetic division by (z - center).
  std::vector<cplx> c = coeffs_;
  const size_t n = c.size();
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t k = n - 1; k > i; --k) c[k - 1] += center * c[k];
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::compose_scale(cplx scale) const {
  std::vector<cplx> c = coeffs_;
  cplx power = 1.0;
  for (auto& ck : c) {
    ck *= power;
    power *= scale;
  }
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::operator*(cplx s) const {
  std::vector<cplx> c = coeffs_;
  for (auto& ck : c) ck *= s;
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::operator*(const ComplexPolynomial& other) const {
  std::vector<cplx> c(coeffs_.size() + other.coeffs_.size() - 1, cplx{0.0});
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < other.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * other.coeffs_[j];
  return ComplexPolynomial(std::move(c));
}

cplx poly_eval(const ComplexPolynomial& p, cplx z) noexcept { return p(z); }

std::vector<cplx> poly_roots(const ComplexPolynomial& p) {
  const int deg = p.degree();
  if (deg < 1) throw Error(Errc::NoRoots, "no roots of a nonzero constant");
  const auto& c = p.coeffs();
  if (deg == 1) return {-c[0] / c[1]};

  // Scale z = s u so that the monic coefficients are balanced around 1.
  const double lead = std::abs(c.back());
  double scale = 1.0;
  if (std::abs(c[0]) > 0.0) scale = std::pow(std::abs(c[0]) / lead, 1.0 / deg);
  if (!std::isfinite(scale) || scale == 0.0) scale = 1.0;

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int k = 0; k < deg; ++k)
    companion(k, deg - 1) = -c[static_cast<size_t>(k)] * std::pow(scale, k - deg) / c.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);

  std::vector<cplx> roots(static_cast<size_t>(deg));
  for (int i = 0; i < deg; ++i) roots[static_cast<size_t>(i)] = solver.eigenvalues()(i) * scale;

  // A few Newton steps, keeping a step only when it reduces the residual.
  for (auto& root : roots) {
    for (int it = 0; it < 4; ++it) {
      const auto [value, deriv] = eval_with_derivative(c, root);
      if (deriv == cplx{0.0} || value == cplx{0.0}) break;
      const cplx candidate = root - value / deriv;
      if (std::abs(p(candidate)) < std::abs(value)) {
        root = candidate;
      } else {
        break;
      }
    }
  }
  return roots;
}

RationalFunction::RationalFunction(ComplexPolynomial num, ComplexPolynomial den, int m, int n)
    : num_(std::move(num)), den_(std::move(den)), m_(m), n_(n) {
  if (m < 0 || n < 0) throw Error(Errc::InvalidArgument, "negative degree bound");
  if (den_.is_zero()) throw Error(Errc::InvalidArgument, "denominator is identically zero");
  if (num_.degree() > m || den_.degree() > n)
    throw Error(Errc::InvalidArgument, "coefficients exceed the declared degree bounds");

  cplx pivot = den_.coeff(0);
  if (!(std::abs(pivot) > 1e-10 * den_.max_abs_coeff())) {
    pivot = den_.coeffs().front();
    for (const auto& ck : den_.coeffs())
      if (std::abs(ck) > std::abs(pivot)) pivot = ck;
  }
  num_ = num_ * (1.0 / pivot);
  den_ = den_ * (1.0 / pivot);
  defect_ = defect_of(num_, den_, m_, n_, kDefectTolerance);
}

cplx RationalFunction::operator()(cplx z) const {
  const cplx top = num_(z);
  const cplx bottom = den_(z);
  if (std::abs(bottom) < kPoleTolerance * (1.0 + std::abs(top)))
    throw Error(Errc::PoleAtEvaluationPoint, "denominator vanishes at evaluation point");
  return top / bottom;
}

std::vector<cplx> RationalFunction::taylor_at(cplx z, int order) const {
  const auto a = num_.taylor_shift(z);
  const auto b = den_.taylor_shift(z);
  if (std::abs(b.coeff(0)) < kPoleTolerance * (1.0 + std::abs(a.coeff(0))))
    throw Error(Errc::PoleAtEvaluationPoint, "denominator vanishes at expansion point");
  return series_divide(a.coeffs(), b.coeffs(), order);
}

std::vector<cplx> RationalFunction::poles() const {
  if (den_.degree() < 1) return {};
  return poly_roots(den_);
}

cplx rational_eval(const RationalFunction& r, cplx z) { return r(z); }

int compute_defect(const RationalFunction& r, double tol) {
  return defect_of(r.num(), r.den(), r.m(), r.n(), tol);
}

std::vector<cplx> series_divide(std::span<const cplx> a, std::span<const cplx> b, int order) {
  std::vector<cplx> out(static_cast<size_t>(order + 1), cplx{0.0});
  auto at = [](std::span<const cplx> v, int k) {
    return k < static_cast<int>(v.size()) ? v[static_cast<size_t>(k)] : cplx{0.0};
  };
  for (int k = 0; k <= order; ++k) {
    cplx acc = at(a, k);
    for (int j = 1; j <= k; ++j) acc -= at(b, j) * out[static_cast<size_t>(k - j)];
    out[static_cast<size_t>(k)] = acc / at(b, 0);
  }
  return out;
}

}  // namespace ratcheb
