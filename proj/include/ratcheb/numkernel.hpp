#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ratcheb {

using cplx = std::complex<double>;

/// z^k by repeated multiplication; ipow(0, 0) == 1.
inline cplx ipow(cplx z, int k) noexcept {
  cplx out = 1.0;
  for (int i = 0; i < k; ++i) out *= z;
  return out;
}

/// Polynomial over complex scalars, coefficients in ascending degree.
///
/// Trailing coefficients whose magnitude is at most kTrimTolerance times the
/// largest coefficient are dropped on construction, so degree() reports the
/// numerically meaningful degree. The zero polynomial is stored as {0}.
class ComplexPolynomial {
 public:
  static constexpr double kTrimTolerance = 1e-13;

  ComplexPolynomial() : coeffs_{cplx{0.0}} {}
  explicit ComplexPolynomial(std::vector<cplx> coeffs);
  ComplexPolynomial(std::initializer_list<cplx> coeffs)
      : ComplexPolynomial(std::vector<cplx>(coeffs)) {}

  /// lead * prod (z - root).
  static ComplexPolynomial from_roots(std::span<const cplx> roots, cplx lead = 1.0);

  const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept;
  double max_abs_coeff() const noexcept;
  cplx coeff(int k) const noexcept {
    return (k >= 0 && k <= degree()) ? coeffs_[static_cast<size_t>(k)] : cplx{0.0};
  }

  cplx operator()(cplx z) const noexcept;

  ComplexPolynomial derivative() const;
  /// Coefficients of t -> p(center + t).
  ComplexPolynomial taylor_shift(cplx center) const;
  /// Coefficients of t -> p(scale * t).
  ComplexPolynomial compose_scale(cplx scale) const;
  ComplexPolynomial operator*(cplx s) const;
  ComplexPolynomial operator*(const ComplexPolynomial& other) const;

 private:
  std::vector<cplx> coeffs_;
};

/// Horner evaluation.
cplx poly_eval(const ComplexPolynomial& p, cplx z) noexcept;

/// All complex roots with multiplicity. Each root satisfies
/// |p(root)| <= 1e-8 * max|coeff| * (1 + |root|)^degree.
/// Throws Errc::NoRoots for a constant polynomial.
std::vector<cplx> poly_roots(const ComplexPolynomial& p);

/// Rational function num/den with declared degree bounds (m, n).
///
/// The denominator is normalized to den(0) = 1 when |den(0)| is not tiny
/// relative to the denominator coefficients, otherwise its largest-magnitude
/// coefficient is scaled to 1. The defect is computed on construction with
/// kDefectTolerance.
class RationalFunction {
 public:
  static constexpr double kDefectTolerance = 1e-9;
  static constexpr double kPoleTolerance = 1e-14;

  RationalFunction(ComplexPolynomial num, ComplexPolynomial den, int m, int n);
  /// The constant 1 in R_{00}.
  RationalFunction() : RationalFunction(ComplexPolynomial{1.0}, ComplexPolynomial{1.0}, 0, 0) {}

  const ComplexPolynomial& num() const noexcept { return num_; }
  const ComplexPolynomial& den() const noexcept { return den_; }
  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  int defect() const noexcept { return defect_; }
  bool degenerate() const noexcept { return defect_ > 0; }

  /// Throws Errc::PoleAtEvaluationPoint when |den(z)| < 1e-14 (1 + |num(z)|).
  cplx operator()(cplx z) const;

  /// Taylor coefficients of t -> r(z + t) through t^order.
  std::vector<cplx> taylor_at(cplx z, int order) const;

  /// Roots of the denominator (empty when it is constant).
  std::vector<cplx> poles() const;

 private:
  ComplexPolynomial num_;
  ComplexPolynomial den_;
  int m_;
  int n_;
  int defect_ = 0;
};

cplx rational_eval(const RationalFunction& r, cplx z);

/// Largest d with r in R_{m-d,n-d}: common numerator/denominator roots are
/// paired greedily when |a - b| <= tol * max(1, |a|), then the degree gaps of
/// the reduced pair decide.
int compute_defect(const RationalFunction& r, double tol);

/// Coefficients of the power series a/b through t^order (b(0) != 0).
std::vector<cplx> series_divide(std::span<const cplx> a, std::span<const cplx> b, int order);

}  // namespace ratcheb
