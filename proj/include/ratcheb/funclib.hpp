#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ratcheb/numkernel.hpp"

namespace ratcheb {

/// A function holomorphic on the open disk |z| < domain_radius, with
/// analytic derivatives and Taylor coefficients at the origin.
class HoloFunction {
 public:
  using DerivFn = std::function<cplx(int, cplx)>;
  using TaylorFn = std::function<cplx(int)>;

  HoloFunction(std::string name, DerivFn deriv, TaylorFn taylor, double domain_radius);

  const std::string& name() const noexcept { return name_; }
  double domain_radius() const noexcept { return domain_radius_; }
  bool contains(cplx z) const noexcept { return std::abs(z) < domain_radius_; }

  cplx operator()(cplx z) const { return deriv_(0, z); }
  cplx eval(cplx z) const { return deriv_(0, z); }
  /// k-th derivative at z.
  cplx deriv(int k, cplx z) const { return deriv_(k, z); }
  /// c_j = f^(j)(0) / j!, with c_j = 0 for j < 0.
  cplx taylor(int j) const { return j < 0 ? cplx{0.0} : taylor_(j); }

 private:
  std::string name_;
  DerivFn deriv_;
  TaylorFn taylor_;
  double domain_radius_;
};

/// z^k as a HoloFunction (entire).
HoloFunction monomial(int k);
/// z -> z^k f(z); derivatives by the Leibniz rule.
HoloFunction times_monomial(const HoloFunction& f, int k);

/// Registered names: exp, geom, log1p, cosz, pole2.
HoloFunction registry_get(const std::string& name);
std::vector<std::string> registry_names();

}  // namespace ratcheb
