#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratcheb/divdiff.hpp"
#include "ratcheb/domains.hpp"
#include "ratcheb/funclib.hpp"
#include "ratcheb/numkernel.hpp"

namespace ratcheb {

struct MinimaxOptions {
  /// Sample count for the discretization of eps K.
  int grid = kDefaultErrorGrid;
  /// Stop once the active error peaks agree to max/min - 1 <= lawson_tol.
  double lawson_tol = 1e-3;
  int max_iters = 200;
  /// Radius factor of the node-extraction circle |z| = eps rho; defaults to
  /// 2 t_{m+n+1} / t_{m+n} + max_{z in K} |z|.
  std::optional<double> rho;
  /// Skip zero extraction entirely (winding stays 0, nodes empty).
  bool extract = true;
};

struct MinimaxResult {
  RationalFunction r;
  double uniform_error = 0.0;
  /// Zeros of r - f inside |z| < eps rho, with multiplicity.
  NodeMultiset nodes_extracted;
  int winding = 0;
  double rho = 0.0;
  int lawson_iters = 0;
  bool converged = false;
  /// Alternating extrema within 2% of the uniform error (real problems on
  /// segments only, 0 otherwise).
  int equioscillation_count = 0;
  /// max/min - 1 over the active error peaks of the returned iterate.
  double levelling = 0.0;
  std::vector<std::string> warnings;
};

/// Best (Chebyshev) approximation of f on eps K in R_{mn} by Lawson
/// iteration on the discretized linearized error, warm-started at the
/// scaled-Chebyshev interpolant. A run that hits max_iters is returned with
/// converged = false and a LawsonStagnation warning.
MinimaxResult best_approx(const HoloFunction& f, int m, int n, const DomainSpec& K, double eps,
                          const MinimaxOptions& opts = {});

/// Radius factor 2 t_{m+n+1} / t_{m+n} + max_{z in K} |z| (t_0 = 1).
double node_radius(const DomainSpec& K, int m, int n);

/// Winding number of r - f along |z| = eps rho (trapezoidal rule on the
/// logarithmic derivative, 512 points). Throws Errc::WindingMismatch when
/// the quadrature does not land near an integer.
int winding_number(const RationalFunction& r, const HoloFunction& f, double radius,
                   int quad_points = 512);

/// Zeros of r - f in |z| < eps rho. The winding number must equal count
/// (Errc::WindingMismatch otherwise); the zeros come from contour moments
/// and are polished by Newton's method (Errc::NewtonDivergence when a
/// polished zero still has a large residual).
NodeMultiset extract_nodes(const RationalFunction& r, const HoloFunction& f, double eps, double rho,
                           int count);

/// Unitary best approximation to exp on eps i[-1, 1] in R_{nn}: Lawson over
/// rational functions of the form conj(q(-conj z)) / q(z), which are unitary
/// on the imaginary axis and interpolate exp at 2n + 1 points there.
/// Requires 0 < eps < (n + 1) pi.
struct UnitaryResult {
  MinimaxResult best;
  /// max over 100 points y in [-3 eps, 3 eps] of ||r(iy)| - 1|.
  double unitarity_defect = 0.0;
  /// max distance of an extracted node from the segment i[-eps, eps].
  double node_offset = 0.0;
};
UnitaryResult unitary_best_exp(int n, double eps, const MinimaxOptions& opts = {});

}  // namespace ratcheb
