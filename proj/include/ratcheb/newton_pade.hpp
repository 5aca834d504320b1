#pragma once

#include "ratcheb/divdiff.hpp"
#include "ratcheb/domains.hpp"
#include "ratcheb/funclib.hpp"
#include "ratcheb/numkernel.hpp"

namespace ratcheb {

struct InterpolationResult {
  RationalFunction r;
  NodeMultiset nodes;
  /// max_j |(p - q f)[z_0, ..., z_j]| for the normalized (p, q).
  double linearized_residual = 0.0;
  bool degenerate = false;
  /// Non-degenerate with every pole further than 10 delta_conf from the nodes.
  bool hermite_valid = false;
};

/// Newton-Pade interpolant: (p - q f)[z_0, ..., z_j] = 0 for j = 0..m+n, solved
/// for the null direction of the divided-difference system in the basis
/// {z^k} and {z^k f}. Needs len(nodes) == m + n + 1.
InterpolationResult interpolate(const HoloFunction& f, const NodeMultiset& nodes, int m, int n);

struct DeterminantValues {
  cplx q_val;
  cplx vtilde_val;
};

/// q(z) = det H(z) and vtilde(z) = -det E(z), with H and E built from the
/// divided differences f[z_l, ..., z_k] and f[z_l, ..., z_{m+n}, z]. An
/// independent route to the interpolant's denominator (up to a constant) and
/// to the remainder of p - q f = vtilde prod (z - z_j).
DeterminantValues determinant_denominator_remainder(const HoloFunction& f, const NodeMultiset& nodes,
                                                    int m, int n, cplx z);

struct HermiteReport {
  /// max |r^(l)(z) - f^(l)(z)| over distinct nodes z and l < multiplicity.
  double max_deviation = 0.0;
  int conditions = 0;
  bool passed = false;
};

/// Checks the osculatory conditions r^(l) = f^(l) at every node.
/// Throws Errc::PoleAtNode when the result is not hermite_valid.
HermiteReport hermite_check(const InterpolationResult& result, const HoloFunction& f);

/// Interpolant at eps tau_j, tau_j the m + n + 1 Chebyshev nodes of K.
InterpolationResult interp_at_scaled_cheb(const HoloFunction& f, int m, int n, const DomainSpec& K,
                                          double eps);

}  // namespace ratcheb
