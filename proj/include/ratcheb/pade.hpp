#pragma once

#include "ratcheb/funclib.hpp"
#include "ratcheb/numkernel.hpp"

namespace ratcheb {

struct PadeResult {
  RationalFunction r;
  /// Leading coefficient of r - f = a_mn z^{m+n+1} + O(z^{m+n+2}); zero when degenerate.
  cplx a_mn = 0.0;
  cplx hankel_mn = 1.0;
  cplx hankel_m1n1 = 1.0;
  bool degenerate = false;
};

/// Relative threshold on |D_{m,n}| below which the Pade approximant is
/// treated as degenerate.
inline constexpr double kDegeneracyTolerance = 1e-10;

/// det of the n x n Hankel matrix (c_{m-n+1+i+j}); 1 for n = 0.
cplx hankel_det(const HoloFunction& f, int m, int n);

/// Whether |D_{m,n}(f)| falls under the degeneracy threshold.
bool hankel_degenerate(const HoloFunction& f, int m, int n);

PadeResult pade_approx(const HoloFunction& f, int m, int n);

/// a_mn = -D_{m+1,n+1} / D_{m,n}. Throws Errc::DegeneratePade when D_{m,n} is
/// numerically zero.
cplx leading_coeff(const HoloFunction& f, int m, int n);

/// Closed form of a_mn for exp: (-1)^{n+1} m! n! / ((m+n)! (m+n+1)!).
cplx amn_exp_closed_form(int m, int n);

/// a_{m0} for the Taylor polynomial, stored with the sign of r - f:
/// -f^{(m+1)}(0) / (m+1)!.
cplx taylor_leading_coeff(const HoloFunction& f, int m);

}  // namespace ratcheb
