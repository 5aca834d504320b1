#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ratcheb/numkernel.hpp"

namespace ratcheb {

enum class DomainKind { Segment, Disk, Samples };

/// Compact set K: a segment [a, b] in the complex plane (real intervals are
/// the common case), a disk |z| <= R centred at the origin, or a finite
/// cloud of sample points standing in for a generic compact set.
class DomainSpec {
 public:
  static DomainSpec interval(double a, double b);
  static DomainSpec segment(cplx a, cplx b);
  static DomainSpec disk(double radius);
  static DomainSpec samples(std::vector<cplx> points);

  DomainKind kind() const noexcept { return kind_; }
  cplx a() const noexcept { return a_; }
  cplx b() const noexcept { return b_; }
  double radius() const noexcept { return radius_; }
  const std::vector<cplx>& points() const noexcept { return points_; }

  /// max_{z in K} |z|.
  double max_abs() const noexcept;
  /// The set eps K.
  DomainSpec scaled(double eps) const;
  /// Point of a segment at parameter t in [-1, 1].
  cplx segment_point(double t) const noexcept { return 0.5 * (a_ + b_) + 0.5 * (b_ - a_) * t; }
  /// interval:a,b | segment:re,im,re,im | disk:R | samples:<count>
  std::string describe() const;

 private:
  DomainKind kind_ = DomainKind::Disk;
  cplx a_ = 0.0;
  cplx b_ = 0.0;
  double radius_ = 1.0;
  std::vector<cplx> points_;
};

inline constexpr int kDefaultErrorGrid = 512;
inline constexpr int kAcceptanceGrid = 4096;

/// Chebyshev nodes tau_j of K (roots of the monic degree-N polynomial of least
/// sup-norm on K) and the Chebyshev constant t_N.
struct ChebSystem {
  int N = 0;
  std::vector<cplx> nodes;
  double constant = 1.0;
  ComplexPolynomial monic_poly;
};

/// Closed forms for segments and disks; discrete Lawson iteration for sample
/// clouds, which need at least 3 N points (Errc::UnsupportedDomain otherwise).
ChebSystem cheb_system(const DomainSpec& K, int N);

/// t_N with the convention t_0 = 1.
double cheb_constant(const DomainSpec& K, int N);

/// Discretization of eps K: M Chebyshev extreme points on a segment (ends
/// included), M equispaced boundary points plus the origin on a disk, the
/// stored points for a sample cloud.
std::vector<cplx> sample_domain(const DomainSpec& K, int M, double eps);

/// max |g| over eps K, sampled with M points; on segments the discrete
/// maximizer is refined by local parabolic search.
double uniform_norm(const std::function<cplx(cplx)>& g, const DomainSpec& K, double eps, int M);

}  // namespace ratcheb
