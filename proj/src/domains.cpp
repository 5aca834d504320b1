#include "ratcheb/domains.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ratcheb/errors.hpp"

namespace ratcheb {

namespace {

constexpr int kSampleLawsonIterations = 30;
constexpr double kSampleLawsonWeightFloor = 1e-12;

// Safeguarded successive parabolic interpolation for a local maximum of h in
// [lo, hi] starting from the interior guess mid with h(mid) >= h(lo), h(hi).
double parabolic_max(const std::function<double(double)>& h, double lo, double mid, double hi) {
  double a = lo, b = mid, c = hi;
  double fa = h(a), fb = h(b), fc = h(c);
  if (fa > fb || fc > fb) return std::max({fa, fb, fc});
  constexpr double golden = 0.3819660112501051;
  for (int it = 0; it < 60 && (c - a) > 1e-14 * (1.0 + std::abs(b)); ++it) {
    const double num = (b - a) * (b - a) * (fb - fc) - (b - c) * (b - c) * (fb - fa);
    const double den = (b - a) * (fb - fc) - (b - c) * (fb - fa);
    double x = (den != 0.0) ? b - 0.5 * num / den : b;
    if (!(x > a && x < c) || std::abs(x - b) < 1e-15 * (1.0 + std::abs(b))) {
      x = (c - b > b - a) ? b + golden * (c - b) : b - golden * (b - a);
    }
    const double fx = h(x);
    if (fx >= fb) {
      if (x > b) { a = b; fa = fb; } else { c = b; fc = fb; }
      b = x;
      fb = fx;
    } else {
      if (x > b) { c = x; fc = fx; } else { a = x; fa = fx; }
    }
  }
  return fb;
}

ChebSystem cheb_from_samples(const std::vector<cplx>& points, int N) {
  const int count = static_cast<int>(points.size());
  cplx centre = 0.0;
  for (const auto& z : points) centre += z;
  centre /= static_cast<double>(count);
  double spread = 0.0;
  for (const auto& z : points) spread = std::max(spread, std::abs(z - centre));
  if (spread == 0.0) throw Error(Errc::UnsupportedDomain, "sample cloud collapses to a point");

  // Monic minimax in the normalized variable u = (z - centre) / spread.
  Eigen::MatrixXcd basis(count, N);
  Eigen::VectorXcd target(count);
  for (int i = 0; i < count; ++i) {
    const cplx u = (points[static_cast<size_t>(i)] - centre) / spread;
    cplx power = 1.0;
    for (int k = 0; k < N; ++k) {
      basis(i, k) = power;
      power *= u;
    }
    target(i) = power;
  }

  Eigen::VectorXd weights = Eigen::VectorXd::Constant(count, 1.0 / count);
  Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(N);
  for (int it = 0; it < kSampleLawsonIterations; ++it) {
    const Eigen::VectorXd root_w = weights.cwiseSqrt();
    const Eigen::MatrixXcd lhs = root_w.asDiagonal() * basis;
    const Eigen::VectorXcd rhs = root_w.asDiagonal() * target;
    coeffs = lhs.colPivHouseholderQr().solve(rhs);
    const Eigen::VectorXd err = (target - basis * coeffs).cwiseAbs();
    weights = weights.cwiseProduct(err);
    const double total = weights.sum();
    if (!(total > 0.0)) break;
    weights /= total;
    weights = weights.cwiseMax(kSampleLawsonWeightFloor);
    weights /= weights.sum();
  }

  std::vector<cplx> monic_u(static_cast<size_t>(N + 1));
  for (int k = 0; k < N; ++k) monic_u[static_cast<size_t>(k)] = -coeffs(k);
  monic_u[static_cast<size_t>(N)] = 1.0;
  const auto roots_u = poly_roots(ComplexPolynomial(monic_u));

  ChebSystem out;
  out.N = N;
  for (const auto& u : roots_u) out.nodes.push_back(centre + spread * u);
  out.monic_poly = ComplexPolynomial::from_roots(out.nodes);
  out.constant = 0.0;
  for (const auto& z : points) out.constant = std::max(out.constant, std::abs(out.monic_poly(z)));
  return out;
}

}  // namespace

DomainSpec DomainSpec::interval(double a, double b) {
  if (!(a < b)) throw Error(Errc::InvalidArgument, "interval needs a < b");
  return segment(cplx{a}, cplx{b});
}

DomainSpec DomainSpec::segment(cplx a, cplx b) {
  if (a == b) throw Error(Errc::InvalidArgument, "segment endpoints coincide");
  DomainSpec d;
  d.kind_ = DomainKind::Segment;
  d.a_ = a;
  d.b_ = b;
  return d;
}

DomainSpec DomainSpec::disk(double radius) {
  if (!(radius > 0.0)) throw Error(Errc::InvalidArgument, "disk radius must be positive");
  DomainSpec d;
  d.kind_ = DomainKind::Disk;
  d.radius_ = radius;
  return d;
}

DomainSpec DomainSpec::samples(std::vector<cplx> points) {
  if (points.empty()) throw Error(Errc::UnsupportedDomain, "empty sample cloud");
  DomainSpec d;
  d.kind_ = DomainKind::Samples;
  d.points_ = std::move(points);
  return d;
}

double DomainSpec::max_abs() const noexcept {
  switch (kind_) {
    case DomainKind::Segment: return std::max(std::abs(a_), std::abs(b_));
    case DomainKind::Disk: return radius_;
    case DomainKind::Samples: {
      double out = 0.0;
      for (const auto& z : points_) out = std::max(out, std::abs(z));
      return out;
    }
  }
  return 0.0;
}

DomainSpec DomainSpec::scaled(double eps) const {
  DomainSpec d = *this;
  d.a_ *= eps;
  d.b_ *= eps;
  d.radius_ *= eps;
  for (auto& z : d.points_) z *= eps;
  return d;
}

std::string DomainSpec::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case DomainKind::Segment:
      if (a_.imag() == 0.0 && b_.imag() == 0.0) {
        os << "interval:" << a_.real() << "," << b_.real();
      } else {
        os << "segment:" << a_.real() << "," << a_.imag() << "," << b_.real() << "," << b_.imag();
      }
      break;
    case DomainKind::Disk: os << "disk:" << radius_; break;
    case DomainKind::Samples: os << "samples:" << points_.size(); break;
  }
  return os.str();
}

ChebSystem cheb_system(const DomainSpec& K, int N) {
  if (N < 1) throw Error(Errc::InvalidArgument, "Chebyshev system needs N >= 1");
  ChebSystem out;
  out.N = N;
  switch (K.kind()) {
    case DomainKind::Segment: {
      for (int j = 0; j < N; ++j)
        out.nodes.push_back(K.segment_point(std::cos((2.0 * j + 1.0) * std::numbers::pi / (2.0 * N))));
      out.constant = cheb_constant(K, N);
      out.monic_poly = ComplexPolynomial::from_roots(out.nodes);
      return out;
    }
    case DomainKind::Disk: {
      out.nodes.assign(static_cast<size_t>(N), cplx{0.0});
      out.constant = std::pow(K.radius(), N);
      out.monic_poly = ComplexPolynomial::from_roots(out.nodes);
      return out;
    }
    case DomainKind::Samples: {
      if (static_cast<int>(K.points().size()) < 3 * N)
        throw Error(Errc::UnsupportedDomain, "sample cloud needs at least 3 N points");
      return cheb_from_samples(K.points(), N);
    }
  }
  return out;
}

double cheb_constant(const DomainSpec& K, int N) {
  if (N < 0) throw Error(Errc::InvalidArgument, "negative Chebyshev degree");
  if (N == 0) return 1.0;
  switch (K.kind()) {
    case DomainKind::Segment: return 2.0 * std::pow(std::abs(K.b() - K.a()) / 4.0, N);
    case DomainKind::Disk: return std::pow(K.radius(), N);
    case DomainKind::Samples: return cheb_system(K, N).constant;
  }
  return 1.0;
}

std::vector<cplx> sample_domain(const DomainSpec& K, int M, double eps) {
  std::vector<cplx> out;
  switch (K.kind()) {
    case DomainKind::Segment: {
      if (M <= 1) return {eps * K.segment_point(0.0)};
      out.reserve(static_cast<size_t>(M));
      for (int k = 0; k < M; ++k)
        out.push_back(eps * K.segment_point(-std::cos(k * std::numbers::pi / (M - 1))));
      return out;
    }
    case DomainKind::Disk: {
      const int count = std::max(M, 1);
      out.reserve(static_cast<size_t>(count + 1));
      for (int k = 0; k < count; ++k)
        out.push_back(std::polar(eps * K.radius(), 2.0 * std::numbers::pi * k / count));
      out.push_back(0.0);
      return out;
    }
    case DomainKind::Samples: {
      out = K.points();
      for (auto& z : out) z *= eps;
      return out;
    }
  }
  return out;
}

double uniform_norm(const std::function<cplx(cplx)>& g, const DomainSpec& K, double eps, int M) {
  const auto points = sample_domain(K, M, eps);
  double best = -1.0;
  size_t arg = 0;
  for (size_t i = 0; i < points.size(); ++i) {
    const double v = std::abs(g(points[i]));
    if (v > best) {
      best = v;
      arg = i;
    }
  }
  if (K.kind() != DomainKind::Segment || points.size() < 3) return best;

  const auto param = [&](size_t k) { return -std::cos(k * std::numbers::pi / (points.size() - 1)); };
  const auto h = [&](double t) { return std::abs(g(eps * K.segment_point(t))); };
  const double lo = param(arg == 0 ? 0 : arg - 1);
  const double hi = param(std::min(arg + 1, points.size() - 1));
  const double mid = param(arg);
  if (arg == 0 || arg + 1 == points.size()) {
    // Endpoint maximizer: look for an interior bump next to it.
    const double inner = 0.5 * (lo + hi);
    const double f_inner = h(inner);
    if (f_inner > best) best = std::max(best, parabolic_max(h, lo, inner, hi));
    return best;
  }
  return std::max(best, parabolic_max(h, lo, mid, hi));
}

}  // namespace ratcheb
