#include "ratcheb/minimax.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "ratcheb/errors.hpp"
#include "ratcheb/newton_pade.hpp"
#include "ratcheb/pade.hpp"

namespace ratcheb {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kActiveFraction = 0.98;
constexpr double kWeightFloor = 1e-12;
constexpr int kContourPoints = 512;

cplx eval_t(const std::vector<cplx>& c, cplx t) {
  cplx acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RationalFunction from_scaled(const std::vector<cplx>& a, const std::vector<cplx>& b, double eps, int m,
                             int n) {
  std::vector<cplx> pa(a.size()), qb(b.size());
  double scale = 1.0;
  for (size_t k = 0; k < a.size(); ++k, scale /= eps) pa[k] = a[k] * scale;
  scale = 1.0;
  for (size_t k = 0; k < b.size(); ++k, scale /= eps) qb[k] = b[k] * scale;
  return RationalFunction(ComplexPolynomial(pa), ComplexPolynomial(qb), m, n);
}

// How the samples are laid out, which decides what counts as a local peak of
// the error: consecutive on a segment, cyclic around a circle (the disk's
// centre point is left out), nearest neighbours for a scattered cloud.
struct PeakLayout {
  enum class Kind { Linear, Cyclic, Cloud } kind = Kind::Linear;
  size_t count = 0;
  std::vector<std::vector<size_t>> neighbours;
};

PeakLayout make_layout(const DomainSpec& K, const std::vector<cplx>& z) {
  PeakLayout L;
  switch (K.kind()) {
    case DomainKind::Segment:
      L.kind = PeakLayout::Kind::Linear;
      L.count = z.size();
      break;
    case DomainKind::Disk:
      L.kind = PeakLayout::Kind::Cyclic;
      L.count = z.size() - 1;
      break;
    case DomainKind::Samples: {
      L.kind = PeakLayout::Kind::Cloud;
      L.count = z.size();
      const size_t k = std::min<size_t>(6, z.size() - 1);
      L.neighbours.resize(z.size());
      std::vector<size_t> idx(z.size());
      for (size_t i = 0; i < z.size(); ++i) {
        for (size_t j = 0; j < z.size(); ++j) idx[j] = j;
        std::partial_sort(idx.begin(), idx.begin() + static_cast<long>(k + 1), idx.end(),
                          [&](size_t x, size_t y) { return std::abs(z[x] - z[i]) < std::abs(z[y] - z[i]); });
        for (size_t j = 0; j <= k; ++j)
          if (idx[j] != i) L.neighbours[i].push_back(idx[j]);
      }
      break;
    }
  }
  return L;
}

std::vector<size_t> local_peaks(const PeakLayout& L, const std::vector<double>& mag) {
  std::vector<size_t> peaks;
  const size_t c = L.count;
  if (c == 0) return peaks;
  if (c == 1) return {0};
  for (size_t i = 0; i < c; ++i) {
    bool peak = true;
    switch (L.kind) {
      case PeakLayout::Kind::Linear:
        if (i > 0 && mag[i - 1] > mag[i]) peak = false;
        if (i + 1 < c && mag[i + 1] >= mag[i]) peak = false;
        break;
      case PeakLayout::Kind::Cyclic:
        if (mag[(i + c - 1) % c] > mag[i] || mag[(i + 1) % c] >= mag[i]) peak = false;
        break;
      case PeakLayout::Kind::Cloud:
        for (size_t j : L.neighbours[i])
          if (mag[j] > mag[i] || (mag[j] == mag[i] && j < i)) peak = false;
        break;
    }
    if (peak) peaks.push_back(i);
  }
  return peaks;
}

struct Levelling {
  size_t active = 0;
  double spread = kInf;  // max/min - 1 over active peaks
  std::vector<size_t> peaks;
};

Levelling levelling(const PeakLayout& L, const std::vector<double>& mag) {
  Levelling out;
  const auto peaks = local_peaks(L, mag);
  double top = 0.0;
  for (size_t i : peaks) top = std::max(top, mag[i]);
  if (!(top > 0.0) || !std::isfinite(top)) return out;
  double low = top;
  for (size_t i : peaks) {
    if (mag[i] >= kActiveFraction * top) {
      out.peaks.push_back(i);
      low = std::min(low, mag[i]);
    }
  }
  out.active = out.peaks.size();
  out.spread = top / low - 1.0;
  return out;
}

// Number of sign alternations (plus one) along the active peaks of a real
// signed error.
int alternation_count(const std::vector<size_t>& peaks, const std::vector<double>& signed_err) {
  int count = 0;
  int last = 0;
  for (size_t i : peaks) {
    const int s = signed_err[i] > 0 ? 1 : (signed_err[i] < 0 ? -1 : 0);
    if (s == 0) continue;
    if (s != last) {
      ++count;
      last = s;
    }
  }
  return count;
}

// One Lawson step: coefficients (in t = z / eps) from least-squares weights.
using Solver = std::function<void(const std::vector<double>& s, std::vector<cplx>& a, std::vector<cplx>& b)>;

struct Iterate {
  std::vector<cplx> a, b;
  std::vector<double> mag;
  std::vector<cplx> qv;
  double emax = kInf;
};

struct LawsonOutcome {
  Iterate best;
  int iters = 0;
  bool converged = false;
  double spread = kInf;
};

Iterate evaluate(const std::vector<cplx>& a, const std::vector<cplx>& b, const std::vector<cplx>& t,
                 const std::vector<cplx>& fz) {
  Iterate it{a, b, std::vector<double>(t.size()), std::vector<cplx>(t.size()), 0.0};
  double bnorm = 0.0;
  for (auto c : b) bnorm = std::max(bnorm, std::abs(c));
  for (size_t i = 0; i < t.size(); ++i) {
    const cplx q = eval_t(b, t[i]);
    const cplx p = eval_t(a, t[i]);
    it.qv[i] = q;
    const double e = std::abs(q) > 1e-14 * bnorm ? std::abs(p / q - fz[i]) : kInf;
    it.mag[i] = std::isfinite(e) ? e : kInf;
    it.emax = std::max(it.emax, it.mag[i]);
  }
  return it;
}

LawsonOutcome lawson(const std::vector<cplx>& t, const std::vector<cplx>& fz, const PeakLayout& layout,
                     size_t required_peaks, const Iterate& warm, const Solver& solve, const MinimaxOptions& opts) {
  const size_t M = t.size();
  std::vector<double> w(M, 1.0);
  std::vector<cplx> qprev(M, 1.0);
  if (std::isfinite(warm.emax) && warm.emax > 0.0) {
    for (size_t i = 0; i < M; ++i) w[i] = std::max(warm.mag[i] / warm.emax, kWeightFloor);
    qprev = warm.qv;
  }
  LawsonOutcome out;
  out.best = warm;
  std::vector<double> s(M);
  for (int iter = 1; iter <= opts.max_iters; ++iter) {
    double qmax = 0.0;
    for (auto q : qprev) qmax = std::max(qmax, std::abs(q));
    for (size_t i = 0; i < M; ++i) {
      const double qa = std::max(std::abs(qprev[i]), 1e-8 * qmax);
      s[i] = w[i] / (qa * qa);
    }
    std::vector<cplx> a, b;
    solve(s, a, b);
    Iterate cur = evaluate(a, b, t, fz);
    out.iters = iter;
    if (!std::isfinite(cur.emax)) break;
    const Levelling lev = levelling(layout, cur.mag);
    if (cur.emax < out.best.emax) out.best = cur;
    if (lev.active >= required_peaks && lev.spread <= opts.lawson_tol) {
      out.best = cur;
      out.converged = true;
      out.spread = lev.spread;
      break;
    }
    double wmax = 0.0;
    for (size_t i = 0; i < M; ++i) {
      w[i] *= cur.mag[i];
      wmax = std::max(wmax, w[i]);
    }
    if (!(wmax > 0.0)) break;
    for (auto& x : w) x = std::max(x / wmax, kWeightFloor);
    qprev = cur.qv;
  }
  if (!out.converged) out.spread = levelling(layout, out.best.mag).spread;
  return out;
}

// Scaled-variable coefficients of an interpolant: c_k eps^k.
void to_scaled(const RationalFunction& r, double eps, std::vector<cplx>& a, std::vector<cplx>& b) {
  a.assign(static_cast<size_t>(r.m() + 1), 0.0);
  b.assign(static_cast<size_t>(r.n() + 1), 0.0);
  double scale = 1.0;
  for (int k = 0; k <= r.m(); ++k, scale *= eps) a[static_cast<size_t>(k)] = r.num().coeff(k) * scale;
  scale = 1.0;
  for (int k = 0; k <= r.n(); ++k, scale *= eps) b[static_cast<size_t>(k)] = r.den().coeff(k) * scale;
}

double uniform_error_of(const RationalFunction& r, const HoloFunction& f, const DomainSpec& K, double eps,
                        int grid) {
  try {
    return uniform_norm([&](cplx z) { return r(z) - f(z); }, K, eps, grid);
  } catch (const Error& e) {
    if (e.code() == Errc::PoleAtEvaluationPoint) return kInf;
    throw;
  }
}

bool real_problem(const DomainSpec& K, const std::vector<cplx>& fz) {
  if (K.kind() != DomainKind::Segment || K.a().imag() != 0.0 || K.b().imag() != 0.0) return false;
  double fmax = 0.0, imax = 0.0;
  for (auto v : fz) {
    fmax = std::max(fmax, std::abs(v));
    imax = std::max(imax, std::abs(v.imag()));
  }
  return imax <= 1e-14 * fmax;
}

double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Exchange polish for real f on a real interval. Lawson's tail converges
// sublinearly on dense grids, so once it has located the alternation set we
// switch to exchange steps: take the m+n+2 alternating extrema of the error,
// refine them off the grid, and solve the levelled equations
// p(x_k) - q(x_k) (f(x_k) + s_k h) = 0 (q_0 = 1) by Newton's method.
class ExchangePolish {
 public:
  ExchangePolish(const HoloFunction& f, double eps, int m, int n, std::vector<double> grid)
      : f_(f), eps_(eps), m_(m), n_(n), t_(std::move(grid)) {}

  struct Fit {
    std::vector<double> a, b;
    double spread = kInf;
    double emax = kInf;
    bool levelled = false;
  };

  Fit run(std::vector<double> a, std::vector<double> b, double tol, int max_steps) const {
    Fit best;
    if (b.empty() || std::abs(b[0]) <= 1e-8 * max_abs(b)) return best;
    const double b0 = b[0];
    for (auto& x : a) x /= b0;
    for (auto& x : b) x /= b0;
    const size_t need = static_cast<size_t>(m_ + n_ + 2);
    for (int step = 0; step < max_steps; ++step) {
      std::vector<double> e(t_.size());
      for (size_t i = 0; i < t_.size(); ++i) {
        const double q = horner(b, t_[i]);
        if (!(q > 0.0)) return best;  // q(0) = 1, so a sign change means a pole
        e[i] = horner(a, t_[i]) / q - fval(t_[i]);
      }
      auto ref = alternating_extrema(e);
      if (ref.size() < need) return best;
      reduce(ref, e, need);
      std::vector<double> x(need), E(need);
      double lo = kInf, hi = 0.0, grid_max = 0.0;
      for (double v : e) grid_max = std::max(grid_max, std::abs(v));
      for (size_t k = 0; k < need; ++k) {
        x[k] = refine(a, b, ref[k]);
        E[k] = err(a, b, x[k]);
        lo = std::min(lo, std::abs(E[k]));
        hi = std::max(hi, std::abs(E[k]));
      }
      const double emax = std::max(hi, grid_max);
      const double spread = emax / lo - 1.0;
      if (emax < best.emax) best = Fit{a, b, spread, emax, spread <= tol};
      if (spread <= tol) return best;
      if (!newton(a, b, x, E)) return best;
    }
    return best;
  }

 private:
  static double max_abs(const std::vector<double>& v) {
    double mx = 0.0;
    for (double x : v) mx = std::max(mx, std::abs(x));
    return mx;
  }

  double fval(double x) const { return f_(eps_ * x).real(); }

  double err(const std::vector<double>& a, const std::vector<double>& b, double x) const {
    return horner(a, x) / horner(b, x) - fval(x);
  }

  // Index of the largest |e| in every maximal run of constant sign.
  static std::vector<size_t> alternating_extrema(const std::vector<double>& e) {
    std::vector<size_t> out;
    size_t i = 0;
    while (i < e.size()) {
      const bool pos = e[i] >= 0.0;
      size_t arg = i;
      while (i < e.size() && (e[i] >= 0.0) == pos) {
        if (std::abs(e[i]) > std::abs(e[arg])) arg = i;
        ++i;
      }
      out.push_back(arg);
    }
    return out;
  }

  // Drop extrema until `need` remain, keeping the sign alternation.
  static void reduce(std::vector<size_t>& ref, const std::vector<double>& e, size_t need) {
    while (ref.size() > need) {
      if (ref.size() == need + 1) {
        if (std::abs(e[ref.front()]) < std::abs(e[ref.back()])) ref.erase(ref.begin());
        else ref.pop_back();
        continue;
      }
      size_t k = 0;
      for (size_t j = 1; j < ref.size(); ++j)
        if (std::abs(e[ref[j]]) < std::abs(e[ref[k]])) k = j;
      if (k == 0 || k + 1 == ref.size()) {
        ref.erase(ref.begin() + static_cast<long>(k));
        continue;
      }
      // Removing an interior extremum leaves two same-sign neighbours; keep the larger.
      const size_t drop = std::abs(e[ref[k - 1]]) < std::abs(e[ref[k + 1]]) ? k - 1 : k + 1;
      ref.erase(ref.begin() + static_cast<long>(std::max(k, drop)));
      ref.erase(ref.begin() + static_cast<long>(std::min(k, drop)));
    }
  }

  // Golden-section maximization of |e| between the neighbouring grid points.
  double refine(const std::vector<double>& a, const std::vector<double>& b, size_t idx) const {
    double l = t_[idx > 0 ? idx - 1 : idx];
    double r = t_[idx + 1 < t_.size() ? idx + 1 : idx];
    auto g = [&](double x) { return std::abs(err(a, b, x)); };
    double best_x = t_[idx], best = g(best_x);
    for (double endpoint : {l, r})
      if (g(endpoint) > best) {
        best = g(endpoint);
        best_x = endpoint;
      }
    if (r > l) {
      const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
      double x1 = r - phi * (r - l), x2 = l + phi * (r - l);
      double g1 = g(x1), g2 = g(x2);
      for (int it = 0; it < 80 && r - l > 1e-15 * (1.0 + std::abs(l)); ++it) {
        if (g1 > g2) {
          r = x2;
          x2 = x1;
          g2 = g1;
          x1 = r - phi * (r - l);
          g1 = g(x1);
        } else {
          l = x1;
          x1 = x2;
          g1 = g2;
          x2 = l + phi * (r - l);
          g2 = g(x2);
        }
      }
      const double xm = 0.5 * (l + r);
      if (g(xm) > best) best_x = xm;
    }
    return best_x;
  }

  bool newton(std::vector<double>& a, std::vector<double>& b, const std::vector<double>& x,
              const std::vector<double>& E) const {
    const int K = m_ + n_ + 2;
    std::vector<double> s(static_cast<size_t>(K)), fx(static_cast<size_t>(K));
    double h = 0.0;
    for (int k = 0; k < K; ++k) {
      s[static_cast<size_t>(k)] = ((k % 2 == 0) ? 1.0 : -1.0) * (E[0] >= 0.0 ? 1.0 : -1.0);
      fx[static_cast<size_t>(k)] = fval(x[static_cast<size_t>(k)]);
      h += s[static_cast<size_t>(k)] * E[static_cast<size_t>(k)] / K;
    }
    // unknowns: a_0..a_m, b_1..b_n, h
    Eigen::VectorXd u(K);
    for (int k = 0; k <= m_; ++k) u(k) = a[static_cast<size_t>(k)];
    for (int k = 1; k <= n_; ++k) u(m_ + k) = b[static_cast<size_t>(k)];
    u(K - 1) = h;
    for (int it = 0; it < 30; ++it) {
      Eigen::MatrixXd J(K, K);
      Eigen::VectorXd F(K);
      for (int i = 0; i < K; ++i) {
        const double xi = x[static_cast<size_t>(i)], si = s[static_cast<size_t>(i)];
        const double target = fx[static_cast<size_t>(i)] + si * u(K - 1);
        double p = 0.0, q = 1.0, xk = 1.0;
        for (int k = 0; k <= std::max(m_, n_); ++k, xk *= xi) {
          if (k <= m_) {
            p += u(k) * xk;
            J(i, k) = xk;
          }
          if (k >= 1 && k <= n_) {
            q += u(m_ + k) * xk;
            J(i, m_ + k) = -xk * target;
          }
        }
        J(i, K - 1) = -q * si;
        F(i) = p - q * target;
      }
      const Eigen::VectorXd du = J.partialPivLu().solve(-F);
      if (!du.allFinite()) return false;
      u += du;
      if (du.norm() <= 1e-15 * (1.0 + u.norm())) break;
    }
    if (!u.allFinite()) return false;
    for (int k = 0; k <= m_; ++k) a[static_cast<size_t>(k)] = u(k);
    for (int k = 1; k <= n_; ++k) b[static_cast<size_t>(k)] = u(m_ + k);
    return true;
  }

  const HoloFunction& f_;
  double eps_;
  int m_, n_;
  std::vector<double> t_;
};

cplx g_value(const RationalFunction& r, const HoloFunction& f, cplx z) { return r(z) - f(z); }

cplx g_derivative(const RationalFunction& r, const HoloFunction& f, const ComplexPolynomial& dp,
                  const ComplexPolynomial& dq, cplx z) {
  const cplx p = r.num()(z), q = r.den()(z);
  return (dp(z) * q - p * dq(z)) / (q * q) - f.deriv(1, z);
}

void check_scaled_domain(const HoloFunction& f, const DomainSpec& K, double eps) {
  if (!(eps > 0.0)) throw Error(Errc::InvalidArgument, "eps must be positive");
  if (eps * K.max_abs() >= f.domain_radius())
    throw Error(Errc::NodeOutsideDomain, "eps K leaves the analyticity disk of " + f.name());
}

// Zero extraction after a Lawson run; failures become warnings.
void attach_nodes(MinimaxResult& res, const HoloFunction& f, const DomainSpec& K, double eps, int m, int n,
                  const MinimaxOptions& opts) {
  res.rho = opts.rho ? *opts.rho : node_radius(K, m, n);
  if (!opts.extract) return;
  const int count = m + n + 1;
  const double radius = eps * res.rho;
  if (radius >= f.domain_radius()) {
    res.warnings.push_back("node circle |z| = eps rho leaves the analyticity disk; nodes not extracted");
    return;
  }
  try {
    res.winding = winding_number(res.r, f, radius);
  } catch (const Error& e) {
    res.winding = -1;
    res.warnings.push_back(e.what());
    return;
  }
  if (res.winding != count) {
    res.warnings.push_back("WindingMismatch: winding number " + std::to_string(res.winding) + " but " +
                           std::to_string(count) + " interpolation nodes expected");
    return;
  }
  try {
    res.nodes_extracted = extract_nodes(res.r, f, eps, res.rho, count);
  } catch (const Error& e) {
    res.warnings.push_back(e.what());
  }
}

}  // namespace

double node_radius(const DomainSpec& K, int m, int n) {
  const int N = m + n + 1;
  return 2.0 * cheb_constant(K, N) / cheb_constant(K, N - 1) + K.max_abs();
}

int winding_number(const RationalFunction& r, const HoloFunction& f, double radius, int quad_points) {
  const auto dp = r.num().derivative();
  const auto dq = r.den().derivative();
  cplx acc = 0.0;
  for (int j = 0; j < quad_points; ++j) {
    const cplx z = std::polar(radius, 2.0 * std::numbers::pi * j / quad_points);
    const cplx g = g_value(r, f, z);
    if (g == cplx{0.0}) throw Error(Errc::WindingMismatch, "r - f vanishes on the contour");
    acc += g_derivative(r, f, dp, dq, z) * z / g;
  }
  acc /= static_cast<double>(quad_points);
  const double w = std::round(acc.real());
  if (!std::isfinite(acc.real()) || std::abs(acc - cplx{w}) > 0.1)
    throw Error(Errc::WindingMismatch, "argument-principle quadrature did not settle on an integer");
  return static_cast<int>(w);
}

NodeMultiset extract_nodes(const RationalFunction& r, const HoloFunction& f, double eps, double rho,
                           int count) {
  if (count < 1) throw Error(Errc::InvalidArgument, "node count must be positive");
  if (!(eps > 0.0) || !(rho > 0.0)) throw Error(Errc::InvalidArgument, "eps and rho must be positive");
  const double R = eps * rho;
  if (R >= f.domain_radius()) throw Error(Errc::NodeOutsideDomain, "node circle leaves the analyticity disk");
  const int w = winding_number(r, f, R, kContourPoints);
  if (w != count)
    throw Error(Errc::WindingMismatch,
                "winding number " + std::to_string(w) + " differs from " + std::to_string(count));

  // Power sums of the zeros in u = z / R from contour moments of g'/g.
  const auto dp = r.num().derivative();
  const auto dq = r.den().derivative();
  std::vector<cplx> sums(static_cast<size_t>(count + 1), 0.0);
  double gmax = 0.0;
  for (int j = 0; j < kContourPoints; ++j) {
    const cplx u = std::polar(1.0, 2.0 * std::numbers::pi * j / kContourPoints);
    const cplx z = R * u;
    const cplx g = g_value(r, f, z);
    gmax = std::max(gmax, std::abs(g));
    const cplx L = g_derivative(r, f, dp, dq, z) * z / g;
    cplx uk = 1.0;
    for (int k = 0; k <= count; ++k, uk *= u) sums[static_cast<size_t>(k)] += uk * L;
  }
  for (auto& s : sums) s /= static_cast<double>(kContourPoints);

  // Newton identities: elementary symmetric polynomials from power sums.
  std::vector<cplx> e(static_cast<size_t>(count + 1), 0.0);
  e[0] = 1.0;
  for (int k = 1; k <= count; ++k) {
    cplx acc = 0.0;
    for (int i = 1; i <= k; ++i) {
      const double sign = (i % 2 == 1) ? 1.0 : -1.0;
      acc += sign * e[static_cast<size_t>(k - i)] * sums[static_cast<size_t>(i)];
    }
    e[static_cast<size_t>(k)] = acc / static_cast<double>(k);
  }
  std::vector<cplx> c(static_cast<size_t>(count + 1));
  for (int k = 0; k <= count; ++k)
    c[static_cast<size_t>(count - k)] = ((k % 2 == 0) ? 1.0 : -1.0) * e[static_cast<size_t>(k)];
  auto roots = poly_roots(ComplexPolynomial(c));

  std::vector<cplx> zeros;
  zeros.reserve(roots.size());
  for (auto u : roots) {
    cplx z = R * u;
    double res = std::abs(g_value(r, f, z));
    for (int it = 0; it < 40 && res > 0.0; ++it) {
      const cplx d = g_derivative(r, f, dp, dq, z);
      if (d == cplx{0.0}) break;
      const cplx cand = z - g_value(r, f, z) / d;
      if (std::abs(cand) >= R) break;
      const double cres = std::abs(g_value(r, f, cand));
      if (!(cres < res)) break;
      z = cand;
      res = cres;
    }
    if (res > 1e-9 * gmax)
      throw Error(Errc::NewtonDivergence, "a contour-moment zero did not polish to a zero of r - f");
    zeros.push_back(z);
  }
  std::sort(zeros.begin(), zeros.end(), [](cplx x, cplx y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return NodeMultiset(std::move(zeros));
}

MinimaxResult best_approx(const HoloFunction& f, int m, int n, const DomainSpec& K, double eps,
                          const MinimaxOptions& opts) {
  if (m < 0 || n < 0) throw Error(Errc::InvalidArgument, "degrees must be non-negative");
  if (opts.grid < m + n + 2) throw Error(Errc::InvalidArgument, "grid too coarse for the degrees");
  if (opts.max_iters < 0 || !(opts.lawson_tol > 0.0))
    throw Error(Errc::InvalidArgument, "max_iters must be >= 0 and lawson_tol > 0");
  check_scaled_domain(f, K, eps);

  const auto z = sample_domain(K, opts.grid, eps);
  const size_t M = z.size();
  std::vector<cplx> t(M), fz(M);
  for (size_t i = 0; i < M; ++i) {
    t[i] = z[i] / eps;
    fz[i] = f(z[i]);
  }
  const int cols = m + n + 2;
  Eigen::MatrixXcd B(static_cast<long>(M), cols);
  for (size_t i = 0; i < M; ++i) {
    cplx tk = 1.0;
    for (int k = 0; k <= std::max(m, n); ++k, tk *= t[i]) {
      if (k <= m) B(static_cast<long>(i), k) = tk;
      if (k <= n) B(static_cast<long>(i), m + 1 + k) = -fz[i] * tk;
    }
  }
  Solver solve = [&](const std::vector<double>& s, std::vector<cplx>& a, std::vector<cplx>& b) {
    Eigen::MatrixXcd A = B;
    for (size_t i = 0; i < M; ++i) A.row(static_cast<long>(i)) *= std::sqrt(s[i]);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullV);
    const Eigen::VectorXcd v = svd.matrixV().col(cols - 1);
    a.assign(v.data(), v.data() + m + 1);
    b.assign(v.data() + m + 1, v.data() + cols);
  };

  MinimaxResult res;
  Iterate warm;
  RationalFunction warm_r;
  bool have_warm = false;
  try {
    const auto interp = interp_at_scaled_cheb(f, m, n, K, eps);
    warm_r = interp.r;
    std::vector<cplx> a, b;
    to_scaled(interp.r, eps, a, b);
    warm = evaluate(a, b, t, fz);
    have_warm = std::isfinite(warm.emax);
  } catch (const Error& e) {
    if (is_precondition(e.code()) && e.code() != Errc::NoRoots) throw;
    res.warnings.push_back(std::string("warm start unavailable: ") + e.what());
  }
  if (!have_warm) warm = Iterate{};

  const PeakLayout layout = make_layout(K, z);
  const auto out = lawson(t, fz, layout, static_cast<size_t>(cols), warm, solve, opts);
  res.lawson_iters = out.iters;
  res.converged = out.converged;
  res.levelling = out.spread;
  if (out.best.a.empty()) throw Error(Errc::LawsonStagnation, "no finite Lawson iterate");
  res.r = from_scaled(out.best.a, out.best.b, eps, m, n);
  res.uniform_error = uniform_error_of(res.r, f, K, eps, opts.grid);

  const bool real = real_problem(K, fz);
  if (real && out.iters > 0) {
    // Strip the arbitrary phase of the null vector, then polish.
    size_t big = 0;
    for (size_t k = 1; k < out.best.b.size(); ++k)
      if (std::abs(out.best.b[k]) > std::abs(out.best.b[big])) big = k;
    const cplx phase = std::abs(out.best.b[big]) / out.best.b[big];
    std::vector<double> ra, rb;
    for (auto c : out.best.a) ra.push_back((c * phase).real());
    for (auto c : out.best.b) rb.push_back((c * phase).real());
    std::vector<double> tr(M);
    for (size_t i = 0; i < M; ++i) tr[i] = t[i].real();
    const auto fit = ExchangePolish(f, eps, m, n, std::move(tr)).run(ra, rb, std::min(opts.lawson_tol, 1e-12), 40);
    if (!fit.a.empty()) {
      std::vector<cplx> ca(fit.a.begin(), fit.a.end()), cb(fit.b.begin(), fit.b.end());
      const RationalFunction polished = from_scaled(ca, cb, eps, m, n);
      const double err = uniform_error_of(polished, f, K, eps, opts.grid);
      if (err <= res.uniform_error) {
        res.r = polished;
        res.uniform_error = err;
        if (fit.spread <= opts.lawson_tol) {
          res.converged = true;
          res.levelling = fit.spread;
        }
      }
    }
  }
  if (have_warm) {
    const double warm_err = uniform_error_of(warm_r, f, K, eps, opts.grid);
    if (warm_err < res.uniform_error) {
      res.r = warm_r;
      res.uniform_error = warm_err;
      res.converged = false;
      res.levelling = levelling(layout, warm.mag).spread;
      res.warnings.push_back("Lawson did not improve on the scaled-Chebyshev interpolant");
    }
  }
  if (!std::isfinite(res.uniform_error))
    throw Error(Errc::LawsonStagnation, "best iterate has a pole on eps K");
  if (!res.converged && out.iters >= opts.max_iters)
    res.warnings.push_back("LawsonStagnation: error peaks not levelled within max_iters");

  if (real) {
    std::vector<double> mag(M), sgn(M);
    for (size_t i = 0; i < M; ++i) {
      const cplx e = res.r(z[i]) - fz[i];
      mag[i] = std::abs(e);
      sgn[i] = e.real();
    }
    res.equioscillation_count = alternation_count(levelling(layout, mag).peaks, sgn);
  }

  const auto pade = pade_approx(f, m, n);
  if (pade.degenerate || pade.a_mn == cplx{0.0}) {
    res.rho = opts.rho ? *opts.rho : node_radius(K, m, n);
    res.warnings.push_back("DegeneratePade: nodes not extracted for a degenerate or zero-a_mn pair");
    return res;
  }
  attach_nodes(res, f, K, eps, m, n, opts);
  return res;
}

UnitaryResult unitary_best_exp(int n, double eps, const MinimaxOptions& opts) {
  if (n < 0) throw Error(Errc::InvalidArgument, "degree must be non-negative");
  if (!(eps > 0.0) || !(eps < (n + 1) * std::numbers::pi))
    throw Error(Errc::InvalidArgument, "unitary best approximation needs 0 < eps < (n+1) pi");
  if (opts.grid < 2 * n + 2) throw Error(Errc::InvalidArgument, "grid too coarse for the degree");

  const HoloFunction f = registry_get("exp");
  const DomainSpec K = DomainSpec::segment(cplx{0.0, -1.0}, cplx{0.0, 1.0});
  const auto z = sample_domain(K, opts.grid, eps);
  const size_t M = z.size();
  std::vector<cplx> t(M), fz(M), half(M);
  for (size_t i = 0; i < M; ++i) {
    t[i] = z[i] / eps;
    fz[i] = f(z[i]);
    half[i] = std::exp(z[i] / 2.0);
  }
  // With q(t) = sum b_k t^k and p_k = (-1)^k conj(b_k), p - q e^z on the
  // imaginary axis equals -2i Im(q e^{z/2}) e^{z/2}; the fit is linear in
  // (Re b, Im b) over the reals.
  const int cols = 2 * (n + 1);
  Eigen::MatrixXd B(static_cast<long>(M), cols);
  for (size_t i = 0; i < M; ++i) {
    cplx tk = 1.0;
    for (int k = 0; k <= n; ++k, tk *= t[i]) {
      const cplx c = tk * half[i];
      B(static_cast<long>(i), k) = c.imag();
      B(static_cast<long>(i), n + 1 + k) = c.real();
    }
  }
  auto numerator_of = [n](const std::vector<cplx>& b) {
    std::vector<cplx> a(static_cast<size_t>(n + 1));
    for (int k = 0; k <= n; ++k) a[static_cast<size_t>(k)] = ((k % 2 == 0) ? 1.0 : -1.0) * std::conj(b[static_cast<size_t>(k)]);
    return a;
  };
  Solver solve = [&](const std::vector<double>& s, std::vector<cplx>& a, std::vector<cplx>& b) {
    Eigen::MatrixXd A = B;
    for (size_t i = 0; i < M; ++i) A.row(static_cast<long>(i)) *= std::sqrt(s[i]);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
    const Eigen::VectorXd v = svd.matrixV().col(cols - 1);
    b.resize(static_cast<size_t>(n + 1));
    for (int k = 0; k <= n; ++k) b[static_cast<size_t>(k)] = cplx{v(k), v(n + 1 + k)};
    a = numerator_of(b);
  };

  UnitaryResult out;
  MinimaxResult& res = out.best;
  Iterate warm;
  RationalFunction warm_r;
  bool have_warm = false;
  try {
    const auto interp = interp_at_scaled_cheb(f, n, n, K, eps);
    warm_r = interp.r;
    std::vector<cplx> a, b;
    to_scaled(interp.r, eps, a, b);
    warm = evaluate(numerator_of(b), b, t, fz);
    have_warm = std::isfinite(warm.emax);
  } catch (const Error& e) {
    res.warnings.push_back(std::string("warm start unavailable: ") + e.what());
  }
  if (!have_warm) warm = Iterate{};

  const PeakLayout layout = make_layout(K, z);
  const auto lw = lawson(t, fz, layout, static_cast<size_t>(2 * n + 2), warm, solve, opts);
  res.lawson_iters = lw.iters;
  res.converged = lw.converged;
  res.levelling = lw.spread;
  if (lw.best.b.empty()) throw Error(Errc::LawsonStagnation, "no finite Lawson iterate");
  res.r = from_scaled(lw.best.a, lw.best.b, eps, n, n);
  res.uniform_error = uniform_error_of(res.r, f, K, eps, opts.grid);
  if (!std::isfinite(res.uniform_error))
    throw Error(Errc::LawsonStagnation, "best iterate has a pole on eps K");
  if (!res.converged && lw.iters >= opts.max_iters)
    res.warnings.push_back("LawsonStagnation: error peaks not levelled within max_iters");

  // Signed phase error along the axis: Im(q e^{z/2}) / |q|.
  {
    std::vector<double> mag(M), sgn(M);
    for (size_t i = 0; i < M; ++i) {
      const cplx q = eval_t(lw.best.b, t[i]);
      mag[i] = std::abs(res.r(z[i]) - fz[i]);
      sgn[i] = (q * half[i]).imag() / std::abs(q);
    }
    res.equioscillation_count = alternation_count(levelling(layout, mag).peaks, sgn);
  }

  for (int j = 0; j < 100; ++j) {
    const double y = -3.0 * eps + 6.0 * eps * j / 99.0;
    out.unitarity_defect = std::max(out.unitarity_defect, std::abs(std::abs(res.r(cplx{0.0, y})) - 1.0));
  }
  if (res.converged && out.unitarity_defect > 1e-6)
    throw Error(Errc::UnitarityViolated, "|r(iy)| departs from 1 on the imaginary axis");

  attach_nodes(res, f, K, eps, n, n, opts);
  for (auto zeta : res.nodes_extracted.nodes()) {
    const double im = std::clamp(zeta.imag(), -eps, eps);
    out.node_offset = std::max(out.node_offset, std::abs(zeta - cplx{0.0, im}));
  }
  if (out.node_offset > 1e-6) res.warnings.push_back("extracted nodes leave the segment i[-eps, eps]");
  return out;
}

}  // namespace ratcheb
