#include "ratcheb/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ratcheb/errors.hpp"
#include "ratcheb/pade.hpp"

namespace ratcheb {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_eps_list(const std::vector<double>& eps_list) {
  if (eps_list.empty()) throw Error(Errc::InvalidArgument, "eps list is empty");
  for (size_t i = 0; i < eps_list.size(); ++i) {
    if (!(eps_list[i] > 0.0)) throw Error(Errc::InvalidArgument, "eps values must be positive");
    if (i > 0 && !(eps_list[i] < eps_list[i - 1]))
      throw Error(Errc::InvalidArgument, "eps list must be strictly decreasing");
  }
}

cplx nonzero_amn(const HoloFunction& f, int m, int n) {
  const auto pade = pade_approx(f, m, n);
  if (pade.degenerate) throw Error(Errc::DegeneratePade, "Pade approximant is degenerate");
  if (std::abs(pade.a_mn) <= 1e-14)
    throw Error(Errc::DegeneratePade, "a_mn vanishes, so the error law predicts nothing");
  return pade.a_mn;
}

}  // namespace

double predicted_error(const HoloFunction& f, int m, int n, const DomainSpec& K, double eps) {
  const int N = m + n + 1;
  return cheb_constant(K, N) * std::abs(nonzero_amn(f, m, n)) * std::pow(eps, N);
}

double matched_node_distance(const std::vector<cplx>& rescaled, const std::vector<cplx>& tau) {
  if (rescaled.size() != tau.size() || rescaled.empty()) return kInf;
  auto by_position = [](cplx x, cplx y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  };
  std::vector<cplx> a = rescaled, b = tau;
  std::sort(a.begin(), a.end(), by_position);
  std::sort(b.begin(), b.end(), by_position);
  std::vector<bool> used_a(a.size(), false), used_b(b.size(), false);
  double worst = 0.0;
  for (size_t round = 0; round < a.size(); ++round) {
    double best = kInf;
    size_t bi = 0, bj = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      if (used_a[i]) continue;
      for (size_t j = 0; j < b.size(); ++j) {
        if (used_b[j]) continue;
        const double d = std::abs(a[i] - b[j]);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    used_a[bi] = used_b[bj] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t k = std::min(x.size(), y.size());
  if (k < 2) return std::numeric_limits<double>::quiet_NaN();
  const size_t start = k >= 3 ? k - 3 : 0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double cnt = 0;
  for (size_t i = start; i < k; ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    cnt += 1;
  }
  return (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
}

double pade_cheb_ratio_limit(const DomainSpec& K, int m, int n) {
  const int N = m + n + 1;
  return std::pow(K.max_abs(), N) / cheb_constant(K, N);
}

SweepResult run_sweep(const HoloFunction& f, int m, int n, const DomainSpec& K,
                      const std::vector<double>& eps_list, const SweepOptions& opts) {
  check_eps_list(eps_list);
  const int N = m + n + 1;
  const cplx amn = nonzero_amn(f, m, n);
  const ChebSystem cheb = cheb_system(K, N);
  const auto grid = sample_domain(K, std::max(opts.profile_grid, 2), 1.0);

  SweepResult out;
  for (double eps : eps_list) {
    SweepRecord rec;
    rec.eps = eps;
    const MinimaxResult best = best_approx(f, m, n, K, eps, opts.minimax);
    rec.uniform_error = best.uniform_error;
    rec.predicted = cheb.constant * std::abs(amn) * std::pow(eps, N);
    rec.ratio = rec.uniform_error / rec.predicted;
    rec.winding = best.winding;
    rec.converged = best.converged;
    rec.warnings = best.warnings;

    std::vector<cplx> rescaled;
    for (auto z : best.nodes_extracted.nodes()) rescaled.push_back(z / eps);
    rec.node_distance = matched_node_distance(rescaled, cheb.nodes);

    const double scale = std::pow(eps, N);
    rec.pointwise_residual = 0.0;
    for (auto z : grid) {
      const cplx rescaled_err = (best.r(eps * z) - f(eps * z)) / scale;
      rec.pointwise_residual = std::max(rec.pointwise_residual, std::abs(rescaled_err - amn * cheb.monic_poly(z)));
    }
    out.records.push_back(std::move(rec));
  }

  std::vector<double> xs, ys;
  for (const auto& r : out.records) {
    xs.push_back(r.eps);
    ys.push_back(std::abs(r.ratio - 1.0));
  }
  out.slope = loglog_slope(xs, ys);
  out.nodes_monotone = true;
  out.profile_decreasing = true;
  for (size_t i = 1; i < out.records.size(); ++i) {
    const auto& prev = out.records[i - 1];
    const auto& cur = out.records[i];
    if (!(cur.node_distance * 1.3 <= prev.node_distance)) out.nodes_monotone = false;
    if (!(cur.pointwise_residual <= prev.pointwise_residual)) out.profile_decreasing = false;
  }
  return out;
}

SweepResult sweep_uniform_error(const HoloFunction& f, int m, int n, const DomainSpec& K,
                                const std::vector<double>& eps_list, const SweepOptions& opts) {
  return run_sweep(f, m, n, K, eps_list, opts);
}

SweepResult sweep_node_convergence(const HoloFunction& f, int m, int n, const DomainSpec& K,
                                   const std::vector<double>& eps_list, const SweepOptions& opts) {
  return run_sweep(f, m, n, K, eps_list, opts);
}

SweepResult sweep_pointwise_profile(const HoloFunction& f, int m, int n, const DomainSpec& K,
                                    const std::vector<double>& eps_list, int grid_size,
                                    const SweepOptions& opts) {
  SweepOptions o = opts;
  o.profile_grid = grid_size;
  return run_sweep(f, m, n, K, eps_list, o);
}

std::vector<double> error_ratio_pade_cheb(const HoloFunction& f, int m, int n, const DomainSpec& K,
                                          const std::vector<double>& eps_list, const SweepOptions& opts) {
  check_eps_list(eps_list);
  const auto pade = pade_approx(f, m, n);
  std::vector<double> ratios;
  for (double eps : eps_list) {
    MinimaxOptions mo = opts.minimax;
    mo.extract = false;
    const auto best = best_approx(f, m, n, K, eps, mo);
    const double pade_err =
        uniform_norm([&](cplx z) { return pade.r(z) - f(z); }, K, eps, opts.minimax.grid);
    ratios.push_back(pade_err / best.uniform_error);
  }
  return ratios;
}

}  // namespace ratcheb
