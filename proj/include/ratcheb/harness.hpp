#pragma once

#include <string>
#include <vector>

#include "ratcheb/domains.hpp"
#include "ratcheb/funclib.hpp"
#include "ratcheb/minimax.hpp"

namespace ratcheb {

struct SweepRecord {
  double eps = 0.0;
  double uniform_error = 0.0;
  /// t_{m+n+1} |a_mn| eps^{m+n+1}
  double predicted = 0.0;
  double ratio = 0.0;
  /// Matched max |zeta_j / eps - tau_j|; infinity when extraction failed.
  double node_distance = 0.0;
  /// max over a grid on K of |(r(eps z) - f(eps z)) / eps^{m+n+1} - a_mn prod (z - tau_j)|.
  double pointwise_residual = 0.0;
  int winding = 0;
  bool converged = false;
  std::vector<std::string> warnings;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  /// Log-log slope of |ratio - 1| against eps over the last three records.
  double slope = 0.0;
  /// Every halving-or-more of eps shrank node_distance by at least 1.3x.
  bool nodes_monotone = false;
  /// pointwise_residual is non-increasing along the sweep.
  bool profile_decreasing = false;
};

struct SweepOptions {
  MinimaxOptions minimax;
  /// Test-grid size on K for the pointwise profile.
  int profile_grid = 201;
};

/// t_{m+n+1} |a_mn| eps^{m+n+1}. Throws Errc::DegeneratePade for a degenerate
/// Pade approximant or a_mn = 0.
double predicted_error(const HoloFunction& f, int m, int n, const DomainSpec& K, double eps);

/// Greedy nearest pairs between rescaled nodes and Chebyshev nodes; infinity
/// on a size mismatch.
double matched_node_distance(const std::vector<cplx>& rescaled, const std::vector<cplx>& tau);

/// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// All record fields for every eps (strictly decreasing list).
SweepResult run_sweep(const HoloFunction& f, int m, int n, const DomainSpec& K,
                      const std::vector<double>& eps_list, const SweepOptions& opts = {});

/// Uniform error of the best approximation against the prediction.
SweepResult sweep_uniform_error(const HoloFunction& f, int m, int n, const DomainSpec& K,
                                const std::vector<double>& eps_list, const SweepOptions& opts = {});

/// Distance of the rescaled extracted nodes to the Chebyshev nodes of K.
SweepResult sweep_node_convergence(const HoloFunction& f, int m, int n, const DomainSpec& K,
                                   const std::vector<double>& eps_list, const SweepOptions& opts = {});

/// Deviation of the rescaled error from a_mn prod (z - tau_j).
SweepResult sweep_pointwise_profile(const HoloFunction& f, int m, int n, const DomainSpec& K,
                                    const std::vector<double>& eps_list, int grid_size,
                                    const SweepOptions& opts = {});

/// ||r^P - f|| / ||r^eps - f|| on eps K for every eps.
std::vector<double> error_ratio_pade_cheb(const HoloFunction& f, int m, int n, const DomainSpec& K,
                                          const std::vector<double>& eps_list, const SweepOptions& opts = {});

/// Limit of error_ratio_pade_cheb: max_{z in K} |z|^{m+n+1} / t_{m+n+1}.
double pade_cheb_ratio_limit(const DomainSpec& K, int m, int n);

}  // namespace ratcheb
