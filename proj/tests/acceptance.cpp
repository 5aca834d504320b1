// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "random_nodes.hpp"
#include "ratcheb/cli.hpp"
#include "ratcheb/divdiff.hpp"
#include "ratcheb/domains.hpp"
#include "ratcheb/errors.hpp"
#include "ratcheb/harness.hpp"
#include "ratcheb/minimax.hpp"
#include "ratcheb/newton_pade.hpp"
#include "ratcheb/pade.hpp"

using namespace ratcheb;

namespace {

const DomainSpec kI = DomainSpec::interval(-1, 1);
const DomainSpec kD = DomainSpec::disk(1.0);

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

MinimaxOptions acceptance_opts(double tol = 1e-3) {
  MinimaxOptions o;
  o.grid = kAcceptanceGrid;
  o.lawson_tol = tol;
  o.max_iters = 500;
  return o;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

double coeff_rel(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  const int d = std::max(a.degree(), b.degree());
  double diff = 0.0, scale = 0.0;
  for (int k = 0; k <= d; ++k) {
    diff = std::max(diff, std::abs(a.coeff(k) - b.coeff(k)));
    scale = std::max(scale, std::abs(b.coeff(k)));
  }
  return diff / scale;
}

Outcome c1() {
  double worst = 0.0;
  const auto f = registry_get("exp");
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) worst = std::max(worst, rel(leading_coeff(f, m, n), amn_exp_closed_form(m, n)));
  return {worst <= 1e-9, fmt("max relative error %.3e over 0<=m,n<=4 (tol 1e-9)", worst)};
}

Outcome c2() {
  double worst = 0.0;
  const auto f = registry_get("exp");
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
    const auto p = pade_approx(f, m, n);
    const auto r = interpolate(f, NodeMultiset(std::vector<cplx>(static_cast<size_t>(m + n + 1), 0.0)), m, n);
    worst = std::max({worst, coeff_rel(r.r.num(), p.r.num()), coeff_rel(r.r.den(), p.r.den())});
  }
  return {worst <= 1e-8, fmt("max coefficient relative deviation %.3e (tol 1e-8)", worst)};
}

Outcome c3() {
  std::mt19937_64 gen(314159);
  double worst = 0.0;
  int count = 0;
  for (const char* name : {"exp", "log1p"}) {
    const auto g = registry_get(name);
    const double reach = std::isfinite(g.domain_radius()) ? g.domain_radius() / 2 : 1.0;
    for (int trial = 0; trial < 100; ++trial, ++count) {
      const NodeMultiset ns(testutil::random_multiset(gen, reach, 9, 4));
      const cplx a = dd_recursive(g, ns), b = dd_contour(g, ns);
      worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(a)));
    }
  }
  return {worst <= 1e-8, fmt("%d multisets, max |rec - contour| / (1 + |value|) = %.3e (tol 1e-8)", count, worst)};
}

Outcome c4() {
  const auto f = registry_get("exp");
  auto ratio_at = [&](double eps) {
    const auto r = interp_at_scaled_cheb(f, 1, 1, kI, eps);
    return uniform_norm([&](cplx z) { return r.r(z) - f(z); }, kI, eps, kAcceptanceGrid) / (std::pow(eps, 3) / 48);
  };
  const double r1 = ratio_at(0.1), r05 = ratio_at(0.05);
  const double shrink = std::abs(r1 - 1.0) / std::abs(r05 - 1.0);
  return {r05 >= 0.95 && r05 <= 1.05 && shrink >= 1.5,
          fmt("ratio %.6f at eps=0.05 (in [0.95,1.05]); |ratio-1| shrinks %.3fx from 0.1 (need >= 1.5)", r05, shrink)};
}

Outcome c5() {
  const auto f = registry_get("exp");
  double worst = 0.0;
  bool all_converged = true;
  for (const auto& K : {kI, kD})
    for (auto [m, n] : {std::pair{0, 0}, {1, 0}, {1, 1}}) {
      const auto res = best_approx(f, m, n, K, 0.05, acceptance_opts(1e-7));
      all_converged = all_converged && res.converged;
      worst = std::max(worst, std::abs(res.uniform_error / predicted_error(f, m, n, K, 0.05) - 1.0));
    }
  const auto anchor = best_approx(f, 0, 0, kI, 0.05, acceptance_opts(1e-7));
  const double anchor_dev = std::abs(anchor.uniform_error / 0.05 - std::sinh(0.05) / 0.05);
  return {worst <= 0.05 && anchor_dev <= 1e-6 && all_converged,
          fmt("max |ratio-1| %.3e (tol 0.05); sinh anchor deviation %.3e (tol 1e-6); converged %s", worst, anchor_dev,
              all_converged ? "all" : "NOT all")};
}

Outcome c6() {
  SweepOptions so;
  so.minimax = acceptance_opts();
  const auto s = sweep_node_convergence(registry_get("exp"), 1, 1, kI, {0.2, 0.1, 0.05}, so);
  double min_factor = 1e300;
  bool flags = true;
  for (size_t i = 0; i < s.records.size(); ++i) {
    flags = flags && s.records[i].converged && s.records[i].winding == 3;
    if (i > 0) min_factor = std::min(min_factor, s.records[i - 1].node_distance / s.records[i].node_distance);
  }
  const double d = s.records.back().node_distance;
  return {d <= 0.05 && min_factor >= 1.3 && flags,
          fmt("distance %.4e at eps=0.05 (tol 0.05); min shrink per halving %.3f (need >= 1.3)", d, min_factor)};
}

Outcome c7() {
  SweepOptions so;
  so.minimax = acceptance_opts();
  const auto s = sweep_pointwise_profile(registry_get("exp"), 1, 1, kI, {0.2, 0.1, 0.05}, 401, so);
  const double profile_max = (1.0 / 12) * cheb_constant(kI, 3);
  const double rel_dev = s.records.back().pointwise_residual / profile_max;
  return {rel_dev <= 0.1 && s.profile_decreasing,
          fmt("deviation %.3f%% of profile max at eps=0.05 (tol 10%%); decreasing in eps: %s", 100 * rel_dev,
              s.profile_decreasing ? "yes" : "no")};
}

Outcome c8() {
  const auto f = registry_get("exp");
  int checked = 0, matched = 0;
  std::string misses;
  for (const auto& K : {kI, kD})
    for (auto [m, n] : {std::pair{0, 0}, {1, 1}, {2, 1}})
      for (double eps : {0.2, 0.1, 0.05}) {
        const auto res = best_approx(f, m, n, K, eps, acceptance_opts());
        ++checked;
        if (res.winding == m + n + 1) ++matched;
        else misses += fmt(" [%s (%d,%d) eps=%g winding %d]", K.describe().c_str(), m, n, eps, res.winding);
      }
  return {matched == checked, fmt("%d/%d winding numbers equal m+n+1%s", matched, checked, misses.c_str())};
}

Outcome c9() {
  SweepOptions so;
  so.minimax = acceptance_opts();
  const auto f = registry_get("exp");
  const double ri = error_ratio_pade_cheb(f, 1, 1, kI, {0.05}, so).front();
  const double rd = error_ratio_pade_cheb(f, 1, 1, kD, {0.05}, so).front();
  return {ri >= 3.8 && ri <= 4.2 && rd >= 0.97 && rd <= 1.03,
          fmt("interval ratio %.5f (in [3.8,4.2]); disk ratio %.5f (in [0.97,1.03])", ri, rd)};
}

Outcome c10() {
  const auto u = unitary_best_exp(1, 0.1, acceptance_opts());
  const double rel_err = std::abs(u.best.uniform_error / (1e-3 / 48) - 1.0);
  const size_t nodes = u.best.nodes_extracted.size();
  return {u.unitarity_defect <= 1e-6 && rel_err <= 0.1 && nodes == 3 && u.node_offset <= 1e-6,
          fmt("unitarity defect %.2e (tol 1e-6); error/(eps^3/48) - 1 = %.3e (tol 0.1); %zu nodes, offset %.2e "
              "(tol 1e-6)",
              u.unitarity_defect, rel_err, nodes, u.node_offset)};
}

Outcome c11() {
  std::mt19937_64 gen(271828);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::string failed;

  // Permutation invariance of divided differences on distinct nodes.
  const auto e = registry_get("exp");
  double perm = 0.0;
  for (int t = 0; t < 50; ++t) {
    std::vector<cplx> z;
    for (int k = 0; k < 7; ++k) z.push_back({0.7 * unit(gen), 0.7 * unit(gen)});
    const cplx ref = dd_recursive(e, NodeMultiset(z));
    std::shuffle(z.begin(), z.end(), gen);
    perm = std::max(perm, std::abs(dd_recursive(e, NodeMultiset(z)) - ref) / std::abs(ref));
  }
  if (perm > 1e-9) failed += " permutation";

  // Linearity in the function argument.
  const auto c = registry_get("cosz");
  const cplx alpha{0.6, 1.1}, beta{-1.7, 0.2};
  const HoloFunction comb(
      "comb", [&](int k, cplx z) { return alpha * e.deriv(k, z) + beta * c.deriv(k, z); },
      [&](int j) { return alpha * e.taylor(j) + beta * c.taylor(j); }, e.domain_radius());
  double lin = 0.0;
  for (int t = 0; t < 50; ++t) {
    const NodeMultiset ns(testutil::random_multiset(gen, 1.0, 7, 3, 0.3));
    const cplx rhs = alpha * dd_recursive(e, ns) + beta * dd_recursive(c, ns);
    lin = std::max(lin, std::abs(dd_recursive(comb, ns) - rhs) / std::max(1.0, std::abs(rhs)));
  }
  if (lin > 1e-12) failed += " linearity";

  // Chebyshev systems of eps K are eps-scaled.
  double scal = 0.0;
  for (const auto& K : {kI, kD, DomainSpec::interval(-0.3, 2.0)})
    for (int N = 1; N <= 6; ++N)
      for (double eps : {0.5, 0.05}) {
        const auto a = cheb_system(K, N), b = cheb_system(K.scaled(eps), N);
        scal = std::max(scal, std::abs(b.constant / (std::pow(eps, N) * a.constant) - 1.0));
        for (size_t j = 0; j < a.nodes.size(); ++j) scal = std::max(scal, std::abs(b.nodes[j] - eps * a.nodes[j]));
      }
  if (scal > 1e-10) failed += " scaling";

  // Equioscillation on real intervals.
  int eq_runs = 0, eq_ok = 0;
  for (const char* name : {"exp", "log1p", "cosz"}) {
    const auto f = registry_get(name);
    for (auto [m, n] : {std::pair{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}}) {
      if (pade_approx(f, m, n).degenerate) continue;
      const auto res = best_approx(f, m, n, kI, 0.1, acceptance_opts());
      ++eq_runs;
      if (res.converged && res.equioscillation_count >= m + n + 2) ++eq_ok;
      else failed += fmt(" equioscillation[%s (%d,%d)]", name, m, n);
    }
  }

  // Byte-identical CLI output.
  bool identical = true;
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"sweep", "--f", "exp", "--m", "1", "--n", "1", "--domain", "interval:-1,1", "--eps", "0.2,0.1,0.05"},
           {"sweep", "--f", "exp", "--m", "1", "--n", "1", "--domain", "disk:1", "--eps", "0.2,0.1", "--format", "csv"},
           {"unitary", "--n", "1", "--eps", "0.1"},
           {"pade", "--f", "log1p", "--m", "2", "--n", "2"}}) {
    std::ostringstream a, b, ea, eb;
    const int ca = cli_run(args, a, ea), cb = cli_run(args, b, eb);
    identical = identical && ca == cb && a.str() == b.str() && !a.str().empty();
  }
  if (!identical) failed += " cli-determinism";

  return {failed.empty(), fmt("permutation %.1e, linearity %.1e, scaling %.1e, equioscillation %d/%d, CLI %s%s%s", perm,
                              lin, scal, eq_ok, eq_runs, identical ? "byte-identical" : "DIFFERS",
                              failed.empty() ? "" : "; failed:", failed.c_str())};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1  a_mn closed form", c1},          {"2  confluent reduction", c2},    {"3  divided-difference oracle", c3},
      {"4  scaled-Chebyshev law", c4},      {"5  uniform-error law", c5},      {"6  node convergence", c6},
      {"7  pointwise profile", c7},         {"8  zero count", c8},             {"9  Pade/best error ratio", c9},
      {"10 unitary case", c10},             {"11 property suites", c11}};
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > 60.0) {
      o.pass = false;
      o.detail += " (over the 60 s budget)";
    }
    std::printf("%s  criterion %-30s %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
