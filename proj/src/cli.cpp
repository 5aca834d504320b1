#include "ratcheb/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ratcheb/errors.hpp"
#include "ratcheb/harness.hpp"
#include "ratcheb/minimax.hpp"
#include "ratcheb/newton_pade.hpp"
#include "ratcheb/pade.hpp"
#include "ratcheb/serialize.hpp"

namespace ratcheb {
namespace {

struct Common {
  std::string format = "json";
  std::string out_file;
  std::string function = "exp";
  int m = 1;
  int n = 1;
  int N = 1;
  std::string domain = "interval:-1,1";
  std::vector<double> eps;
  std::vector<std::string> nodes;
  int grid = kDefaultErrorGrid;
  double lawson_tol = 1e-3;
  int max_iters = 200;
  std::optional<double> rho;
  int profile_grid = 201;
};

// Output of one subcommand: the document and whether it reports a numerical
// failure (exit 3 after writing).
struct Emitted {
  std::string text;
  bool numerical_failure = false;
};

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string row;
  for (const auto& c : cells) {
    if (!row.empty()) row += ',';
    row += c;
  }
  return row + '\n';
}

std::string csv_cplx(cplx z) { return format_number(z.real()) + ',' + format_number(z.imag()); }

std::string csv_poly(const RationalFunction& r) {
  std::string out = "part,k,re,im\n";
  for (int k = 0; k <= r.num().degree(); ++k) out += "num," + std::to_string(k) + ',' + csv_cplx(r.num().coeff(k)) + '\n';
  for (int k = 0; k <= r.den().degree(); ++k) out += "den," + std::to_string(k) + ',' + csv_cplx(r.den().coeff(k)) + '\n';
  return out;
}

std::string csv_points(const std::vector<cplx>& pts) {
  std::string out = "index,re,im\n";
  for (size_t i = 0; i < pts.size(); ++i) out += std::to_string(i) + ',' + csv_cplx(pts[i]) + '\n';
  return out;
}

cplx parse_node(const std::string& s) {
  // "re" or "re:im"
  const auto colon = s.find(':');
  try {
    size_t used = 0;
    if (colon == std::string::npos) {
      const double re = std::stod(s, &used);
      if (used == s.size()) return re;
    } else {
      const std::string a = s.substr(0, colon), b = s.substr(colon + 1);
      size_t ub = 0;
      const double re = std::stod(a, &used);
      const double im = std::stod(b, &ub);
      if (used == a.size() && ub == b.size()) return {re, im};
    }
  } catch (const std::exception&) {
  }
  throw Error(Errc::InvalidArgument, "bad node '" + s + "' (use re or re:im)");
}

MinimaxOptions minimax_options(const Common& c) {
  MinimaxOptions o;
  o.grid = c.grid;
  o.lawson_tol = c.lawson_tol;
  o.max_iters = c.max_iters;
  o.rho = c.rho;
  return o;
}

bool csv(const Common& c) { return c.format == "csv"; }

Emitted run_pade(const Common& c) {
  const auto f = registry_get(c.function);
  const auto p = pade_approx(f, c.m, c.n);
  if (csv(c)) return {csv_poly(p.r) + "a_mn,0," + csv_cplx(p.a_mn) + '\n'};
  json j = to_json(p);
  j["function"] = c.function;
  return {dump(j)};
}

Emitted run_interp(const Common& c) {
  const auto f = registry_get(c.function);
  InterpolationResult res = [&] {
    if (!c.nodes.empty()) {
      std::vector<cplx> pts;
      for (const auto& s : c.nodes) pts.push_back(parse_node(s));
      return interpolate(f, NodeMultiset(pts), c.m, c.n);
    }
    if (c.eps.size() != 1) throw Error(Errc::InvalidArgument, "interp needs --nodes or a single --eps");
    return interp_at_scaled_cheb(f, c.m, c.n, parse_domain(c.domain), c.eps.front());
  }();
  if (csv(c)) return {csv_poly(res.r)};
  json j = to_json(res);
  j["function"] = c.function;
  if (res.hermite_valid) {
    const auto rep = hermite_check(res, f);
    j["hermite_max_deviation"] = rep.max_deviation;
    j["hermite_passed"] = rep.passed;
  }
  if (c.eps.size() == 1 && c.nodes.empty()) {
    const auto K = parse_domain(c.domain);
    j["eps"] = c.eps.front();
    j["domain"] = K.describe();
    j["uniform_error"] = uniform_norm([&](cplx z) { return res.r(z) - f(z); }, K, c.eps.front(), c.grid);
  }
  return {dump(j)};
}

Emitted run_cheb(const Common& c) {
  const auto sys = cheb_system(parse_domain(c.domain), c.N);
  if (csv(c)) return {csv_points(sys.nodes) + "t," + format_number(sys.constant) + ",0\n"};
  return {dump(to_json(sys))};
}

Emitted run_minimax(const Common& c) {
  if (c.eps.size() != 1) throw Error(Errc::InvalidArgument, "minimax needs exactly one --eps value");
  const auto f = registry_get(c.function);
  const auto K = parse_domain(c.domain);
  const auto res = best_approx(f, c.m, c.n, K, c.eps.front(), minimax_options(c));
  // winding stays 0 when extraction was skipped on purpose (degenerate input).
  const bool failed = !res.converged || res.winding < 0 || (res.winding != 0 && res.winding != c.m + c.n + 1);
  if (csv(c)) {
    std::string out = csv_poly(res.r);
    out += "uniform_error,0," + format_number(res.uniform_error) + ",0\n";
    for (size_t i = 0; i < res.nodes_extracted.size(); ++i)
      out += "node," + std::to_string(i) + ',' + csv_cplx(res.nodes_extracted.nodes()[i]) + '\n';
    return {out, failed};
  }
  json j = to_json(res);
  j["function"] = c.function;
  j["domain"] = K.describe();
  j["eps"] = c.eps.front();
  return {dump(j), failed};
}

Emitted run_sweep_cmd(const Common& c) {
  const auto f = registry_get(c.function);
  const auto K = parse_domain(c.domain);
  SweepOptions so;
  so.minimax = minimax_options(c);
  so.profile_grid = c.profile_grid;
  const auto sweep = run_sweep(f, c.m, c.n, K, c.eps, so);
  bool failed = false;
  for (const auto& r : sweep.records)
    if (!r.converged || r.winding != c.m + c.n + 1) failed = true;
  if (csv(c)) return {sweep_csv(sweep), failed};
  json recs = json::array();
  for (const auto& r : sweep.records) {
    json jr = to_json(r);
    jr["flagged"] = !r.converged || r.winding != c.m + c.n + 1;
    recs.push_back(jr);
  }
  json j = {{"function", c.function},
            {"m", c.m},
            {"n", c.n},
            {"domain", K.describe()},
            {"grid", c.grid},
            {"slope", sweep.slope},
            {"nodes_monotone", sweep.nodes_monotone},
            {"profile_decreasing", sweep.profile_decreasing},
            {"records", recs}};
  return {dump(j), failed};
}

Emitted run_ratio(const Common& c) {
  const auto f = registry_get(c.function);
  const auto K = parse_domain(c.domain);
  SweepOptions so;
  so.minimax = minimax_options(c);
  const auto ratios = error_ratio_pade_cheb(f, c.m, c.n, K, c.eps, so);
  const double limit = pade_cheb_ratio_limit(K, c.m, c.n);
  if (csv(c)) {
    std::string out = "eps,ratio,limit\n";
    for (size_t i = 0; i < ratios.size(); ++i)
      out += csv_row({format_number(c.eps[i]), format_number(ratios[i]), format_number(limit)});
    return {out};
  }
  json rows = json::array();
  for (size_t i = 0; i < ratios.size(); ++i) rows.push_back({{"eps", c.eps[i]}, {"ratio", ratios[i]}});
  json j = {{"function", c.function}, {"m", c.m},     {"n", c.n},
            {"domain", K.describe()}, {"limit", limit}, {"ratios", rows}};
  return {dump(j)};
}

Emitted run_unitary(const Common& c) {
  if (c.eps.size() != 1) throw Error(Errc::InvalidArgument, "unitary needs exactly one --eps value");
  const auto res = unitary_best_exp(c.n, c.eps.front(), minimax_options(c));
  const bool failed = !res.best.converged || res.best.winding != 2 * c.n + 1;
  if (csv(c)) {
    std::string out = csv_poly(res.best.r);
    out += "uniform_error,0," + format_number(res.best.uniform_error) + ",0\n";
    out += "unitarity_defect,0," + format_number(res.unitarity_defect) + ",0\n";
    return {out, failed};
  }
  json j = to_json(res.best);
  j["eps"] = c.eps.front();
  j["unitarity_defect"] = res.unitarity_defect;
  j["node_offset"] = res.node_offset;
  return {dump(j), failed};
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational Chebyshev and Pade approximation on shrinking domains", "ratcheb"};
  app.require_subcommand(1);
  Common c;

  auto add_format = [&c](CLI::App* sub) {
    sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", c.out_file, "write output to FILE instead of stdout");
  };
  auto add_fmn = [&c](CLI::App* sub) {
    sub->add_option("--f", c.function, "function name (exp, geom, log1p, cosz, pole2)");
    sub->add_option("--m", c.m, "numerator degree")->check(CLI::NonNegativeNumber);
    sub->add_option("--n", c.n, "denominator degree")->check(CLI::NonNegativeNumber);
  };
  auto add_lawson = [&c](CLI::App* sub) {
    sub->add_option("--domain", c.domain, "interval:a,b | segment:ar,ai,br,bi | disk:R | samples:file.json");
    sub->add_option("--grid", c.grid, "sample count M on eps K")->check(CLI::PositiveNumber);
    sub->add_option("--lawson-tol", c.lawson_tol, "levelling tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--max-iters", c.max_iters, "Lawson iteration cap")->check(CLI::NonNegativeNumber);
    sub->add_option("--rho", c.rho, "node-circle radius factor");
  };

  auto* pade = app.add_subcommand("pade", "Pade approximant and a_mn");
  add_fmn(pade);
  add_format(pade);

  auto* interp = app.add_subcommand("interp", "Newton-Pade interpolant at given or scaled Chebyshev nodes");
  add_fmn(interp);
  interp->add_option("--nodes", c.nodes, "comma-separated nodes, re or re:im")->delimiter(',');
  interp->add_option("--domain", c.domain, "domain whose Chebyshev nodes are scaled by --eps");
  interp->add_option("--eps", c.eps, "scale factor")->delimiter(',');
  interp->add_option("--grid", c.grid, "sample count for the uniform error")->check(CLI::PositiveNumber);
  add_format(interp);

  auto* cheb = app.add_subcommand("cheb-nodes", "Chebyshev nodes and constant of a domain");
  cheb->add_option("--domain", c.domain, "interval:a,b | segment:... | disk:R | samples:file.json");
  cheb->add_option("--N", c.N, "number of nodes")->check(CLI::PositiveNumber);
  add_format(cheb);

  auto* minimax = app.add_subcommand("minimax", "best approximation on eps K");
  add_fmn(minimax);
  add_lawson(minimax);
  minimax->add_option("--eps", c.eps, "scale factor")->required()->delimiter(',');
  add_format(minimax);

  auto* sweep = app.add_subcommand("sweep", "error, node and profile sweep over eps");
  add_fmn(sweep);
  add_lawson(sweep);
  sweep->add_option("--eps", c.eps, "strictly decreasing comma-separated list")->required()->delimiter(',');
  sweep->add_option("--profile-grid", c.profile_grid, "test-grid size on K")->check(CLI::PositiveNumber);
  add_format(sweep);

  auto* ratio = app.add_subcommand("ratio", "Pade to best-approximation error ratio");
  add_fmn(ratio);
  add_lawson(ratio);
  ratio->add_option("--eps", c.eps, "strictly decreasing comma-separated list")->required()->delimiter(',');
  add_format(ratio);

  auto* unitary = app.add_subcommand("unitary", "unitary best approximation to exp on eps i[-1,1]");
  unitary->add_option("--n", c.n, "degree")->check(CLI::NonNegativeNumber);
  unitary->add_option("--eps", c.eps, "scale factor")->required()->delimiter(',');
  unitary->add_option("--grid", c.grid, "sample count")->check(CLI::PositiveNumber);
  unitary->add_option("--lawson-tol", c.lawson_tol, "levelling tolerance")->check(CLI::PositiveNumber);
  unitary->add_option("--max-iters", c.max_iters, "Lawson iteration cap")->check(CLI::NonNegativeNumber);
  unitary->add_option("--rho", c.rho, "node-circle radius factor");
  add_format(unitary);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ratcheb: " << e.what() << '\n';
    return kExitUsage;
  }

  Emitted result;
  try {
    if (pade->parsed()) result = run_pade(c);
    else if (interp->parsed()) result = run_interp(c);
    else if (cheb->parsed()) result = run_cheb(c);
    else if (minimax->parsed()) result = run_minimax(c);
    else if (sweep->parsed()) result = run_sweep_cmd(c);
    else if (ratio->parsed()) result = run_ratio(c);
    else result = run_unitary(c);
  } catch (const Error& e) {
    err << "ratcheb: " << e.what() << '\n';
    return is_precondition(e.code()) ? kExitPrecondition : kExitNumerical;
  } catch (const std::exception& e) {
    err << "ratcheb: " << e.what() << '\n';
    return kExitPrecondition;
  }

  if (c.out_file.empty()) {
    out << result.text;
  } else {
    std::ofstream file(c.out_file, std::ios::binary);
    if (!file) {
      err << "ratcheb: cannot write " << c.out_file << '\n';
      return kExitPrecondition;
    }
    file << result.text;
  }
  if (result.numerical_failure) {
    err << "ratcheb: numerical failure flagged in output (Lawson stagnation or winding mismatch)\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return cli_run(args, std::cout, std::cerr);
}

}  // namespace ratcheb
