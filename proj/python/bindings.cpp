#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ratcheb/cli.hpp"
#include "ratcheb/divdiff.hpp"
#include "ratcheb/domains.hpp"
#include "ratcheb/errors.hpp"
#include "ratcheb/funclib.hpp"
#include "ratcheb/harness.hpp"
#include "ratcheb/minimax.hpp"
#include "ratcheb/newton_pade.hpp"
#include "ratcheb/pade.hpp"
#include "ratcheb/serialize.hpp"

namespace py = pybind11;
using namespace ratcheb;

namespace {

MinimaxOptions make_opts(int grid, double lawson_tol, int max_iters, std::optional<double> rho) {
  MinimaxOptions o;
  o.grid = grid;
  o.lawson_tol = lawson_tol;
  o.max_iters = max_iters;
  o.rho = rho;
  return o;
}

HoloFunction as_function(const py::object& f) {
  if (py::isinstance<py::str>(f)) return registry_get(f.cast<std::string>());
  return f.cast<HoloFunction>();
}

}  // namespace

PYBIND11_MODULE(_ratcheb, m) {
  m.doc() = "Rational Chebyshev, Pade and Newton-Pade approximation on shrinking domains";

  py::register_exception<Error>(m, "RatchebError", PyExc_RuntimeError);

  py::class_<HoloFunction>(m, "HoloFunction")
      .def_property_readonly("name", &HoloFunction::name)
      .def_property_readonly("domain_radius", &HoloFunction::domain_radius)
      .def("__call__", [](const HoloFunction& f, cplx z) { return f(z); })
      .def("deriv", &HoloFunction::deriv, py::arg("k"), py::arg("z"))
      .def("taylor", &HoloFunction::taylor, py::arg("j"))
      .def("contains", &HoloFunction::contains);
  m.def("registry_get", &registry_get, py::arg("name"));
  m.def("registry_names", &registry_names);

  py::class_<RationalFunction>(m, "RationalFunction")
      .def(py::init([](std::vector<cplx> num, std::vector<cplx> den, int mm, int nn) {
             return RationalFunction(ComplexPolynomial(std::move(num)), ComplexPolynomial(std::move(den)), mm, nn);
           }),
           py::arg("num"), py::arg("den"), py::arg("m"), py::arg("n"))
      .def_property_readonly("num", [](const RationalFunction& r) { return r.num().coeffs(); })
      .def_property_readonly("den", [](const RationalFunction& r) { return r.den().coeffs(); })
      .def_property_readonly("m", &RationalFunction::m)
      .def_property_readonly("n", &RationalFunction::n)
      .def_property_readonly("defect", &RationalFunction::defect)
      .def_property_readonly("degenerate", &RationalFunction::degenerate)
      .def("__call__", [](const RationalFunction& r, cplx z) { return r(z); })
      .def("poles", &RationalFunction::poles)
      .def("to_json", [](const RationalFunction& r) { return to_json(r).dump(); })
      .def_static("from_json", [](const std::string& s) { return rational_from_json(json::parse(s)); });

  m.def("poly_roots", [](std::vector<cplx> c) { return poly_roots(ComplexPolynomial(std::move(c))); });

  m.def("dd_recursive", [](const py::object& f, std::vector<cplx> nodes) {
    return dd_recursive(as_function(f), NodeMultiset(std::move(nodes)));
  });
  m.def(
      "dd_contour",
      [](const py::object& f, std::vector<cplx> nodes, std::optional<double> radius, int points) {
        const NodeMultiset ns(std::move(nodes));
        return radius ? dd_contour(as_function(f), ns, *radius, points) : dd_contour(as_function(f), ns);
      },
      py::arg("f"), py::arg("nodes"), py::arg("radius") = py::none(), py::arg("quad_points") = 512);

  py::class_<PadeResult>(m, "PadeResult")
      .def_readonly("r", &PadeResult::r)
      .def_readonly("a_mn", &PadeResult::a_mn)
      .def_readonly("hankel_mn", &PadeResult::hankel_mn)
      .def_readonly("hankel_m1n1", &PadeResult::hankel_m1n1)
      .def_readonly("degenerate", &PadeResult::degenerate);
  m.def("pade_approx", [](const py::object& f, int mm, int nn) { return pade_approx(as_function(f), mm, nn); });
  m.def("hankel_det", [](const py::object& f, int mm, int nn) { return hankel_det(as_function(f), mm, nn); });
  m.def("leading_coeff", [](const py::object& f, int mm, int nn) { return leading_coeff(as_function(f), mm, nn); });
  m.def("amn_exp_closed_form", &amn_exp_closed_form);

  py::class_<InterpolationResult>(m, "InterpolationResult")
      .def_readonly("r", &InterpolationResult::r)
      .def_property_readonly("nodes", [](const InterpolationResult& r) { return r.nodes.nodes(); })
      .def_readonly("linearized_residual", &InterpolationResult::linearized_residual)
      .def_readonly("degenerate", &InterpolationResult::degenerate)
      .def_readonly("hermite_valid", &InterpolationResult::hermite_valid);
  m.def("interpolate", [](const py::object& f, std::vector<cplx> nodes, int mm, int nn) {
    return interpolate(as_function(f), NodeMultiset(std::move(nodes)), mm, nn);
  });

  py::class_<DomainSpec>(m, "DomainSpec")
      .def_static("interval", &DomainSpec::interval)
      .def_static("segment", &DomainSpec::segment)
      .def_static("disk", &DomainSpec::disk)
      .def_static("samples", &DomainSpec::samples)
      .def_static("parse", &parse_domain)
      .def("max_abs", &DomainSpec::max_abs)
      .def("describe", &DomainSpec::describe)
      .def("__repr__", [](const DomainSpec& K) { return "DomainSpec(" + K.describe() + ")"; });
  m.def("interp_at_scaled_cheb", [](const py::object& f, int mm, int nn, const DomainSpec& K, double eps) {
    return interp_at_scaled_cheb(as_function(f), mm, nn, K, eps);
  });

  py::class_<ChebSystem>(m, "ChebSystem")
      .def_readonly("N", &ChebSystem::N)
      .def_readonly("nodes", &ChebSystem::nodes)
      .def_readonly("constant", &ChebSystem::constant);
  m.def("cheb_system", &cheb_system, py::arg("K"), py::arg("N"));
  m.def("cheb_constant", &cheb_constant, py::arg("K"), py::arg("N"));
  m.def("sample_domain", &sample_domain, py::arg("K"), py::arg("M"), py::arg("eps"));

  py::class_<MinimaxResult>(m, "MinimaxResult")
      .def_readonly("r", &MinimaxResult::r)
      .def_readonly("uniform_error", &MinimaxResult::uniform_error)
      .def_property_readonly("nodes", [](const MinimaxResult& r) { return r.nodes_extracted.nodes(); })
      .def_readonly("winding", &MinimaxResult::winding)
      .def_readonly("rho", &MinimaxResult::rho)
      .def_readonly("lawson_iters", &MinimaxResult::lawson_iters)
      .def_readonly("converged", &MinimaxResult::converged)
      .def_readonly("equioscillation_count", &MinimaxResult::equioscillation_count)
      .def_readonly("warnings", &MinimaxResult::warnings);
  m.def(
      "best_approx",
      [](const py::object& f, int mm, int nn, const DomainSpec& K, double eps, int grid, double tol, int iters,
         std::optional<double> rho) { return best_approx(as_function(f), mm, nn, K, eps, make_opts(grid, tol, iters, rho)); },
      py::arg("f"), py::arg("m"), py::arg("n"), py::arg("K"), py::arg("eps"), py::arg("grid") = kDefaultErrorGrid,
      py::arg("lawson_tol") = 1e-3, py::arg("max_iters") = 200, py::arg("rho") = py::none());

  py::class_<UnitaryResult>(m, "UnitaryResult")
      .def_readonly("best", &UnitaryResult::best)
      .def_readonly("unitarity_defect", &UnitaryResult::unitarity_defect)
      .def_readonly("node_offset", &UnitaryResult::node_offset);
  m.def(
      "unitary_best_exp",
      [](int nn, double eps, int grid, double tol, int iters) {
        return unitary_best_exp(nn, eps, make_opts(grid, tol, iters, std::nullopt));
      },
      py::arg("n"), py::arg("eps"), py::arg("grid") = kDefaultErrorGrid, py::arg("lawson_tol") = 1e-3,
      py::arg("max_iters") = 200);

  py::class_<SweepRecord>(m, "SweepRecord")
      .def_readonly("eps", &SweepRecord::eps)
      .def_readonly("uniform_error", &SweepRecord::uniform_error)
      .def_readonly("predicted", &SweepRecord::predicted)
      .def_readonly("ratio", &SweepRecord::ratio)
      .def_readonly("node_distance", &SweepRecord::node_distance)
      .def_readonly("pointwise_residual", &SweepRecord::pointwise_residual)
      .def_readonly("winding", &SweepRecord::winding)
      .def_readonly("converged", &SweepRecord::converged);
  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("records", &SweepResult::records)
      .def_readonly("slope", &SweepResult::slope)
      .def_readonly("nodes_monotone", &SweepResult::nodes_monotone)
      .def_readonly("profile_decreasing", &SweepResult::profile_decreasing);
  m.def(
      "run_sweep",
      [](const py::object& f, int mm, int nn, const DomainSpec& K, std::vector<double> eps, int grid, double tol) {
        SweepOptions so;
        so.minimax = make_opts(grid, tol, 200, std::nullopt);
        return run_sweep(as_function(f), mm, nn, K, eps, so);
      },
      py::arg("f"), py::arg("m"), py::arg("n"), py::arg("K"), py::arg("eps_list"),
      py::arg("grid") = kDefaultErrorGrid, py::arg("lawson_tol") = 1e-3);
  m.def(
      "error_ratio_pade_cheb",
      [](const py::object& f, int mm, int nn, const DomainSpec& K, std::vector<double> eps, int grid) {
        SweepOptions so;
        so.minimax.grid = grid;
        return error_ratio_pade_cheb(as_function(f), mm, nn, K, eps, so);
      },
      py::arg("f"), py::arg("m"), py::arg("n"), py::arg("K"), py::arg("eps_list"),
      py::arg("grid") = kDefaultErrorGrid);

  m.def("cli", [](std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli_run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run a ratcheb subcommand; returns (exit_code, stdout, stderr).");
}
