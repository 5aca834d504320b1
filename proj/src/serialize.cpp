#include "ratcheb/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ratcheb/errors.hpp"

namespace ratcheb {

json to_json(cplx z) {
  if (z.imag() == 0.0) return z.real();
  return json::array({z.real(), z.imag()});
}

json to_json(const std::vector<cplx>& zs) {
  json out = json::array();
  for (auto z : zs) out.push_back(to_json(z));
  return out;
}

json to_json(const RationalFunction& r) {
  return {{"m", r.m()}, {"n", r.n()}, {"num", to_json(r.num().coeffs())}, {"den", to_json(r.den().coeffs())},
          {"defect", r.defect()}};
}

json to_json(const PadeResult& p) {
  json j = to_json(p.r);
  j["a_mn"] = to_json(p.a_mn);
  j["hankel_mn"] = to_json(p.hankel_mn);
  j["hankel_m1n1"] = to_json(p.hankel_m1n1);
  j["degenerate"] = p.degenerate;
  return j;
}

json to_json(const InterpolationResult& r) {
  json j = to_json(r.r);
  j["nodes"] = to_json(r.nodes.nodes());
  j["linearized_residual"] = r.linearized_residual;
  j["degenerate"] = r.degenerate;
  j["hermite_valid"] = r.hermite_valid;
  return j;
}

json to_json(const ChebSystem& c) {
  return {{"N", c.N}, {"nodes", to_json(c.nodes)}, {"t", c.constant}};
}

json to_json(const MinimaxResult& r) {
  json j = to_json(r.r);
  j["uniform_error"] = r.uniform_error;
  j["nodes"] = to_json(r.nodes_extracted.nodes());
  j["winding"] = r.winding;
  j["rho"] = r.rho;
  j["lawson_iters"] = r.lawson_iters;
  j["converged"] = r.converged;
  j["equioscillation_count"] = r.equioscillation_count;
  j["levelling"] = r.levelling;
  j["warnings"] = r.warnings;
  return j;
}

json to_json(const SweepRecord& rec) {
  return {{"eps", rec.eps},
          {"uniform_error", rec.uniform_error},
          {"predicted", rec.predicted},
          {"ratio", rec.ratio},
          {"node_distance", rec.node_distance},
          {"pointwise_residual", rec.pointwise_residual},
          {"winding", rec.winding},
          {"converged", rec.converged},
          {"warnings", rec.warnings}};
}

cplx cplx_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw Error(Errc::InvalidArgument, "expected a number or a [re, im] pair");
}

std::vector<cplx> cplx_list_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::InvalidArgument, "expected a list of points");
  std::vector<cplx> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(cplx_from_json(v));
  return out;
}

RationalFunction rational_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j.contains("m") || !j.contains("n"))
    throw Error(Errc::InvalidArgument, "rational function needs m, n, num and den");
  return RationalFunction(ComplexPolynomial(cplx_list_from_json(j.at("num"))),
                          ComplexPolynomial(cplx_list_from_json(j.at("den"))), j.at("m").get<int>(),
                          j.at("n").get<int>());
}

namespace {

std::vector<double> parse_numbers(const std::string& text, size_t expected, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error(Errc::InvalidArgument, "bad number '" + item + "' in " + what);
    out.push_back(v);
  }
  if (out.size() != expected)
    throw Error(Errc::InvalidArgument, what + " expects " + std::to_string(expected) + " numbers");
  return out;
}

}  // namespace

DomainSpec parse_domain(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(Errc::InvalidArgument, "domain must look like kind:args");
  const std::string kind = text.substr(0, colon);
  const std::string args = text.substr(colon + 1);
  if (kind == "interval") {
    const auto v = parse_numbers(args, 2, "interval");
    return DomainSpec::interval(v[0], v[1]);
  }
  if (kind == "segment") {
    const auto v = parse_numbers(args, 4, "segment");
    return DomainSpec::segment({v[0], v[1]}, {v[2], v[3]});
  }
  if (kind == "disk") {
    const auto v = parse_numbers(args, 1, "disk");
    return DomainSpec::disk(v[0]);
  }
  if (kind == "samples") {
    std::ifstream in(args);
    if (!in) throw Error(Errc::InvalidArgument, "cannot read sample file " + args);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw Error(Errc::InvalidArgument, std::string("sample file is not JSON: ") + e.what());
    }
    if (j.is_object() && j.contains("points")) j = j.at("points");
    return DomainSpec::samples(cplx_list_from_json(j));
  }
  throw Error(Errc::InvalidArgument, "unknown domain kind '" + kind + "'");
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string sweep_csv(const SweepResult& sweep) {
  std::string out = "eps,uniform_error,predicted,ratio,node_distance,pointwise_residual,winding,converged\n";
  for (const auto& r : sweep.records) {
    out += format_number(r.eps) + ',' + format_number(r.uniform_error) + ',' + format_number(r.predicted) + ',' +
           format_number(r.ratio) + ',' + format_number(r.node_distance) + ',' +
           format_number(r.pointwise_residual) + ',' + std::to_string(r.winding) + ',' +
           (r.converged ? "true" : "false") + '\n';
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ratcheb
