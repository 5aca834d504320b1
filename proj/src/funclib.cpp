#include "ratcheb/funclib.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "ratcheb/errors.hpp"

namespace ratcheb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double factorial(int k) {
  double out = 1.0;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

double binomial(int n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// log(1 + z) without cancellation for small |z|.
cplx complex_log1p(cplx z) {
  const cplx u = 1.0 + z;
  if (u == cplx{1.0}) return z;
  return std::log(u) * z / (u - 1.0);
}

HoloFunction make_exp() {
  return HoloFunction(
      "exp", [](int, cplx z) { return std::exp(z); }, [](int j) { return cplx{1.0 / factorial(j)}; },
      kInf);
}

HoloFunction make_geom() {
  return HoloFunction(
      "geom",
      [](int k, cplx z) { return factorial(k) / ipow(1.0 - z, k + 1); },
      [](int) { return cplx{1.0}; }, 0.95);
}

HoloFunction make_log1p() {
  return HoloFunction(
      "log1p",
      [](int k, cplx z) {
        if (k == 0) return complex_log1p(z);
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        return sign * factorial(k - 1) / ipow(1.0 + z, k);
      },
      [](int j) {
        if (j == 0) return cplx{0.0};
        return cplx{((j % 2 == 1) ? 1.0 : -1.0) / j};
      },
      0.95);
}

HoloFunction make_cosz() {
  return HoloFunction(
      "cosz",
      [](int k, cplx z) {
        switch (k % 4) {
          case 0: return std::cos(z);
          case 1: return -std::sin(z);
          case 2: return -std::cos(z);
          default: return std::sin(z);
        }
      },
      [](int j) {
        if (j % 2 == 1) return cplx{0.0};
        return cplx{((j / 2) % 2 == 0 ? 1.0 : -1.0) / factorial(j)};
      },
      kInf);
}

// 1/(1 - 2z): a rational function with a pole at 1/2.
HoloFunction make_pole2() {
  return HoloFunction(
      "pole2",
      [](int k, cplx z) { return factorial(k) * std::pow(2.0, k) / ipow(1.0 - 2.0 * z, k + 1); },
      [](int j) { return cplx{std::pow(2.0, j)}; }, 0.475);
}

const std::map<std::string, HoloFunction>& registry() {
  static const std::map<std::string, HoloFunction> table = [] {
    std::map<std::string, HoloFunction> t;
    for (auto f : {make_exp(), make_geom(), make_log1p(), make_cosz(), make_pole2()})
      t.emplace(f.name(), f);
    return t;
  }();
  return table;
}

}  // namespace

HoloFunction::HoloFunction(std::string name, DerivFn deriv, TaylorFn taylor, double domain_radius)
    : name_(std::move(name)),
      deriv_(std::move(deriv)),
      taylor_(std::move(taylor)),
      domain_radius_(domain_radius) {}

HoloFunction monomial(int k) {
  return HoloFunction(
      "z^" + std::to_string(k),
      [k](int d, cplx z) {
        if (d > k) return cplx{0.0};
        return (factorial(k) / factorial(k - d)) * ipow(z, k - d);
      },
      [k](int j) { return cplx{j == k ? 1.0 : 0.0}; }, kInf);
}

HoloFunction times_monomial(const HoloFunction& f, int k) {
  if (k == 0) return f;
  return HoloFunction(
      "z^" + std::to_string(k) + "*" + f.name(),
      [f, k](int d, cplx z) {
        cplx acc = 0.0;
        for (int i = 0; i <= std::min(d, k); ++i) {
          const cplx mono = (factorial(k) / factorial(k - i)) * ipow(z, k - i);
          acc += binomial(d, i) * mono * f.deriv(d - i, z);
        }
        return acc;
      },
      [f, k](int j) { return f.taylor(j - k); }, f.domain_radius());
}

HoloFunction registry_get(const std::string& name) {
  const auto& table = registry();
  const auto it = table.find(name);
  if (it == table.end()) throw Error(Errc::UnknownFunction, "no registered function '" + name + "'");
  return it->second;
}

std::vector<std::string> registry_names() {
  std::vector<std::string> out;
  for (const auto& [name, f] : registry()) out.push_back(name);
  return out;
}

}  // namespace ratcheb
