#include "ratcheb/divdiff.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ratcheb/errors.hpp"

namespace ratcheb {

NodeMultiset::NodeMultiset(std::vector<cplx> nodes) : nodes_(std::move(nodes)) {
  delta_ = kConfluencyFactor * (1.0 + max_abs());
  cluster_.reserve(nodes_.size());
  for (const auto& z : nodes_) {
    int found = -1;
    for (size_t c = 0; c < distinct_.size(); ++c) {
      if (std::abs(z - distinct_[c]) <= delta_) {
        found = static_cast<int>(c);
        break;
      }
    }
    if (found < 0) {
      found = static_cast<int>(distinct_.size());
      distinct_.push_back(z);
      multiplicity_.push_back(0);
    }
    ++multiplicity_[static_cast<size_t>(found)];
    cluster_.push_back(found);
  }
  for (size_t a = 0; a < distinct_.size(); ++a)
    for (size_t b = a + 1; b < distinct_.size(); ++b)
      if (std::abs(distinct_[a] - distinct_[b]) < kConditioningThreshold) near_confluent_ = true;
}

std::vector<cplx> NodeMultiset::grouped() const {
  std::vector<cplx> out;
  out.reserve(nodes_.size());
  for (size_t c = 0; c < distinct_.size(); ++c)
    out.insert(out.end(), static_cast<size_t>(multiplicity_[c]), distinct_[c]);
  return out;
}

double NodeMultiset::max_abs() const noexcept {
  double out = 0.0;
  for (const auto& z : nodes_) out = std::max(out, std::abs(z));
  return out;
}

NodeMultiset NodeMultiset::scaled(cplx factor) const {
  std::vector<cplx> out = nodes_;
  for (auto& z : out) z *= factor;
  return NodeMultiset(std::move(out));
}

NodeMultiset NodeMultiset::with_appended(cplx z) const {
  std::vector<cplx> out = nodes_;
  out.push_back(z);
  return NodeMultiset(std::move(out));
}

DividedDifferenceTable dd_table(const HoloFunction& g, const NodeMultiset& nodes) {
  if (nodes.empty()) throw Error(Errc::InvalidArgument, "divided difference of an empty node set");
  for (const auto& z : nodes.nodes())
    if (!g.contains(z)) throw Error(Errc::NodeOutsideDomain, "node outside the holomorphy disk of " + g.name());

  const bool all_distinct = nodes.distinct().size() == nodes.size();
  DividedDifferenceTable table;
  table.order = all_distinct ? nodes.nodes() : nodes.grouped();
  table.near_confluent = nodes.near_confluent();

  const auto& x = table.order;
  const size_t count = x.size();
  // Cluster ids along the working order; grouped order keeps clusters contiguous.
  std::vector<int> cluster(count);
  if (all_distinct) {
    for (size_t i = 0; i < count; ++i) cluster[i] = static_cast<int>(i);
  } else {
    size_t pos = 0;
    for (size_t c = 0; c < nodes.distinct().size(); ++c)
      for (int k = 0; k < nodes.multiplicities()[c]; ++k) cluster[pos++] = static_cast<int>(c);
  }

  std::vector<cplx> d(count);
  for (size_t i = 0; i < count; ++i) d[i] = g(x[i]);
  double factorial = 1.0;
  for (size_t level = 1; level < count; ++level) {
    factorial *= static_cast<double>(level);
    for (size_t i = count - 1; i >= level; --i) {
      if (cluster[i] == cluster[i - level]) {
        d[i] = g.deriv(static_cast<int>(level), x[i]) / factorial;
      } else {
        d[i] = (d[i] - d[i - 1]) / (x[i] - x[i - level]);
      }
      if (i == level) break;
    }
  }
  table.values = std::move(d);
  return table;
}

std::vector<cplx> dd_full_table(const HoloFunction& g, const NodeMultiset& nodes) {
  return dd_table(g, nodes).values;
}

cplx dd_recursive(const HoloFunction& g, const NodeMultiset& nodes) {
  return dd_table(g, nodes).values.back();
}

cplx dd_contour(const HoloFunction& g, const NodeMultiset& nodes, double contour_radius,
                int quad_points) {
  if (nodes.empty()) throw Error(Errc::InvalidArgument, "divided difference of an empty node set");
  if (quad_points < 32) throw Error(Errc::InvalidArgument, "contour quadrature needs at least 32 points");
  if (!(contour_radius > nodes.max_abs()))
    throw Error(Errc::ContourTooSmall, "contour does not enclose every node");
  if (!(contour_radius < g.domain_radius()))
    throw Error(Errc::ContourOutsideDomain, "contour leaves the holomorphy disk of " + g.name());

  cplx acc = 0.0;
  for (int k = 0; k < quad_points; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / quad_points;
    const cplx s = std::polar(contour_radius, theta);
    cplx denom = 1.0;
    for (const auto& z : nodes.nodes()) denom *= (s - z);
    acc += g(s) * s / denom;
  }
  return acc / static_cast<double>(quad_points);
}

cplx dd_contour(const HoloFunction& g, const NodeMultiset& nodes) {
  const double reach = nodes.max_abs();
  double radius = std::min(2.0 * reach + 0.5, 0.9 * g.domain_radius());
  if (radius <= reach) radius = 0.5 * (reach + g.domain_radius());
  return dd_contour(g, nodes, radius, 512);
}

}  // namespace ratcheb
