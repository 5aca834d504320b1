#pragma once

#include <vector>

#include "ratcheb/funclib.hpp"
#include "ratcheb/numkernel.hpp"

namespace ratcheb {

/// Ordered list of interpolation nodes with repetitions.
///
/// Nodes closer than the confluency threshold
/// delta = 1e-9 (1 + max |node|) are treated as one node of higher
/// multiplicity. Clusters are formed greedily in input order, each
/// represented by its first member.
class NodeMultiset {
 public:
  static constexpr double kConfluencyFactor = 1e-9;
  static constexpr double kConditioningThreshold = 1e-6;

  NodeMultiset() = default;
  explicit NodeMultiset(std::vector<cplx> nodes);
  NodeMultiset(std::initializer_list<cplx> nodes) : NodeMultiset(std::vector<cplx>(nodes)) {}

  const std::vector<cplx>& nodes() const noexcept { return nodes_; }
  size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }
  double confluency_threshold() const noexcept { return delta_; }

  const std::vector<cplx>& distinct() const noexcept { return distinct_; }
  const std::vector<int>& multiplicities() const noexcept { return multiplicity_; }
  /// Cluster index of every node, parallel to nodes().
  const std::vector<int>& cluster_index() const noexcept { return cluster_; }

  /// Nodes reordered so that each cluster is contiguous (clusters in order of
  /// first appearance), every member replaced by its representative.
  std::vector<cplx> grouped() const;

  /// Two distinct clusters closer than 1e-6: the divided-difference quotient
  /// is still used there but loses accuracy.
  bool near_confluent() const noexcept { return near_confluent_; }

  double max_abs() const noexcept;
  NodeMultiset scaled(cplx factor) const;
  NodeMultiset with_appended(cplx z) const;

 private:
  std::vector<cplx> nodes_;
  double delta_ = kConfluencyFactor;
  std::vector<cplx> distinct_;
  std::vector<int> multiplicity_;
  std::vector<int> cluster_;
  bool near_confluent_ = false;
};

/// Prefix divided differences g[x_0], g[x_0,x_1], ... together with the node
/// order x they refer to (the caller's order when all nodes are distinct,
/// the grouped order otherwise).
struct DividedDifferenceTable {
  std::vector<cplx> order;
  std::vector<cplx> values;
  bool near_confluent = false;
};

DividedDifferenceTable dd_table(const HoloFunction& g, const NodeMultiset& nodes);

/// g[z_0, ..., z_j] for every prefix j in one pass.
std::vector<cplx> dd_full_table(const HoloFunction& g, const NodeMultiset& nodes);

/// g[z_0, ..., z_N] by the confluent Newton recurrence.
cplx dd_recursive(const HoloFunction& g, const NodeMultiset& nodes);

/// (1 / 2 pi i) \oint g(s) / prod (s - z_j) ds over |s| = contour_radius by the
/// trapezoidal rule with quad_points nodes.
cplx dd_contour(const HoloFunction& g, const NodeMultiset& nodes, double contour_radius,
                int quad_points);

/// Radius min(2 max|z| + 0.5, 0.9 domain_radius) and 512 points.
cplx dd_contour(const HoloFunction& g, const NodeMultiset& nodes);

}  // namespace ratcheb
