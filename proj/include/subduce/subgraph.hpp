#pragma once

// The subduction grid <m; m1, m2>, its i-layers (partition of the grid into
// singlet / bridge / crossing configurations), and the subduction graph that
// overlaps all layers.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "subduce/tableaux.hpp"

namespace subduce {

/// A grid point. Indices are 0-based tableau indices; `flat` orders nodes
/// with m slowest and m2 fastest.
struct Node {
  std::size_t m = 0;
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  std::size_t flat = 0;

  bool operator==(const Node& other) const { return flat == other.flat; }
  std::strong_ordering operator<=>(const Node& other) const { return flat <=> other.flat; }
};

/// The three tableau enumerations of a subduction problem (lambda; lambda1, lambda2).
class Grid {
 public:
  /// Throws InputError unless |lambda| = |lambda1| + |lambda2|.
  Grid(Partition lambda, Partition lambda1, Partition lambda2);

  const Partition& lambda() const { return standard_.shape(); }
  const Partition& lambda1() const { return first_.shape(); }
  const Partition& lambda2() const { return second_.shape(); }
  int n() const { return lambda().size(); }
  int n1() const { return lambda1().size(); }
  int n2() const { return lambda2().size(); }

  const TableauIndex& standard() const { return standard_; }
  const TableauIndex& first() const { return first_; }
  /// lambda2 tableaux filled by n1+1..n.
  const TableauIndex& second() const { return second_; }

  std::size_t dim() const { return standard_.size(); }
  std::size_t dim1() const { return first_.size(); }
  std::size_t dim2() const { return second_.size(); }
  /// dim1() * dim2()
  std::size_t split_dim() const { return dim1() * dim2(); }
  /// N * N1 * N2
  std::size_t size() const { return dim() * split_dim(); }

  Node node(std::size_t flat) const;
  Node node(std::size_t m, std::size_t m1, std::size_t m2) const;

  /// Generators of S_{n1} x S_{n2} inside S_n: 1..n1-1, n1+1..n-1.
  std::vector<int> layer_indices() const;
  /// Throws UndefinedActionError at i = n1 and RangeError outside 1..n-1.
  void check_layer_index(int i) const;

  /// d_i(m) of the node's standard tableau.
  int distance_standard(const Node& node, int i) const;
  /// d_i(m12) of the node's tableau pair.
  int distance_split(const Node& node, int i) const;
  /// <g_i(m); m12>
  Node move_standard(const Node& node, int i) const;
  /// <m; g_i(m12)>
  Node move_split(const Node& node, int i) const;

  /// "m:m1:m2" with 1-based ranks.
  std::string label(const Node& node) const;

 private:
  TableauIndex standard_;
  TableauIndex first_;
  TableauIndex second_;
};

/// All grid nodes in flat order.
std::vector<Node> build_grid(const Grid& grid);

/// <g_i(m); g_i(m12)>; UndefinedActionError at i = n1.
Node apply_generator_node(const Grid& grid, const Node& node, int i);

enum class ConfigKind { Singlet, VerticalBridge, HorizontalBridge, Crossing };

std::string_view to_string(ConfigKind kind);

/// One i-coupling configuration. Members are listed relative to the pole p:
///   Crossing:         p, <g m; m12>, <m; g m12>, <g m; g m12>
///   VerticalBridge:   p, <g m; m12>
///   HorizontalBridge: p, <m; g m12>
///   Singlet:          p
struct Configuration {
  int layer = 0;
  ConfigKind kind = ConfigKind::Singlet;
  Node pole;
  std::vector<Node> members;
  int d_standard = 0;  // d_i(m) at the pole
  int d_split = 0;     // d_i(m12) at the pole

  /// 1/d_i(m12) - 1/d_i(m) at the pole.
  double alpha() const;
  /// Singlet with nonzero alpha: its equation forces the coefficient to 0.
  bool trivial_kernel() const;
};

/// Builds the configuration containing `node` in layer i, with the pole
/// chosen as the member of least (m, m1, m2).
Configuration configuration_of(const Grid& grid, const Node& node, int i);

struct LayerCensus {
  std::size_t singlets = 0;
  std::size_t vertical_bridges = 0;
  std::size_t horizontal_bridges = 0;
  std::size_t crossings = 0;
  std::size_t trivial_singlets = 0;  // alpha != 0

  /// Edges drawn in the layer: 2 per crossing, 1 per bridge.
  std::size_t edges() const { return 2 * crossings + vertical_bridges + horizontal_bridges; }
  bool operator==(const LayerCensus&) const = default;
};

struct Layer {
  int i = 0;
  /// In pole order.
  std::vector<Configuration> configurations;
  /// configurations index of every grid node.
  std::vector<std::size_t> config_of_node;

  LayerCensus census() const;
};

Layer build_layer(const Grid& grid, int i);
/// One layer per index of grid.layer_indices(), ascending. Layers are built
/// concurrently when SUBDUCE_THREADS allows it.
std::vector<Layer> build_layers(const Grid& grid);

struct Edge {
  std::size_t a = 0;  // flat index, a < b
  std::size_t b = 0;
  int layer = 0;
  /// Drawn dashed: the pole edge of a crossing whose pole alpha vanishes.
  bool dashed = false;

  bool operator==(const Edge& other) const {
    return a == other.a && b == other.b && layer == other.layer;
  }
};

struct SubductionGraph {
  std::size_t node_count = 0;
  /// Grouped by layer (ascending), then by (a, b).
  std::vector<Edge> edges;

  std::size_t edge_count(int layer) const;
};

/// Overlap of the given layers. Throws std::logic_error if two layers couple
/// the same node pair.
SubductionGraph build_subduction_graph(const Grid& grid, const std::vector<Layer>& layers);

enum class EquationTag { CrossingPole, CrossingPartner, Bridge, Singlet };

/// One row of the linear subduction system, written at `node` for layer i.
struct EquationRef {
  int layer = 0;
  std::size_t configuration = 0;  // index into the layer's configurations
  EquationTag tag = EquationTag::Bridge;
  Node node;
};

struct EquationOptions {
  /// Drop bridge equations whose edge closes a loop of bridge edges.
  bool prune_bridge_loops = false;
};

/// Breadth-first sweep of the graph from the least node (remaining
/// components in flat order). Each configuration is emitted once, when first
/// reached: crossings give two equations (at the pole and at <g m; m12>),
/// bridges one, singlets with nonzero alpha one.
std::vector<EquationRef> minimal_equation_edges(const Grid& grid, const SubductionGraph& graph,
                                                const std::vector<Layer>& layers,
                                                const EquationOptions& options = {});

/// DOT text; node ids "m:m1:m2" (1-based), positioned by ranks, edges
/// labelled "(i)". `layers` (optional) marks trivial singlets with xlabel 0.
std::string export_dot(const Grid& grid, const SubductionGraph& graph,
                       const std::vector<Layer>& layers = {});

/// Edge list (flat indices, labels) read back from export_dot output.
std::vector<Edge> parse_dot_edges(const Grid& grid, std::string_view dot);

}  // namespace subduce
