#include "subduce/subgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "parallel.hpp"
#include "union_find.hpp"
#include "subduce/errors.hpp"

namespace subduce {

// ---------------------------------------------------------------------------
// Grid

Grid::Grid(Partition lambda, Partition lambda1, Partition lambda2) {
  if (lambda.empty() || lambda1.empty() || lambda2.empty()) {
    throw InputError("all three partitions must be non-empty");
  }
  if (lambda.size() != lambda1.size() + lambda2.size()) {
    throw InputError("|" + lambda.to_string() + "| != |" + lambda1.to_string() + "| + |" +
                     lambda2.to_string() + "|");
  }
  const int n1 = lambda1.size();
  standard_ = TableauIndex(std::move(lambda), 1);
  first_ = TableauIndex(std::move(lambda1), 1);
  second_ = TableauIndex(std::move(lambda2), n1 + 1);
}

Node Grid::node(std::size_t flat) const {
  const std::size_t m2 = flat % dim2();
  const std::size_t rest = flat / dim2();
  return Node{rest / dim1(), rest % dim1(), m2, flat};
}

Node Grid::node(std::size_t m, std::size_t m1, std::size_t m2) const {
  return Node{m, m1, m2, (m * dim1() + m1) * dim2() + m2};
}

std::vector<int> Grid::layer_indices() const {
  std::vector<int> out;
  for (int i = 1; i <= n() - 1; ++i) {
    if (i != n1()) out.push_back(i);
  }
  return out;
}

void Grid::check_layer_index(int i) const {
  if (i == n1()) {
    throw UndefinedActionError("g_" + std::to_string(i) + " is not a generator of S_" +
                               std::to_string(n1()) + " x S_" + std::to_string(n2()));
  }
  if (i < 1 || i > n() - 1) {
    throw RangeError("layer index " + std::to_string(i) + " outside 1.." + std::to_string(n() - 1));
  }
}

int Grid::distance_standard(const Node& node, int i) const { return standard_.distance(node.m, i); }

int Grid::distance_split(const Node& node, int i) const {
  check_layer_index(i);
  return i < n1() ? first_.distance(node.m1, i) : second_.distance(node.m2, i);
}

Node Grid::move_standard(const Node& node, int i) const {
  return this->node(standard_.move(node.m, i), node.m1, node.m2);
}

Node Grid::move_split(const Node& node, int i) const {
  check_layer_index(i);
  if (i < n1()) return this->node(node.m, first_.move(node.m1, i), node.m2);
  return this->node(node.m, node.m1, second_.move(node.m2, i));
}

std::string Grid::label(const Node& node) const {
  return std::to_string(node.m + 1) + ":" + std::to_string(node.m1 + 1) + ":" +
         std::to_string(node.m2 + 1);
}

std::vector<Node> build_grid(const Grid& grid) {
  std::vector<Node> nodes;
  nodes.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) nodes.push_back(grid.node(k));
  return nodes;
}

Node apply_generator_node(const Grid& grid, const Node& node, int i) {
  return grid.move_split(grid.move_standard(node, i), i);
}

// ---------------------------------------------------------------------------
// Configurations and layers

std::string_view to_string(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::Singlet: return "singlet";
    case ConfigKind::VerticalBridge: return "vertical_bridge";
    case ConfigKind::HorizontalBridge: return "horizontal_bridge";
    case ConfigKind::Crossing: return "crossing";
  }
  return "unknown";
}

double Configuration::alpha() const { return 1.0 / d_split - 1.0 / d_standard; }

bool Configuration::trivial_kernel() const {
  // d = +-1 on both sides: alpha is 0 or +-2, decided in integers.
  return kind == ConfigKind::Singlet && d_split != d_standard;
}

Configuration configuration_of(const Grid& grid, const Node& node, int i) {
  grid.check_layer_index(i);
  const Node a = grid.move_standard(node, i);
  const Node b = grid.move_split(node, i);
  const Node ab = grid.move_split(a, i);
  const Node pole = std::min({node, a, b, ab});

  Configuration cfg;
  cfg.layer = i;
  cfg.pole = pole;
  cfg.d_standard = grid.distance_standard(pole, i);
  cfg.d_split = grid.distance_split(pole, i);
  const bool moves_m = a != node;
  const bool moves_split = b != node;
  const Node pm = grid.move_standard(pole, i);
  const Node ps = grid.move_split(pole, i);
  if (moves_m && moves_split) {
    cfg.kind = ConfigKind::Crossing;
    cfg.members = {pole, pm, ps, grid.move_split(pm, i)};
  } else if (moves_m) {
    cfg.kind = ConfigKind::VerticalBridge;
    cfg.members = {pole, pm};
  } else if (moves_split) {
    cfg.kind = ConfigKind::HorizontalBridge;
    cfg.members = {pole, ps};
  } else {
    cfg.kind = ConfigKind::Singlet;
    cfg.members = {pole};
  }
  return cfg;
}

LayerCensus Layer::census() const {
  LayerCensus c;
  for (const auto& cfg : configurations) {
    switch (cfg.kind) {
      case ConfigKind::Singlet:
        ++c.singlets;
        if (cfg.trivial_kernel()) ++c.trivial_singlets;
        break;
      case ConfigKind::VerticalBridge: ++c.vertical_bridges; break;
      case ConfigKind::HorizontalBridge: ++c.horizontal_bridges; break;
      case ConfigKind::Crossing: ++c.crossings; break;
    }
  }
  return c;
}

Layer build_layer(const Grid& grid, int i) {
  grid.check_layer_index(i);
  constexpr auto unassigned = static_cast<std::size_t>(-1);
  Layer layer;
  layer.i = i;
  layer.config_of_node.assign(grid.size(), unassigned);
  for (std::size_t flat = 0; flat < grid.size(); ++flat) {
    if (layer.config_of_node[flat] != unassigned) continue;
    Configuration cfg = configuration_of(grid, grid.node(flat), i);
    for (const Node& member : cfg.members) layer.config_of_node[member.flat] = layer.configurations.size();
    layer.configurations.push_back(std::move(cfg));
  }
  return layer;
}

std::vector<Layer> build_layers(const Grid& grid) {
  const auto indices = grid.layer_indices();
  std::vector<Layer> layers(indices.size());
  detail::parallel_for(indices.size(), [&](std::size_t k) { layers[k] = build_layer(grid, indices[k]); });
  return layers;
}

// ---------------------------------------------------------------------------
// Subduction graph

std::size_t SubductionGraph::edge_count(int layer) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.layer == layer; }));
}

namespace {

Edge make_edge(const Node& x, const Node& y, int layer, bool dashed = false) {
  return Edge{std::min(x.flat, y.flat), std::max(x.flat, y.flat), layer, dashed};
}

std::vector<Edge> layer_edges(const Layer& layer) {
  std::vector<Edge> edges;
  for (const auto& cfg : layer.configurations) {
    switch (cfg.kind) {
      case ConfigKind::Crossing:
        edges.push_back(make_edge(cfg.members[0], cfg.members[3], layer.i, cfg.d_split == cfg.d_standard));
        edges.push_back(make_edge(cfg.members[1], cfg.members[2], layer.i));
        break;
      case ConfigKind::VerticalBridge:
      case ConfigKind::HorizontalBridge:
        edges.push_back(make_edge(cfg.members[0], cfg.members[1], layer.i));
        break;
      case ConfigKind::Singlet: break;
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  return edges;
}

}  // namespace

SubductionGraph build_subduction_graph(const Grid& grid, const std::vector<Layer>& layers) {
  SubductionGraph graph;
  graph.node_count = grid.size();
  std::map<std::pair<std::size_t, std::size_t>, int> seen;
  for (const auto& layer : layers) {
    for (const Edge& e : layer_edges(layer)) {
      const auto [it, inserted] = seen.emplace(std::pair{e.a, e.b}, e.layer);
      if (!inserted) {
        throw std::logic_error("nodes " + grid.label(grid.node(e.a)) + " and " +
                               grid.label(grid.node(e.b)) + " coupled by layers " +
                               std::to_string(it->second) + " and " + std::to_string(e.layer));
      }
      graph.edges.push_back(e);
    }
  }
  return graph;
}

std::vector<EquationRef> minimal_equation_edges(const Grid& grid, const SubductionGraph& graph,
                                                const std::vector<Layer>& layers,
                                                const EquationOptions& options) {
  std::map<int, std::size_t> layer_pos;
  for (std::size_t k = 0; k < layers.size(); ++k) layer_pos[layers[k].i] = k;

  struct Arc {
    std::size_t to;
    std::size_t layer;  // position in `layers`
  };
  std::vector<std::vector<Arc>> adjacency(grid.size());
  for (const Edge& e : graph.edges) {
    const auto it = layer_pos.find(e.layer);
    if (it == layer_pos.end()) continue;
    adjacency[e.a].push_back({e.b, it->second});
    adjacency[e.b].push_back({e.a, it->second});
  }
  for (auto& arcs : adjacency) {
    std::sort(arcs.begin(), arcs.end(),
              [](const Arc& x, const Arc& y) { return std::tie(x.layer, x.to) < std::tie(y.layer, y.to); });
  }

  std::vector<std::vector<bool>> emitted(layers.size());
  for (std::size_t k = 0; k < layers.size(); ++k) emitted[k].assign(layers[k].configurations.size(), false);
  detail::UnionFind bridges(grid.size());
  std::vector<EquationRef> out;

  auto emit = [&](std::size_t lp, std::size_t ci) {
    if (emitted[lp][ci]) return;
    emitted[lp][ci] = true;
    const Configuration& cfg = layers[lp].configurations[ci];
    const int i = layers[lp].i;
    switch (cfg.kind) {
      case ConfigKind::Crossing:
        out.push_back({i, ci, EquationTag::CrossingPole, cfg.members[0]});
        out.push_back({i, ci, EquationTag::CrossingPartner, cfg.members[1]});
        break;
      case ConfigKind::VerticalBridge:
      case ConfigKind::HorizontalBridge:
        if (bridges.unite(cfg.members[0].flat, cfg.members[1].flat) || !options.prune_bridge_loops) {
          out.push_back({i, ci, EquationTag::Bridge, cfg.members[0]});
        }
        break;
      case ConfigKind::Singlet:
        if (cfg.trivial_kernel()) out.push_back({i, ci, EquationTag::Singlet, cfg.members[0]});
        break;
    }
  };

  std::vector<bool> visited(grid.size(), false);
  std::deque<std::size_t> queue;
  for (std::size_t root = 0; root < grid.size(); ++root) {
    if (visited[root]) continue;
    visited[root] = true;
    queue.push_back(root);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t lp = 0; lp < layers.size(); ++lp) {
        const std::size_t ci = layers[lp].config_of_node[u];
        if (layers[lp].configurations[ci].kind == ConfigKind::Singlet) emit(lp, ci);
      }
      for (const Arc& arc : adjacency[u]) {
        emit(arc.layer, layers[arc.layer].config_of_node[u]);
        if (!visited[arc.to]) {
          visited[arc.to] = true;
          queue.push_back(arc.to);
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// DOT

std::string export_dot(const Grid& grid, const SubductionGraph& graph, const std::vector<Layer>& layers) {
  std::ostringstream out;
  out << "graph subduction {\n";
  out << "  // lambda=" << grid.lambda().to_string() << " lambda1=" << grid.lambda1().to_string()
      << " lambda2=" << grid.lambda2().to_string() << "\n";
  out << "  node [shape=point];\n";
  for (std::size_t flat = 0; flat < grid.size(); ++flat) {
    const Node node = grid.node(flat);
    const std::size_t column = node.m1 * grid.dim2() + node.m2 + 1;
    out << "  \"" << grid.label(node) << "\" [pos=\"" << column << ",-" << node.m + 1 << "!\"";
    std::string zeros;
    for (const auto& layer : layers) {
      if (layer.configurations[layer.config_of_node[flat]].trivial_kernel()) {
        zeros += zeros.empty() ? "" : ",";
        zeros += std::to_string(layer.i);
      }
    }
    if (!zeros.empty()) out << ", xlabel=\"0" << (layers.size() > 1 ? "(" + zeros + ")" : "") << "\"";
    out << "];\n";
  }
  for (const Edge& e : graph.edges) {
    out << "  \"" << grid.label(grid.node(e.a)) << "\" -- \"" << grid.label(grid.node(e.b))
        << "\" [label=\"(" << e.layer << ")\"" << (e.dashed ? ", style=dashed" : "") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<Edge> parse_dot_edges(const Grid& grid, std::string_view dot) {
  static const std::regex edge_re(
      R"re("(\d+):(\d+):(\d+)" -- "(\d+):(\d+):(\d+)" \[label="\((\d+)\)"(, style=dashed)?\])re");
  std::vector<Edge> edges;
  const std::string text(dot);
  for (auto it = std::sregex_iterator(text.begin(), text.end(), edge_re); it != std::sregex_iterator(); ++it) {
    const auto& match = *it;
    auto at = [&](int g) { return std::stoul(match[g].str()) - 1; };
    const Node x = grid.node(at(1), at(2), at(3));
    const Node y = grid.node(at(4), at(5), at(6));
    edges.push_back(make_edge(x, y, std::stoi(match[7].str()), match[8].matched));
  }
  return edges;
}

}  // namespace subduce
