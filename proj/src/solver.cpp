#include "subduce/solver.hpp"

#include <cmath>
#include <map>

#include "block_space.hpp"
#include "parallel.hpp"
#include "subduce/errors.hpp"

namespace subduce {

void TolerancePolicy::validate() const {
  for (double t : {rank_cutoff, residual_tol, orthonormality_tol}) {
    if (!(t > 0 && t < 1e-3)) throw InputError("tolerances must lie in (0, 1e-3)");
  }
}

SubspaceBasis intersect(std::span<const SubspaceBasis> spaces, const TolerancePolicy& tol) {
  tol.validate();
  if (spaces.empty()) throw InputError("intersect needs at least one space");
  for (const auto& s : spaces) {
    if (s.ambient != spaces.front().ambient) throw InputError("intersect: ambient dimensions differ");
  }
  auto current = detail::BlockSpace::from_basis(spaces.front(), tol.rank_cutoff);
  for (std::size_t k = 1; k < spaces.size(); ++k) current.intersect_with(spaces[k], tol.rank_cutoff);
  return current.to_basis("intersection");
}

SubspaceBasis solve_via_layers(const Grid& grid, const TolerancePolicy& tol) {
  const auto layers = build_layers(grid);
  if (layers.empty()) return detail::BlockSpace::whole(grid.size()).to_basis("intersection");
  std::vector<SubspaceBasis> spaces(layers.size());
  detail::parallel_for(layers.size(), [&](std::size_t k) { spaces[k] = layer_space(layers[k], grid.size()); });
  return intersect(spaces, tol);
}

namespace {

// Generator equation at `node` for layer i:
//   alpha <m; m12> - beta_m <g m; m12> + beta_m12 <m; g m12> = 0
detail::LocalConstraint equation_row(const Grid& grid, const Node& node, int i) {
  const int dm = grid.distance_standard(node, i);
  const int ds = grid.distance_split(node, i);
  const double inv_m = 1.0 / dm;
  const double inv_s = 1.0 / ds;
  detail::LocalConstraint row;
  std::vector<double> coeffs{inv_s - inv_m};
  row.nodes.push_back(node.flat);
  const Node gm = grid.move_standard(node, i);
  if (gm != node) {
    row.nodes.push_back(gm.flat);
    coeffs.push_back(-std::sqrt(1.0 - inv_m * inv_m));
  }
  const Node gs = grid.move_split(node, i);
  if (gs != node) {
    row.nodes.push_back(gs.flat);
    coeffs.push_back(std::sqrt(1.0 - inv_s * inv_s));
  }
  row.rows = Eigen::Map<const Eigen::RowVectorXd>(coeffs.data(), static_cast<Eigen::Index>(coeffs.size()));
  return row;
}

}  // namespace

SubspaceBasis solve_via_graph(const Grid& grid, const TolerancePolicy& tol, const EquationOptions& options) {
  tol.validate();
  const auto layers = build_layers(grid);
  const auto graph = build_subduction_graph(grid, layers);
  const auto equations = minimal_equation_edges(grid, graph, layers, options);

  std::map<int, std::vector<detail::LocalConstraint>> by_layer;
  for (const auto& eq : equations) by_layer[eq.layer].push_back(equation_row(grid, eq.node, eq.layer));

  auto space = detail::BlockSpace::whole(grid.size());
  for (const auto& [i, rows] : by_layer) space.impose(rows, tol.rank_cutoff);
  return space.to_basis("graph");
}

SubspaceBasis solve_via_graph(const Partition& lambda, const Partition& lambda1, const Partition& lambda2,
                              const TolerancePolicy& tol, const EquationOptions& options) {
  return solve_via_graph(Grid(lambda, lambda1, lambda2), tol, options);
}

std::size_t multiplicity(const Grid& grid, const TolerancePolicy& tol) {
  return solve_via_layers(grid, tol).dim();
}

std::size_t multiplicity(const Partition& lambda, const Partition& lambda1, const Partition& lambda2,
                         const TolerancePolicy& tol) {
  return multiplicity(Grid(lambda, lambda1, lambda2), tol);
}

}  // namespace subduce
