#include "subduce/pipeline.hpp"

#include "subduce/errors.hpp"
#include "subduce/oracles.hpp"

namespace subduce {

SdcTable compute_sdc(const Grid& grid, const ComputeOptions& options) {
  options.tolerance.validate();
  const SubspaceBasis basis = options.method == SolveMethod::Graph
                                  ? solve_via_graph(grid, options.tolerance, options.equations)
                                  : solve_via_layers(grid, options.tolerance);
  std::optional<Eigen::MatrixXd> free_factor;
  if (options.free_factor && !basis.empty()) free_factor = options.free_factor;
  SdcTable table = orthonormalize(grid, basis, options.tolerance, free_factor);
  if (options.residual) table.residual = full_residual(grid, table);
  return table;
}

double full_residual(const Grid& grid, const SdcTable& table) {
  if (table.multiplicity() == 0) return 0.0;
  const FullOmega omega = build_full_omega(grid);
  if (omega.matrix.rows() == 0) return 0.0;
  const Eigen::MatrixXd r = omega.matrix * table.coefficients;
  return r.cwiseAbs().maxCoeff();
}

double orthonormality_deviation(const SdcTable& table) {
  const auto mu = static_cast<Eigen::Index>(table.multiplicity());
  if (mu == 0) return 0.0;
  const Eigen::MatrixXd g =
      table.coefficients.transpose() * table.coefficients / static_cast<double>(table.split_dim());
  return (g - Eigen::MatrixXd::Identity(mu, mu)).cwiseAbs().maxCoeff();
}

std::vector<SdcTable> compute_all_blocks(const Partition& lambda, int n1, const ComputeOptions& options) {
  const int n = lambda.size();
  if (n1 < 1 || n1 >= n) throw InputError("n1 must lie in 1..n-1");
  std::vector<SdcTable> tables;
  for (const auto& lambda1 : partitions_of(n1)) {
    for (const auto& lambda2 : partitions_of(n - n1)) {
      tables.push_back(compute_sdc(Grid(lambda, lambda1, lambda2), options));
    }
  }
  return tables;
}

}  // namespace subduce
