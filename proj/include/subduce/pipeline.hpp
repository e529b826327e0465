#pragma once

// End-to-end computation of one SDC block and of every block of a
// (lambda, n1) restriction.

#include <optional>
#include <vector>

#include "subduce/orthonorm.hpp"

namespace subduce {

enum class SolveMethod { Layers, Graph };

struct ComputeOptions {
  SolveMethod method = SolveMethod::Layers;
  TolerancePolicy tolerance;
  EquationOptions equations;
  std::optional<Eigen::MatrixXd> free_factor;
  /// Fill SdcTable::residual from the full subduction matrix.
  bool residual = true;
};

SdcTable compute_sdc(const Grid& grid, const ComputeOptions& options = {});

/// max_eta |Omega_full chi_eta|_inf; 0 for an empty table.
double full_residual(const Grid& grid, const SdcTable& table);

/// max |chi^T chi / (N1 N2) - 1|; 0 for an empty table.
double orthonormality_deviation(const SdcTable& table);

/// Every (lambda1, lambda2) with |lambda1| = n1, in partitions_of order.
std::vector<SdcTable> compute_all_blocks(const Partition& lambda, int n1, const ComputeOptions& options = {});

}  // namespace subduce
