#pragma once

// Closed-form kernels of the local subduction blocks, one per i-coupling
// configuration, and their direct sum over an i-layer.

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "subduce/subgraph.hpp"

namespace subduce {

/// rho(d) = [[cos t, sin t], [sin t, -cos t]] with cos t = 1/d, sin t >= 0.
struct Rotation2 {
  int d = 1;
  double cos_theta = 1;
  double sin_theta = 0;

  /// theta in [0, pi].
  double theta() const;
  Eigen::Matrix2d matrix() const;
};

/// Throws InputError for d = 0.
Rotation2 rho(int d);

/// Unit eigenvector of rho(d) with eigenvalue `sign` (+1 or -1):
/// (cos t/2, sin t/2) for +1, (-sin t/2, cos t/2) for -1.
Eigen::Vector2d eigvec(int d, int sign);

/// Sparse vector over the grid (flat indices), entries sorted by index.
struct SparseVec {
  std::size_t length = 0;
  std::vector<std::pair<std::size_t, double>> entries;

  /// Drops entries with magnitude <= 1e-14.
  static SparseVec from_dense(const Eigen::VectorXd& dense);
  Eigen::VectorXd to_dense() const;
  double norm() const;
  double dot(const SparseVec& other) const;
};

struct SubspaceBasis {
  std::size_t ambient = 0;
  std::vector<SparseVec> vectors;
  std::string label;

  std::size_t dim() const { return vectors.size(); }
  bool empty() const { return vectors.empty(); }
  /// ambient x dim
  Eigen::MatrixXd to_dense() const;
  static SubspaceBasis from_dense(const Eigen::MatrixXd& columns, std::string label);
};

/// The local block of the subduction system at the pole, in the member order
/// of Configuration:
///   Crossing         4x4 of the alpha/beta coefficients
///   VerticalBridge   d_i(m12) 1 - rho(d_i(m))
///   HorizontalBridge rho(d_i(m12)) - d_i(m) 1
///   Singlet          (alpha)
Eigen::MatrixXd config_block(const Configuration& cfg);
/// Same block for an arbitrary pole with the given axial distances.
Eigen::MatrixXd config_block(ConfigKind kind, int d_standard, int d_split);

/// Kernel of config_block embedded in the grid: e_m (x) e_m12 and
/// ebar_m (x) ebar_m12 for crossings, the matching eigenvector of the moving
/// side for bridges, delta_pole for a singlet with alpha = 0.
std::vector<SparseVec> config_kernel(const Configuration& cfg, std::size_t ambient);

/// Direct sum of the configuration kernels of one layer, in pole order.
SubspaceBasis layer_space(const Layer& layer, std::size_t ambient);

/// Checks that the block written at each other member of the configuration
/// equals the pole block conjugated by the matching swap (eps (x) eps,
/// 1 (x) eps, eps (x) 1 for crossings; eps for bridges), to `tol`.
bool pole_change_check(const Grid& grid, const Configuration& cfg, double tol = 1e-12);

}  // namespace subduce
