#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <vector>

#include "subduce/layerspace.hpp"

namespace subduce::detail {

/// Rows acting on a handful of grid nodes: rows.cols() == nodes.size().
struct LocalConstraint {
  std::vector<std::size_t> nodes;
  Eigen::MatrixXd rows;
};

/// Right nullspace of `m` (orthonormal columns). Singular values at or below
/// cutoff * max(sigma_max, scale) are treated as zero.
Eigen::MatrixXd nullspace(const Eigen::MatrixXd& m, double cutoff, double scale);

/// A subspace of R^ambient stored as a direct sum of blocks with disjoint
/// supports, each block an orthonormal dense basis over its own nodes.
/// Nodes outside every block are identically zero in the subspace.
class BlockSpace {
 public:
  /// R^ambient itself: one 1x1 block per node.
  static BlockSpace whole(std::size_t ambient);
  /// span(basis), grouped by overlapping supports and orthonormalized.
  static BlockSpace from_basis(const SubspaceBasis& basis, double cutoff);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const;
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t largest_block() const;

  /// Restricts to the vectors annihilated by every constraint.
  void impose(const std::vector<LocalConstraint>& constraints, double cutoff);
  /// Restricts to the intersection with span(other).
  void intersect_with(const SubspaceBasis& other, double cutoff);

  /// Block columns in order of each block's least node.
  SubspaceBasis to_basis(std::string label) const;

 private:
  struct Block {
    std::vector<std::size_t> nodes;  // sorted
    Eigen::MatrixXd basis;           // nodes.size() x dim, orthonormal columns
  };

  /// Drops numerically zero rows and splits the columns into groups with
  /// disjoint supports.
  void store(const std::vector<std::size_t>& nodes, const Eigen::MatrixXd& basis,
             std::vector<Block>& out) const;

  std::size_t ambient_ = 0;
  std::vector<Block> blocks_;
};

}  // namespace subduce::detail
