#pragma once

// Independent verification paths: the full subduction matrix built from the
// generator matrices, its dense nullspace, Littlewood-Richardson
// multiplicities and principal-angle subspace distance.

#include <Eigen/Sparse>
#include <cstddef>
#include <vector>

#include "subduce/layerspace.hpp"
#include "subduce/solver.hpp"

namespace subduce {

struct FullOmega {
  /// One row per (i, node), i ascending then node flat index.
  Eigen::SparseMatrix<double, Eigen::RowMajor> matrix;
  std::vector<int> row_layer;
  std::size_t ambient = 0;

  std::size_t rows() const { return static_cast<std::size_t>(matrix.rows()); }
};

/// Rows D(g_i) x - x (D1 (x) D2)(g_i) = 0 for each layer index i, assembled
/// from the generator matrices of `yor`.
FullOmega build_full_omega(const Grid& grid);
FullOmega build_full_omega(const Partition& lambda, const Partition& lambda1, const Partition& lambda2);

inline constexpr std::size_t kDenseNullspaceLimit = 5000;

/// Orthonormal kernel via a dense SVD. Singular values <= rank_cutoff * sigma_max
/// count as zero. Throws InputError above kDenseNullspaceLimit columns.
SubspaceBasis dense_nullspace(const FullOmega& omega, const TolerancePolicy& tol = {});

/// Number of LR skew tableaux of shape lambda/lambda1 and content lambda2.
/// Throws InputError when |lambda1| + |lambda2| != |lambda|.
std::uint64_t lr_coefficient(const Partition& lambda, const Partition& lambda1, const Partition& lambda2);

struct SubspaceDistance {
  double value = 0;
  bool dimension_mismatch = false;
};

/// Sine of the largest principal angle between the spans. Spans of different
/// dimension give value 1 with the mismatch flag set. Throws InputError when
/// the ambient dimensions differ.
SubspaceDistance subspace_distance(const SubspaceBasis& a, const SubspaceBasis& b);

}  // namespace subduce
