#pragma once

// The subduction space as the intersection of the layer spaces, and the
// alternative route through the graph's minimal equation set.

#include <span>
#include <vector>

#include "subduce/layerspace.hpp"
#include "subduce/subgraph.hpp"

namespace subduce {

struct TolerancePolicy {
  /// Singular values below rank_cutoff * max(sigma_max, operand scale) count as zero.
  double rank_cutoff = 1e-9;
  double residual_tol = 1e-10;
  double orthonormality_tol = 1e-10;

  /// Throws InputError unless every tolerance lies in (0, 1e-3).
  void validate() const;
};

/// Basis of the intersection of `spaces`, processed pairwise in list order.
/// Each step keeps the current space block-sparse (blocks = connected
/// supports), so only the coupled part of the grid is ever densified.
/// The result is orthonormal; an empty basis means the intersection is {0}.
/// Throws InputError when `spaces` is empty or ambient dimensions differ.
SubspaceBasis intersect(std::span<const SubspaceBasis> spaces, const TolerancePolicy& tol = {});

/// Layers -> layer spaces -> intersect, in ascending layer order. With no
/// layers (n = 2) the whole ambient space is returned.
SubspaceBasis solve_via_layers(const Grid& grid, const TolerancePolicy& tol = {});

/// Nullspace of the sparse system assembled from minimal_equation_edges,
/// rows carrying the alpha / beta coefficients of the generator equations.
SubspaceBasis solve_via_graph(const Grid& grid, const TolerancePolicy& tol = {},
                              const EquationOptions& options = {});
SubspaceBasis solve_via_graph(const Partition& lambda, const Partition& lambda1,
                              const Partition& lambda2, const TolerancePolicy& tol = {},
                              const EquationOptions& options = {});

/// Dimension of the subduction space.
std::size_t multiplicity(const Grid& grid, const TolerancePolicy& tol = {});
std::size_t multiplicity(const Partition& lambda, const Partition& lambda1, const Partition& lambda2,
                         const TolerancePolicy& tol = {});

}  // namespace subduce
