#pragma once

// Young's orthogonal representation of the adjacent transpositions.

#include <Eigen/Dense>

#include "subduce/tableaux.hpp"

namespace subduce {

struct GeneratorMatrix {
  Partition shape;
  int index = 0;
  /// Rows and columns ordered by tableau index.
  Eigen::MatrixXd entries;
};

/// D(g_i) on the standard basis of `shape` (tableaux filled from 1):
/// diagonal 1/d_i(m), off-diagonal sqrt(1 - 1/d_i(m)^2) between m and g_i(m).
GeneratorMatrix generator_matrix(const Partition& shape, int i);

/// Same, for tableaux of an arbitrary alphabet (e.g. the second factor of a
/// split, filled n1+1..n).
Eigen::MatrixXd generator_matrix(const TableauIndex& tableaux, int i);

/// Action of g_i on the product basis |m1> (x) |m2>, m1 index slow and m2
/// index fast: D1(g_i) (x) 1 for i < n1, 1 (x) D2(g_i) for i > n1.
/// Throws UndefinedActionError at i = n1.
Eigen::MatrixXd split_generator_action(const Partition& lambda1, const Partition& lambda2, int i);

/// Largest deviations from the Coxeter presentation, over all generators.
struct RepresentationReport {
  double involution = 0;    // max |D^2 - 1|
  double orthogonality = 0; // max |D D^T - 1|
  double symmetry = 0;      // max |D - D^T|
  double braid = 0;         // max |D_i D_{i+1} D_i - D_{i+1} D_i D_{i+1}|
  double commutation = 0;   // max |D_i D_j - D_j D_i|, |i - j| >= 2

  double worst() const;
};

RepresentationReport check_representation(const Partition& shape);

}  // namespace subduce
