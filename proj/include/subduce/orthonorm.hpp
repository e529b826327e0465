#pragma once

// Orthonormal multiplicity separation of a subduction space and the
// unitarity checks on the resulting standard -> split transformation.

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "subduce/layerspace.hpp"
#include "subduce/solver.hpp"

namespace subduce {

/// tau = chi^T chi / (N1 N2) for a basis chi of the subduction space.
struct GramForm {
  Eigen::MatrixXd tau;
};

/// sigma = O_tau D_tau^{-1/2} O, with sigma^T tau sigma = 1.
struct SylvesterFactors {
  Eigen::MatrixXd eigenvectors;  // O_tau, columns sign-fixed
  Eigen::VectorXd eigenvalues;   // D_tau, ascending
  Eigen::MatrixXd free_factor;   // O (identity unless supplied)
  Eigen::MatrixXd sigma;
};

/// a sqrt(b) / c with b square-free, c > 0, gcd(|a|, c) = 1.
struct Surd {
  long a = 0;
  long b = 1;
  long c = 1;

  double value() const;
  std::string to_string() const;
  bool operator==(const Surd&) const = default;
};

struct SdcTable {
  Partition lambda;
  Partition lambda1;
  Partition lambda2;
  int n1 = 0;
  std::size_t dim = 0;   // N
  std::size_t dim1 = 0;  // N1
  std::size_t dim2 = 0;  // N2
  /// max_eta |Omega v_eta|_inf, filled in by the caller; negative when unset.
  double residual = -1;
  TolerancePolicy tolerance;
  GramForm gram;
  SylvesterFactors factors;
  /// Grid-size x multiplicity; column eta holds <lambda; m | lambda1, lambda2; m1, m2>_eta
  /// at row flat(m, m1, m2). Each column has squared norm N1 N2.
  Eigen::MatrixXd coefficients;

  std::size_t multiplicity() const { return static_cast<std::size_t>(coefficients.cols()); }
  std::size_t split_dim() const { return dim1 * dim2; }
  double value(std::size_t eta, std::size_t m, std::size_t m1, std::size_t m2) const;
  SubspaceBasis basis() const;
};

/// Throws DegenerateInputError for an empty basis.
GramForm gram(const SubspaceBasis& basis, std::size_t split_dim);

/// Eigendecomposition of tau (eigenvalues ascending; within a cluster of
/// equal eigenvalues the eigenvectors are the Gram-Schmidt orthonormalization
/// of the cluster projector's columns; each eigenvector's largest entry is
/// made positive). A tau within 1e-12 of the identity gives sigma = 1
/// exactly. Throws DegenerateInputError when tau is not symmetric positive
/// definite, InputError when `free_factor` is not orthogonal of matching size.
SylvesterFactors sylvester(const GramForm& gram, const std::optional<Eigen::MatrixXd>& free_factor = {});

/// chi sigma, then each column's first nonzero entry (flat order) made positive.
/// A zero-dimensional basis gives an empty table.
SdcTable orthonormalize(const Grid& grid, const SubspaceBasis& basis, const TolerancePolicy& tol = {},
                        const std::optional<Eigen::MatrixXd>& free_factor = {});

struct UnitarityReport {
  std::size_t dim = 0;
  double column_deviation = 0;  // max |U^T U - 1|
  double row_deviation = 0;     // max |U U^T - 1|

  double worst() const { return std::max(column_deviation, row_deviation); }
};

/// Assembles the N x N standard -> split matrix from every block of one
/// (lambda, n1) and measures its orthogonality. Throws DegenerateInputError
/// when the blocks do not account for all N dimensions.
UnitarityReport verify_unitarity(std::span<const SdcTable> tables);

/// Number of phase and parameter choices in an orthonormal separation of
/// multiplicity mu: (2^(mu-1) + 1) + mu (mu - 1) / 2. Throws InputError for mu < 1.
std::uint64_t freedom_count(int mu);

/// Smallest (c, b, |a|) with |x - a sqrt(b) / c| < tol, b <= b_max, c <= c_max.
std::optional<Surd> identify_surd(double x, int b_max = 50, int c_max = 50, double tol = 1e-9);

}  // namespace subduce
