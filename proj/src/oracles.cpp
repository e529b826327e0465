#include "subduce/oracles.hpp"

#include <algorithm>
#include <cmath>

#include "subduce/errors.hpp"
#include "subduce/yor.hpp"

namespace subduce {

namespace {

using SparseRows = std::vector<std::vector<std::pair<std::size_t, double>>>;

SparseRows sparse_rows(const Eigen::MatrixXd& d) {
  SparseRows rows(static_cast<std::size_t>(d.rows()));
  for (Eigen::Index r = 0; r < d.rows(); ++r)
    for (Eigen::Index c = 0; c < d.cols(); ++c)
      if (d(r, c) != 0.0) rows[static_cast<std::size_t>(r)].emplace_back(static_cast<std::size_t>(c), d(r, c));
  return rows;
}

Eigen::MatrixXd orthonormal_columns(const Eigen::MatrixXd& m) {
  if (m.cols() == 0) return m;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  return qr.householderQ() * Eigen::MatrixXd::Identity(m.rows(), m.cols());
}

struct LrSearch {
  std::vector<std::pair<int, int>> cells;  // reading order
  std::vector<std::vector<int>> filling;   // by (row, col); 0 = outside or empty
  std::vector<int> inner;
  std::vector<int> content;
  std::vector<int> used;
  std::uint64_t count = 0;

  void run(std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[k];
    const auto row = static_cast<std::size_t>(r);
    int upper = static_cast<int>(content.size());
    // Rows weakly increase, so the value is at most the right neighbour's.
    if (static_cast<std::size_t>(c + 1) < filling[row].size() && filling[row][static_cast<std::size_t>(c + 1)] > 0) {
      upper = std::min(upper, filling[row][static_cast<std::size_t>(c + 1)]);
    }
    int lower = 1;
    if (r > 0 && c >= inner[row - 1]) lower = filling[row - 1][static_cast<std::size_t>(c)] + 1;
    for (int v = lower; v <= upper; ++v) {
      const auto slot = static_cast<std::size_t>(v - 1);
      if (used[slot] == content[slot]) continue;
      if (v > 1 && used[slot] + 1 > used[slot - 1]) continue;
      ++used[slot];
      filling[row][static_cast<std::size_t>(c)] = v;
      run(k + 1);
      filling[row][static_cast<std::size_t>(c)] = 0;
      --used[slot];
    }
  }
};

}  // namespace

FullOmega build_full_omega(const Grid& grid) {
  const auto layers = grid.layer_indices();
  const std::size_t n1n2 = grid.split_dim();
  const std::size_t ambient = grid.size();
  FullOmega omega;
  omega.ambient = ambient;
  std::vector<Eigen::Triplet<double>> triplets;
  std::size_t row = 0;
  for (int i : layers) {
    const SparseRows standard = sparse_rows(generator_matrix(grid.standard(), i));
    const SparseRows split = sparse_rows(split_generator_action(grid.lambda1(), grid.lambda2(), i));
    for (std::size_t flat = 0; flat < ambient; ++flat) {
      const std::size_t m = flat / n1n2;
      const std::size_t m12 = flat % n1n2;
      std::vector<std::pair<std::size_t, double>> entries;
      for (const auto& [q, v] : split[m12]) entries.emplace_back(m * n1n2 + q, v);
      for (const auto& [p, v] : standard[m]) entries.emplace_back(p * n1n2 + m12, -v);
      std::sort(entries.begin(), entries.end());
      for (std::size_t k = 0; k < entries.size();) {
        double sum = 0;
        std::size_t j = k;
        for (; j < entries.size() && entries[j].first == entries[k].first; ++j) sum += entries[j].second;
        if (std::abs(sum) > 1e-15) triplets.emplace_back(static_cast<int>(row), static_cast<int>(entries[k].first), sum);
        k = j;
      }
      omega.row_layer.push_back(i);
      ++row;
    }
  }
  omega.matrix.resize(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(ambient));
  omega.matrix.setFromTriplets(triplets.begin(), triplets.end());
  omega.matrix.makeCompressed();
  return omega;
}

FullOmega build_full_omega(const Partition& lambda, const Partition& lambda1, const Partition& lambda2) {
  return build_full_omega(Grid(lambda, lambda1, lambda2));
}

SubspaceBasis dense_nullspace(const FullOmega& omega, const TolerancePolicy& tol) {
  tol.validate();
  const auto cols = static_cast<Eigen::Index>(omega.ambient);
  if (omega.ambient > kDenseNullspaceLimit) {
    throw InputError("dense nullspace limited to " + std::to_string(kDenseNullspaceLimit) + " unknowns");
  }
  if (omega.matrix.rows() == 0) return SubspaceBasis::from_dense(Eigen::MatrixXd::Identity(cols, cols), "oracle");
  const Eigen::MatrixXd dense = Eigen::MatrixXd(omega.matrix);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(dense, Eigen::ComputeFullV);
  const Eigen::VectorXd s = svd.singularValues();
  const double top = s.size() > 0 ? s(0) : 0.0;
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > tol.rank_cutoff * top) ++rank;
  const Eigen::MatrixXd kernel = svd.matrixV().rightCols(cols - rank);
  return SubspaceBasis::from_dense(kernel, "oracle");
}

std::uint64_t lr_coefficient(const Partition& lambda, const Partition& lambda1, const Partition& lambda2) {
  if (lambda1.size() + lambda2.size() != lambda.size()) {
    throw InputError("lr_coefficient: |lambda1| + |lambda2| must equal |lambda|");
  }
  if (!lambda.contains(lambda1)) return 0;
  LrSearch search;
  const int rows = lambda.rows();
  search.inner.assign(static_cast<std::size_t>(rows), 0);
  for (int r = 0; r < lambda1.rows(); ++r) search.inner[static_cast<std::size_t>(r)] = lambda1.row_length(r);
  search.filling.resize(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    search.filling[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda.row_length(r)), 0);
    for (int c = lambda.row_length(r) - 1; c >= search.inner[static_cast<std::size_t>(r)]; --c) {
      search.cells.emplace_back(r, c);
    }
  }
  search.content.assign(lambda2.parts().begin(), lambda2.parts().end());
  search.used.assign(search.content.size(), 0);
  search.run(0);
  return search.count;
}

SubspaceDistance subspace_distance(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient != b.ambient) throw InputError("subspace_distance: ambient dimensions differ");
  if (a.dim() != b.dim()) return {1.0, true};
  if (a.empty()) return {0.0, false};
  const Eigen::MatrixXd qa = orthonormal_columns(a.to_dense());
  const Eigen::MatrixXd qb = orthonormal_columns(b.to_dense());
  // sin of the largest angle = || (1 - Qb Qb^T) Qa ||_2
  const Eigen::MatrixXd residual = qa - qb * (qb.transpose() * qa);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(residual);
  return {std::clamp(svd.singularValues()(0), 0.0, 1.0), false};
}

}  // namespace subduce
