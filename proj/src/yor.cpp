#include "subduce/yor.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "subduce/errors.hpp"

namespace subduce {

Eigen::MatrixXd generator_matrix(const TableauIndex& tableaux, int i) {
  if (!tableaux.acts(i)) {
    throw RangeError("generator g_" + std::to_string(i) + " out of range for shape " +
                     tableaux.shape().to_string());
  }
  const auto dim = static_cast<Eigen::Index>(tableaux.size());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t m = 0; m < tableaux.size(); ++m) {
    const double inv = 1.0 / tableaux.distance(m, i);
    const auto row = static_cast<Eigen::Index>(m);
    d(row, row) = inv;
    const std::size_t partner = tableaux.move(m, i);
    if (partner != m) d(row, static_cast<Eigen::Index>(partner)) = std::sqrt(1.0 - inv * inv);
  }
  return d;
}

GeneratorMatrix generator_matrix(const Partition& shape, int i) {
  if (i < 1 || i > shape.size() - 1) {
    throw RangeError("generator g_" + std::to_string(i) + " out of range for shape " +
                     shape.to_string());
  }
  return GeneratorMatrix{shape, i, generator_matrix(TableauIndex(shape, 1), i)};
}

Eigen::MatrixXd split_generator_action(const Partition& lambda1, const Partition& lambda2, int i) {
  const int n1 = lambda1.size();
  const int n = n1 + lambda2.size();
  if (i == n1) {
    throw UndefinedActionError("g_" + std::to_string(i) + " is not in S_" + std::to_string(n1) +
                               " x S_" + std::to_string(lambda2.size()));
  }
  if (i < 1 || i > n - 1) throw RangeError("generator g_" + std::to_string(i) + " out of range");
  const TableauIndex first(lambda1, 1);
  const TableauIndex second(lambda2, n1 + 1);
  const auto n1dim = static_cast<Eigen::Index>(first.size());
  const auto n2dim = static_cast<Eigen::Index>(second.size());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n1dim * n2dim, n1dim * n2dim);
  if (i < n1) {
    const Eigen::MatrixXd d = generator_matrix(first, i);
    for (Eigen::Index a = 0; a < n1dim; ++a)
      for (Eigen::Index b = 0; b < n1dim; ++b)
        out.block(a * n2dim, b * n2dim, n2dim, n2dim) = d(a, b) * Eigen::MatrixXd::Identity(n2dim, n2dim);
  } else {
    const Eigen::MatrixXd d = generator_matrix(second, i);
    for (Eigen::Index a = 0; a < n1dim; ++a) out.block(a * n2dim, a * n2dim, n2dim, n2dim) = d;
  }
  return out;
}

double RepresentationReport::worst() const {
  return std::max({involution, orthogonality, symmetry, braid, commutation});
}

RepresentationReport check_representation(const Partition& shape) {
  RepresentationReport report;
  const int n = shape.size();
  if (n < 2) return report;
  const TableauIndex tableaux(shape, 1);
  std::vector<Eigen::MatrixXd> gens;
  for (int i = 1; i <= n - 1; ++i) gens.push_back(generator_matrix(tableaux, i));
  const auto dim = gens.front().rows();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dim, dim);
  auto maxabs = [](const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); };
  for (std::size_t a = 0; a < gens.size(); ++a) {
    const auto& d = gens[a];
    report.involution = std::max(report.involution, maxabs(d * d - id));
    report.orthogonality = std::max(report.orthogonality, maxabs(d * d.transpose() - id));
    report.symmetry = std::max(report.symmetry, maxabs(d - d.transpose()));
    if (a + 1 < gens.size()) {
      const auto& e = gens[a + 1];
      report.braid = std::max(report.braid, maxabs(d * e * d - e * d * e));
    }
    for (std::size_t b = a + 2; b < gens.size(); ++b) {
      report.commutation = std::max(report.commutation, maxabs(d * gens[b] - gens[b] * d));
    }
  }
  return report;
}

}  // namespace subduce
