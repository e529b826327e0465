#include "subduce/orthonorm.hpp"

#include <cmath>
#include <numeric>

#include "subduce/errors.hpp"

namespace subduce {

namespace {

constexpr double kClusterTol = 1e-10;
constexpr double kIdentityTol = 1e-12;
constexpr double kZeroCoefficient = 1e-14;

bool square_free(long b) {
  for (long p = 2; p * p <= b; ++p) {
    if (b % (p * p) == 0) return false;
  }
  return true;
}

// Largest-magnitude entry positive; the first one wins a tie.
void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
  Eigen::Index best = 0;
  for (Eigen::Index k = 1; k < v.size(); ++k) {
    if (std::abs(v(k)) > std::abs(v(best)) + 1e-12) best = k;
  }
  if (v(best) < 0) v = -v;
}

// Orthonormal basis of span(cols) built from the projector's columns, so it
// depends on the span only.
Eigen::MatrixXd canonical_basis(const Eigen::MatrixXd& cols) {
  const Eigen::Index mu = cols.rows();
  const Eigen::Index want = cols.cols();
  if (want == mu) return Eigen::MatrixXd::Identity(mu, mu);
  const Eigen::MatrixXd projector = cols * cols.transpose();
  Eigen::MatrixXd out(mu, want);
  Eigen::Index have = 0;
  for (Eigen::Index j = 0; j < mu && have < want; ++j) {
    Eigen::VectorXd v = projector.col(j);
    for (Eigen::Index k = 0; k < have; ++k) v -= out.col(k).dot(v) * out.col(k);
    const double norm = v.norm();
    if (norm > 1e-6) out.col(have++) = v / norm;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

double Surd::value() const {
  return static_cast<double>(a) * std::sqrt(static_cast<double>(b)) / static_cast<double>(c);
}

std::string Surd::to_string() const {
  std::string out;
  if (b == 1) {
    out = std::to_string(a);
  } else {
    out = a == 1 ? "" : a == -1 ? "-" : std::to_string(a) + "*";
    out += "sqrt(" + std::to_string(b) + ")";
  }
  if (c != 1) out += "/" + std::to_string(c);
  return out;
}

double SdcTable::value(std::size_t eta, std::size_t m, std::size_t m1, std::size_t m2) const {
  const std::size_t flat = (m * dim1 + m1) * dim2 + m2;
  return coefficients(static_cast<Eigen::Index>(flat), static_cast<Eigen::Index>(eta));
}

SubspaceBasis SdcTable::basis() const { return SubspaceBasis::from_dense(coefficients, "sdc"); }

GramForm gram(const SubspaceBasis& basis, std::size_t split_dim) {
  if (basis.empty()) throw DegenerateInputError("Gram form of an empty basis");
  if (split_dim == 0) throw InputError("N1 N2 must be positive");
  const auto mu = static_cast<Eigen::Index>(basis.dim());
  GramForm g{Eigen::MatrixXd(mu, mu)};
  for (Eigen::Index a = 0; a < mu; ++a) {
    for (Eigen::Index b = 0; b <= a; ++b) {
      const double x = basis.vectors[static_cast<std::size_t>(a)].dot(basis.vectors[static_cast<std::size_t>(b)]) /
                       static_cast<double>(split_dim);
      g.tau(a, b) = g.tau(b, a) = x;
    }
  }
  return g;
}

SylvesterFactors sylvester(const GramForm& gram, const std::optional<Eigen::MatrixXd>& free_factor) {
  const Eigen::MatrixXd& tau = gram.tau;
  const Eigen::Index mu = tau.rows();
  if (mu == 0 || tau.cols() != mu) throw DegenerateInputError("Gram form must be a non-empty square matrix");
  if ((tau - tau.transpose()).cwiseAbs().maxCoeff() > kIdentityTol * std::max(1.0, tau.cwiseAbs().maxCoeff())) {
    throw DegenerateInputError("Gram form is not symmetric");
  }

  SylvesterFactors f;
  f.free_factor = Eigen::MatrixXd::Identity(mu, mu);
  if (free_factor) {
    const auto& o = *free_factor;
    if (o.rows() != mu || o.cols() != mu) throw InputError("free factor O must be mu x mu");
    if ((o.transpose() * o - Eigen::MatrixXd::Identity(mu, mu)).cwiseAbs().maxCoeff() > 1e-9) {
      throw InputError("free factor O is not orthogonal");
    }
    f.free_factor = o;
  }

  if ((tau - Eigen::MatrixXd::Identity(mu, mu)).cwiseAbs().maxCoeff() <= kIdentityTol) {
    f.eigenvectors = Eigen::MatrixXd::Identity(mu, mu);
    f.eigenvalues = Eigen::VectorXd::Ones(mu);
    f.sigma = f.free_factor;
    return f;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(tau);
  if (eig.info() != Eigen::Success) throw DegenerateInputError("eigendecomposition of tau failed");
  const Eigen::VectorXd values = eig.eigenvalues();
  const double top = values(mu - 1);
  if (!(values(0) > 1e-12 * top) || !(top > 0)) throw DegenerateInputError("Gram form is not positive definite");

  f.eigenvalues = values;
  f.eigenvectors = eig.eigenvectors();
  // Clusters of equal eigenvalues: canonical basis and a common eigenvalue.
  for (Eigen::Index start = 0; start < mu;) {
    Eigen::Index end = start + 1;
    while (end < mu && values(end) - values(end - 1) <= kClusterTol * top) ++end;
    if (end - start > 1) {
      f.eigenvectors.middleCols(start, end - start) = canonical_basis(eig.eigenvectors().middleCols(start, end - start));
      f.eigenvalues.segment(start, end - start).setConstant(values.segment(start, end - start).mean());
    }
    start = end;
  }
  for (Eigen::Index k = 0; k < mu; ++k) fix_sign(f.eigenvectors.col(k));
  f.sigma = f.eigenvectors * f.eigenvalues.cwiseSqrt().cwiseInverse().asDiagonal() * f.free_factor;
  return f;
}

SdcTable orthonormalize(const Grid& grid, const SubspaceBasis& basis, const TolerancePolicy& tol,
                        const std::optional<Eigen::MatrixXd>& free_factor) {
  if (basis.ambient != grid.size()) throw InputError("basis does not live on this grid");
  SdcTable table;
  table.lambda = grid.lambda();
  table.lambda1 = grid.lambda1();
  table.lambda2 = grid.lambda2();
  table.n1 = grid.n1();
  table.dim = grid.dim();
  table.dim1 = grid.dim1();
  table.dim2 = grid.dim2();
  table.tolerance = tol;
  if (basis.empty()) {
    table.coefficients.resize(static_cast<Eigen::Index>(grid.size()), 0);
    return table;
  }
  table.gram = gram(basis, grid.split_dim());
  table.factors = sylvester(table.gram, free_factor);
  Eigen::MatrixXd chi = basis.to_dense() * table.factors.sigma;
  for (Eigen::Index eta = 0; eta < chi.cols(); ++eta) {
    auto col = chi.col(eta);
    for (Eigen::Index k = 0; k < col.size(); ++k) {
      if (std::abs(col(k)) <= kZeroCoefficient) col(k) = 0.0;
    }
    const double scale = col.cwiseAbs().maxCoeff();
    for (Eigen::Index k = 0; k < col.size(); ++k) {
      if (std::abs(col(k)) > 1e-9 * scale) {
        if (col(k) < 0) col = -col;
        break;
      }
    }
  }
  table.coefficients = std::move(chi);
  return table;
}

UnitarityReport verify_unitarity(std::span<const SdcTable> tables) {
  if (tables.empty()) throw DegenerateInputError("no blocks to assemble");
  const std::size_t n = tables.front().dim;
  std::size_t columns = 0;
  for (const auto& t : tables) {
    if (t.lambda != tables.front().lambda || t.n1 != tables.front().n1) {
      throw DegenerateInputError("blocks belong to different (lambda, n1)");
    }
    columns += t.multiplicity() * t.split_dim();
  }
  if (columns != n) {
    throw DegenerateInputError("incomplete block set: " + std::to_string(columns) + " of " +
                               std::to_string(n) + " split-basis vectors");
  }
  const auto dim = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd u(dim, dim);
  Eigen::Index col = 0;
  for (const auto& t : tables) {
    for (std::size_t eta = 0; eta < t.multiplicity(); ++eta)
      for (std::size_t m1 = 0; m1 < t.dim1; ++m1)
        for (std::size_t m2 = 0; m2 < t.dim2; ++m2) {
          for (std::size_t m = 0; m < n; ++m) u(static_cast<Eigen::Index>(m), col) = t.value(eta, m, m1, m2);
          ++col;
        }
  }
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dim, dim);
  return UnitarityReport{n, (u.transpose() * u - id).cwiseAbs().maxCoeff(), (u * u.transpose() - id).cwiseAbs().maxCoeff()};
}

std::uint64_t freedom_count(int mu) {
  if (mu < 1 || mu > 63) throw InputError("multiplicity must lie in 1..63");
  const auto m = static_cast<std::uint64_t>(mu);
  return ((std::uint64_t{1} << (m - 1)) + 1) + m * (m - 1) / 2;
}

std::optional<Surd> identify_surd(double x, int b_max, int c_max, double tol) {
  if (b_max < 1 || c_max < 1) throw InputError("surd search bounds must be positive");
  if (std::abs(x) < tol) return Surd{0, 1, 1};
  for (long c = 1; c <= c_max; ++c) {
    for (long b = 1; b <= b_max; ++b) {
      if (!square_free(b)) continue;
      const double root = std::sqrt(static_cast<double>(b));
      const long a = std::lround(x * static_cast<double>(c) / root);
      if (a == 0 || std::gcd(std::labs(a), c) != 1) continue;
      const Surd s{a, b, c};
      if (std::abs(x - s.value()) < tol) return s;
    }
  }
  return std::nullopt;
}

}  // namespace subduce
