#include "subduce/layerspace.hpp"

#include <algorithm>
#include <cmath>

#include "subduce/errors.hpp"

namespace subduce {

namespace {

constexpr double kDropTol = 1e-14;

double beta(int d) { return std::sqrt(1.0 - 1.0 / (static_cast<double>(d) * d)); }

double alpha(int d_standard, int d_split) { return 1.0 / d_split - 1.0 / d_standard; }

// Position of node (x, y) inside a crossing: x flips m, y flips m12.
constexpr int crossing_slot(int x, int y) { return x + 2 * y; }

SparseVec embed(const Configuration& cfg, std::size_t ambient, const Eigen::VectorXd& local) {
  SparseVec v;
  v.length = ambient;
  for (std::size_t k = 0; k < cfg.members.size(); ++k) {
    const double x = local(static_cast<Eigen::Index>(k));
    if (std::abs(x) > kDropTol) v.entries.emplace_back(cfg.members[k].flat, x);
  }
  std::sort(v.entries.begin(), v.entries.end());
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------

double Rotation2::theta() const { return std::atan2(sin_theta, cos_theta); }

Eigen::Matrix2d Rotation2::matrix() const {
  Eigen::Matrix2d r;
  r << cos_theta, sin_theta, sin_theta, -cos_theta;
  return r;
}

Rotation2 rho(int d) {
  if (d == 0) throw InputError("axial distance 0 is impossible");
  return Rotation2{d, 1.0 / d, beta(d)};
}

Eigen::Vector2d eigvec(int d, int sign) {
  if (sign != 1 && sign != -1) throw InputError("eigenvalue sign must be +1 or -1");
  const double half = rho(d).theta() / 2;
  if (sign == 1) return {std::cos(half), std::sin(half)};
  return {-std::sin(half), std::cos(half)};
}

// ---------------------------------------------------------------------------

SparseVec SparseVec::from_dense(const Eigen::VectorXd& dense) {
  SparseVec v;
  v.length = static_cast<std::size_t>(dense.size());
  for (Eigen::Index k = 0; k < dense.size(); ++k) {
    if (std::abs(dense(k)) > kDropTol) v.entries.emplace_back(static_cast<std::size_t>(k), dense(k));
  }
  return v;
}

Eigen::VectorXd SparseVec::to_dense() const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(length));
  for (const auto& [k, x] : entries) out(static_cast<Eigen::Index>(k)) = x;
  return out;
}

double SparseVec::norm() const {
  double s = 0;
  for (const auto& e : entries) s += e.second * e.second;
  return std::sqrt(s);
}

double SparseVec::dot(const SparseVec& other) const {
  double s = 0;
  auto a = entries.begin();
  auto b = other.entries.begin();
  while (a != entries.end() && b != other.entries.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      s += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return s;
}

Eigen::MatrixXd SubspaceBasis::to_dense() const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(ambient),
                                              static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t c = 0; c < vectors.size(); ++c) {
    for (const auto& [k, x] : vectors[c].entries) {
      out(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(c)) = x;
    }
  }
  return out;
}

SubspaceBasis SubspaceBasis::from_dense(const Eigen::MatrixXd& columns, std::string label) {
  SubspaceBasis basis;
  basis.ambient = static_cast<std::size_t>(columns.rows());
  basis.label = std::move(label);
  for (Eigen::Index c = 0; c < columns.cols(); ++c) {
    basis.vectors.push_back(SparseVec::from_dense(columns.col(c)));
  }
  return basis;
}

// ---------------------------------------------------------------------------

Eigen::MatrixXd config_block(ConfigKind kind, int d_standard, int d_split) {
  switch (kind) {
    case ConfigKind::Singlet: {
      Eigen::MatrixXd block(1, 1);
      block(0, 0) = alpha(d_standard, d_split);
      return block;
    }
    case ConfigKind::VerticalBridge:
      return d_split * Eigen::Matrix2d::Identity() - rho(d_standard).matrix();
    case ConfigKind::HorizontalBridge:
      return rho(d_split).matrix() - d_standard * Eigen::Matrix2d::Identity();
    case ConfigKind::Crossing: break;
  }
  // Row at (x, y): alpha on itself, -beta_m on the m-partner, +beta_m12 on
  // the m12-partner. Flipping a side flips the sign of its axial distance.
  Eigen::MatrixXd block = Eigen::MatrixXd::Zero(4, 4);
  const double bm = beta(d_standard);
  const double bs = beta(d_split);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const int dm = x == 0 ? d_standard : -d_standard;
      const int ds = y == 0 ? d_split : -d_split;
      const int row = crossing_slot(x, y);
      block(row, row) = alpha(dm, ds);
      block(row, crossing_slot(1 - x, y)) = -bm;
      block(row, crossing_slot(x, 1 - y)) = bs;
    }
  }
  return block;
}

Eigen::MatrixXd config_block(const Configuration& cfg) {
  return config_block(cfg.kind, cfg.d_standard, cfg.d_split);
}

std::vector<SparseVec> config_kernel(const Configuration& cfg, std::size_t ambient) {
  std::vector<SparseVec> out;
  switch (cfg.kind) {
    case ConfigKind::Singlet:
      if (!cfg.trivial_kernel()) out.push_back(embed(cfg, ambient, Eigen::VectorXd::Ones(1)));
      break;
    case ConfigKind::VerticalBridge:
      out.push_back(embed(cfg, ambient, eigvec(cfg.d_standard, cfg.d_split)));
      break;
    case ConfigKind::HorizontalBridge:
      out.push_back(embed(cfg, ambient, eigvec(cfg.d_split, cfg.d_standard)));
      break;
    case ConfigKind::Crossing:
      for (int sign : {1, -1}) {
        const Eigen::Vector2d em = eigvec(cfg.d_standard, sign);
        const Eigen::Vector2d es = eigvec(cfg.d_split, sign);
        Eigen::VectorXd local(4);
        for (int x = 0; x < 2; ++x)
          for (int y = 0; y < 2; ++y) local(crossing_slot(x, y)) = em(x) * es(y);
        out.push_back(embed(cfg, ambient, local));
      }
      break;
  }
  return out;
}

SubspaceBasis layer_space(const Layer& layer, std::size_t ambient) {
  SubspaceBasis basis;
  basis.ambient = ambient;
  basis.label = "layer " + std::to_string(layer.i);
  for (const auto& cfg : layer.configurations) {
    for (auto& v : config_kernel(cfg, ambient)) basis.vectors.push_back(std::move(v));
  }
  return basis;
}

bool pole_change_check(const Grid& grid, const Configuration& cfg, double tol) {
  if (cfg.kind == ConfigKind::Singlet) return true;
  const Eigen::MatrixXd pole_block = config_block(cfg);
  const auto size = static_cast<int>(cfg.members.size());
  for (int k = 1; k < size; ++k) {
    const Node& alt = cfg.members[static_cast<std::size_t>(k)];
    const Eigen::MatrixXd alt_block =
        config_block(cfg.kind, grid.distance_standard(alt, cfg.layer), grid.distance_split(alt, cfg.layer));
    // Member j seen from `alt` is member k ^ j seen from the pole: the swap
    // permutation (eps on the moved sides).
    for (int r = 0; r < size; ++r) {
      for (int c = 0; c < size; ++c) {
        if (std::abs(alt_block(r, c) - pole_block(k ^ r, k ^ c)) > tol) return false;
      }
    }
  }
  return true;
}

}  // namespace subduce
