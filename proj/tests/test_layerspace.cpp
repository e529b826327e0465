#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "subduce/errors.hpp"
#include "subduce/layerspace.hpp"

using namespace subduce;

namespace {

const double kR3 = std::sqrt(3.0) / 2;

double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Grid grid_of(const char* l, const char* a, const char* b) {
  return Grid(Partition::parse(l), Partition::parse(a), Partition::parse(b));
}

double value_at(const SparseVec& v, std::size_t flat) {
  for (const auto& [k, x] : v.entries)
    if (k == flat) return x;
  return 0.0;
}

// Kernel vector restricted to the configuration members, in member order.
Eigen::VectorXd restrict(const SparseVec& v, const Configuration& cfg) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(cfg.members.size()));
  for (std::size_t k = 0; k < cfg.members.size(); ++k) out(static_cast<Eigen::Index>(k)) = value_at(v, cfg.members[k].flat);
  return out;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

TEST_CASE("rho examples and properties") {
  Eigen::Matrix2d want;
  want << 1, 0, 0, -1;
  CHECK(max_abs(rho(1).matrix() - want) == 0.0);
  want << -1, 0, 0, 1;
  CHECK(max_abs(rho(-1).matrix() - want) < 1e-15);
  want << -0.5, kR3, kR3, 0.5;
  CHECK(max_abs(rho(-2).matrix() - want) < 1e-15);
  CHECK_THROWS_AS(rho(0), InputError);
  for (int d = -7; d <= 7; ++d) {
    if (d == 0) continue;
    const auto r = rho(d).matrix();
    CHECK(max_abs(r * r - Eigen::Matrix2d::Identity()) < 1e-15);
    CHECK(max_abs(r - r.transpose()) == 0.0);
    CHECK(rho(d).theta() >= 0.0);
    CHECK(rho(d).theta() <= M_PI);
    for (int sign : {1, -1}) {
      const auto e = eigvec(d, sign);
      CHECK(e.norm() == doctest::Approx(1.0));
      CHECK(max_abs(r * e - sign * e) < 1e-15);
    }
    CHECK(eigvec(d, 1)(0) >= 0.0);
  }
}

TEST_CASE("eigvec examples") {
  CHECK(max_abs(eigvec(1, 1) - Eigen::Vector2d(1, 0)) < 1e-15);
  CHECK(max_abs(eigvec(-2, 1) - Eigen::Vector2d(0.5, kR3)) < 1e-15);
  CHECK(max_abs(eigvec(2, 1) - Eigen::Vector2d(kR3, 0.5)) < 1e-15);
  CHECK_THROWS_AS(eigvec(0, 1), InputError);
}

TEST_CASE("config block examples") {
  CHECK(config_block(ConfigKind::Singlet, 1, 1)(0, 0) == 0.0);
  CHECK(config_block(ConfigKind::Singlet, 1, -1)(0, 0) == doctest::Approx(-2.0));
  CHECK(config_block(ConfigKind::Singlet, -1, 1)(0, 0) == doctest::Approx(2.0));
  Eigen::Matrix2d want;
  want << 1.5, -kR3, -kR3, 0.5;
  CHECK(max_abs(config_block(ConfigKind::VerticalBridge, -2, 1) - want) < 1e-15);
}

TEST_CASE("crossing block is a sum of Kronecker products") {
  // Member slot = x + 2y, x the standard move, y the split move.
  for (int dm : {-4, -3, -2, 2, 3, 5})
    for (int ds : {-3, -2, 2, 4}) {
      const auto block = config_block(ConfigKind::Crossing, dm, ds);
      const Eigen::MatrixXd want = kron(rho(ds).matrix(), Eigen::Matrix2d::Identity()) -
                                   kron(Eigen::Matrix2d::Identity(), rho(dm).matrix());
      CHECK(max_abs(block - want) < 1e-15);
      // alpha_{m,m12} = -alpha_{gm,gm12}; beta_m = beta_{gm}
      CHECK(block(0, 0) == doctest::Approx(-block(3, 3)));
      CHECK(std::abs(block(0, 1)) == doctest::Approx(std::abs(block(2, 3))));
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(block);
      CHECK(svd.singularValues()(2) < 1e-14);
      CHECK(svd.singularValues()(1) > 1e-3);
    }
}

TEST_CASE("crossing kernel values at named nodes") {
  // Poles of built layers always have both distances negative, so the
  // configuration is assembled by hand with standard -2 and split +2.
  Configuration cfg;
  cfg.layer = 2;
  cfg.kind = ConfigKind::Crossing;
  cfg.d_standard = -2;
  cfg.d_split = 2;
  for (std::size_t k = 0; k < 4; ++k) cfg.members.push_back(Node{0, 0, 0, 10 + 3 * k});
  cfg.pole = cfg.members[0];
  const auto kernel = config_kernel(cfg, 20);
  REQUIRE(kernel.size() == 2);
  const double em[2] = {0.5, kR3};
  const double es[2] = {kR3, 0.5};
  const double bm[2] = {-kR3, 0.5};
  const double bs[2] = {-0.5, kR3};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      const auto flat = cfg.members[static_cast<std::size_t>(x + 2 * y)].flat;
      CHECK(value_at(kernel[0], flat) == doctest::Approx(em[x] * es[y]));
      CHECK(value_at(kernel[1], flat) == doctest::Approx(bm[x] * bs[y]));
    }
  const auto block = config_block(cfg);
  CHECK(max_abs(block * restrict(kernel[0], cfg)) < 1e-15);
  CHECK(max_abs(block * restrict(kernel[1], cfg)) < 1e-15);
}

TEST_CASE("poles carry negative distances") {
  const auto g = grid_of("3,2,1", "2,1", "2,1");
  for (const auto& layer : build_layers(g))
    for (const auto& cfg : layer.configurations) {
      if (cfg.kind == ConfigKind::Crossing || cfg.kind == ConfigKind::VerticalBridge) CHECK(cfg.d_standard < 0);
      if (cfg.kind == ConfigKind::Crossing || cfg.kind == ConfigKind::HorizontalBridge) CHECK(cfg.d_split < 0);
    }
}

TEST_CASE("every configuration kernel is annihilated by its block") {
  for (const auto* triple : {"4,1|1|3,1", "3,2|2,1|2", "3,2,1|2,1|2,1", "4,2|3|2,1", "3,3|2,1|2,1", "3,2,1|3|2,1"}) {
    const std::string s(triple);
    const auto p1 = s.find('|'), p2 = s.rfind('|');
    const Grid g(Partition::parse(s.substr(0, p1)), Partition::parse(s.substr(p1 + 1, p2 - p1 - 1)),
                 Partition::parse(s.substr(p2 + 1)));
    for (const auto& layer : build_layers(g)) {
      std::size_t expected_dim = 0;
      for (const auto& cfg : layer.configurations) {
        const auto block = config_block(cfg);
        const auto kernel = config_kernel(cfg, g.size());
        for (const auto& v : kernel) {
          CHECK(v.norm() == doctest::Approx(1.0));
          CHECK(max_abs(block * restrict(v, cfg)) < 1e-12);
        }
        switch (cfg.kind) {
          case ConfigKind::Singlet:
            CHECK(kernel.size() == (cfg.trivial_kernel() ? 0u : 1u));
            break;
          case ConfigKind::Crossing:
            CHECK(kernel.size() == 2);
            break;
          default: {
            // A bridge block has rank 1: one kernel vector.
            CHECK(kernel.size() == 1);
            break;
          }
        }
        expected_dim += kernel.size();
        CHECK(pole_change_check(g, cfg));
      }
      const auto space = layer_space(layer, g.size());
      CHECK(space.dim() == expected_dim);
      const Eigen::MatrixXd v = space.to_dense();
      CHECK(max_abs(v.transpose() * v - Eigen::MatrixXd::Identity(v.cols(), v.cols())) < 1e-12);
    }
  }
}

TEST_CASE("worked layer space and singlet spaces") {
  const auto g = grid_of("2,1", "1", "2");
  const auto space = layer_space(build_layer(g, 2), g.size());
  REQUIRE(space.dim() == 1);
  CHECK(value_at(space.vectors[0], 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(value_at(space.vectors[0], 1) == doctest::Approx(kR3).epsilon(1e-12));

  const auto tiny = grid_of("3", "2", "1");
  const auto single = layer_space(build_layer(tiny, 1), tiny.size());
  REQUIRE(single.dim() == 1);
  CHECK(value_at(single.vectors[0], 0) == 1.0);
}

TEST_CASE("pole change on ([4,1]; [1], [3,1])") {
  const auto g = grid_of("4,1", "1", "3,1");
  const auto cfg = configuration_of(g, g.node(0, 0, 0), 4);
  REQUIRE(cfg.kind == ConfigKind::Crossing);
  CHECK(pole_change_check(g, cfg));
  for (const auto& c : build_layer(g, 3).configurations) CHECK(pole_change_check(g, c));
}

TEST_CASE("sparse vectors") {
  Eigen::VectorXd d(4);
  d << 0.0, 1e-16, -2.0, 3.0;
  const auto v = SparseVec::from_dense(d);
  CHECK(v.entries.size() == 2);
  CHECK(v.norm() == doctest::Approx(std::sqrt(13.0)));
  CHECK(v.dot(v) == doctest::Approx(13.0));
  CHECK(v.to_dense()(1) == 0.0);
}
