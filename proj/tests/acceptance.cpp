// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "reference.hpp"
#include "subduce/oracles.hpp"
#include "subduce/pipeline.hpp"
#include "subduce/yor.hpp"

using namespace subduce;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

template <typename Fn>
void for_each_case(int n_max, Fn&& fn) {
  for (int n = 2; n <= n_max; ++n)
    for (const auto& lambda : partitions_of(n))
      for (int n1 = 1; n1 < n; ++n1)
        for (const auto& a : partitions_of(n1))
          for (const auto& b : partitions_of(n - n1)) fn(Grid(lambda, a, b));
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::string name(const Grid& g) {
  return "(" + g.lambda().to_string() + "; " + g.lambda1().to_string() + ", " + g.lambda2().to_string() + ")";
}

Outcome ac1() {
  const Grid g(Partition::parse("4,1"), Partition::parse("1"), Partition::parse("3,1"));
  const auto census = build_layer(g, 4).census();
  const auto layers = build_layers(g);
  const auto graph = build_subduction_graph(g, layers);
  const bool ok = g.size() == 12 && census.crossings == 1 && census.vertical_bridges == 1 &&
                  census.horizontal_bridges == 2 && census.singlets == 2 && census.edges() == 5 &&
                  graph.edges.size() == 13 && graph.edge_count(2) == 3 && graph.edge_count(3) == 5 &&
                  graph.edge_count(4) == 5;
  return {ok, "12 nodes; 4-layer C" + std::to_string(census.crossings) + " V" +
                  std::to_string(census.vertical_bridges) + " H" + std::to_string(census.horizontal_bridges) + " S" +
                  std::to_string(census.singlets) + "; edges " + std::to_string(graph.edge_count(2)) + "/" +
                  std::to_string(graph.edge_count(3)) + "/" + std::to_string(graph.edge_count(4))};
}

Outcome ac2() {
  const Grid g(Partition::parse("2,1"), Partition::parse("1"), Partition::parse("2"));
  const auto table = compute_sdc(g);
  if (table.multiplicity() != 1) return {false, "multiplicity " + std::to_string(table.multiplicity())};
  // +1 eigenvector of the 2x2 generator, phase fixed like the table.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(generator_matrix(Partition::parse("2,1"), 2).entries);
  Eigen::VectorXd e = eig.eigenvectors().col(1);
  if (e(0) < 0) e = -e;
  const double dev = std::max(std::abs(table.value(0, 0, 0, 0) - e(0)), std::abs(table.value(0, 1, 0, 0) - e(1)));
  const double closed = std::max(std::abs(e(0) - 0.5), std::abs(e(1) - std::sqrt(3.0) / 2));
  return {dev < 1e-12 && closed < 1e-12, "deviation " + sci(dev)};
}

Outcome ac3() {
  std::size_t cases = 0, bad = 0, sum_bad = 0;
  std::string first;
  for (int n = 2; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n))
      for (int n1 = 1; n1 < n; ++n1) {
        std::uint64_t total = 0;
        for (const auto& a : partitions_of(n1))
          for (const auto& b : partitions_of(n - n1)) {
            const Grid g(lambda, a, b);
            const auto lr = lr_coefficient(lambda, a, b);
            ++cases;
            if (solve_via_layers(g).dim() != lr || lr != ref::lr_brute(lambda.parts(), a.parts(), b.parts())) {
              if (bad++ == 0) first = name(g);
            }
            total += lr * g.split_dim();
          }
        sum_bad += total != dimension(lambda);
      }
  return {bad == 0 && sum_bad == 0, std::to_string(cases) + " cases, " + std::to_string(bad) + " mismatches" +
                                        (first.empty() ? "" : " first " + first) + ", sum rule violations " +
                                        std::to_string(sum_bad)};
}

Outcome ac4() {
  double worst = 0;
  std::size_t vectors = 0;
  for_each_case(6, [&](const Grid& g) {
    const auto t = compute_sdc(g);
    vectors += t.multiplicity();
    worst = std::max(worst, t.residual);
  });
  return {worst < 1e-10, std::to_string(vectors) + " vectors, max residual " + sci(worst)};
}

Outcome ac5() {
  double oracle = 0, paths = 0;
  std::size_t mismatches = 0;
  for_each_case(6, [&](const Grid& g) {
    const auto layers = solve_via_layers(g);
    const auto graph = solve_via_graph(g);
    const auto dense = dense_nullspace(build_full_omega(g));
    for (const auto& d : {subspace_distance(layers, dense), subspace_distance(graph, dense)}) {
      mismatches += d.dimension_mismatch;
      oracle = std::max(oracle, d.value);
    }
    const auto p = subspace_distance(layers, graph);
    mismatches += p.dimension_mismatch;
    paths = std::max(paths, p.value);
  });
  return {mismatches == 0 && oracle < 1e-8 && paths < 1e-8,
          "oracle " + sci(oracle) + ", layers/graph " + sci(paths) + ", dimension mismatches " +
              std::to_string(mismatches)};
}

Outcome ac6() {
  double worst = 0;
  std::size_t assemblies = 0;
  for (int n = 2; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      for (int n1 = 1; n1 < n; ++n1) {
        worst = std::max(worst, verify_unitarity(compute_all_blocks(lambda, n1)).worst());
        ++assemblies;
      }
  return {worst < 1e-10, std::to_string(assemblies) + " assemblies, max deviation " + sci(worst)};
}

Outcome ac7() {
  double worst = 0;
  std::size_t shapes = 0;
  for (int n = 1; n <= 6; ++n)
    for (const auto& shape : partitions_of(n)) {
      worst = std::max(worst, check_representation(shape).worst());
      ++shapes;
    }
  return {worst < 1e-12, std::to_string(shapes) + " shapes, max deviation " + sci(worst)};
}

Outcome ac8() {
  const Grid g(Partition::parse("4,3,2,1"), Partition::parse("3,2,1"), Partition::parse("3,1"));
  ComputeOptions options;
  options.method = SolveMethod::Graph;
  const auto t = compute_sdc(g, options);
  const double orth = orthonormality_deviation(t);
  const bool ok = g.size() == 36864 && t.multiplicity() == 3 && t.residual < 1e-9 && orth < 1e-9;
  return {ok, "ambient " + std::to_string(g.size()) + ", mu " + std::to_string(t.multiplicity()) + ", residual " +
                  sci(t.residual) + ", orthonormality " + sci(orth)};
}

Outcome ac9() {
  bool ok = freedom_count(2) == 4;
  for (int mu = 1; mu <= 6; ++mu) {
    std::uint64_t pow = 1;
    for (int k = 1; k < mu; ++k) pow *= 2;
    ok = ok && freedom_count(mu) == pow + 1 + static_cast<std::uint64_t>(mu * (mu - 1) / 2);
  }
  return {ok, "freedom_count(1..6) = " + std::to_string(freedom_count(1)) + "," + std::to_string(freedom_count(2)) +
                  "," + std::to_string(freedom_count(3)) + "," + std::to_string(freedom_count(4)) + "," +
                  std::to_string(freedom_count(5)) + "," + std::to_string(freedom_count(6))};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"AC1", "grid and graph combinatorics", 1, ac1},
      {"AC2", "worked kernel", 1, ac2},
      {"AC3", "multiplicity sweep n<=7", 300, ac3},
      {"AC4", "residuals n<=6", 300, ac4},
      {"AC5", "oracle equivalence n<=6", 300, ac5},
      {"AC6", "unitarity n<=6", 300, ac6},
      {"AC7", "representation properties n<=6", 300, ac7},
      {"AC8", "flagship multiplicity", 600, ac8},
      {"AC9", "freedom counting", 1, ac9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.pass && secs < c.budget_s;
    failures += !pass;
    std::printf("%s %s: %s (%s; %.2fs of %.0fs)\n", c.id, pass ? "PASS" : "FAIL", c.title, o.detail.c_str(), secs,
                c.budget_s);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
