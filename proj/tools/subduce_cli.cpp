#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "subduce/errors.hpp"
#include "subduce/oracles.hpp"
#include "subduce/pipeline.hpp"
#include "subduce/report.hpp"
#include "subduce/yor.hpp"

namespace {

using namespace subduce;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitVerify = 3;

struct RunConfig {
  std::string lambda, lambda1, lambda2;
  std::string format = "json";
  std::string output;
  std::string method = "layers";
  std::string o_matrix;
  bool no_surd = false;
  bool prune = false;
  bool check = false;
  bool verbose = false;
  TolerancePolicy tol;
  std::vector<int> layers;
  int n1 = 0;
  bool unitarity = false;
  bool oracle = false;
  bool residual = false;
  int sweep_n = 0;
  bool dump_generators = false;
};

void note(const RunConfig& cfg, const std::string& line) {
  if (cfg.verbose) std::cerr << line << '\n';
}

Grid make_grid(const RunConfig& cfg) {
  if (cfg.lambda.empty() || cfg.lambda1.empty() || cfg.lambda2.empty()) {
    throw InputError("--lambda, --lambda1 and --lambda2 are required");
  }
  return Grid(Partition::parse(cfg.lambda), Partition::parse(cfg.lambda1), Partition::parse(cfg.lambda2));
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw InputError("cannot open " + cfg.output + " for writing");
  out << text;
}

Eigen::MatrixXd read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::vector<double> values;
  std::string token;
  while (in >> token) {
    try {
      values.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw InputError("bad number '" + token + "' in " + path);
    }
  }
  Eigen::Index k = 0;
  while (static_cast<std::size_t>((k + 1) * (k + 1)) <= values.size()) ++k;
  if (k == 0 || static_cast<std::size_t>(k * k) != values.size()) {
    throw InputError(path + " must hold a square matrix");
  }
  return Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(values.data(), k, k);
}

ComputeOptions compute_options(const RunConfig& cfg) {
  ComputeOptions options;
  options.tolerance = cfg.tol;
  options.tolerance.validate();
  if (cfg.method == "graph") {
    options.method = SolveMethod::Graph;
  } else if (cfg.method != "layers") {
    throw InputError("--method must be layers or graph");
  }
  options.equations.prune_bridge_loops = cfg.prune;
  if (!cfg.o_matrix.empty()) options.free_factor = read_matrix(cfg.o_matrix);
  return options;
}

std::string render(const Grid& grid, const SdcTable& table, const RunConfig& cfg) {
  ReportOptions report;
  report.surds = !cfg.no_surd;
  if (cfg.format == "json") return to_json(grid, table, report).dump(2) + "\n";
  if (cfg.format == "csv") return to_csv(table, report);
  throw InputError("--format must be json or csv");
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

int cmd_compute(const RunConfig& cfg) {
  const Grid grid = make_grid(cfg);
  const ComputeOptions options = compute_options(cfg);
  if (cfg.format != "json" && cfg.format != "csv") throw InputError("--format must be json or csv");
  note(cfg, "grid " + std::to_string(grid.size()) + " nodes, method " + cfg.method);
  const SdcTable table = compute_sdc(grid, options);
  note(cfg, "multiplicity " + std::to_string(table.multiplicity()) + ", residual " + fmt(table.residual));
  write_output(cfg, render(grid, table, cfg));
  if (cfg.check) {
    const double orth = orthonormality_deviation(table);
    const auto lr = lr_coefficient(grid.lambda(), grid.lambda1(), grid.lambda2());
    bool ok = true;
    if (table.residual >= cfg.tol.residual_tol) {
      std::cerr << "check: residual " << fmt(table.residual) << " exceeds " << fmt(cfg.tol.residual_tol) << '\n';
      ok = false;
    }
    if (orth >= cfg.tol.orthonormality_tol) {
      std::cerr << "check: orthonormality deviation " << fmt(orth) << '\n';
      ok = false;
    }
    if (lr != table.multiplicity()) {
      std::cerr << "check: multiplicity " << table.multiplicity() << " but LR gives " << lr << '\n';
      ok = false;
    }
    if (!ok) return kExitVerify;
  }
  return kExitOk;
}

int cmd_graph(const RunConfig& cfg) {
  const Grid grid = make_grid(cfg);
  std::vector<Layer> layers;
  if (cfg.layers.empty()) {
    layers = build_layers(grid);
  } else {
    for (int i : cfg.layers) {
      grid.check_layer_index(i);
      layers.push_back(build_layer(grid, i));
    }
  }
  const SubductionGraph graph = build_subduction_graph(grid, layers);
  note(cfg, std::to_string(graph.edges.size()) + " edges");
  write_output(cfg, export_dot(grid, graph, layers));
  return kExitOk;
}

int cmd_oracle(const RunConfig& cfg) {
  const Grid grid = make_grid(cfg);
  if (cfg.format != "json" && cfg.format != "csv") throw InputError("--format must be json or csv");
  cfg.tol.validate();
  const FullOmega omega = build_full_omega(grid);
  const SubspaceBasis kernel = dense_nullspace(omega, cfg.tol);
  SdcTable table = orthonormalize(grid, kernel, cfg.tol);
  table.residual = full_residual(grid, table);
  note(cfg, "LR coefficient " + std::to_string(lr_coefficient(grid.lambda(), grid.lambda1(), grid.lambda2())));
  write_output(cfg, render(grid, table, cfg));
  return kExitOk;
}

// One line per measured quantity; returns false on any violation.
class CheckLog {
 public:
  void measure(const std::string& name, double value, double limit) {
    const bool ok = value < limit;
    std::cout << name << ": " << fmt(value) << " (limit " << fmt(limit) << ") " << (ok ? "ok" : "FAIL") << '\n';
    ok_ = ok_ && ok;
  }
  void equal(const std::string& name, std::uint64_t got, std::uint64_t want) {
    const bool ok = got == want;
    std::cout << name << ": " << got << " vs " << want << ' ' << (ok ? "ok" : "FAIL") << '\n';
    ok_ = ok_ && ok;
  }
  bool ok() const { return ok_; }

 private:
  bool ok_ = true;
};

// CSV "i,row,col,value" of every nonzero generator entry, ranks 1-based.
std::string dump_generators(const Partition& shape) {
  std::ostringstream out;
  out << "i,row,col,value\n";
  for (int i = 1; i < shape.size(); ++i) {
    const auto d = generator_matrix(shape, i).entries;
    for (Eigen::Index r = 0; r < d.rows(); ++r)
      for (Eigen::Index c = 0; c < d.cols(); ++c)
        if (d(r, c) != 0.0) {
          char buf[40];
          std::snprintf(buf, sizeof buf, "%.12g", rounded(d(r, c)));
          out << i << ',' << r + 1 << ',' << c + 1 << ',' << buf << '\n';
        }
  }
  return out.str();
}

int cmd_check(const RunConfig& cfg) {
  if (cfg.dump_generators) {
    if (cfg.lambda.empty()) throw InputError("--dump-generators needs --lambda");
    write_output(cfg, dump_generators(Partition::parse(cfg.lambda)));
    return kExitOk;
  }
  if (!cfg.unitarity && !cfg.oracle && !cfg.residual && cfg.sweep_n == 0) {
    throw InputError("check needs --unitarity, --oracle, --residual, --sweep-n or --dump-generators");
  }
  cfg.tol.validate();
  CheckLog results;
  ComputeOptions options;
  options.tolerance = cfg.tol;
  options.equations.prune_bridge_loops = cfg.prune;

  if (cfg.unitarity) {
    if (cfg.lambda.empty() || cfg.n1 == 0) throw InputError("--unitarity needs --lambda and --n1");
    const auto tables = compute_all_blocks(Partition::parse(cfg.lambda), cfg.n1, options);
    const auto report = verify_unitarity(tables);
    results.measure("unitarity deviation (N=" + std::to_string(report.dim) + ")", report.worst(),
                 cfg.tol.orthonormality_tol);
  }
  if (cfg.oracle || cfg.residual) {
    const Grid grid = make_grid(cfg);
    const SdcTable table = compute_sdc(grid, options);
    results.equal("multiplicity vs LR", table.multiplicity(),
               lr_coefficient(grid.lambda(), grid.lambda1(), grid.lambda2()));
    if (cfg.residual) {
      results.measure("max residual", table.residual, cfg.tol.residual_tol);
      results.measure("orthonormality deviation", orthonormality_deviation(table), cfg.tol.orthonormality_tol);
    }
    if (cfg.oracle) {
      const SubspaceBasis layers = solve_via_layers(grid, cfg.tol);
      const SubspaceBasis graph = solve_via_graph(grid, cfg.tol, options.equations);
      const SubspaceBasis dense = dense_nullspace(build_full_omega(grid), cfg.tol);
      const auto d1 = subspace_distance(layers, dense);
      const auto d2 = subspace_distance(layers, graph);
      results.measure("subspace distance layers/oracle", d1.dimension_mismatch ? 1.0 : d1.value, 1e-8);
      results.measure("subspace distance layers/graph", d2.dimension_mismatch ? 1.0 : d2.value, 1e-8);
    }
  }
  if (cfg.sweep_n != 0) {
    const int n = cfg.sweep_n;
    if (n < 2 || n > 12) throw InputError("--sweep-n must lie in 2..12");
    std::size_t cases = 0, mismatches = 0, sum_rule = 0;
    for (const auto& lambda : partitions_of(n)) {
      for (int n1 = 1; n1 < n; ++n1) {
        std::uint64_t total = 0;
        for (const auto& lambda1 : partitions_of(n1)) {
          for (const auto& lambda2 : partitions_of(n - n1)) {
            const Grid grid(lambda, lambda1, lambda2);
            const auto mu = multiplicity(grid, cfg.tol);
            const auto lr = lr_coefficient(lambda, lambda1, lambda2);
            ++cases;
            if (mu != lr) {
              ++mismatches;
              std::cout << "mismatch " << grid.lambda().to_string() << " -> " << lambda1.to_string() << " x "
                        << lambda2.to_string() << ": " << mu << " vs " << lr << '\n';
            }
            total += lr * grid.split_dim();
          }
        }
        if (total != dimension(lambda)) ++sum_rule;
      }
    }
    results.equal("sweep n=" + std::to_string(n) + " multiplicity mismatches (" + std::to_string(cases) + " cases)",
               mismatches, 0);
    results.equal("sweep n=" + std::to_string(n) + " dimension sum rule violations", sum_rule, 0);
  }
  return results.ok() ? kExitOk : kExitVerify;
}

void add_triple(CLI::App* cmd, RunConfig& cfg, bool required) {
  auto* a = cmd->add_option("--lambda", cfg.lambda, "Partition of n, e.g. 4,3,2,1");
  auto* b = cmd->add_option("--lambda1", cfg.lambda1, "Partition of n1");
  auto* c = cmd->add_option("--lambda2", cfg.lambda2, "Partition of n - n1");
  if (required) {
    a->required();
    b->required();
    c->required();
  }
}

void add_tolerances(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--rank-cutoff", cfg.tol.rank_cutoff, "Relative singular-value threshold")->capture_default_str();
  cmd->add_option("--residual-tol", cfg.tol.residual_tol, "Residual bound")->capture_default_str();
  cmd->add_option("--orthonormality-tol", cfg.tol.orthonormality_tol, "Orthonormality bound")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subduction coefficients of symmetric-group irreps"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* compute = app.add_subcommand("compute", "Compute the SDC table of one (lambda; lambda1, lambda2)");
  add_triple(compute, cfg, true);
  add_tolerances(compute, cfg);
  compute->add_option("--format", cfg.format, "json or csv")->capture_default_str();
  compute->add_option("-o,--output", cfg.output, "Output file (default stdout)");
  compute->add_option("--method", cfg.method, "layers or graph")->capture_default_str();
  compute->add_flag("--no-surd", cfg.no_surd, "Skip surd recognition");
  compute->add_flag("--prune-bridge-loops", cfg.prune, "Drop bridge equations closing bridge loops (graph method)");
  compute->add_flag("--check", cfg.check, "Exit 3 unless residual, orthonormality and multiplicity check out");
  compute->add_option("--o-matrix", cfg.o_matrix, "File with a mu x mu orthogonal matrix applied after sigma");
  compute->add_flag("-v,--verbose", cfg.verbose);

  auto* graph = app.add_subcommand("graph", "Write the subduction graph as DOT");
  add_triple(graph, cfg, true);
  graph->add_option("--layer", cfg.layers, "Restrict to layer i (repeatable)");
  graph->add_option("-o,--output", cfg.output, "Output file (default stdout)");
  graph->add_flag("-v,--verbose", cfg.verbose);

  auto* check = app.add_subcommand("check", "Run verification checks");
  add_triple(check, cfg, false);
  add_tolerances(check, cfg);
  check->add_option("--n1", cfg.n1, "Split point for --unitarity");
  check->add_flag("--unitarity", cfg.unitarity, "Orthogonality of the assembled standard -> split matrix");
  check->add_flag("--oracle", cfg.oracle, "Compare both solver paths with the dense nullspace");
  check->add_flag("--residual", cfg.residual, "Residual against the full subduction matrix");
  check->add_option("--sweep-n", cfg.sweep_n, "Multiplicity = LR for every case of size n");
  check->add_flag("--prune-bridge-loops", cfg.prune);
  check->add_flag("--dump-generators", cfg.dump_generators, "Write the generator matrices of --lambda as CSV");
  check->add_option("-o,--output", cfg.output, "Output file for --dump-generators");

  auto* oracle = app.add_subcommand("oracle", "SDC table from the dense nullspace of the full subduction matrix");
  add_triple(oracle, cfg, true);
  add_tolerances(oracle, cfg);
  oracle->add_option("--format", cfg.format, "json or csv")->capture_default_str();
  oracle->add_option("-o,--output", cfg.output, "Output file (default stdout)");
  oracle->add_flag("--no-surd", cfg.no_surd, "Skip surd recognition");
  oracle->add_flag("-v,--verbose", cfg.verbose);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (compute->parsed()) return cmd_compute(cfg);
    if (graph->parsed()) return cmd_graph(cfg);
    if (check->parsed()) return cmd_check(cfg);
    return cmd_oracle(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DegenerateInputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerify;
  }
}
