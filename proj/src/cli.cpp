#include "spcoarsen/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <Eigen/Eigenvalues>

#include "spcoarsen/algorithms.hpp"
#include "spcoarsen/evaluation.hpp"
#include "spcoarsen/io.hpp"
#include "spcoarsen/sbm.hpp"
#include "spcoarsen/spectral.hpp"

namespace spcoarsen::cli {

namespace {

using io::Json;

struct CoarsenArgs {
  std::string input;
  std::string method = "sgc";
  double ratio = 0.0;
  int target = 0;
  std::uint64_t seed = 0;
  std::string out_prefix;
  KMeansConfig kmeans;
};

struct DistanceArgs {
  std::string graph;
  std::string partition;
  std::string mode = "both";
  std::string laplacian = "built";
  bool verbose = false;
};

struct SpectrumArgs {
  std::string graph;
  std::string laplacian = "normalized";
};

struct SbmArgs {
  std::string kind = "associative";
  double p = 0.5;
  double q = 0.1;
  std::vector<int> blocks;
  std::uint64_t seed = 0;
  std::string out_prefix;
};

struct RecoverArgs {
  bool quick = false;
  std::vector<std::string> methods{"em", "sc", "mgc", "sgc"};
  int repeats = 10;
  int nodes = 200;
  int blocks = 10;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string out_prefix;
};

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

int cmd_coarsen(const CoarsenArgs& a, std::ostream& out) {
  const Method method = parse_method(a.method);
  const Graph g = io::read_edge_list_file(a.input);
  const int N = g.node_count();
  int n = a.target;
  if (a.ratio > 0.0) n = std::max(1, static_cast<int>(std::lround(a.ratio * N)));
  if (n < 1 || n > N)
    throw Error(ErrorKind::BadConfig, "target size " + std::to_string(n) + " outside [1, " + std::to_string(N) + "]");

  KMeansConfig km = a.kmeans;
  km.seed = a.seed;
  const CoarsenResult result = run_method(method, g, n, km);
  const auto report = distance_report(g, result.partition, CoarseLaplacian::Built);

  Json j;
  j["result"] = io::to_json(result);
  j["distance"] = io::to_json(report);
  Json bounds = Json::object();
  if (method == Method::MGC) {
    double eps = 0.0;
    for (double e : result.diagnostics.merge_eps) eps += e;
    bounds["eps_sum"] = eps;
    bounds["full_bound"] = N * eps;
    bounds["partial_bound"] = n * eps;
    bounds["full_within_bound"] = report.full <= N * eps + 1e-6;
    bounds["partial_within_bound"] = report.partial <= n * eps + 1e-6;
  } else if (method == Method::SGC) {
    const double f = result.diagnostics.kmeans_cost.value_or(0.0);
    const auto consistent = distance_report(g, result.partition, CoarseLaplacian::Consistent);
    bounds["kmeans_cost"] = f;
    bounds["partial_consistent"] = consistent.partial;
    if (f < 1.0) {
      const double b = sgc_partial_bound(n, f);
      bounds["partial_bound"] = b;
      bounds["partial_within_bound"] = consistent.partial <= b + 1e-6;
    } else {
      bounds["partial_bound"] = nullptr;
    }
  }
  j["bounds"] = std::move(bounds);

  io::write_edge_list_file(a.out_prefix + ".edges", result.coarse);
  io::write_partition_file(a.out_prefix + ".partition", result.partition);
  write_json_file(a.out_prefix + ".report.json", j);
  out << "coarsened " << N << " -> " << n << " nodes (" << to_string(method) << "), full=" << io::format_double(report.full)
      << " partial=" << io::format_double(report.partial) << '\n';
  return 0;
}

int cmd_distance(const DistanceArgs& a, std::ostream& out) {
  const Graph g = io::read_edge_list_file(a.graph);
  const Partition p = io::read_partition_file(a.partition);
  if (p.node_count() != g.node_count())
    throw Error(ErrorKind::SizeMismatch, "partition lists " + std::to_string(p.node_count()) + " nodes, graph has " +
                                             std::to_string(g.node_count()));
  const auto which = a.laplacian == "consistent" ? CoarseLaplacian::Consistent : CoarseLaplacian::Built;
  const auto report = distance_report(g, p, which);
  Json j = io::to_json(report, a.verbose);
  if (a.mode == "full") {
    j.erase("partial");
  } else if (a.mode == "partial") {
    j.erase("full");
    j.erase("excluded_band");
  }
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out) {
  const Graph g = io::read_edge_list_file(a.graph);
  std::vector<double> values;
  if (a.laplacian == "normalized") {
    values = to_std(eigenvalues(normalized_laplacian(g)));
  } else if (a.laplacian == "signless") {
    values = to_std(eigenvalues(signless_normalized_laplacian(g)));
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(random_walk_laplacian(g), false);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::NoConvergence, "eigensolver did not converge");
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) values.push_back(solver.eigenvalues()(i).real());
    std::sort(values.begin(), values.end());
  }
  Json j;
  j["laplacian"] = a.laplacian;
  j["N"] = g.node_count();
  j["eigenvalues"] = values;
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_sbm(const SbmArgs& a, std::ostream& out) {
  SBMConfig cfg{parse_block_kind(a.kind), a.p, a.q, a.blocks, a.seed};
  const SBMSample s = sample_sbm(cfg);
  io::write_edge_list_file(a.out_prefix + ".edges", s.graph);
  io::write_partition_file(a.out_prefix + ".partition", s.truth);
  out << "sampled " << s.graph.node_count() << " nodes, " << s.graph.edge_count() << " edges ("
      << s.attempts << (s.attempts == 1 ? " attempt" : " attempts") << ")\n";
  return 0;
}

int cmd_recover(RecoverArgs a, std::ostream& out) {
  std::vector<Method> methods;
  for (const auto& m : a.methods) methods.push_back(parse_method(m));
  if (a.quick) {
    a.nodes = 60;
    a.blocks = 6;
    a.repeats = 3;
  }
  RecoveryOptions opts;
  opts.repeats = a.repeats;
  opts.base_seed = a.seed;
  opts.jobs = a.jobs;
  const auto rows = recovery_experiment(default_recovery_grid(a.nodes, a.blocks), methods, opts);

  if (a.out_prefix.empty()) {
    io::write_recovery_csv(out, rows);
    return 0;
  }
  {
    std::ofstream csv(a.out_prefix + ".csv");
    if (!csv) throw Error(ErrorKind::Io, "cannot write '" + a.out_prefix + ".csv'");
    io::write_recovery_csv(csv, rows);
  }
  Json j;
  j["N"] = a.nodes;
  j["K"] = a.blocks;
  j["repeats"] = a.repeats;
  j["seed"] = a.seed;
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(io::to_json(r));
  j["rows"] = std::move(arr);
  write_json_file(a.out_prefix + ".json", j);
  io::write_recovery_csv(out, rows);
  return 0;
}

int default_jobs() {
  if (const char* env = std::getenv("SPECTRAL_COARSEN_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectrum-preserving graph coarsening"};
  app.name("spcoarsen");
  app.require_subcommand(1);

  CoarsenArgs ca;
  auto* coarsen_cmd = app.add_subcommand("coarsen", "Coarsen a graph and report spectral distances");
  coarsen_cmd->add_option("input", ca.input, "Edge-list file")->required()->check(CLI::ExistingFile);
  coarsen_cmd->add_option("--method", ca.method, "mgc | sgc | em | sc")
      ->check(CLI::IsMember({"mgc", "sgc", "em", "sc"}, CLI::ignore_case));
  auto* ratio = coarsen_cmd->add_option("--ratio", ca.ratio, "Target size as a fraction of N")
                    ->check([](const std::string& s) { return std::stod(s) > 0.0 && std::stod(s) < 1.0 ? "" : "ratio must be in (0, 1)"; });
  auto* target = coarsen_cmd->add_option("--target-size", ca.target, "Number of supernodes")
                     ->check(CLI::PositiveNumber);
  ratio->excludes(target);
  target->excludes(ratio);
  coarsen_cmd->add_option("--seed", ca.seed, "Random seed");
  coarsen_cmd->add_option("--out-prefix", ca.out_prefix, "Output path prefix")->required();
  coarsen_cmd->add_option("--restarts", ca.kmeans.restarts, "k-means restarts")->check(CLI::PositiveNumber);
  coarsen_cmd->add_option("--max-iters", ca.kmeans.max_iters, "k-means iterations per restart")
      ->check(CLI::PositiveNumber);

  DistanceArgs da;
  auto* distance_cmd = app.add_subcommand("distance", "Spectral distance between a graph and its coarsening");
  distance_cmd->add_option("graph", da.graph, "Edge-list file")->required()->check(CLI::ExistingFile);
  distance_cmd->add_option("partition", da.partition, "Partition file")->required()->check(CLI::ExistingFile);
  distance_cmd->add_option("--mode", da.mode, "full | partial | both")->check(CLI::IsMember({"full", "partial", "both"}));
  distance_cmd->add_option("--laplacian", da.laplacian, "built | consistent")
      ->check(CLI::IsMember({"built", "consistent"}));
  distance_cmd->add_flag("--verbose", da.verbose, "Include eigenvalue arrays");

  SpectrumArgs sa;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Print Laplacian eigenvalues");
  spectrum_cmd->add_option("graph", sa.graph, "Edge-list file")->required()->check(CLI::ExistingFile);
  spectrum_cmd->add_option("--laplacian", sa.laplacian, "normalized | random-walk | signless")
      ->check(CLI::IsMember({"normalized", "random-walk", "signless"}));

  SbmArgs ba;
  auto* sbm_cmd = app.add_subcommand("sbm", "Sample a stochastic block model graph");
  sbm_cmd->add_option("--kind", ba.kind, "associative | dissortative | mixed");
  sbm_cmd->add_option("--p", ba.p, "Dense probability")->check(CLI::Range(0.0, 1.0));
  sbm_cmd->add_option("--q", ba.q, "Sparse probability")->check(CLI::Range(0.0, 1.0));
  sbm_cmd->add_option("--blocks", ba.blocks, "Comma-separated block sizes")->delimiter(',')->required();
  sbm_cmd->add_option("--seed", ba.seed, "Random seed");
  sbm_cmd->add_option("--out-prefix", ba.out_prefix, "Output path prefix")->required();

  RecoverArgs ra;
  ra.jobs = default_jobs();
  auto* recover_cmd = app.add_subcommand("recover", "Block recovery experiment on the SBM grid");
  recover_cmd->add_flag("--quick", ra.quick, "Small grid: N=60, K=6, 3 repeats");
  recover_cmd->add_option("--methods", ra.methods, "Comma-separated methods")->delimiter(',');
  recover_cmd->add_option("--repeats", ra.repeats, "Graphs per cell")->check(CLI::PositiveNumber);
  recover_cmd->add_option("--nodes", ra.nodes, "Nodes per graph")->check(CLI::PositiveNumber);
  recover_cmd->add_option("--blocks", ra.blocks, "Number of equal blocks")->check(CLI::PositiveNumber);
  recover_cmd->add_option("--seed", ra.seed, "Base seed");
  recover_cmd->add_option("--jobs", ra.jobs, "Worker threads (env SPECTRAL_COARSEN_JOBS)")
      ->check(CLI::PositiveNumber);
  recover_cmd->add_option("--out-prefix", ra.out_prefix, "Write <prefix>.csv and <prefix>.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*coarsen_cmd) {
      if (ca.target == 0 && ca.ratio == 0.0) {
        err << "error: coarsen needs --ratio or --target-size\n";
        return 1;
      }
      return cmd_coarsen(ca, out);
    }
    if (*distance_cmd) return cmd_distance(da, out);
    if (*spectrum_cmd) return cmd_spectrum(sa, out);
    if (*sbm_cmd) return cmd_sbm(ba, out);
    if (*recover_cmd) return cmd_recover(ra, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::NoConvergence ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace spcoarsen::cli
