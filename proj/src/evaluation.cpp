#include "spcoarsen/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <thread>

#include "spcoarsen/rng.hpp"

namespace spcoarsen {

namespace {

double entropy(const std::vector<int>& sizes, double total) {
  double h = 0.0;
  for (int s : sizes) {
    if (s == 0) continue;
    const double pr = s / total;
    h -= pr * std::log(pr);
  }
  return h;
}

}  // namespace

double nmi(const Partition& a, const Partition& b) {
  if (a.node_count() != b.node_count())
    throw Error(ErrorKind::SizeMismatch, "partitions over " + std::to_string(a.node_count()) + " and " +
                                             std::to_string(b.node_count()) + " nodes");
  const double total = a.node_count();
  const double ha = entropy(a.sizes(), total);
  const double hb = entropy(b.sizes(), total);
  if (a.supernode_count() == 1 && b.supernode_count() == 1) return 1.0;

  std::map<std::pair<int, int>, int> joint;
  for (int i = 0; i < a.node_count(); ++i) ++joint[{a[i], b[i]}];
  double mi = 0.0;
  for (const auto& [key, count] : joint) {
    const double pj = count / total;
    const double pa = a.sizes()[key.first] / total;
    const double pb = b.sizes()[key.second] / total;
    mi += pj * std::log(pj / (pa * pb));
  }
  const double score = mi / (0.5 * (ha + hb));
  return std::clamp(score, 0.0, 1.0);
}

std::vector<SBMConfig> default_recovery_grid(int node_count, int blocks) {
  if (blocks < 1 || node_count % blocks != 0)
    throw Error(ErrorKind::BadConfig, "node count " + std::to_string(node_count) + " not divisible into " +
                                          std::to_string(blocks) + " equal blocks");
  const std::vector<int> sizes(static_cast<std::size_t>(blocks), node_count / blocks);
  const std::pair<double, double> settings[] = {{0.2, 0.01}, {0.5, 0.1}, {0.8, 0.3}};
  const BlockKind kinds[] = {BlockKind::Associative, BlockKind::Dissortative, BlockKind::Mixed};
  std::vector<SBMConfig> grid;
  for (const auto& [p, q] : settings)
    for (BlockKind kind : kinds) grid.push_back({kind, p, q, sizes, 0});
  return grid;
}

std::vector<RecoveryRow> recovery_experiment(const std::vector<SBMConfig>& grid, const std::vector<Method>& methods,
                                             const RecoveryOptions& options) {
  if (options.repeats < 1) throw Error(ErrorKind::BadConfig, "repeats must be >= 1");
  for (const auto& cfg : grid) cfg.validate();
  options.kmeans.validate();

  const std::size_t m = methods.size();
  const auto reps = static_cast<std::size_t>(options.repeats);
  // scores[(config * repeats + repeat) * methods + method]
  std::vector<double> scores(grid.size() * reps * m, std::numeric_limits<double>::quiet_NaN());

  const std::size_t jobs_total = grid.size() * reps;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t job = next++; job < jobs_total; job = next++) {
      const std::size_t c = job / reps, r = job % reps;
      SBMConfig cfg = grid[c];
      cfg.seed = derive_seed(options.base_seed, {c, r});
      std::optional<SBMSample> sample;
      try {
        sample = sample_sbm(cfg);
      } catch (const Error&) {
        continue;
      }
      const int target = static_cast<int>(cfg.block_sizes.size());
      for (std::size_t k = 0; k < m; ++k) {
        KMeansConfig km = options.kmeans;
        km.seed = derive_seed(cfg.seed, {0x6b6d65616e73ULL});
        try {
          const auto result = run_method(methods[k], sample->graph, target, km);
          scores[job * m + k] = nmi(result.partition, sample->truth);
        } catch (const Error&) {
        }
      }
    }
  };
  const int threads = std::max(1, options.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<RecoveryRow> rows;
  for (std::size_t c = 0; c < grid.size(); ++c) {
    for (std::size_t k = 0; k < m; ++k) {
      RecoveryRow row;
      row.kind = grid[c].kind;
      row.p = grid[c].p;
      row.q = grid[c].q;
      row.method = methods[k];
      row.seeds = options.repeats;
      double sum = 0.0;
      for (std::size_t r = 0; r < reps; ++r) {
        const double s = scores[(c * reps + r) * m + k];
        row.scores.push_back(s);
        sum += s;
      }
      row.mean_nmi = sum / options.repeats;
      double var = 0.0;
      for (double s : row.scores) var += (s - row.mean_nmi) * (s - row.mean_nmi);
      row.std_nmi = std::sqrt(var / options.repeats);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace spcoarsen
