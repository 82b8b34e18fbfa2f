#include "spcoarsen/sbm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

#include "spcoarsen/rng.hpp"

namespace spcoarsen {

namespace {

enum StreamTag : std::uint64_t { kBlockMatrix = 1, kLayout = 2, kEdges = 3 };
constexpr int kMaxAttempts = 100;

}  // namespace

std::string_view to_string(BlockKind k) {
  switch (k) {
    case BlockKind::Associative: return "associative";
    case BlockKind::Dissortative: return "dissortative";
    case BlockKind::Mixed: return "mixed";
  }
  return "unknown";
}

BlockKind parse_block_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "associative" || lower == "assortative") return BlockKind::Associative;
  if (lower == "dissortative" || lower == "dissociative" || lower == "disassortative") return BlockKind::Dissortative;
  if (lower == "mixed") return BlockKind::Mixed;
  throw Error(ErrorKind::BadConfig, "unknown block kind '" + std::string(name) + "'");
}

int SBMConfig::node_count() const { return std::accumulate(block_sizes.begin(), block_sizes.end(), 0); }

void SBMConfig::validate() const {
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0))
    throw Error(ErrorKind::BadConfig, "probabilities must lie in [0, 1]");
  if (kind != BlockKind::Mixed && q > p) throw Error(ErrorKind::BadConfig, "expected q <= p");
  if (block_sizes.empty()) throw Error(ErrorKind::BadConfig, "no blocks");
  for (int s : block_sizes)
    if (s < 1) throw Error(ErrorKind::BadConfig, "block sizes must be positive");
}

Eigen::MatrixXd build_block_matrix(const SBMConfig& cfg) {
  cfg.validate();
  const auto k = static_cast<Eigen::Index>(cfg.block_sizes.size());
  Eigen::MatrixXd b(k, k);
  switch (cfg.kind) {
    case BlockKind::Associative:
      b.setConstant(cfg.q);
      b.diagonal().setConstant(cfg.p);
      break;
    case BlockKind::Dissortative:
      b.setConstant(cfg.p);
      b.diagonal().setConstant(cfg.q);
      break;
    case BlockKind::Mixed: {
      Rng rng(derive_seed(cfg.seed, {kBlockMatrix}));
      for (Eigen::Index r = 0; r < k; ++r)
        for (Eigen::Index c = r; c < k; ++c) b(r, c) = b(c, r) = (rng() >> 63) ? cfg.p : cfg.q;
      break;
    }
  }
  return b;
}

SBMSample sample_sbm(const SBMConfig& cfg) {
  const Eigen::MatrixXd b = build_block_matrix(cfg);
  const int n = cfg.node_count();

  std::vector<int> block;
  block.reserve(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < cfg.block_sizes.size(); ++k) block.insert(block.end(), cfg.block_sizes[k], static_cast<int>(k));
  {
    Rng rng(derive_seed(cfg.seed, {kLayout}));
    for (int i = n - 1; i > 0; --i)
      std::swap(block[i], block[uniform_index(rng, static_cast<std::uint64_t>(i) + 1)]);
  }

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Rng rng(derive_seed(cfg.seed + static_cast<std::uint64_t>(attempt), {kEdges}));
    std::vector<Edge> edges;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (uniform01(rng) < b(block[i], block[j])) {
          edges.push_back({i, j, 1.0});
          ++deg[i];
          ++deg[j];
        }
    if (std::find(deg.begin(), deg.end(), 0) != deg.end()) continue;
    return {graph_from_edges(n, edges), Partition(block), attempt + 1};
  }
  throw Error(ErrorKind::DegenerateSample,
              "isolated nodes remained after " + std::to_string(kMaxAttempts) + " attempts");
}

}  // namespace spcoarsen
