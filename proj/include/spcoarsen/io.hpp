#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "spcoarsen/algorithms.hpp"
#include "spcoarsen/coarsening.hpp"
#include "spcoarsen/evaluation.hpp"
#include "spcoarsen/graph.hpp"
#include "spcoarsen/spectral.hpp"

namespace spcoarsen::io {

using Json = nlohmann::ordered_json;

// Edge lists: one `u v [w]` per line, 0-based ids, `#` starts a comment. A
// `#nodes N` line fixes the node count; otherwise it is 1 + the largest id.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// Partitions: one `node supernode` per line, every node listed once.
Partition read_partition(std::istream& in);
Partition read_partition_file(const std::string& path);
void write_partition(std::ostream& out, const Partition& p);
void write_partition_file(const std::string& path, const Partition& p);

Json to_json(const SpectralDistanceReport& r, bool verbose = false);
Json to_json(const CoarsenResult& r);
Json to_json(const RecoveryRow& r);

void write_recovery_csv(std::ostream& out, const std::vector<RecoveryRow>& rows);

/// Shortest decimal form that reads back to the same double.
std::string format_double(double v);

}  // namespace spcoarsen::io
