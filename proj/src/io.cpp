#include "spcoarsen/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace spcoarsen::io {

namespace {

[[noreturn]] void parse_error(int line, const std::string& msg) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

long parse_id(const std::string& tok, int line) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0 || v > INT32_MAX)
    parse_error(line, "bad node id '" + tok + "'");
  return v;
}

double parse_weight(const std::string& tok, int line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) parse_error(line, "bad weight '" + tok + "'");
  return v;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write '" + path + "'");
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  long declared = -1;
  long max_id = -1;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    auto tok = tokens(line);
    if (tok.empty()) continue;
    if (tok[0].starts_with("#")) {
      if (tok[0] == "#nodes") {
        if (tok.size() != 2) parse_error(lineno, "expected '#nodes N'");
        declared = parse_id(tok[1], lineno);
      }
      continue;
    }
    if (tok.size() != 2 && tok.size() != 3) parse_error(lineno, "expected 'u v [w]'");
    const long u = parse_id(tok[0], lineno), v = parse_id(tok[1], lineno);
    const double w = tok.size() == 3 ? parse_weight(tok[2], lineno) : 1.0;
    max_id = std::max({max_id, u, v});
    edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
  }
  const long n = declared >= 0 ? declared : max_id + 1;
  if (n < 1) throw Error(ErrorKind::Parse, "empty edge list");
  return graph_from_edges(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  auto in = open_in(path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "#nodes " << g.node_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << format_double(e.w) << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  auto out = open_out(path);
  write_edge_list(out, g);
}

Partition read_partition(std::istream& in) {
  std::vector<std::pair<long, long>> pairs;
  long max_node = -1;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    auto tok = tokens(line);
    if (tok.empty() || tok[0].starts_with("#")) continue;
    if (tok.size() != 2) parse_error(lineno, "expected 'node supernode'");
    const long node = parse_id(tok[0], lineno), super = parse_id(tok[1], lineno);
    max_node = std::max(max_node, node);
    pairs.emplace_back(node, super);
  }
  if (pairs.empty()) throw Error(ErrorKind::Parse, "empty partition file");
  std::vector<int> assignment(static_cast<std::size_t>(max_node) + 1, -1);
  for (const auto& [node, super] : pairs) {
    if (assignment[node] >= 0) throw Error(ErrorKind::Parse, "node " + std::to_string(node) + " listed twice");
    assignment[node] = static_cast<int>(super);
  }
  for (std::size_t i = 0; i < assignment.size(); ++i)
    if (assignment[i] < 0) throw Error(ErrorKind::Parse, "node " + std::to_string(i) + " missing");
  return Partition(std::move(assignment));
}

Partition read_partition_file(const std::string& path) {
  auto in = open_in(path);
  return read_partition(in);
}

void write_partition(std::ostream& out, const Partition& p) {
  for (int i = 0; i < p.node_count(); ++i) out << i << ' ' << p[i] << '\n';
}

void write_partition_file(const std::string& path, const Partition& p) {
  auto out = open_out(path);
  write_partition(out, p);
}

Json to_json(const SpectralDistanceReport& r, bool verbose) {
  Json j;
  j["full"] = r.full;
  j["partial"] = r.partial;
  j["excluded_band"] = r.excluded_band;
  j["k1"] = r.k1;
  j["k2"] = r.k2;
  j["n"] = r.n;
  j["N"] = r.N;
  if (verbose) {
    j["eigenvalues"] = r.original_eigenvalues;
    j["coarse_eigenvalues"] = r.coarse_eigenvalues;
  }
  return j;
}

Json to_json(const CoarsenResult& r) {
  Json j;
  j["method"] = std::string(to_string(r.method));
  j["N"] = r.partition.node_count();
  j["n"] = r.partition.supernode_count();
  j["partition"] = r.partition.assignment();

  const auto& d = r.diagnostics;
  Json diag = Json::object();
  switch (r.method) {
    case Method::MGC: {
      Json merges = Json::array();
      for (const auto& [a, b] : d.merges) merges.push_back({a, b});
      diag["merges"] = std::move(merges);
      diag["merge_eps"] = d.merge_eps;
      double sum = 0.0;
      for (double e : d.merge_eps) sum += e;
      diag["eps_sum"] = sum;
      diag["fallback_merges"] = d.fallback_merges;
      break;
    }
    case Method::SGC:
      diag["k1"] = d.k1.value_or(0);
      diag["kmeans_cost"] = d.kmeans_cost.value_or(0.0);
      diag["k1_sweep"] = d.k1_sweep;
      diag["sweep_costs"] = d.sweep_costs;
      diag["kmeans_degenerate"] = d.kmeans_degenerate;
      break;
    case Method::SC:
      diag["kmeans_cost"] = d.kmeans_cost.value_or(0.0);
      diag["kmeans_degenerate"] = d.kmeans_degenerate;
      break;
    case Method::EM:
      diag["rounds"] = d.rounds;
      break;
  }
  j["diagnostics"] = std::move(diag);

  Json edges = Json::array();
  for (const auto& e : r.coarse.edges()) edges.push_back({e.u, e.v, e.w});
  j["coarse_edges"] = std::move(edges);
  return j;
}

Json to_json(const RecoveryRow& r) {
  Json j;
  j["kind"] = std::string(to_string(r.kind));
  j["p"] = r.p;
  j["q"] = r.q;
  j["method"] = std::string(to_string(r.method));
  // NaN has no JSON form; failed cells become null.
  j["mean_nmi"] = std::isnan(r.mean_nmi) ? Json(nullptr) : Json(r.mean_nmi);
  j["std_nmi"] = std::isnan(r.std_nmi) ? Json(nullptr) : Json(r.std_nmi);
  j["seeds"] = r.seeds;
  Json scores = Json::array();
  for (double s : r.scores) scores.push_back(std::isnan(s) ? Json(nullptr) : Json(s));
  j["scores"] = std::move(scores);
  return j;
}

void write_recovery_csv(std::ostream& out, const std::vector<RecoveryRow>& rows) {
  out << "kind,p,q,method,mean_nmi,std_nmi,seeds\n";
  for (const auto& r : rows) {
    out << to_string(r.kind) << ',' << format_double(r.p) << ',' << format_double(r.q) << ',' << to_string(r.method)
        << ',' << (std::isnan(r.mean_nmi) ? "nan" : format_double(r.mean_nmi)) << ','
        << (std::isnan(r.std_nmi) ? "nan" : format_double(r.std_nmi)) << ',' << r.seeds << '\n';
  }
}

}  // namespace spcoarsen::io
