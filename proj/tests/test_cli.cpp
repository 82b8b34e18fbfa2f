#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "spcoarsen/cli.hpp"
#include "spcoarsen/io.hpp"
#include "support/generators.hpp"

using namespace spcoarsen;
using namespace spcoarsen::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "spcoarsen");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("spcoarsen-cli-" + std::to_string(counter()++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

io::Json read_json(const std::string& path) { return io::Json::parse(slurp(path)); }

}  // namespace

TEST_CASE("coarsen P3 with mgc") {
  TempDir dir;
  spit(dir / "p3.edges", "0 1\n1 2\n");
  const auto r = run({"coarsen", dir / "p3.edges", "--method", "mgc", "--target-size", "2", "--out-prefix", dir / "out"});
  REQUIRE(r.code == 0);
  const auto j = read_json(dir / "out.report.json");
  CHECK(j["distance"]["full"].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(j["distance"]["partial"].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(j["result"]["partition"] == io::Json::array({0, 1, 0}));
  CHECK(io::read_edge_list_file(dir / "out.edges") == graph_from_edges(2, {{0, 1, 2.0}}));
  CHECK(io::read_partition_file(dir / "out.partition") == Partition({0, 1, 0}));
}

TEST_CASE("coarsen target size validation") {
  TempDir dir;
  spit(dir / "p3.edges", "0 1\n1 2\n");
  CHECK(run({"coarsen", dir / "p3.edges", "--target-size", "0", "--out-prefix", dir / "o"}).code == 1);
  CHECK(run({"coarsen", dir / "p3.edges", "--target-size", "4", "--out-prefix", dir / "o"}).code == 1);
  CHECK(run({"coarsen", dir / "p3.edges", "--out-prefix", dir / "o"}).code == 1);
  CHECK(run({"coarsen", dir / "p3.edges", "--ratio", "1.5", "--out-prefix", dir / "o"}).code == 1);
  CHECK(run({"coarsen", dir / "p3.edges", "--ratio", "0.5", "--target-size", "2", "--out-prefix", dir / "o"}).code == 1);
  CHECK(run({"coarsen", dir / "p3.edges", "--method", "metis", "--target-size", "2", "--out-prefix", dir / "o"}).code ==
        1);
  CHECK(run({"coarsen", dir / "missing.edges", "--target-size", "2", "--out-prefix", dir / "o"}).code == 1);
  CHECK_FALSE(fs::exists(dir / "o.report.json"));
}

TEST_CASE("coarsen by ratio") {
  TempDir dir;
  Rng rng(8);
  io::write_edge_list_file(dir / "g.edges", random_graph(rng, 200, 0.03));
  const auto r = run({"coarsen", dir / "g.edges", "--method", "em", "--ratio", "0.2", "--out-prefix", dir / "c"});
  REQUIRE(r.code == 0);
  CHECK(io::read_edge_list_file(dir / "c.edges").node_count() == 40);
  CHECK(read_json(dir / "c.report.json")["result"]["n"] == 40);
}

TEST_CASE("coarsen reports bounds") {
  TempDir dir;
  Rng rng(2);
  io::write_edge_list_file(dir / "g.edges", random_graph(rng, 16, 0.4));
  REQUIRE(run({"coarsen", dir / "g.edges", "--method", "mgc", "--target-size", "8", "--out-prefix", dir / "m"}).code ==
          0);
  const auto m = read_json(dir / "m.report.json");
  CHECK(m["bounds"]["full_within_bound"] == true);
  CHECK(m["bounds"]["partial_within_bound"] == true);
  REQUIRE(run({"coarsen", dir / "g.edges", "--method", "sgc", "--target-size", "8", "--out-prefix", dir / "s"}).code ==
          0);
  const auto s = read_json(dir / "s.report.json");
  CHECK(s["bounds"].contains("kmeans_cost"));
  if (s["bounds"]["kmeans_cost"].get<double>() < 1.0) CHECK(s["bounds"]["partial_within_bound"] == true);
}

TEST_CASE("distance on P3") {
  TempDir dir;
  spit(dir / "p3.edges", "0 1\n1 2\n");
  spit(dir / "p3.partition", "0 0\n1 1\n2 0\n");
  const auto r = run({"distance", dir / "p3.edges", dir / "p3.partition"});
  REQUIRE(r.code == 0);
  const auto j = io::Json::parse(r.out);
  CHECK(j["full"].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(j["partial"].get<double>() == doctest::Approx(0.0).epsilon(1e-12));

  const auto full = io::Json::parse(run({"distance", dir / "p3.edges", dir / "p3.partition", "--mode", "full"}).out);
  CHECK(full.contains("full"));
  CHECK_FALSE(full.contains("partial"));
}

TEST_CASE("distance with the identity partition") {
  TempDir dir;
  spit(dir / "k3.edges", "0 1\n1 2\n0 2\n");
  spit(dir / "id.partition", "0 0\n1 1\n2 2\n");
  const auto j = io::Json::parse(run({"distance", dir / "k3.edges", dir / "id.partition", "--verbose"}).out);
  CHECK(j["full"].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(j["partial"].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(j["eigenvalues"].size() == 3);
}

TEST_CASE("distance input errors") {
  TempDir dir;
  spit(dir / "p3.edges", "0 1\n1 2\n");
  spit(dir / "gap.partition", "0 0\n1 2\n2 0\n");
  spit(dir / "short.partition", "0 0\n1 1\n");
  const auto gap = run({"distance", dir / "p3.edges", dir / "gap.partition"});
  CHECK(gap.code == 1);
  CHECK(gap.err.find("supernode") != std::string::npos);
  CHECK(run({"distance", dir / "p3.edges", dir / "short.partition"}).code == 1);
}

TEST_CASE("spectrum") {
  TempDir dir;
  spit(dir / "k3.edges", "0 1\n1 2\n0 2\n");
  for (const char* kind : {"normalized", "random-walk"}) {
    const auto j = io::Json::parse(run({"spectrum", dir / "k3.edges", "--laplacian", kind}).out);
    const auto ev = j["eigenvalues"].get<std::vector<double>>();
    REQUIRE(ev.size() == 3);
    CHECK(ev[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(1.5));
    CHECK(ev[2] == doctest::Approx(1.5));
  }
  const auto s = io::Json::parse(run({"spectrum", dir / "k3.edges", "--laplacian", "signless"}).out);
  CHECK(s["eigenvalues"][0].get<double>() == doctest::Approx(0.5));
  CHECK(s["eigenvalues"][2].get<double>() == doctest::Approx(2.0));
}

TEST_CASE("sbm writes two triangles") {
  TempDir dir;
  const auto r =
      run({"sbm", "--kind", "associative", "--p", "1", "--q", "0", "--blocks", "3,3", "--seed", "1", "--out-prefix",
           dir / "t"});
  REQUIRE(r.code == 0);
  const Graph g = io::read_edge_list_file(dir / "t.edges");
  const Partition truth = io::read_partition_file(dir / "t.partition");
  CHECK(g.node_count() == 6);
  CHECK(g.edge_count() == 6);
  for (const auto& e : g.edges()) CHECK(truth[e.u] == truth[e.v]);
  CHECK(run({"sbm", "--kind", "nested", "--blocks", "3,3", "--out-prefix", dir / "x"}).code == 1);
  CHECK(run({"sbm", "--p", "0.1", "--q", "0.5", "--blocks", "3,3", "--out-prefix", dir / "x"}).code == 1);
}

TEST_CASE("recover input errors") {
  CHECK(run({"recover", "--methods", "sgc,louvain"}).code == 1);
  CHECK(run({"recover", "--nodes", "25", "--blocks", "10"}).code == 1);
  CHECK(run({"recover", "--repeats", "0"}).code == 1);
}

TEST_CASE("recover writes csv and json") {
  TempDir dir;
  const auto r = run({"recover", "--nodes", "24", "--blocks", "3", "--repeats", "2", "--methods", "sgc,em",
                      "--out-prefix", dir / "rec"});
  REQUIRE(r.code == 0);
  const auto csv = slurp(dir / "rec.csv");
  CHECK(csv == r.out);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 9 * 2);
  const auto j = read_json(dir / "rec.json");
  CHECK(j["rows"].size() == 18);
  CHECK(j["rows"][0]["seeds"] == 2);
}

TEST_CASE("no subcommand is a usage error") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("identical invocations give identical bytes") {
  TempDir dir;
  Rng rng(17);
  io::write_edge_list_file(dir / "g.edges", random_graph(rng, 30, 0.2));
  for (const char* method : {"mgc", "sgc", "em", "sc"}) {
    std::string outputs[2];
    for (int k = 0; k < 2; ++k) {
      const std::string prefix = dir / (std::string(method) + std::to_string(k));
      const auto r = run({"coarsen", dir / "g.edges", "--method", method, "--target-size", "9", "--seed", "4",
                          "--out-prefix", prefix});
      REQUIRE(r.code == 0);
      outputs[k] = r.out + slurp(prefix + ".edges") + slurp(prefix + ".partition") + slurp(prefix + ".report.json");
    }
    CHECK(outputs[0] == outputs[1]);
  }
  const auto a = run({"recover", "--nodes", "24", "--blocks", "3", "--repeats", "2", "--seed", "3"});
  const auto b = run({"recover", "--nodes", "24", "--blocks", "3", "--repeats", "2", "--seed", "3", "--jobs", "2"});
  CHECK(a.out == b.out);
}
