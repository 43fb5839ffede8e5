#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rbsep/approx.hpp"
#include "rbsep/cli.hpp"
#include "rbsep/exact.hpp"
#include "rbsep/generators.hpp"
#include "rbsep/io.hpp"
#include "support.hpp"

using namespace rbsep;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() / ("rbsep-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& contents) const {
    const std::string p = (path_ / name).string();
    std::ofstream(p) << contents;
    return p;
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json load_json(const std::string& path) { return nlohmann::json::parse(io::read_file(path)); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("solve on P6") {
    TempDir dir;
    const std::string g = dir.file("p6.graph", io::to_string(path_graph(6)));
    const std::string mono = dir.file("mono.coloring", "BBBBBB\n");
    Run r = run({"solve", "--graph", g, "--coloring", mono, "--method", "exact"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("solve.optimum: 0\n") != std::string::npos);

    const MaxSepReport worst = maxsep_exact(path_graph(6));
    const std::string wc = dir.file("worst.coloring", io::to_string(worst.worst_coloring));
    const std::string json = dir.path("worst.json");
    r = run({"solve", "--graph", g, "--coloring", wc, "--out", json});
    CHECK(r.code == cli::kOk);
    const auto j = load_json(json);
    CHECK(j["results"]["method"] == "exact");
    CHECK(j["results"]["solve"]["optimum"] == 3);
    CHECK(j["results"]["verified"] == true);
    CHECK(j["certificates"].size() == 1);
    CHECK(j.contains("inputs"));
    CHECK(j["timing"].contains("elapsed_ms"));

    r = run({"solve", "--graph", g, "--coloring", wc, "--method", "exact", "--budget", "2"});
    CHECK(r.code == cli::kInfeasible);
    r = run({"solve", "--graph", g, "--coloring", wc, "--method", "exact", "--cap", "5"});
    CHECK(r.code == cli::kCapExceeded);
  }

  TEST_CASE("greedy reports its guarantee") {
    TempDir dir;
    const ColoredGraph k55 = gen_complete_multipartite({5, 5});
    const std::string g = dir.file("k55.graph", io::to_string(k55.graph));
    const std::string c = dir.file("k55.coloring", io::to_string(k55.coloring));
    const std::string json = dir.path("k55.json");
    const Run r = run({"solve", "--graph", g, "--coloring", c, "--method", "greedy", "--out", json});
    CHECK(r.code == cli::kOk);
    const auto j = load_json(json);
    CHECK(j["results"]["approx"]["guarantee"].get<double>() == doctest::Approx(2 * std::log(10.0)));
    CHECK(j["results"]["approx"]["size"].get<std::size_t>() >= 4);
  }

  TEST_CASE("input errors and infeasible instances") {
    TempDir dir;
    const std::string bad = dir.file("bad.graph", "3 2\n0 1\n1 1\n");
    const std::string col = dir.file("c.coloring", "RBB\n");
    Run r = run({"solve", "--graph", bad, "--coloring", col});
    CHECK(r.code == cli::kInputError);
    CHECK(r.err.find(bad + ":3") != std::string::npos);

    const std::string k2 = dir.file("k2.graph", "2 1\n0 1\n");
    const std::string rb = dir.file("rb.coloring", "RB\n");
    r = run({"solve", "--graph", k2, "--coloring", rb});
    CHECK(r.code == cli::kInfeasible);

    const std::string k3 = dir.file("k3.graph", io::to_string(complete_graph(3)));
    const std::string rbb = dir.file("rbb.coloring", "RBB\n");
    r = run({"solve", "--graph", k3, "--coloring", rbb, "--method", "triangle-free"});
    CHECK(r.code == cli::kInputError);
    CHECK(r.err.find("twin_free") != std::string::npos);

    const std::string tri = dir.file("tri.graph", "5 5\n0 1\n0 2\n0 3\n1 2\n1 4\n");
    r = run({"solve", "--graph", tri, "--coloring", dir.file("x.coloring", "RBBRB\n"), "--method", "triangle-free"});
    CHECK(r.code == cli::kInputError);
    CHECK(r.err.find("triangle_free") != std::string::npos);

    r = run({"solve", "--graph", dir.path("missing.graph"), "--coloring", col});
    CHECK(r.code == cli::kInputError);
    r = run({"frobnicate"});
    CHECK(r.code == cli::kInputError);
    r = run({"maxsep", "--graph", k2});
    CHECK(r.code == cli::kInputError);
  }

  TEST_CASE("maxsep modes") {
    TempDir dir;
    const std::string g = dir.file("p6.graph", io::to_string(path_graph(6)));
    const std::string json = dir.path("m.json");
    Run r = run({"maxsep", "--graph", g, "--out", json});
    CHECK(r.code == cli::kOk);
    CHECK(load_json(json)["results"]["maxsep"]["value"] == 3);
    CHECK(load_json(json)["results"]["maxsep"]["worst_coloring"].get<std::string>().size() == 6);

    r = run({"maxsep", "--graph", g, "--mode", "approx", "--out", json});
    CHECK(r.code == cli::kOk);
    const auto a = load_json(json)["results"];
    CHECK(a["upper_bound"].get<std::size_t>() >= a["lower_bound"].get<std::size_t>());

    r = run({"maxsep", "--graph", g, "--mode", "sample", "--samples", "16", "--out", json});
    CHECK(r.code == cli::kOk);
    CHECK(load_json(json)["results"]["lower_bound"].get<std::size_t>() <= 3);

    r = run({"maxsep", "--graph", g, "--cap", "5"});
    CHECK(r.code == cli::kCapExceeded);
  }

  TEST_CASE("bounds on small graphs") {
    TempDir dir;
    const std::string json = dir.path("b.json");
    Run r = run({"bounds", "--graph", dir.file("p6.graph", io::to_string(path_graph(6))), "--out", json});
    CHECK(r.code == cli::kOk);
    const auto j = load_json(json);
    CHECK(j["bound_checks"].size() == 8);
    for (const auto& b : j["bound_checks"]) CHECK(b["status"] == "holds");
    CHECK(r.out.find("check: maxsep <= sep") != std::string::npos);

    r = run({"bounds", "--graph", dir.file("k2.graph", "2 1\n0 1\n"), "--out", json});
    CHECK(r.code == cli::kOk);
    for (const auto& b : load_json(json)["bound_checks"]) CHECK(b["status"] != "fails");

    r = run({"bounds", "--graph", dir.file("p8.graph", io::to_string(path_graph(8))), "--out", json});
    CHECK(r.code == cli::kOk);
    CHECK(load_json(json)["bound_checks"][0]["status"] == "skipped");
  }

  TEST_CASE("generate, reduce and verify") {
    TempDir dir;
    const std::string prefix = dir.path("k55");
    Run r = run({"generate", "--spec", "multipartite:parts=5/5", "--out", prefix});
    CHECK(r.code == cli::kOk);
    CHECK(io::load_graph(prefix + ".graph") == gen_complete_multipartite({5, 5}).graph);
    CHECK(io::read_file(prefix + ".spec") == "multipartite:parts=5/5\n");
    CHECK(fs::exists(prefix + ".coloring"));

    r = run({"generate", "--spec", "sat-gadget:vars=1,cnf=1", "--out", dir.path("gad")});
    CHECK(r.code == cli::kOk);
    CHECK(io::read_file(dir.path("gad") + ".spec") == "sat-gadget:vars=1,cnf=1\nk 13\n");
    r = run({"generate", "--spec", "nope:k=1", "--out", dir.path("x")});
    CHECK(r.code == cli::kInputError);

    r = run({"reduce", "--graph", prefix + ".graph", "--coloring", prefix + ".coloring"});
    CHECK(r.code == cli::kOk);
    std::istringstream in(r.out);
    const SetSystem sys = read_set_system(in);
    const ColoredGraph k55 = gen_complete_multipartite({5, 5});
    CHECK(greedy_set_cover(sys).solution.size() == sep_rb_greedy(k55.graph, k55.coloring).solution.size());
    CHECK(exact_set_cover_size(sys) == 4);

    const std::string mono = dir.file("mono.coloring", "BBBBBBBBBB\n");
    r = run({"reduce", "--graph", prefix + ".graph", "--coloring", mono});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.rfind("0 10\n", 0) == 0);

    const std::string json = dir.path("solve.json");
    r = run({"solve", "--graph", prefix + ".graph", "--coloring", prefix + ".coloring", "--out", json});
    CHECK(r.code == cli::kOk);
    r = run({"verify", "--graph", prefix + ".graph", "--coloring", prefix + ".coloring", "--report", json});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("valid: true\n") != std::string::npos);

    const std::string good = dir.file("good.set", "0 1 2 3 5 6 7 8\n");
    r = run({"verify", "--graph", prefix + ".graph", "--set", good, "--kind", "separating"});
    CHECK(r.code == cli::kOk);
    const std::string short_set = dir.file("short.set", "0 1 2\n");
    r = run({"verify", "--graph", prefix + ".graph", "--set", short_set, "--kind", "separating"});
    CHECK(r.code == cli::kInfeasible);
    r = run({"verify", "--graph", prefix + ".graph", "--set", short_set, "--kind", "dominating"});
    CHECK(r.code == cli::kInfeasible);
    r = run({"verify", "--graph", prefix + ".graph", "--set", dir.file("d.set", "0 5\n"), "--kind", "dominating"});
    CHECK(r.code == cli::kOk);
  }

  TEST_CASE("experiment CSV is reproducible") {
    cli::ExperimentOptions opts;
    opts.suite = cli::Suite::Fuzz;
    opts.sizes = {5, 6};
    opts.per_size = 3;
    const std::string a = cli::run_experiment(opts);
    CHECK(a == cli::run_experiment(opts));
    CHECK(a.rfind("spec,coloring_seed,", 0) == 0);
    CHECK(a.find("error") == std::string::npos);
    opts.suite = cli::Suite::Families;
    const std::string fam = cli::run_experiment(opts);
    CHECK(fam.find("mismatch") == std::string::npos);
    CHECK(fam.find("violation") == std::string::npos);

    TempDir dir;
    const std::string out = dir.path("r.csv");
    const Run r = run({"experiment", "--suite", "ratio", "--sizes", "4,5", "--count", "2", "--out", out});
    CHECK(r.code == cli::kOk);
    opts.suite = cli::Suite::Ratio;
    opts.sizes = {4, 5};
    opts.per_size = 2;
    CHECK(io::read_file(out) == cli::run_experiment(opts));
  }
}

TEST_SUITE("cli-properties") {
  TEST_CASE("auto never picks a method whose preconditions fail") {
    support::Rng rng(61);
    for (int it = 0; it < 300; ++it) {
      const std::size_t n = 1 + rng.below(12);
      const Graph g = support::random_graph(rng, n, 10 + rng.below(80));
      const GraphProfile p = graph_profile(g);
      for (std::size_t cap : {std::size_t{0}, std::size_t{6}, cli::kDefaultSepCap}) {
        const cli::SolveMethod m = cli::auto_method(p, cap);
        CHECK_FALSE(cli::method_precondition(m, p));
        if (n <= cap) CHECK(m == cli::SolveMethod::Exact);
      }
    }
  }

  TEST_CASE("solve certificates reverify for every method") {
    support::Rng rng(62);
    TempDir dir;
    for (int it = 0; it < 30; ++it) {
      const std::size_t n = 4 + rng.below(5);
      Graph g = support::random_triangle_free(rng, n, 200);
      while (!support::twin_free(g)) g = support::random_triangle_free(rng, n, 200);
      const Coloring c = support::random_coloring(rng, n);
      const std::string gp = dir.file("g.graph", io::to_string(g));
      const std::string cp = dir.file("g.coloring", io::to_string(c));
      const auto exact = sep_rb_exact(g, c);
      for (const char* m : {"exact", "greedy", "triangle-free", "bounded-degree", "xp"}) {
        const std::string json = dir.path(std::string(m) + ".json");
        const Run r = run({"solve", "--graph", gp, "--coloring", cp, "--method", m, "--out", json});
        REQUIRE(r.code == cli::kOk);
        const Run v = run({"verify", "--graph", gp, "--coloring", cp, "--report", json});
        CHECK(v.code == cli::kOk);
        const auto j = load_json(json)["results"];
        const std::size_t size = j.contains("solve") ? j["solve"]["optimum"].get<std::size_t>()
                                                     : j["approx"]["size"].get<std::size_t>();
        CHECK(size >= exact->optimum);
        if (j.contains("solve")) CHECK(size == exact->optimum);
      }
    }
  }
}
