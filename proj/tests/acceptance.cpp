// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "oracles.hpp"
#include "rbsep/approx.hpp"
#include "rbsep/cli.hpp"
#include "rbsep/exact.hpp"
#include "rbsep/generators.hpp"
#include "rbsep/io.hpp"
#include "rbsep/trees.hpp"
#include "support.hpp"

using namespace rbsep;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects violations; the first few are kept for the report line.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  [[nodiscard]] Outcome outcome() const {
    std::string d = std::to_string(checks_) + " checks";
    if (!notes_.empty()) d += ", " + notes_;
    if (failures_) d += ", " + std::to_string(failures_) + " violations: " + first_;
    return {failures_ == 0, d};
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string first_, notes_;
};

std::string str(std::size_t v) { return std::to_string(v); }

std::size_t floor_log2(std::size_t n) { return std::bit_width(n) - 1; }
std::size_t ceil_log2(std::size_t n) { return n <= 1 ? 0 : std::bit_width(n - 1); }

// Graphs, colorings and exact values shared by criteria 6 and 7.
struct Instance {
  Graph g;
  Coloring c;
  std::size_t optimum;
};
std::vector<Instance> g_instances;

Outcome path_six() {
  Tally t;
  const Graph p6 = path_graph(6);
  const MaxSepReport m = maxsep_exact(p6);
  t.expect(m.value == 3, "maxsep(P6) = " + str(m.value));
  bool one = false;
  for (std::uint32_t red = 0; red < 64 && !one; ++red)
    one = sep_rb_exact(p6, support::coloring_from_mask(6, red))->optimum == 1;
  t.expect(one, "no coloring of P6 with sep_rb = 1");
  return t.outcome();
}

Outcome half_graphs() {
  Tally t;
  for (std::size_t k = 1; k <= 3; ++k) {
    const std::size_t v = maxsep_exact(gen_half_graph_complement(k).graph).value;
    t.expect(v == 2 * k - 1, "k=" + str(k) + " gave " + str(v));
  }
  return t.outcome();
}

Outcome power_sets() {
  Tally t;
  for (std::size_t k = 1; k <= 3; ++k) {
    const PowerSetGraph p = gen_power_set_graph(k);
    const std::size_t v = maxsep_exact(p.graph).value;
    t.expect(v == k, "k=" + str(k) + " gave " + str(v));
    t.expect(sep_rb_exact(p.graph, p.colorings.front())->optimum == k, "k=" + str(k) + " coloring");
  }
  return t.outcome();
}

Outcome complete_bipartite() {
  Tally t;
  const ColoredGraph k55 = gen_complete_multipartite({5, 5}, true);
  const std::size_t sep = sep_exact_allow_twins(k55.graph)->optimum;
  t.expect(sep == 8, "sep = " + str(sep));
  const std::size_t adv = sep_rb_exact(k55.graph, k55.coloring)->optimum;
  t.expect(adv == 4, "adversarial coloring gives " + str(adv));
  const std::size_t ms = maxsep_exact(k55.graph).value;
  t.expect(ms == 4, "exhaustive maxsep = " + str(ms));
  return t.outcome();
}

Outcome spiders() {
  Tally t;
  for (std::size_t k = 1; k <= 2; ++k) {
    const ColoredGraph s = gen_spider(k);
    const std::size_t v = sep_rb_exact(s.graph, s.coloring)->optimum;
    t.expect(v == 3 * k, "k=" + str(k) + " gave " + str(v));
  }
  const std::size_t ms = maxsep_exact(gen_spider(2).graph).value;
  t.expect(ms == 6, "maxsep(spider 2) = " + str(ms));
  return t.outcome();
}

Outcome oracle_equivalence() {
  Tally t;
  support::Rng rng(606);
  std::size_t graphs = 0;
  for (; graphs < 520; ++graphs) {
    const std::size_t n = 1 + graphs % 8;
    const Graph g = support::random_twin_free(rng, n, 20 + static_cast<unsigned>(rng.below(60)));
    std::vector<Coloring> colorings;
    if (n <= 6) {
      for (std::uint32_t red = 0; red < (1u << n); ++red) colorings.push_back(support::coloring_from_mask(n, red));
    } else {
      for (int i = 0; i < 64; ++i) colorings.push_back(support::random_coloring(rng, n));
    }
    for (const Coloring& c : colorings) {
      const auto bnb = sep_rb_exact(g, c, std::nullopt, Method::BranchAndBound);
      const auto brute = oracle::sep_rb(g, c);
      t.expect(bnb && brute && bnb->optimum == *brute, "n=" + str(n) + " mismatch");
      t.expect(bnb && !verify_rb_separating(g, c, bnb->witness), "n=" + str(n) + " witness");
      if (bnb) g_instances.push_back({g, c, bnb->optimum});
    }
  }
  t.note(str(graphs) + " graphs");
  t.note(str(g_instances.size()) + " colorings");
  return t.outcome();
}

Outcome greedy_ratio() {
  Tally t;
  if (g_instances.empty()) oracle_equivalence();
  double worst = 0;
  for (const Instance& in : g_instances) {
    const std::size_t n = in.g.order();
    const ApproxReport r = sep_rb_greedy(in.g, in.c);
    t.expect(!verify_rb_separating(in.g, in.c, r.solution), "greedy set does not verify");
    if (n >= 2) {
      const double bound = 2 * std::log(static_cast<double>(n)) * static_cast<double>(in.optimum);
      t.expect(static_cast<double>(r.solution.size()) <= bound + 1e-9,
               "n=" + str(n) + " greedy " + str(r.solution.size()) + " vs exact " + str(in.optimum));
      if (in.optimum) worst = std::max(worst, static_cast<double>(r.solution.size()) / static_cast<double>(in.optimum));
    }
    const std::size_t cover = exact_set_cover_size(reduce_rb_to_set_cover(in.g, in.c));
    t.expect(cover == in.optimum, "cover " + str(cover) + " vs exact " + str(in.optimum));
  }
  std::ostringstream ratio;
  ratio.precision(3);
  ratio << "worst ratio " << worst;
  t.note(ratio.str());
  return t.outcome();
}

Outcome constructions() {
  Tally t;
  support::Rng rng(808);
  std::size_t xp_runs = 0, xp_skipped = 0;
  auto check_xp = [&](const Graph& g, const Coloring& c, std::size_t exact) {
    try {
      const SolveReport xp = xp_exact_small_class(g, c);
      ++xp_runs;
      t.expect(xp.optimum == exact, "xp " + str(xp.optimum) + " vs exact " + str(exact));
      t.expect(!verify_rb_separating(g, c, xp.witness), "xp witness");
    } catch (const BudgetExceededError&) {
      ++xp_skipped;
    }
  };
  for (int i = 0; i < 220; ++i) {
    const std::size_t n = 4 + rng.below(9);
    Graph g = support::random_triangle_free(rng, n, 3 * n);
    while (!support::twin_free(g)) g = support::random_triangle_free(rng, n, 3 * n);
    const Coloring c = support::random_coloring(rng, n);
    const ApproxReport r = triangle_free_construct(g, c);
    t.expect(!verify_rb_separating(g, c, r.solution), "triangle-free set does not verify");
    t.expect(r.solution.size() <= 3 * c.min_class_size(), "triangle-free size above 3 min");
    const std::size_t exact = sep_rb_exact(g, c)->optimum;
    check_xp(g, c, exact);
  }
  for (int i = 0; i < 220; ++i) {
    const std::size_t n = 5 + rng.below(8);
    Graph g = support::random_bounded_degree(rng, n, 5, 4 * n);
    while (!support::twin_free(g)) g = support::random_bounded_degree(rng, n, 5, 4 * n);
    const std::size_t delta = graph_profile(g).max_degree;
    const Coloring c = support::random_coloring(rng, n);
    const ApproxReport r = bounded_degree_construct(g, c);
    t.expect(!verify_rb_separating(g, c, r.solution), "bounded-degree set does not verify");
    t.expect(r.solution.size() <= delta * c.min_class_size(), "bounded-degree size above delta min");
    const std::size_t exact = sep_rb_exact(g, c)->optimum;
    check_xp(g, c, exact);
  }
  t.note("440 graphs");
  t.note(str(xp_runs) + " xp runs");
  if (xp_skipped) t.note(str(xp_skipped) + " xp over budget");
  return t.outcome();
}

Outcome structural_bounds() {
  Tally t;
  support::Rng rng(909);
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 14; ++n) {
    const std::size_t count = n <= 7 ? 16 : n <= 11 ? 8 : 3;
    for (std::size_t i = 0; i < count; ++i, ++graphs) {
      const Graph g = support::random_twin_free(rng, n, 25 + static_cast<unsigned>(rng.below(50)));
      const std::size_t maxsep = maxsep_exact(g, 14).value;
      const std::size_t sep = sep_exact(g)->optimum;
      const std::size_t gamma = gamma_exact(g).optimum;
      const std::size_t delta = graph_profile(g).max_degree;
      const std::string tag = "n=" + str(n);
      if (n != 8 && n != 9) t.expect(maxsep >= floor_log2(n), tag + " maxsep " + str(maxsep) + " below floor(log2 n)");
      t.expect(maxsep <= sep, tag + " maxsep above sep");
      t.expect(sep <= ceil_log2(n) * maxsep, tag + " sep above ceil(log2 n) maxsep");
      t.expect(sep <= ceil_log2(delta + 1) * maxsep + gamma, tag + " sep above delta bound");
    }
  }
  t.note(str(graphs) + " graphs");
  return t.outcome();
}

Outcome tree_suite() {
  Tally t;
  support::Rng rng(1010);
  std::size_t exact_trees = 0;
  for (int i = 0; i < 220; ++i) {
    const bool exact_part = i % 4 == 0;
    const std::size_t n = exact_part ? 5 + rng.below(12) : 5 + rng.below(56);
    const Graph tree = support::random_tree(rng, n);
    const TreeProfile p = tree_profile(tree);
    const std::string tag = "n=" + str(n);
    for (Vertex x = 0; x < n; ++x) {
      if (p.leaves.contains(x)) continue;
      const ParitySets ps = parity_sets(tree, x);
      t.expect(!verify_separating(tree, ps.odd), tag + " C1 fails");
      t.expect(!verify_separating(tree, ps.even), tag + " C2 fails");
    }
    const VertexSet all = tree_all_pairs_construct(tree);
    t.expect(all.size() == n - p.s(), tag + " all-pairs size");
    t.expect(!verify_separating(tree, all), tag + " all-pairs set fails");
    for (int k = 0; k < 4; ++k) {
      const Coloring c = support::random_coloring(rng, n);
      const VertexSet s = tree_rb_construct(tree, c);
      t.expect(!verify_rb_separating(tree, c, s), tag + " rb construction fails");
      t.expect(2 * s.size() <= n + p.s(), tag + " rb construction above (n+s)/2");
    }
    Coloring single = Coloring::monochromatic(n, Color::Blue);
    single.set(rng.below(n), Color::Red);
    const VertexSet one = single_red_sep(tree, single);
    t.expect(one.size() <= 2 && !verify_rb_separating(tree, single, one), tag + " single red");
    if (!exact_part) continue;
    ++exact_trees;
    const MaxSepReport m = maxsep_exact(tree, 16);
    const VertexSet s = tree_rb_construct(tree, m.worst_coloring);
    t.expect(!verify_rb_separating(tree, m.worst_coloring, s), tag + " rb construction fails on worst coloring");
    t.expect(2 * s.size() <= n + p.s(), tag + " worst-coloring construction above (n+s)/2");
    t.expect(3 * m.value <= 2 * n, tag + " maxsep " + str(m.value) + " above 2n/3");
  }
  t.note("220 trees");
  t.note(str(exact_trees) + " with exact maxsep");
  return t.outcome();
}

Outcome reductions() {
  Tally t;
  support::Rng rng(1111);
  for (int i = 0; i < 25; ++i) {
    const std::size_t u = 1 + rng.below(4);
    std::vector<std::vector<std::size_t>> sets(1 + rng.below(4));
    for (std::size_t e = 0; e < u; ++e) {
      bool placed = false;
      for (auto& s : sets)
        if (rng.coin(40)) {
          s.push_back(e);
          placed = true;
        }
      if (!placed) sets[rng.below(sets.size())].push_back(e);
    }
    const SplitReduction r = gen_split_from_set_cover(u, sets);
    const std::size_t sep = sep_rb_exact(r.graph, r.coloring)->optimum;
    t.expect(sep == *oracle::min_cover(u, sets) + 1, "split: sep " + str(sep));
  }
  std::size_t sources = 0;
  while (sources < 12) {
    const std::size_t n = 3 + rng.below(5);
    const Graph g = support::random_graph(rng, n, 40);
    Vertex pivot = n;
    for (Vertex v = 0; v < n && pivot == n; ++v)
      if (g.degree(v) == 2) pivot = v;
    if (pivot == n) continue;
    ++sources;
    const ColoredGraph two = gen_two_copies_ds(g, pivot);
    const std::size_t sep = sep_rb_exact(two.graph, two.coloring)->optimum;
    t.expect(sep == oracle::gamma(g) + 1, "two copies: sep " + str(sep) + " gamma " + str(oracle::gamma(g)));
  }
  for (int i = 0; i < 12; ++i) {
    const Graph g = support::random_graph(rng, 2 + rng.below(6), 35);
    const std::size_t gamma = oracle::gamma(g);
    const ColoredGraph h = gen_copies_plus_independent(g, gamma);
    const std::size_t sep = sep_rb_exact(h.graph, h.coloring)->optimum;
    t.expect(sep == gamma, "copies+independent: sep " + str(sep) + " gamma " + str(gamma));
    if (gamma > 0) t.expect(!sep_rb_exact(h.graph, h.coloring, gamma - 1), "copies+independent below gamma");
  }

  const MaxsepGadget h = gen_maxsep_gadget(SatInstance{1, {{1}}});
  t.expect(h.graph.order() == 48, "gadget order " + str(h.graph.order()));
  t.expect(h.k == 13, "gadget k " + str(h.k));
  const VertexSet s = h.prescribed_set({true});
  t.expect(s.size() == h.k && !verify_separating(h.graph, s), "prescribed set does not separate");
  using L = DominationGadgetLayout;
  for (std::size_t base : h.gadget_bases) {
    std::vector<bool> hit(4, false);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const VertexSet& np = h.graph.closed_neighborhood(base + L::kP + i);
        const VertexSet& nq = h.graph.closed_neighborhood(base + L::kQ + j);
        std::vector<Vertex> diff;
        for (Vertex v = 0; v < h.graph.order(); ++v)
          if (np.contains(v) != nq.contains(v)) diff.push_back(v);
        if (diff.size() == 1) {
          const Vertex u = diff.front();
          const bool is_u = u >= base + L::kU && u < base + L::kP;
          t.expect(is_u, "p/q pair separated only by a non-u vertex");
          if (is_u) hit[u - base - L::kU] = true;
        }
      }
    for (std::size_t k = 0; k < 4; ++k) t.expect(hit[k], "u" + str(k + 1) + " is not a sole p/q separator");
  }
  t.note("25 split, 12 two-copies, 12 copies+independent, gadget");
  return t.outcome();
}

Outcome determinism() {
  Tally t;
  const auto dir = std::filesystem::temp_directory_path() / ("rbsep-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  for (const char* suite : {"fuzz", "families", "ratio"}) {
    std::string runs[2];
    for (int i = 0; i < 2; ++i) {
      const std::string path = (dir / (std::string(suite) + std::to_string(i) + ".csv")).string();
      std::ostringstream out, err;
      const int code = cli::run({"experiment", "--suite", suite, "--seed", "7", "--out", path}, out, err);
      t.expect(code == 0, std::string(suite) + " exit " + std::to_string(code));
      runs[i] = io::read_file(path);
    }
    t.expect(runs[0] == runs[1], std::string(suite) + " CSV differs between runs");
    t.expect(!runs[0].empty(), std::string(suite) + " CSV empty");
  }
  std::filesystem::remove_all(dir);
  return t.outcome();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"maxsep(P6) = 3 with a coloring of value 1", path_six},
      {"complement half-graphs reach 2k - 1", half_graphs},
      {"power-set graphs reach k", power_sets},
      {"K5,5: sep 8, maxsep 4", complete_bipartite},
      {"spiders reach 3k, maxsep 6 at k = 2", spiders},
      {"branch-and-bound equals exhaustive search", oracle_equivalence},
      {"greedy within 2 ln n, cover optimum equals sep_rb", greedy_ratio},
      {"triangle-free and bounded-degree constructions, xp", constructions},
      {"lower bound and ratio inequalities", structural_bounds},
      {"tree constructions and bounds", tree_suite},
      {"hardness reductions", reductions},
      {"experiment CSV is byte-identical across runs", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %2zu  %s (%s; %.0f ms)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), ms);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
