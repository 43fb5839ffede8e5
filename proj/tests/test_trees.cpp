#include <doctest.h>

#include "rbsep/exact.hpp"
#include "rbsep/generators.hpp"
#include "rbsep/io.hpp"
#include "rbsep/trees.hpp"
#include "support.hpp"

using namespace rbsep;

namespace {

Coloring single(std::size_t n, Vertex v) {
  Coloring c = Coloring::monochromatic(n, Color::Blue);
  c.set(v, Color::Red);
  return c;
}

// |C| <= (n - l - s+ - |NS3|)/2 + l1 + (l+ + |NS3|)/2 + s+
double accounting_bound(const Graph& t, const TreeProfile& p, std::size_t ns3) {
  const double n = static_cast<double>(t.order());
  return (n - static_cast<double>(p.l() + p.s_plus() + ns3)) / 2 + static_cast<double>(p.l_i(1)) +
         static_cast<double>(p.l_plus() + ns3) / 2 + static_cast<double>(p.s_plus());
}

}  // namespace

TEST_SUITE("trees") {
  TEST_CASE("tree profile examples") {
    const TreeProfile p6 = tree_profile(path_graph(6));
    CHECK(p6.l() == 2);
    CHECK(p6.s() == 2);
    CHECK(p6.s_i(1) == 2);
    CHECK(p6.s_plus() == 0);
    const TreeProfile star = tree_profile(star_graph(5));
    CHECK(star.l() == 4);
    CHECK(star.s() == 1);
    CHECK(star.s_i(4) == 1);
    CHECK(star.l_plus() == 4);
    const TreeProfile spider = tree_profile(gen_spider(2).graph);
    CHECK(spider.s() == 2);
    CHECK(spider.l() == 2);
    CHECK_THROWS_AS((void)tree_profile(cycle_graph(4)), Error);
    CHECK_THROWS_AS((void)tree_profile(Graph(2)), Error);
  }

  TEST_CASE("single_red_sep examples") {
    const Graph p5 = path_graph(5);
    const VertexSet center = single_red_sep(p5, single(5, 2));
    CHECK(center.to_vector() == std::vector<Vertex>{1, 3});
    CHECK_FALSE(verify_rb_separating(p5, single(5, 2), center));
    const Graph p3 = path_graph(3);
    CHECK(single_red_sep(p3, single(3, 0)).to_vector() == std::vector<Vertex>{0, 2});
    CHECK_THROWS_AS((void)single_red_sep(p5, io::coloring_from_string("RRBBB", 5)), Error);
    CHECK_THROWS_AS((void)single_red_sep(path_graph(2), single(2, 0)), Error);
  }

  TEST_CASE("parity sets examples") {
    const Graph p6 = path_graph(6);
    const ParitySets ps = parity_sets(p6, 2);
    CHECK_FALSE(verify_separating(p6, ps.odd));
    CHECK_FALSE(verify_separating(p6, ps.even));
    CHECK_THROWS_AS((void)parity_sets(p6, 0), Error);
    CHECK_THROWS_AS((void)parity_sets(path_graph(4), 1), Error);
  }

  TEST_CASE("tree_rb_construct examples") {
    const Graph p8 = path_graph(8);
    const MaxSepReport worst = maxsep_exact(p8);
    const VertexSet c = tree_rb_construct(p8, worst.worst_coloring);
    CHECK_FALSE(verify_rb_separating(p8, worst.worst_coloring, c));
    CHECK(c.size() <= 5);
    const VertexSet mono = tree_rb_construct(p8, Coloring::monochromatic(8, Color::Red));
    CHECK(mono.size() <= 5);
    const Graph star = star_graph(6);
    for (std::uint32_t red = 0; red < 64; ++red) {
      const Coloring col = support::coloring_from_mask(6, red);
      const TreeRbTrace tr = tree_rb_construct_traced(star, col);
      CHECK(tr.star);
      CHECK_FALSE(verify_rb_separating(star, col, tr.set));
      CHECK(2 * tr.set.size() <= 6 + 1);
    }
  }

  TEST_CASE("tree_all_pairs_construct examples") {
    CHECK(tree_all_pairs_construct(path_graph(5)).size() == 3);
    CHECK_FALSE(verify_separating(path_graph(5), tree_all_pairs_construct(path_graph(5))));
    CHECK(tree_all_pairs_construct(path_graph(6)).size() == 4);
    const Graph spider = gen_spider(2).graph;
    const VertexSet s = tree_all_pairs_construct(spider);
    CHECK(s.size() == 9);
    CHECK_FALSE(verify_separating(spider, s));
  }
}

TEST_SUITE("tree-properties") {
  TEST_CASE("profile invariants") {
    support::Rng rng(41);
    for (int it = 0; it < 200; ++it) {
      const std::size_t n = 2 + rng.below(40);
      const TreeProfile p = tree_profile(support::random_tree(rng, n));
      CHECK(p.l_i(1) == p.s_i(1));
      std::size_t s_total = 0, l_total = 0;
      for (const auto& [i, s] : p.supports_by_leaves) {
        s_total += s.size();
        l_total += p.l_i(i);
        CHECK(p.l_i(i) == i * s.size());
      }
      CHECK(s_total == p.s());
      CHECK(l_total == p.l());
    }
  }

  TEST_CASE("constructions on random trees") {
    support::Rng rng(42);
    for (int it = 0; it < 200; ++it) {
      const std::size_t n = 5 + rng.below(56);
      const Graph t = support::random_tree(rng, n);
      const TreeProfile p = tree_profile(t);
      for (Vertex x = 0; x < n; ++x) {
        if (p.leaves.contains(x)) continue;
        const ParitySets ps = parity_sets(t, x);
        CHECK_FALSE(verify_separating(t, ps.odd));
        CHECK_FALSE(verify_separating(t, ps.even));
      }
      const VertexSet all = tree_all_pairs_construct(t);
      CHECK(all.size() == n - p.s());
      CHECK_FALSE(verify_separating(t, all));
      for (int k = 0; k < 10; ++k) {
        const Coloring c = support::random_coloring(rng, n);
        const TreeRbTrace tr = tree_rb_construct_traced(t, c);
        CHECK_FALSE(verify_rb_separating(t, c, tr.set));
        CHECK(2 * tr.set.size() <= n + p.s());
        if (!tr.star) CHECK(static_cast<double>(tr.set.size()) <= accounting_bound(t, p, tr.ns3.size()) + 1e-9);
      }
      const Coloring one = single(n, rng.below(n));
      const VertexSet s = single_red_sep(t, one);
      CHECK(s.size() <= 2);
      CHECK_FALSE(verify_rb_separating(t, one, s));
    }
  }

  TEST_CASE("exact maxsep on small trees respects the tree bounds") {
    support::Rng rng(43);
    for (int it = 0; it < 40; ++it) {
      const std::size_t n = 5 + rng.below(7);
      const Graph t = support::random_tree(rng, n);
      const TreeProfile p = tree_profile(t);
      const MaxSepReport m = maxsep_exact(t);
      CHECK(2 * m.value <= n + p.s());
      CHECK(m.value <= n - p.s());
      CHECK(3 * m.value <= 2 * n);
      const VertexSet c = tree_rb_construct(t, m.worst_coloring);
      CHECK_FALSE(verify_rb_separating(t, m.worst_coloring, c));
      CHECK(2 * c.size() <= n + p.s());
    }
  }
}
