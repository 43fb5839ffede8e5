#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "rbsep/graph.hpp"

namespace rbsep {

/// Leaves, support vertices, and their grouping by adjacent-leaf count.
struct TreeProfile {
  VertexSet leaves;                 // L(T)
  VertexSet supports;               // S(T)
  std::vector<std::size_t> leaf_count;  // adjacent leaves per vertex
  std::map<std::size_t, VertexSet> supports_by_leaves;  // i -> S_i(T)
  std::map<std::size_t, VertexSet> leaves_by_support;   // i -> L_i(T)
  VertexSet supports_plus;          // S_+(T) = S \ S_1
  VertexSet leaves_plus;            // L_+(T) = L \ L_1

  [[nodiscard]] std::size_t l() const { return leaves.size(); }
  [[nodiscard]] std::size_t s() const { return supports.size(); }
  [[nodiscard]] std::size_t s_i(std::size_t i) const;
  [[nodiscard]] std::size_t l_i(std::size_t i) const;
  [[nodiscard]] std::size_t s_plus() const { return supports_plus.size(); }
  [[nodiscard]] std::size_t l_plus() const { return leaves_plus.size(); }
};

/// Throws Error(NotATree).
[[nodiscard]] TreeProfile tree_profile(const Graph& t);

/// Red-blue separating set of size <= 2 when one color class is a single
/// vertex v: two neighbors of v if v is internal, else {v, w} with w the
/// lowest-index vertex at distance two. Throws Error(WrongClassSize), Error(NotATree).
[[nodiscard]] VertexSet single_red_sep(const Graph& t, const Coloring& c);

struct ParitySets {
  VertexSet odd;   // C1: odd distance from x plus leaves, shifted off L_1
  VertexSet even;  // C2: even distance from x plus leaves, shifted off L_1
};

/// Both returned sets separate all pairs. Requires n >= 5 and x a non-leaf.
/// Throws Error(NotATree), Error(XIsLeaf).
[[nodiscard]] ParitySets parity_sets(const Graph& t, Vertex x);

struct TreeRbTrace {
  VertexSet set;
  Vertex root = 0;           // x
  bool odd_parity = true;    // which of C1' / C2' was the starting point
  VertexSet ns3;             // greedy NS_3(T)
  bool star = false;
};

/// Red-blue separating set of size <= (n + s(T)) / 2 for any coloring.
/// Requires n >= 5. Throws Error(NotATree).
[[nodiscard]] VertexSet tree_rb_construct(const Graph& t, const Coloring& c);
[[nodiscard]] TreeRbTrace tree_rb_construct_traced(const Graph& t, const Coloring& c);

/// V minus one (lowest-index) leaf per support vertex; size n - s(T).
/// Requires n >= 5. Throws Error(NotATree), NotTwinFreeError.
[[nodiscard]] VertexSet tree_all_pairs_construct(const Graph& t);

}  // namespace rbsep
