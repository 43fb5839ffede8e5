#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rbsep/exact.hpp"
#include "rbsep/graph.hpp"

namespace rbsep {

/// Universe 0..universe_size-1 and a labelled family of subsets.
struct SetSystem {
  struct Set {
    std::size_t label = 0;
    std::vector<std::size_t> elements;  // ascending
    friend bool operator==(const Set&, const Set&) = default;
  };

  std::size_t universe_size = 0;
  /// What each element stands for; for graph reductions the (first, second) vertex pair.
  std::vector<std::pair<Vertex, Vertex>> element_labels;
  std::vector<Set> sets;

  /// Throws Error(InvalidArgument) when an element is outside the universe.
  void validate() const;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;
};

/// Text form: "U S\n" then S lines "label: e1 e2 ...\n" (no trailing space when empty).
void write_set_system(std::ostream& out, const SetSystem& sys);
SetSystem read_set_system(std::istream& in);
std::string to_string(const SetSystem& sys);

struct ApproxReport {
  /// Chosen vertices (for set cover: chosen set indices, universe = number of sets).
  VertexSet solution;
  /// Approximation factor the algorithm guarantees for this input.
  double guarantee = 1.0;
  /// Valid lower bound on the optimum derived from the run.
  std::size_t optimum_lower_bound = 0;
};

/// One element per red-blue pair (r, b) in (r, b) order; set v holds the pairs
/// that v separates, i.e. v in exactly one of N[r], N[b].
/// Throws UnseparableError when some pair lies in no set.
[[nodiscard]] SetSystem reduce_rb_to_set_cover(const Graph& g, const Coloring& c);

/// Same construction over all unordered pairs {u, v}, u < v.
/// Throws NotTwinFreeError.
[[nodiscard]] SetSystem reduce_all_pairs_to_set_cover(const Graph& g);

/// Classic greedy; ties go to the lowest set index. guarantee = ln|U| + 1.
/// Throws Error(Uncoverable) naming the first uncoverable element.
[[nodiscard]] ApproxReport greedy_set_cover(const SetSystem& sys);

/// Minimum cover size by exhaustive search. Test-scale only (sets <= 30).
[[nodiscard]] std::size_t exact_set_cover_size(const SetSystem& sys);

/// Set-cover reduction plus greedy; guarantee = max(1, 2 ln n).
[[nodiscard]] ApproxReport sep_rb_greedy(const Graph& g, const Coloring& c);

/// Greedy over all pairs; guarantee = (2 ln n + 1) * ceil(log2 n) against maxsep.
[[nodiscard]] ApproxReport sep_all_pairs_greedy(const Graph& g);

/// Smaller class S (Red on ties): all of S, plus two lowest neighbors of each
/// member of degree >= 2, plus one other neighbor of the sole neighbor of each
/// degree-1 member whose neighbor has the opposite color. |result| <= 3 min(|R|,|B|).
/// Throws Error(NotTriangleFree) / NotTwinFreeError.
[[nodiscard]] ApproxReport triangle_free_construct(const Graph& g, const Coloring& c);

/// Per vertex v of the smaller class: a non-adjacent opposite-colored w with
/// N(v) ⊆ N[w] gives {v, w}; otherwise if only adjacent such w exist, v plus
/// one separator per opposite-colored neighbor; otherwise all of N(v).
/// |result| <= Δ min(|R|,|B|). When Δ <= 2 this dispatches to
/// triangle_free_construct. Throws NotTwinFreeError.
[[nodiscard]] ApproxReport bounded_degree_construct(const Graph& g, const Coloring& c);

inline constexpr std::uint64_t kDefaultXpBudget = 50'000'000;

/// Exact sep_RB by enumerating all subsets of size <= B in ascending size and
/// lexicographic order, where B is the constructive upper bound (3 min for
/// triangle-free graphs, Δ min otherwise; the smaller when both apply).
/// Throws BudgetExceededError when more than `max_subsets` would be examined.
[[nodiscard]] SolveReport xp_exact_small_class(const Graph& g, const Coloring& c,
                                               std::uint64_t max_subsets = kDefaultXpBudget);

/// The bound B that xp_exact_small_class enumerates up to.
[[nodiscard]] std::size_t xp_size_bound(const Graph& g, const Coloring& c);

}  // namespace rbsep
