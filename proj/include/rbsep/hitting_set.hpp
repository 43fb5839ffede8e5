#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rbsep/vertex_set.hpp"

namespace rbsep {

enum class Method { BranchAndBound, Exhaustive, IterativeDeepening };

const char* to_string(Method m);

/// Minimum hitting set over a family of vertex sets.
///
/// Every exact solver in the library is an instance of this: a red-blue pair
/// (r, b) is separated by S iff S hits N[r] △ N[b], a pair of vertices is
/// separated iff S hits their symmetric difference, and a vertex is dominated
/// iff S hits its closed neighborhood.
///
/// Branching picks the unhit set with the fewest non-excluded candidates
/// (lowest index on ties) and tries its candidates in ascending order, each
/// branch excluding the candidates tried before it. Pruning uses a greedy
/// packing of pairwise-disjoint unhit sets as the lower bound.
class HittingSetSolver {
 public:
  HittingSetSolver(std::size_t universe, std::vector<VertexSet> family);

  /// Smallest hitting set of size in [at_least, at_most], or nullopt if none
  /// of size <= at_most exists. `at_least` must itself be a valid lower bound
  /// on the optimum (the search does not look below it).
  std::optional<VertexSet> solve(std::size_t at_least, std::size_t at_most,
                                 Method method = Method::IterativeDeepening);

  [[nodiscard]] std::uint64_t nodes_explored() const { return nodes_; }
  /// True when some member of the family is empty (nothing can hit it).
  [[nodiscard]] bool infeasible() const { return has_empty_; }
  /// Family after deduplication and superset removal.
  [[nodiscard]] const std::vector<VertexSet>& family() const { return sets_; }

  /// Lower bound at the root (disjoint packing).
  [[nodiscard]] std::size_t root_lower_bound();

  /// Greedy hitting set (most unhit sets first, lowest vertex on ties).
  [[nodiscard]] VertexSet greedy() const;

 private:
  bool depth_limited(std::size_t budget);
  void branch_and_bound();
  // Indices of unhit sets; returns false if an unhit set has no candidates.
  bool collect_unhit(std::vector<std::size_t>& unhit, std::size_t& pick) const;
  std::size_t packing_bound(const std::vector<std::size_t>& unhit) const;

  std::size_t universe_;
  std::vector<VertexSet> sets_;
  bool has_empty_ = false;
  std::uint64_t nodes_ = 0;

  VertexSet chosen_;
  VertexSet excluded_;
  std::optional<VertexSet> best_;
  std::size_t best_size_ = 0;
};

}  // namespace rbsep
