#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rbsep/graph.hpp"
#include "rbsep/hitting_set.hpp"

namespace rbsep {

struct SolveReport {
  std::size_t optimum = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
  Method method = Method::IterativeDeepening;
  std::chrono::microseconds elapsed{0};
};

struct MaxSepReport {
  std::size_t value = 0;
  Coloring worst_coloring;
  /// Optimal red-blue separating set for worst_coloring.
  VertexSet witness;
  std::uint64_t per_coloring_count = 0;
  /// Colorings dismissed by the "sep <= best so far" decision test.
  std::uint64_t skipped = 0;
  std::uint64_t nodes_explored = 0;
  std::chrono::microseconds elapsed{0};
};

class NotTwinFreeError : public Error {
 public:
  explicit NotTwinFreeError(TwinReport twins);
  [[nodiscard]] const TwinReport& twins() const { return twins_; }

 private:
  TwinReport twins_;
};

inline constexpr std::size_t kDefaultMaxsepCap = 14;

/// N[r] △ N[b] for every red r and blue b, ordered by (r, b).
[[nodiscard]] std::vector<VertexSet> red_blue_differences(const Graph& g, const Coloring& c);

/// N[u] △ N[v] for every u < v (twin pairs skipped when skip_twins is set).
[[nodiscard]] std::vector<VertexSet> all_pair_differences(const Graph& g, bool skip_twins = false);

/// Minimum red-blue separating set. With a budget, nullopt means
/// sep_RB(g, c) > budget. Throws UnseparableError on red-blue twins.
[[nodiscard]] std::optional<SolveReport> sep_rb_exact(const Graph& g, const Coloring& c,
                                                      std::optional<std::size_t> budget = {},
                                                      Method method = Method::IterativeDeepening);

/// Minimum separating set over all pairs. Throws NotTwinFreeError.
[[nodiscard]] std::optional<SolveReport> sep_exact(const Graph& g,
                                                   std::optional<std::size_t> budget = {},
                                                   Method method = Method::IterativeDeepening);

/// Like sep_exact but pairs of closed twins are exempt instead of fatal.
[[nodiscard]] std::optional<SolveReport> sep_exact_allow_twins(
    const Graph& g, std::optional<std::size_t> budget = {},
    Method method = Method::IterativeDeepening);

/// Minimum dominating set.
[[nodiscard]] SolveReport gamma_exact(const Graph& g, Method method = Method::IterativeDeepening);

/// max over all colorings of sep_rb_exact. Vertex 0 is fixed Blue (color-swap
/// symmetry); the remaining vertices enumerate as a binary counter where bit
/// i-1 set means vertex i is Red. The first coloring reaching the maximum is
/// reported. Throws NotTwinFreeError, or Error(CapExceeded) when order > n_cap.
[[nodiscard]] MaxSepReport maxsep_exact(const Graph& g, std::size_t n_cap = kDefaultMaxsepCap);

/// Given n pairwise-distinct subsets of an n-element ground set, the smallest
/// element whose deletion keeps all traces pairwise distinct.
/// Throws Error(NoDistinctFamily) on duplicates.
[[nodiscard]] Vertex bondy_remove(const std::vector<VertexSet>& family);

}  // namespace rbsep
