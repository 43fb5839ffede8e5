#include "rbsep/exact.hpp"

#include <algorithm>
#include <string>

namespace rbsep {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::microseconds since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0);
}

std::string describe(const TwinReport& twins) {
  for (const auto& cls : twins.classes)
    if (cls.size() > 1)
      return "graph is not twin-free: vertices " + std::to_string(cls[0]) + " and " +
             std::to_string(cls[1]) + " share a closed neighborhood";
  return "graph is not twin-free";
}

void require_twin_free(const Graph& g) {
  TwinReport twins = twin_classes(g);
  if (!twins.twin_free()) throw NotTwinFreeError(std::move(twins));
}

std::optional<SolveReport> solve_family(std::size_t n, std::vector<VertexSet> family,
                                        std::optional<std::size_t> budget, Method method) {
  const auto t0 = Clock::now();
  HittingSetSolver solver(n, std::move(family));
  auto hit = solver.solve(0, budget.value_or(n), method);
  if (!hit) return std::nullopt;
  SolveReport r;
  r.optimum = hit->size();
  r.witness = std::move(*hit);
  r.nodes_explored = solver.nodes_explored();
  r.method = method;
  r.elapsed = since(t0);
  return r;
}

}  // namespace

NotTwinFreeError::NotTwinFreeError(TwinReport twins)
    : Error(ErrorKind::NotTwinFree, describe(twins)), twins_(std::move(twins)) {}

std::vector<VertexSet> red_blue_differences(const Graph& g, const Coloring& c) {
  require_same_order(g, c);
  std::vector<VertexSet> out;
  for (Vertex r = 0; r < g.order(); ++r) {
    if (c[r] != Color::Red) continue;
    for (Vertex b = 0; b < g.order(); ++b)
      if (c[b] == Color::Blue) out.push_back(g.closed_neighborhood(r) ^ g.closed_neighborhood(b));
  }
  return out;
}

std::vector<VertexSet> all_pair_differences(const Graph& g, bool skip_twins) {
  std::vector<VertexSet> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      VertexSet d = g.closed_neighborhood(u) ^ g.closed_neighborhood(v);
      if (skip_twins && d.empty()) continue;
      out.push_back(std::move(d));
    }
  return out;
}

std::optional<SolveReport> sep_rb_exact(const Graph& g, const Coloring& c,
                                        std::optional<std::size_t> budget, Method method) {
  if (auto twins = find_red_blue_twins(g, c)) throw UnseparableError(twins->red, twins->blue);
  return solve_family(g.order(), red_blue_differences(g, c), budget, method);
}

std::optional<SolveReport> sep_exact(const Graph& g, std::optional<std::size_t> budget,
                                     Method method) {
  require_twin_free(g);
  return solve_family(g.order(), all_pair_differences(g), budget, method);
}

std::optional<SolveReport> sep_exact_allow_twins(const Graph& g, std::optional<std::size_t> budget,
                                                 Method method) {
  return solve_family(g.order(), all_pair_differences(g, true), budget, method);
}

SolveReport gamma_exact(const Graph& g, Method method) {
  std::vector<VertexSet> family;
  family.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) family.push_back(g.closed_neighborhood(v));
  return *solve_family(g.order(), std::move(family), std::nullopt, method);
}

MaxSepReport maxsep_exact(const Graph& g, std::size_t n_cap) {
  const auto t0 = Clock::now();
  const std::size_t n = g.order();
  if (n > n_cap)
    throw Error(ErrorKind::CapExceeded, "maxsep_exact: order " + std::to_string(n) +
                                            " exceeds cap " + std::to_string(n_cap));
  require_twin_free(g);

  MaxSepReport rep;
  rep.worst_coloring = Coloring::monochromatic(n, Color::Blue);
  rep.witness = VertexSet(n);
  if (n <= 1) {
    rep.per_coloring_count = 1;
    rep.elapsed = since(t0);
    return rep;
  }

  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  Coloring c = Coloring::monochromatic(n, Color::Blue);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (Vertex v = 1; v < n; ++v)
      c.set(v, ((mask >> (v - 1)) & 1U) != 0 ? Color::Red : Color::Blue);
    ++rep.per_coloring_count;
    if (mask == 0) continue;  // monochromatic

    HittingSetSolver solver(n, red_blue_differences(g, c));
    // Decision test first: most colorings need no more than the best so far.
    if (rep.value > 0 && solver.solve(0, rep.value)) {
      ++rep.skipped;
      rep.nodes_explored += solver.nodes_explored();
      continue;
    }
    auto hit = solver.solve(rep.value + (rep.value > 0 ? 1 : 0), n);
    rep.nodes_explored += solver.nodes_explored();
    if (hit && hit->size() > rep.value) {
      rep.value = hit->size();
      rep.worst_coloring = c;
      rep.witness = std::move(*hit);
    }
  }
  rep.elapsed = since(t0);
  return rep;
}

Vertex bondy_remove(const std::vector<VertexSet>& family) {
  const std::size_t n = family.size();
  for (const auto& a : family)
    if (a.universe() != n)
      throw Error(ErrorKind::InvalidArgument,
                  "bondy_remove: family size must equal the ground set size");
  std::vector<VertexSet> sorted = family;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::NoDistinctFamily, "bondy_remove: family has repeated sets");

  for (Vertex x = 0; x < n; ++x) {
    VertexSet keep = VertexSet::full(n);
    keep.erase(x);
    std::vector<VertexSet> traces;
    traces.reserve(n);
    for (const auto& a : family) traces.push_back(a & keep);
    std::sort(traces.begin(), traces.end());
    if (std::adjacent_find(traces.begin(), traces.end()) == traces.end()) return x;
  }
  // Unreachable for n >= 1 by Bondy's theorem.
  throw Error(ErrorKind::NoDistinctFamily, "bondy_remove: no removable element");
}

}  // namespace rbsep
