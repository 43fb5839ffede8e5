#pragma once

// Hand-rolled instance sources for property tests.

#include <cstdint>
#include <vector>

#include "rbsep/graph.hpp"

namespace support {

// splitmix64
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  bool coin(unsigned percent) { return below(100) < percent; }

 private:
  std::uint64_t state_;
};

inline rbsep::Graph random_graph(Rng& rng, std::size_t n, unsigned percent) {
  std::vector<rbsep::Edge> e;
  for (rbsep::Vertex u = 0; u < n; ++u)
    for (rbsep::Vertex v = u + 1; v < n; ++v)
      if (rng.coin(percent)) e.emplace_back(u, v);
  return rbsep::Graph::from_edges(n, e);
}

inline bool twin_free(const rbsep::Graph& g) {
  for (rbsep::Vertex u = 0; u < g.order(); ++u)
    for (rbsep::Vertex v = u + 1; v < g.order(); ++v)
      if (g.closed_neighborhood(u) == g.closed_neighborhood(v)) return false;
  return true;
}

inline rbsep::Graph random_twin_free(Rng& rng, std::size_t n, unsigned percent = 50) {
  for (;;) {
    rbsep::Graph g = random_graph(rng, n, percent);
    if (twin_free(g)) return g;
  }
}

inline bool triangle_free(const rbsep::Graph& g) {
  for (auto [u, v] : g.edges())
    for (rbsep::Vertex w = 0; w < g.order(); ++w)
      if (g.adjacent(u, w) && g.adjacent(v, w)) return false;
  return true;
}

/// Adds random edges while keeping the graph triangle-free.
inline rbsep::Graph random_triangle_free(Rng& rng, std::size_t n, std::size_t attempts) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<rbsep::Edge> e;
  for (std::size_t i = 0; i < attempts; ++i) {
    const auto u = rng.below(n), v = rng.below(n);
    if (u == v || adj[u][v]) continue;
    bool closes = false;
    for (std::size_t w = 0; w < n && !closes; ++w) closes = adj[u][w] && adj[v][w];
    if (closes) continue;
    adj[u][v] = adj[v][u] = true;
    e.emplace_back(std::min(u, v), std::max(u, v));
  }
  return rbsep::Graph::from_edges(n, e);
}

/// Random graph with maximum degree at most cap.
inline rbsep::Graph random_bounded_degree(Rng& rng, std::size_t n, std::size_t cap, std::size_t attempts) {
  std::vector<std::size_t> deg(n, 0);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<rbsep::Edge> e;
  for (std::size_t i = 0; i < attempts; ++i) {
    const auto u = rng.below(n), v = rng.below(n);
    if (u == v || adj[u][v] || deg[u] == cap || deg[v] == cap) continue;
    adj[u][v] = adj[v][u] = true;
    ++deg[u];
    ++deg[v];
    e.emplace_back(std::min(u, v), std::max(u, v));
  }
  return rbsep::Graph::from_edges(n, e);
}

/// Each vertex v >= 1 attaches to a uniformly chosen earlier vertex, then labels are shuffled.
inline rbsep::Graph random_tree(Rng& rng, std::size_t n) {
  std::vector<rbsep::Vertex> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(label[i - 1], label[rng.below(i)]);
  std::vector<rbsep::Edge> e;
  for (std::size_t v = 1; v < n; ++v) {
    const auto a = label[v], b = label[rng.below(v)];
    e.emplace_back(std::min(a, b), std::max(a, b));
  }
  return rbsep::Graph::from_edges(n, e);
}

inline rbsep::Coloring random_coloring(Rng& rng, std::size_t n) {
  std::vector<rbsep::Color> c(n);
  for (auto& x : c) x = rng.coin(50) ? rbsep::Color::Red : rbsep::Color::Blue;
  return rbsep::Coloring(std::move(c));
}

inline rbsep::Coloring coloring_from_mask(std::size_t n, std::uint32_t red) {
  std::vector<rbsep::Color> c(n);
  for (std::size_t v = 0; v < n; ++v) c[v] = (red >> v) & 1U ? rbsep::Color::Red : rbsep::Color::Blue;
  return rbsep::Coloring(std::move(c));
}

}  // namespace support
