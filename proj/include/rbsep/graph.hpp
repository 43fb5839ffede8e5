#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rbsep/errors.hpp"
#include "rbsep/vertex_set.hpp"

namespace rbsep {

using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph of order n.
  explicit Graph(std::size_t n);

  /// Throws Error(InvalidArgument) on self-loops, IndexOutOfRange on bad endpoints.
  /// Duplicate edges (in either orientation) collapse.
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  [[nodiscard]] std::size_t order() const { return closed_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edge_count_; }

  [[nodiscard]] const VertexSet& closed_neighborhood(Vertex v) const;
  [[nodiscard]] VertexSet open_neighborhood(Vertex v) const;
  [[nodiscard]] const std::vector<Vertex>& neighbors(Vertex v) const;
  [[nodiscard]] std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;

  /// Edges with u < v, sorted lexicographically.
  [[nodiscard]] std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.closed_ == b.closed_; }

 private:
  void check(Vertex v) const;

  std::vector<VertexSet> closed_;
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

enum class Color : unsigned char { Red, Blue };

[[nodiscard]] constexpr Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

/// Total red/blue labelling of a graph's vertices.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {}

  static Coloring monochromatic(std::size_t n, Color c) { return Coloring(std::vector<Color>(n, c)); }

  [[nodiscard]] std::size_t size() const { return colors_.size(); }
  [[nodiscard]] Color operator[](Vertex v) const { return colors_.at(v); }
  void set(Vertex v, Color c) { colors_.at(v) = c; }
  [[nodiscard]] const std::vector<Color>& colors() const { return colors_; }

  [[nodiscard]] VertexSet members(Color c) const;
  [[nodiscard]] std::size_t count(Color c) const;
  [[nodiscard]] std::size_t min_class_size() const {
    return std::min(count(Color::Red), count(Color::Blue));
  }
  /// Every vertex flipped.
  [[nodiscard]] Coloring swapped() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> colors_;
};

struct TwinReport {
  /// Groups of vertices with identical closed neighborhoods. Members ascending,
  /// classes ordered by their smallest member.
  std::vector<std::vector<Vertex>> classes;

  [[nodiscard]] bool twin_free() const;
};

struct RedBluePair {
  Vertex red;
  Vertex blue;
  friend bool operator==(const RedBluePair&, const RedBluePair&) = default;
};

struct GraphProfile {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  bool triangle_free = true;
  bool connected = true;
  bool tree = false;
  bool twin_free = true;
};

[[nodiscard]] VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// N[v] ∩ s.
[[nodiscard]] VertexSet code(const Graph& g, const VertexSet& s, Vertex v);

[[nodiscard]] TwinReport twin_classes(const Graph& g);

/// nullopt when s separates every red vertex from every blue vertex;
/// otherwise the violating pair minimal in (red, blue) order.
[[nodiscard]] std::optional<RedBluePair> verify_rb_separating(const Graph& g, const Coloring& c,
                                                              const VertexSet& s);

/// nullopt when all codes under s are pairwise distinct; otherwise the
/// lexicographically smallest colliding pair (u < v).
[[nodiscard]] std::optional<Edge> verify_separating(const Graph& g, const VertexSet& s);

/// nullopt when d dominates g; otherwise the smallest undominated vertex.
[[nodiscard]] std::optional<Vertex> verify_dominating(const Graph& g, const VertexSet& d);

[[nodiscard]] GraphProfile graph_profile(const Graph& g);

/// Smallest red-blue pair sharing a closed neighborhood, if any.
[[nodiscard]] std::optional<RedBluePair> find_red_blue_twins(const Graph& g, const Coloring& c);

/// Throws Error(InvalidArgument) when sizes disagree.
void require_same_order(const Graph& g, const Coloring& c);
void require_same_order(const Graph& g, const VertexSet& s);

}  // namespace rbsep
