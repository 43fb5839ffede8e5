#include "rbsep/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rbsep {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Unseparable: return "Unseparable";
    case ErrorKind::NotTwinFree: return "NotTwinFree";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotTriangleFree: return "NotTriangleFree";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::XIsLeaf: return "XIsLeaf";
    case ErrorKind::WrongClassSize: return "WrongClassSize";
    case ErrorKind::NoDistinctFamily: return "NoDistinctFamily";
    case ErrorKind::Uncoverable: return "Uncoverable";
    case ErrorKind::InvalidParts: return "InvalidParts";
    case ErrorKind::UncoveredElement: return "UncoveredElement";
    case ErrorKind::BadPivot: return "BadPivot";
    case ErrorKind::LiteralCapExceeded: return "LiteralCapExceeded";
    case ErrorKind::TwinFreeUnreachable: return "TwinFreeUnreachable";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

UnseparableError::UnseparableError(Vertex red, Vertex blue)
    : Error(ErrorKind::Unseparable, "red vertex " + std::to_string(red) + " and blue vertex " +
                                        std::to_string(blue) + " are twins"),
      red_(red),
      blue_(blue) {}

ParseError::ParseError(std::size_t line, const std::string& msg)
    : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg), line_(line), detail_(msg) {}

ParseError::ParseError(const std::string& path, const ParseError& inner)
    : Error(ErrorKind::Parse, path + ":" + std::to_string(inner.line()) + ": " + inner.detail()),
      line_(inner.line()),
      detail_(inner.detail()) {}

Graph::Graph(std::size_t n) : closed_(n), adj_(n) {
  for (Vertex v = 0; v < n; ++v) {
    closed_[v] = VertexSet(n);
    closed_[v].insert(v);
  }
}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw Error(ErrorKind::IndexOutOfRange,
                  "edge " + std::to_string(u) + "-" + std::to_string(v) + " outside 0.." +
                      std::to_string(n == 0 ? 0 : n - 1));
    if (u == v) throw Error(ErrorKind::InvalidArgument, "self-loop at " + std::to_string(u));
    if (g.closed_[u].contains(v)) continue;
    g.closed_[u].insert(v);
    g.closed_[v].insert(u);
    ++g.edge_count_;
  }
  for (Vertex v = 0; v < n; ++v) {
    g.adj_[v] = g.closed_[v].to_vector();
    g.adj_[v].erase(std::find(g.adj_[v].begin(), g.adj_[v].end(), v));
  }
  return g;
}

void Graph::check(Vertex v) const {
  if (v >= order())
    throw Error(ErrorKind::IndexOutOfRange,
                "vertex " + std::to_string(v) + " out of range for order " + std::to_string(order()));
}

const VertexSet& Graph::closed_neighborhood(Vertex v) const {
  check(v);
  return closed_[v];
}

VertexSet Graph::open_neighborhood(Vertex v) const {
  check(v);
  VertexSet s = closed_[v];
  s.erase(v);
  return s;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  check(v);
  return adj_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check(u);
  check(v);
  return u != v && closed_[u].contains(v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet Coloring::members(Color c) const {
  VertexSet s(colors_.size());
  for (Vertex v = 0; v < colors_.size(); ++v)
    if (colors_[v] == c) s.insert(v);
  return s;
}

std::size_t Coloring::count(Color c) const {
  return static_cast<std::size_t>(std::count(colors_.begin(), colors_.end(), c));
}

Coloring Coloring::swapped() const {
  std::vector<Color> out(colors_.size());
  std::transform(colors_.begin(), colors_.end(), out.begin(), opposite);
  return Coloring(std::move(out));
}

bool TwinReport::twin_free() const {
  return std::all_of(classes.begin(), classes.end(), [](const auto& c) { return c.size() == 1; });
}

void require_same_order(const Graph& g, const Coloring& c) {
  if (c.size() != g.order())
    throw Error(ErrorKind::InvalidArgument, "coloring has " + std::to_string(c.size()) +
                                                " entries but graph has order " +
                                                std::to_string(g.order()));
}

void require_same_order(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw Error(ErrorKind::InvalidArgument, "vertex set universe " + std::to_string(s.universe()) +
                                                " does not match graph order " +
                                                std::to_string(g.order()));
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) { return g.closed_neighborhood(v); }

VertexSet code(const Graph& g, const VertexSet& s, Vertex v) {
  require_same_order(g, s);
  return g.closed_neighborhood(v) & s;
}

namespace {

// Vertices grouped by equal key set; groups ordered by smallest member.
std::vector<std::vector<Vertex>> group_by(const std::vector<VertexSet>& keys) {
  std::vector<Vertex> order(keys.size());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return keys[a] < keys[b]; });
  std::vector<std::vector<Vertex>> groups;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || !(keys[order[i]] == keys[order[i - 1]])) groups.emplace_back();
    groups.back().push_back(order[i]);
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return groups;
}

std::vector<VertexSet> all_codes(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> codes;
  codes.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) codes.push_back(g.closed_neighborhood(v) & s);
  return codes;
}

std::optional<RedBluePair> smallest_mixed_pair(const std::vector<std::vector<Vertex>>& groups,
                                               const Coloring& c) {
  std::optional<RedBluePair> best;
  for (const auto& grp : groups) {
    std::optional<Vertex> r, b;
    for (Vertex v : grp) {
      if (c[v] == Color::Red && !r) r = v;
      if (c[v] == Color::Blue && !b) b = v;
    }
    if (r && b) {
      RedBluePair p{*r, *b};
      if (!best || std::pair(p.red, p.blue) < std::pair(best->red, best->blue)) best = p;
    }
  }
  return best;
}

}  // namespace

TwinReport twin_classes(const Graph& g) {
  std::vector<VertexSet> keys;
  keys.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) keys.push_back(g.closed_neighborhood(v));
  return TwinReport{group_by(keys)};
}

std::optional<RedBluePair> verify_rb_separating(const Graph& g, const Coloring& c,
                                                const VertexSet& s) {
  require_same_order(g, c);
  require_same_order(g, s);
  return smallest_mixed_pair(group_by(all_codes(g, s)), c);
}

std::optional<Edge> verify_separating(const Graph& g, const VertexSet& s) {
  require_same_order(g, s);
  std::optional<Edge> best;
  for (const auto& grp : group_by(all_codes(g, s))) {
    if (grp.size() < 2) continue;
    Edge e{grp[0], grp[1]};
    if (!best || e < *best) best = e;
  }
  return best;
}

std::optional<Vertex> verify_dominating(const Graph& g, const VertexSet& d) {
  require_same_order(g, d);
  for (Vertex v = 0; v < g.order(); ++v)
    if (!g.closed_neighborhood(v).intersects(d)) return v;
  return std::nullopt;
}

std::optional<RedBluePair> find_red_blue_twins(const Graph& g, const Coloring& c) {
  require_same_order(g, c);
  return smallest_mixed_pair(twin_classes(g).classes, c);
}

GraphProfile graph_profile(const Graph& g) {
  GraphProfile p;
  p.n = g.order();
  p.m = g.edge_count();
  if (p.n == 0) return p;
  p.min_degree = g.degree(0);
  for (Vertex v = 0; v < p.n; ++v) {
    p.max_degree = std::max(p.max_degree, g.degree(v));
    p.min_degree = std::min(p.min_degree, g.degree(v));
  }
  for (auto [u, v] : g.edges()) {
    if (g.open_neighborhood(u).intersects(g.open_neighborhood(v))) {
      p.triangle_free = false;
      break;
    }
  }
  VertexSet seen(p.n);
  std::vector<Vertex> stack{0};
  seen.insert(0);
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
  }
  p.connected = seen.size() == p.n;
  p.tree = p.connected && p.m + 1 == p.n;
  p.twin_free = twin_classes(g).twin_free();
  return p;
}

}  // namespace rbsep
