#include "rbsep/trees.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "rbsep/exact.hpp"

namespace rbsep {

std::size_t TreeProfile::s_i(std::size_t i) const {
  auto it = supports_by_leaves.find(i);
  return it == supports_by_leaves.end() ? 0 : it->second.size();
}

std::size_t TreeProfile::l_i(std::size_t i) const {
  auto it = leaves_by_support.find(i);
  return it == leaves_by_support.end() ? 0 : it->second.size();
}

namespace {

void require_tree(const Graph& t) {
  if (!graph_profile(t).tree) throw Error(ErrorKind::NotATree, "graph is not a tree");
}

void require_min_order(const Graph& t, std::size_t n, const char* op) {
  if (t.order() < n)
    throw Error(ErrorKind::InvalidArgument,
                std::string(op) + " requires at least " + std::to_string(n) + " vertices");
}

std::vector<std::size_t> bfs_distances(const Graph& t, Vertex x) {
  std::vector<std::size_t> dist(t.order(), t.order());
  std::deque<Vertex> q{x};
  dist[x] = 0;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    for (Vertex w : t.neighbors(v))
      if (dist[w] == t.order()) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

std::vector<Vertex> leaves_of(const Graph& t, const TreeProfile& p, Vertex u) {
  std::vector<Vertex> out;
  for (Vertex w : t.neighbors(u))
    if (p.leaves.contains(w)) out.push_back(w);
  return out;
}

Vertex lowest_non_leaf_neighbor(const Graph& t, const TreeProfile& p, Vertex u) {
  for (Vertex w : t.neighbors(u))
    if (!p.leaves.contains(w)) return w;
  throw Error(ErrorKind::InvalidArgument,
              "vertex " + std::to_string(u) + " has no non-leaf neighbor (star)");
}

// Start set for parity class: vertices at distance ≡ parity (mod 2) plus all leaves.
VertexSet parity_start(const Graph& t, const TreeProfile& p, const std::vector<std::size_t>& dist,
                       std::size_t parity) {
  VertexSet s = p.leaves;
  for (Vertex v = 0; v < t.order(); ++v)
    if (dist[v] % 2 == parity) s.insert(v);
  return s;
}

// Moves membership from the L_1 leaf of each S_1 vertex on the given parity
// to that vertex's lowest non-leaf neighbor.
void shift_off_l1(const Graph& t, const TreeProfile& p, const std::vector<std::size_t>& dist,
                  std::size_t parity, VertexSet& s) {
  auto it = p.supports_by_leaves.find(1);
  if (it == p.supports_by_leaves.end()) return;
  it->second.for_each([&](Vertex u) {
    if (p.leaves.contains(u) || dist[u] % 2 != parity) return;
    const Vertex leaf = leaves_of(t, p, u).front();
    if (!s.contains(leaf)) return;
    s.erase(leaf);
    s.insert(lowest_non_leaf_neighbor(t, p, u));
  });
}

}  // namespace

TreeProfile tree_profile(const Graph& t) {
  require_tree(t);
  const std::size_t n = t.order();
  TreeProfile p;
  p.leaves = VertexSet(n);
  p.supports = VertexSet(n);
  p.supports_plus = VertexSet(n);
  p.leaves_plus = VertexSet(n);
  p.leaf_count.assign(n, 0);
  for (Vertex v = 0; v < n; ++v)
    if (t.degree(v) == 1) p.leaves.insert(v);
  p.leaves.for_each([&](Vertex v) { ++p.leaf_count[t.neighbors(v).front()]; });
  for (Vertex u = 0; u < n; ++u) {
    const std::size_t i = p.leaf_count[u];
    if (i == 0) continue;
    p.supports.insert(u);
    auto& si = p.supports_by_leaves.try_emplace(i, n).first->second;
    si.insert(u);
    auto& li = p.leaves_by_support.try_emplace(i, n).first->second;
    for (Vertex w : leaves_of(t, p, u)) li.insert(w);
    if (i >= 2) {
      p.supports_plus.insert(u);
      for (Vertex w : leaves_of(t, p, u)) p.leaves_plus.insert(w);
    }
  }
  return p;
}

VertexSet single_red_sep(const Graph& t, const Coloring& c) {
  require_same_order(t, c);
  require_tree(t);
  require_min_order(t, 3, "single_red_sep");
  if (c.min_class_size() != 1)
    throw Error(ErrorKind::WrongClassSize, "single_red_sep needs a color class of size exactly 1");
  const Color lone = c.count(Color::Red) == 1 ? Color::Red : Color::Blue;
  Vertex v = 0;
  while (c[v] != lone) ++v;

  VertexSet s(t.order());
  const auto& nb = t.neighbors(v);
  if (nb.size() >= 2) {
    s.insert(nb[0]);
    s.insert(nb[1]);
    return s;
  }
  const Vertex u = nb.front();
  s.insert(v);
  for (Vertex w : t.neighbors(u))
    if (w != v) {
      s.insert(w);
      break;
    }
  return s;
}

ParitySets parity_sets(const Graph& t, Vertex x) {
  require_tree(t);
  require_min_order(t, 5, "parity_sets");
  if (x >= t.order()) throw Error(ErrorKind::IndexOutOfRange, "x out of range");
  const TreeProfile p = tree_profile(t);
  if (p.leaves.contains(x)) throw Error(ErrorKind::XIsLeaf, "x must not be a leaf");
  const auto dist = bfs_distances(t, x);
  ParitySets out{parity_start(t, p, dist, 1), parity_start(t, p, dist, 0)};
  shift_off_l1(t, p, dist, 1, out.odd);
  shift_off_l1(t, p, dist, 0, out.even);
  return out;
}

TreeRbTrace tree_rb_construct_traced(const Graph& t, const Coloring& c) {
  require_same_order(t, c);
  require_tree(t);
  require_min_order(t, 5, "tree_rb_construct");
  const std::size_t n = t.order();
  const TreeProfile p = tree_profile(t);
  TreeRbTrace tr;
  tr.ns3 = VertexSet(n);

  auto leaf_color_counts = [&](const std::vector<Vertex>& leaves) {
    std::size_t red = 0;
    for (Vertex l : leaves) red += c[l] == Color::Red ? 1 : 0;
    return std::pair(red, leaves.size() - red);
  };
  // More common color among the given leaves; Blue on exact ties.
  auto majority = [&](const std::vector<Vertex>& leaves) {
    auto [red, blue] = leaf_color_counts(leaves);
    return red > blue ? Color::Red : Color::Blue;
  };

  if (p.s() == 1) {
    // Star: keep the leaves of the rarer color, padded to at least two leaves.
    tr.star = true;
    const Vertex center = *p.supports.first();
    tr.root = center;
    const auto leaves = leaves_of(t, p, center);
    const Color drop = majority(leaves);
    VertexSet s(n);
    for (Vertex l : leaves)
      if (c[l] != drop) s.insert(l);
    for (Vertex l : leaves) {
      if (s.size() >= 2) break;
      s.insert(l);
    }
    tr.set = std::move(s);
    return tr;
  }

  Vertex x = 0;
  while (p.leaves.contains(x)) ++x;
  tr.root = x;
  const auto dist = bfs_distances(t, x);

  if (auto it = p.supports_by_leaves.find(3); it != p.supports_by_leaves.end()) {
    it->second.for_each([&](Vertex v) {
      for (Vertex w : t.neighbors(v))
        if (p.supports_plus.contains(w) || tr.ns3.contains(w)) return;
      tr.ns3.insert(lowest_non_leaf_neighbor(t, p, v));
    });
  }

  VertexSet core = VertexSet::full(n);
  core -= p.leaves;
  core -= p.supports_plus;
  core -= tr.ns3;
  const VertexSet odd_start = parity_start(t, p, dist, 1);
  const VertexSet even_start = parity_start(t, p, dist, 0);
  tr.odd_parity = odd_start.intersection_size(core) <= even_start.intersection_size(core);
  const std::size_t parity = tr.odd_parity ? 1 : 0;
  const VertexSet& start = tr.odd_parity ? odd_start : even_start;

  VertexSet s = start;
  p.supports_plus.for_each([&](Vertex u) {
    const auto leaves = leaves_of(t, p, u);
    const Color drop = majority(leaves);
    for (Vertex l : leaves)
      if (c[l] == drop) s.erase(l);
    const std::size_t i = leaves.size();
    auto [red, blue] = leaf_color_counts(leaves);
    const bool uniform = red == 0 || blue == 0;

    if (i >= 4) {
      s.insert(u);
      std::size_t in_set = 0;
      for (Vertex l : leaves) in_set += s.contains(l) ? 1 : 0;
      for (Vertex l : leaves) {
        if (in_set >= 2) break;
        if (!s.contains(l)) {
          s.insert(l);
          ++in_set;
        }
      }
    } else if (i == 3) {
      s.insert(u);
      for (Vertex w : t.neighbors(u))
        if (tr.ns3.contains(w)) {
          s.insert(w);
          break;
        }
      if (uniform) s.insert(leaves.front());
    } else {  // i == 2
      if (uniform) {
        if (!start.contains(u)) {
          s.insert(u);
          s.insert(leaves.front());
        } else {
          s.insert(lowest_non_leaf_neighbor(t, p, u));
        }
      } else {
        const Vertex same = c[leaves[0]] == c[u] ? leaves[0] : leaves[1];
        s.erase(leaves[0]);
        s.erase(leaves[1]);
        s.insert(same);
        s.insert(u);
      }
    }
  });
  shift_off_l1(t, p, dist, parity, s);
  tr.set = std::move(s);
  return tr;
}

VertexSet tree_rb_construct(const Graph& t, const Coloring& c) {
  return tree_rb_construct_traced(t, c).set;
}

VertexSet tree_all_pairs_construct(const Graph& t) {
  require_tree(t);
  require_min_order(t, 5, "tree_all_pairs_construct");
  TwinReport twins = twin_classes(t);
  if (!twins.twin_free()) throw NotTwinFreeError(std::move(twins));
  const TreeProfile p = tree_profile(t);
  VertexSet s = VertexSet::full(t.order());
  p.supports.for_each([&](Vertex u) { s.erase(leaves_of(t, p, u).front()); });
  return s;
}

}  // namespace rbsep
