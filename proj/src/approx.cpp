#include "rbsep/approx.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace rbsep {

void SetSystem::validate() const {
  for (const auto& s : sets)
    for (std::size_t e : s.elements)
      if (e >= universe_size)
        throw Error(ErrorKind::InvalidArgument, "set " + std::to_string(s.label) +
                                                    " contains element " + std::to_string(e) +
                                                    " outside the universe");
}

void write_set_system(std::ostream& out, const SetSystem& sys) {
  out << sys.universe_size << ' ' << sys.sets.size() << '\n';
  for (const auto& s : sys.sets) {
    out << s.label << ':';
    for (std::size_t e : s.elements) out << ' ' << e;
    out << '\n';
  }
}

SetSystem read_set_system(std::istream& in) {
  SetSystem sys;
  std::string line;
  std::size_t lineno = 1;
  auto number = [&](std::string_view tok) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw ParseError(lineno, "expected an integer, got '" + std::string(tok) + "'");
    return v;
  };
  if (!std::getline(in, line)) throw ParseError(1, "missing header 'U S'");
  {
    std::istringstream hs(line);
    std::string a, b, extra;
    if (!(hs >> a >> b) || (hs >> extra)) throw ParseError(1, "header must be 'U S'");
    sys.universe_size = number(a);
    sys.sets.resize(number(b));
  }
  for (auto& s : sys.sets) {
    ++lineno;
    if (!std::getline(in, line)) throw ParseError(lineno, "missing set line");
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(lineno, "set line must be 'label: e1 e2 ...'");
    s.label = number(std::string_view(line).substr(0, colon));
    std::istringstream es(line.substr(colon + 1));
    std::string tok;
    while (es >> tok) {
      const std::size_t e = number(tok);
      if (e >= sys.universe_size) throw ParseError(lineno, "element out of range");
      if (!s.elements.empty() && e <= s.elements.back())
        throw ParseError(lineno, "elements must be strictly ascending");
      s.elements.push_back(e);
    }
  }
  return sys;
}

std::string to_string(const SetSystem& sys) {
  std::ostringstream ss;
  write_set_system(ss, sys);
  return ss.str();
}

namespace {

SetSystem reduce_pairs(const Graph& g, std::vector<std::pair<Vertex, Vertex>> pairs) {
  SetSystem sys;
  sys.universe_size = pairs.size();
  sys.sets.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) sys.sets[v].label = v;
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    auto [a, b] = pairs[e];
    (g.closed_neighborhood(a) ^ g.closed_neighborhood(b)).for_each([&](Vertex v) {
      sys.sets[v].elements.push_back(e);
    });
  }
  sys.element_labels = std::move(pairs);
  return sys;
}

// Greedy returns indices of chosen sets; also reports the largest set size.
std::vector<std::size_t> greedy_cover(const SetSystem& sys, std::size_t& max_set) {
  std::vector<bool> covered(sys.universe_size, false);
  std::size_t remaining = sys.universe_size;
  max_set = 0;
  for (const auto& s : sys.sets) max_set = std::max(max_set, s.elements.size());
  std::vector<std::size_t> chosen;
  while (remaining > 0) {
    std::size_t best = 0, best_gain = 0;
    for (std::size_t i = 0; i < sys.sets.size(); ++i) {
      std::size_t gain = 0;
      for (std::size_t e : sys.sets[i].elements)
        if (!covered[e]) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best_gain == 0) {
      const auto it = std::find(covered.begin(), covered.end(), false);
      throw Error(ErrorKind::Uncoverable,
                  "element " + std::to_string(it - covered.begin()) + " lies in no set");
    }
    chosen.push_back(best);
    for (std::size_t e : sys.sets[best].elements)
      if (!covered[e]) {
        covered[e] = true;
        --remaining;
      }
  }
  return chosen;
}

double harmonic(std::size_t d) {
  double h = 0;
  for (std::size_t i = 1; i <= d; ++i) h += 1.0 / static_cast<double>(i);
  return h;
}

// Lower bounds implied by a greedy run: every cover needs ceil(|U| / max set)
// sets, and greedy is within H(max set) of optimal.
std::size_t greedy_lower_bound(std::size_t universe, std::size_t greedy_size, std::size_t max_set) {
  if (universe == 0) return 0;
  const std::size_t by_volume = (universe + max_set - 1) / max_set;
  const auto by_harmonic =
      static_cast<std::size_t>(std::ceil(static_cast<double>(greedy_size) / harmonic(max_set) - 1e-9));
  return std::max(by_volume, by_harmonic);
}

VertexSet cover_to_vertices(const SetSystem& sys, const std::vector<std::size_t>& chosen,
                            std::size_t n) {
  VertexSet s(n);
  for (std::size_t i : chosen) s.insert(sys.sets[i].label);
  return s;
}

void require_twin_free(const Graph& g) {
  TwinReport twins = twin_classes(g);
  if (!twins.twin_free()) throw NotTwinFreeError(std::move(twins));
}

// Smaller color class, Red on ties.
Color minority(const Coloring& c) {
  return c.count(Color::Red) <= c.count(Color::Blue) ? Color::Red : Color::Blue;
}

}  // namespace

SetSystem reduce_rb_to_set_cover(const Graph& g, const Coloring& c) {
  require_same_order(g, c);
  if (auto twins = find_red_blue_twins(g, c)) throw UnseparableError(twins->red, twins->blue);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex r = 0; r < g.order(); ++r)
    if (c[r] == Color::Red)
      for (Vertex b = 0; b < g.order(); ++b)
        if (c[b] == Color::Blue) pairs.emplace_back(r, b);
  return reduce_pairs(g, std::move(pairs));
}

SetSystem reduce_all_pairs_to_set_cover(const Graph& g) {
  require_twin_free(g);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) pairs.emplace_back(u, v);
  return reduce_pairs(g, std::move(pairs));
}

ApproxReport greedy_set_cover(const SetSystem& sys) {
  sys.validate();
  std::size_t max_set = 0;
  const auto chosen = greedy_cover(sys, max_set);
  ApproxReport rep;
  rep.solution = VertexSet(sys.sets.size());
  for (std::size_t i : chosen) rep.solution.insert(i);
  rep.guarantee = sys.universe_size == 0 ? 1.0 : std::log(static_cast<double>(sys.universe_size)) + 1.0;
  rep.optimum_lower_bound = greedy_lower_bound(sys.universe_size, chosen.size(), max_set);
  return rep;
}

std::size_t exact_set_cover_size(const SetSystem& sys) {
  sys.validate();
  const std::size_t m = sys.sets.size();
  if (m > 30) throw Error(ErrorKind::CapExceeded, "exact_set_cover_size: more than 30 sets");
  std::vector<VertexSet> masks;
  for (const auto& s : sys.sets) masks.push_back(VertexSet::from_indices(sys.universe_size, s.elements));
  const VertexSet all = VertexSet::full(sys.universe_size);
  // Ascending size: the first k with a covering k-combination is optimal.
  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      VertexSet u(sys.universe_size);
      for (std::size_t i : idx) u |= masks[i];
      if (u == all) return k;
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == m - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw Error(ErrorKind::Uncoverable, "exact_set_cover_size: universe cannot be covered");
}

ApproxReport sep_rb_greedy(const Graph& g, const Coloring& c) {
  const SetSystem sys = reduce_rb_to_set_cover(g, c);
  std::size_t max_set = 0;
  const auto chosen = greedy_cover(sys, max_set);
  ApproxReport rep;
  rep.solution = cover_to_vertices(sys, chosen, g.order());
  const double ln_n = g.order() >= 2 ? std::log(static_cast<double>(g.order())) : 0.0;
  rep.guarantee = std::max(1.0, 2.0 * ln_n);
  rep.optimum_lower_bound = greedy_lower_bound(sys.universe_size, chosen.size(), max_set);
  return rep;
}

ApproxReport sep_all_pairs_greedy(const Graph& g) {
  const SetSystem sys = reduce_all_pairs_to_set_cover(g);
  std::size_t max_set = 0;
  const auto chosen = greedy_cover(sys, max_set);
  ApproxReport rep;
  rep.solution = cover_to_vertices(sys, chosen, g.order());
  const std::size_t n = g.order();
  const double ln_n = n >= 2 ? std::log(static_cast<double>(n)) : 0.0;
  const double log2_ceil = n >= 2 ? std::ceil(std::log2(static_cast<double>(n))) : 1.0;
  rep.guarantee = std::max(1.0, (2.0 * ln_n + 1.0) * log2_ceil);
  rep.optimum_lower_bound = greedy_lower_bound(sys.universe_size, chosen.size(), max_set);
  return rep;
}

ApproxReport triangle_free_construct(const Graph& g, const Coloring& c) {
  require_same_order(g, c);
  const GraphProfile prof = graph_profile(g);
  if (!prof.triangle_free) throw Error(ErrorKind::NotTriangleFree, "graph contains a triangle");
  if (!prof.twin_free) throw NotTwinFreeError(twin_classes(g));

  const Color small = minority(c);
  VertexSet s(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (c[v] != small) continue;
    s.insert(v);
    const auto& nb = g.neighbors(v);
    if (nb.size() >= 2) {
      s.insert(nb[0]);
      s.insert(nb[1]);
    } else if (nb.size() == 1 && c[nb[0]] != small) {
      for (Vertex z : g.neighbors(nb[0]))
        if (z != v) {
          s.insert(z);
          break;
        }
    }
  }
  ApproxReport rep;
  rep.solution = std::move(s);
  rep.guarantee = 3.0;
  return rep;
}

ApproxReport bounded_degree_construct(const Graph& g, const Coloring& c) {
  require_same_order(g, c);
  const GraphProfile prof = graph_profile(g);
  if (!prof.twin_free) throw NotTwinFreeError(twin_classes(g));
  if (prof.max_degree <= 2) return triangle_free_construct(g, c);

  const Color small = minority(c);
  VertexSet s(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (c[v] != small) continue;
    const VertexSet open = g.open_neighborhood(v);
    std::optional<Vertex> far, near;
    for (Vertex w = 0; w < g.order(); ++w) {
      if (w == v || c[w] == small || !open.is_subset_of(g.closed_neighborhood(w))) continue;
      if (g.adjacent(v, w)) {
        if (!near) near = w;
      } else if (!far) {
        far = w;
      }
    }
    if (far) {
      s.insert(v);
      s.insert(*far);
    } else if (near) {
      s.insert(v);
      for (Vertex b : g.neighbors(v))
        if (c[b] != small)
          s.insert(*(g.closed_neighborhood(v) ^ g.closed_neighborhood(b)).first());
    } else {
      for (Vertex w : g.neighbors(v)) s.insert(w);
    }
  }
  ApproxReport rep;
  rep.solution = std::move(s);
  rep.guarantee = static_cast<double>(prof.max_degree);
  return rep;
}

std::size_t xp_size_bound(const Graph& g, const Coloring& c) {
  const GraphProfile prof = graph_profile(g);
  const std::size_t k = c.min_class_size();
  std::size_t bound = prof.max_degree >= 3 ? prof.max_degree * k : 3 * k;
  if (prof.triangle_free) bound = std::min(bound, 3 * k);
  return std::min(bound, g.order());
}

SolveReport xp_exact_small_class(const Graph& g, const Coloring& c, std::uint64_t max_subsets) {
  const auto t0 = std::chrono::steady_clock::now();
  require_same_order(g, c);
  const GraphProfile prof = graph_profile(g);
  if (!prof.twin_free) throw NotTwinFreeError(twin_classes(g));
  if (!prof.triangle_free && prof.max_degree < 3)
    throw Error(ErrorKind::NotTriangleFree, "xp_exact_small_class: no constructive bound applies");

  const std::size_t n = g.order();
  const std::size_t bound = xp_size_bound(g, c);
  const auto diffs = red_blue_differences(g, c);
  auto separates = [&](const VertexSet& s) {
    return std::all_of(diffs.begin(), diffs.end(), [&](const VertexSet& d) { return d.intersects(s); });
  };

  SolveReport rep;
  rep.method = Method::Exhaustive;
  for (std::size_t k = 0; k <= bound; ++k) {
    std::vector<Vertex> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      if (++rep.nodes_explored > max_subsets)
        throw BudgetExceededError(bound, "xp_exact_small_class: more than " +
                                             std::to_string(max_subsets) +
                                             " subsets needed for bound " + std::to_string(bound));
      VertexSet s = VertexSet::from_indices(n, idx);
      if (separates(s)) {
        rep.optimum = k;
        rep.witness = std::move(s);
        rep.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
            std::chrono::steady_clock::now() - t0);
        return rep;
      }
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw Error(ErrorKind::InvalidArgument,
              "xp_exact_small_class: no separating set within the constructive bound");
}

}  // namespace rbsep
