#include "rbsep/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <queue>
#include <random>
#include <sstream>

namespace rbsep {

namespace {

// Portable across standard libraries, unlike std::uniform_real_distribution.
double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<Color> alternate(std::size_t n, auto&& is_red) {
  std::vector<Color> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = is_red(v) ? Color::Red : Color::Blue;
  return out;
}

void add_clique(std::vector<Edge>& edges, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) edges.emplace_back(vs[i], vs[j]);
}

}  // namespace

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

Graph star_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(0, v);
  return Graph::from_edges(n, e);
}

Graph complete_graph(std::size_t n) {
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  std::vector<Edge> e;
  add_clique(e, all);
  return Graph::from_edges(n, e);
}

PowerSetGraph gen_power_set_graph(std::size_t k) {
  if (k < 1 || k > 20) throw Error(ErrorKind::InvalidArgument, "power-set graph needs 1 <= k <= 20");
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 1; m < (1U << k); ++m)
    if (std::popcount(m) >= 2) masks.push_back(m);
  const std::size_t n = std::size_t{1} << k;
  const Vertex empty_vertex = n - 1;

  std::vector<Edge> e;
  std::vector<Vertex> t_vertices;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    const Vertex v = k + i;
    t_vertices.push_back(v);
    for (std::size_t s = 0; s < k; ++s)
      if ((masks[i] >> s) & 1U) e.emplace_back(s, v);
  }
  add_clique(e, t_vertices);

  PowerSetGraph out{Graph::from_edges(n, e), {}};
  std::vector<Color> col(n, Color::Red);
  if (k == 1) {
    col[0] = Color::Red;
    col[empty_vertex] = Color::Blue;
  } else if (k == 2) {
    col = {Color::Red, Color::Red, Color::Blue, Color::Blue};
  } else {
    col[k + masks.size() - 1] = Color::Blue;  // v_S, the full set, is the largest mask
  }
  out.colorings.emplace_back(std::move(col));
  return out;
}

ColoredGraph gen_half_graph_complement(std::size_t k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "half-graph needs k >= 1");
  std::vector<Edge> e;
  std::vector<Vertex> vs(k), ws(k);
  for (std::size_t i = 0; i < k; ++i) {
    vs[i] = i;
    ws[i] = k + i;
  }
  add_clique(e, vs);
  add_clique(e, ws);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < i; ++j) e.emplace_back(vs[i], ws[j]);

  // 1-based parity as in the definition.
  auto col = alternate(2 * k, [&](std::size_t v) {
    const bool odd = (v % k) % 2 == 0;
    if (v < k) return !odd;                 // v_i Blue iff i odd
    return k % 2 == 1 ? odd : !odd;         // w_i
  });
  return {Graph::from_edges(2 * k, e), Coloring(std::move(col))};
}

ColoredGraph gen_complete_multipartite(const std::vector<std::size_t>& parts, bool strict) {
  if (parts.empty()) throw Error(ErrorKind::InvalidParts, "no parts given");
  for (std::size_t p : parts)
    if (p == 0) throw Error(ErrorKind::InvalidParts, "empty part");
  if (strict) {
    if (parts.size() < 2) throw Error(ErrorKind::InvalidParts, "strict mode needs t >= 2 parts");
    for (std::size_t p : parts)
      if (p < 5 || p % 2 == 0)
        throw Error(ErrorKind::InvalidParts, "strict mode needs every part odd and >= 5");
  }
  std::vector<std::size_t> part_of;
  std::vector<Color> col;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts[i]; ++j) {
      part_of.push_back(i);
      col.push_back(j < (parts[i] + 1) / 2 ? Color::Red : Color::Blue);
    }
  const std::size_t n = part_of.size();
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) e.emplace_back(u, v);
  return {Graph::from_edges(n, e), Coloring(std::move(col))};
}

ColoredGraph gen_spider(std::size_t k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "spider needs k >= 1");
  const std::size_t n = 5 * k + 1;
  std::vector<Edge> e;
  std::vector<std::size_t> depth(n, 0);
  for (std::size_t i = 0; i < k; ++i) {
    Vertex prev = 0;
    for (std::size_t j = 1; j <= 5; ++j) {
      const Vertex v = 5 * i + j;
      e.emplace_back(prev, v);
      depth[v] = j;
      prev = v;
    }
  }
  auto col = alternate(n, [&](std::size_t v) { return depth[v] % 2 == 0; });
  return {Graph::from_edges(n, e), Coloring(std::move(col))};
}

SplitReduction gen_split_from_set_cover(std::size_t universe,
                                        const std::vector<std::vector<std::size_t>>& sets) {
  if (universe == 0) throw Error(ErrorKind::InvalidArgument, "universe must be nonempty");
  std::vector<bool> covered(universe, false);
  for (const auto& s : sets)
    for (std::size_t x : s) {
      if (x >= universe) throw Error(ErrorKind::InvalidArgument, "set element outside universe");
      covered[x] = true;
    }
  for (std::size_t x = 0; x < universe; ++x)
    if (!covered[x])
      throw Error(ErrorKind::UncoveredElement, "element " + std::to_string(x) + " is in no set");

  SplitReduction out;
  out.element_base = 0;
  out.set_base = universe;
  out.red = universe + sets.size();
  out.isolated_a = out.red + 1;
  out.isolated_b = out.red + 2;
  const std::size_t n = out.red + 3;

  std::vector<Edge> e;
  std::vector<Vertex> clique;
  for (std::size_t i = 0; i < universe; ++i) clique.push_back(i);
  clique.push_back(out.red);
  add_clique(e, clique);
  for (std::size_t j = 0; j < sets.size(); ++j)
    for (std::size_t x : sets[j]) e.emplace_back(x, out.set_base + j);

  out.graph = Graph::from_edges(n, e);
  std::vector<Color> col(n, Color::Blue);
  col[out.red] = Color::Red;
  out.coloring = Coloring(std::move(col));
  return out;
}

ColoredGraph gen_two_copies_ds(const Graph& g, Vertex pivot) {
  if (pivot >= g.order() || g.degree(pivot) != 2)
    throw Error(ErrorKind::BadPivot, "pivot must be a vertex of degree 2");
  const std::size_t n = g.order();
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) {
    e.emplace_back(u, v);
    e.emplace_back(n + u, n + v);
  }
  const Vertex u1 = 2 * n;
  e.emplace_back(pivot, u1);
  e.emplace_back(n + pivot, u1);
  e.emplace_back(u1, u1 + 1);
  e.emplace_back(u1 + 1, u1 + 2);
  e.emplace_back(u1 + 2, u1 + 3);
  std::vector<Color> col(2 * n + 4, Color::Red);
  for (Vertex v = n; v < 2 * n; ++v) col[v] = Color::Blue;
  col[u1 + 3] = Color::Blue;
  return {Graph::from_edges(2 * n + 4, e), Coloring(std::move(col))};
}

ColoredGraph gen_copies_plus_independent(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  std::vector<Color> col(n + k + 1, Color::Blue);
  for (Vertex v = n; v < n + k + 1; ++v) col[v] = Color::Red;
  return {Graph::from_edges(n + k + 1, g.edges()), Coloring(std::move(col))};
}

void SatInstance::validate() const {
  std::map<int, std::size_t> uses;
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    const auto& cl = clauses[j];
    if (cl.empty() || cl.size() > 3)
      throw Error(ErrorKind::InvalidArgument,
                  "clause " + std::to_string(j) + " must have 1 to 3 literals");
    for (int lit : cl) {
      const auto var = static_cast<std::size_t>(std::abs(lit));
      if (lit == 0 || var > variables)
        throw Error(ErrorKind::InvalidArgument, "literal " + std::to_string(lit) + " out of range");
      if (++uses[lit] > 2)
        throw Error(ErrorKind::LiteralCapExceeded,
                    "literal " + std::to_string(lit) + " appears more than twice");
    }
  }
}

bool SatInstance::satisfied_by(const std::vector<bool>& assignment) const {
  return std::all_of(clauses.begin(), clauses.end(), [&](const auto& cl) {
    return std::any_of(cl.begin(), cl.end(), [&](int lit) {
      const bool value = assignment.at(static_cast<std::size_t>(std::abs(lit)) - 1);
      return lit > 0 ? value : !value;
    });
  });
}

std::optional<std::vector<bool>> SatInstance::find_assignment() const {
  if (variables > 24) throw Error(ErrorKind::CapExceeded, "find_assignment: too many variables");
  std::vector<bool> a(variables);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << variables); ++m) {
    for (std::size_t i = 0; i < variables; ++i) a[i] = ((m >> i) & 1U) != 0;
    if (satisfied_by(a)) return a;
  }
  return std::nullopt;
}

Vertex MaxsepGadget::literal_vertex(int literal) const {
  const auto var = static_cast<std::size_t>(std::abs(literal)) - 1;
  return 32 * var + 16 + (literal > 0 ? 0 : 1);
}

VertexSet MaxsepGadget::prescribed_set(const std::vector<bool>& assignment) const {
  VertexSet s(graph.order());
  for (std::size_t base : gadget_bases)
    for (std::size_t h = 0; h < 4; ++h) s.insert(base + DominationGadgetLayout::kU + h);
  for (std::size_t i = 0; i < variables; ++i)
    s.insert(literal_vertex(assignment.at(i) ? static_cast<int>(i + 1) : -static_cast<int>(i + 1)));
  return s;
}

MaxsepGadget gen_maxsep_gadget(const SatInstance& sat) {
  sat.validate();
  using L = DominationGadgetLayout;
  MaxsepGadget out;
  out.variables = sat.variables;
  const std::size_t gadgets = 2 * sat.variables + sat.clauses.size();
  const std::size_t n = L::kSize * gadgets;
  out.k = 4 * sat.clauses.size() + 9 * sat.variables;

  std::vector<std::array<std::size_t, 2>> pairs;
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) {
      pairs.push_back({a, b});
      for (std::size_t c = b + 1; c < 4; ++c) triples.push_back({a, b, c});
    }
  std::sort(pairs.begin(), pairs.end());
  std::sort(triples.begin(), triples.end());

  std::vector<Edge> e;
  std::vector<Color> col(n, Color::Blue);
  for (std::size_t g = 0; g < gadgets; ++g) {
    const std::size_t base = L::kSize * g;
    out.gadget_bases.push_back(base);
    std::vector<Vertex> clique;
    for (std::size_t i = 0; i < 10; ++i) clique.push_back(base + L::kP + i);
    add_clique(e, clique);
    for (std::size_t h = 0; h < 4; ++h) {
      e.emplace_back(base + L::kV1, base + L::kU + h);
      e.emplace_back(base + L::kV2, base + L::kU + h);
    }
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t h : pairs[i]) e.emplace_back(base + L::kP + i, base + L::kU + h);
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t h : triples[j]) e.emplace_back(base + L::kQ + j, base + L::kU + h);
      col[base + L::kQ + j] = Color::Red;
    }
  }
  for (std::size_t i = 0; i < sat.variables; ++i) {
    const Vertex xa = out.var_a(i), xb = out.var_b(i);
    const Vertex pos = out.literal_vertex(static_cast<int>(i + 1));
    const Vertex neg = out.literal_vertex(-static_cast<int>(i + 1));
    e.emplace_back(xa, xb);
    e.emplace_back(xa, pos);
    e.emplace_back(xa, neg);
    col[xa] = Color::Red;
  }
  for (std::size_t j = 0; j < sat.clauses.size(); ++j) {
    const Vertex ca = out.clause_a(j);
    e.emplace_back(ca, out.clause_b(j));
    for (int lit : sat.clauses[j]) e.emplace_back(ca, out.literal_vertex(lit));
    col[ca] = Color::Red;
  }
  out.graph = Graph::from_edges(n, e);
  out.coloring = Coloring(std::move(col));
  return out;
}

Graph gen_random_twin_free(std::size_t n, double edge_prob, std::uint64_t seed,
                           std::size_t max_tries) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw Error(ErrorKind::InvalidArgument, "edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (unit_interval(rng) < edge_prob) e.emplace_back(u, v);
    Graph g = Graph::from_edges(n, e);
    if (twin_classes(g).twin_free()) return g;
  }
  throw Error(ErrorKind::TwinFreeUnreachable,
              "no twin-free sample after " + std::to_string(max_tries) + " attempts");
}

Graph tree_from_pruefer(std::size_t n, std::span<const Vertex> sequence) {
  if (n < 2) return Graph(n);
  if (sequence.size() != n - 2)
    throw Error(ErrorKind::InvalidArgument, "Pruefer sequence must have length n - 2");
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : sequence) {
    if (v >= n) throw Error(ErrorKind::IndexOutOfRange, "Pruefer entry out of range");
    ++degree[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<Edge> e;
  for (Vertex v : sequence) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    e.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  e.emplace_back(a, leaves.top());
  return Graph::from_edges(n, e);
}

Graph gen_random_tree(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> seq(n >= 2 ? n - 2 : 0);
  for (auto& v : seq) v = static_cast<Vertex>(rng() % n);
  return tree_from_pruefer(n, seq);
}

Coloring random_coloring(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Color> col(n);
  for (auto& c : col) c = (rng() >> 63) != 0 ? Color::Red : Color::Blue;
  return Coloring(std::move(col));
}

// --- GeneratorSpec ----------------------------------------------------------

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::size_t to_size(const std::string& key, const std::string& text) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size())
    throw Error(ErrorKind::InvalidArgument, "parameter " + key + " must be a non-negative integer");
  return v;
}

int to_int(const std::string& text) {
  int v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size())
    throw Error(ErrorKind::InvalidArgument, "bad literal '" + text + "'");
  return v;
}

double to_double(const std::string& key, const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size())
    throw Error(ErrorKind::InvalidArgument, "parameter " + key + " must be a number");
  return v;
}

Graph base_graph(const GeneratorSpec& spec, const std::string& family);

Generated plain(Graph g) { return Generated{std::move(g), std::nullopt, std::nullopt, {}}; }

Generated colored(ColoredGraph cg) {
  return Generated{std::move(cg.graph), std::move(cg.coloring), std::nullopt, {}};
}

Graph base_graph(const GeneratorSpec& spec, const std::string& family) {
  if (family == "path") return path_graph(spec.get_size("n"));
  if (family == "cycle") return cycle_graph(spec.get_size("n"));
  if (family == "star") return star_graph(spec.get_size("n"));
  if (family == "complete") return complete_graph(spec.get_size("n"));
  if (family == "tree") return gen_random_tree(spec.get_size("n"), spec.get_size("seed", 0));
  if (family == "random") {
    const double p = spec.get("p") ? to_double("p", *spec.get("p")) : 0.5;
    return gen_random_twin_free(spec.get_size("n"), p, spec.get_size("seed", 0));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown graph family '" + family + "'");
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
  GeneratorSpec spec;
  const auto colon = text.find(':');
  spec.family = text.substr(0, colon);
  if (spec.family.empty()) throw Error(ErrorKind::InvalidArgument, "spec has no family name");
  if (colon == std::string::npos || colon + 1 == text.size()) return spec;
  std::string rest = text.substr(colon + 1);
  std::replace(rest.begin(), rest.end(), ';', ',');
  for (const auto& kv : split(rest, ',')) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(ErrorKind::InvalidArgument, "spec parameter '" + kv + "' is not key=value");
    spec.params.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
  }
  return spec;
}

std::string GeneratorSpec::to_string(char separator) const {
  std::string out = family;
  for (std::size_t i = 0; i < params.size(); ++i) {
    out += i == 0 ? ':' : separator;
    out += params[i].first + "=" + params[i].second;
  }
  return out;
}

std::optional<std::string> GeneratorSpec::get(const std::string& key) const {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  return std::nullopt;
}

std::size_t GeneratorSpec::get_size(const std::string& key) const {
  auto v = get(key);
  if (!v) throw Error(ErrorKind::InvalidArgument, "spec " + family + " needs parameter " + key);
  return to_size(key, *v);
}

std::size_t GeneratorSpec::get_size(const std::string& key, std::size_t fallback) const {
  auto v = get(key);
  return v ? to_size(key, *v) : fallback;
}

Generated generate(const GeneratorSpec& spec) {
  Generated out;
  const std::string& f = spec.family;
  if (f == "power-set") {
    auto ps = gen_power_set_graph(spec.get_size("k"));
    out = Generated{std::move(ps.graph), std::move(ps.colorings.front()), std::nullopt, {}};
  } else if (f == "half-complement") {
    out = colored(gen_half_graph_complement(spec.get_size("k")));
  } else if (f == "multipartite") {
    std::vector<std::size_t> parts;
    for (const auto& p : split(spec.get("parts").value_or(""), '/')) parts.push_back(to_size("parts", p));
    out = colored(gen_complete_multipartite(parts, spec.get_size("strict", 0) != 0));
  } else if (f == "spider") {
    out = colored(gen_spider(spec.get_size("k")));
  } else if (f == "split-cover") {
    std::vector<std::vector<std::size_t>> sets;
    for (const auto& s : split(spec.get("sets").value_or(""), '/')) {
      sets.emplace_back();
      if (s.empty()) continue;
      for (const auto& x : split(s, '.')) sets.back().push_back(to_size("sets", x));
    }
    auto red = gen_split_from_set_cover(spec.get_size("u"), sets);
    out = Generated{std::move(red.graph), std::move(red.coloring), std::nullopt, {}};
  } else if (f == "two-copies") {
    const auto base = spec.get("base").value_or("cycle");
    out = colored(gen_two_copies_ds(base_graph(spec, base), spec.get_size("pivot")));
  } else if (f == "copies-independent") {
    const auto base = spec.get("base").value_or("path");
    const std::size_t k = spec.get_size("k");
    out = colored(gen_copies_plus_independent(base_graph(spec, base), k));
    out.k = k;
  } else if (f == "sat-gadget") {
    SatInstance sat;
    sat.variables = spec.get_size("vars");
    for (const auto& cl : split(spec.get("cnf").value_or(""), '/')) {
      sat.clauses.emplace_back();
      for (const auto& lit : split(cl, '.')) sat.clauses.back().push_back(to_int(lit));
    }
    auto gad = gen_maxsep_gadget(sat);
    out = Generated{std::move(gad.graph), std::move(gad.coloring), gad.k, {}};
  } else {
    out = plain(base_graph(spec, f));
  }
  out.provenance = spec.to_string();
  return out;
}

}  // namespace rbsep
