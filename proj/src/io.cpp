#include "rbsep/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace rbsep::io {

namespace {

std::vector<std::size_t> parse_numbers(const std::string& line, std::size_t lineno) {
  std::vector<std::size_t> out;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    if (*p == ' ') {
      ++p;
      continue;
    }
    std::size_t value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || next == p)
      throw ParseError(lineno, "expected a non-negative decimal integer in '" + line + "'");
    if (next < end && *next != ' ')
      throw ParseError(lineno, "unexpected character '" + std::string(1, *next) + "'");
    out.push_back(value);
    p = next;
  }
  return out;
}

bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw ParseError(1, "missing header 'n m'");
  auto header = parse_numbers(line, 1);
  if (header.size() != 2) throw ParseError(1, "header must be 'n m'");
  const std::size_t n = header[0];
  const std::size_t m = header[1];
  std::vector<Edge> edges;
  edges.reserve(m);
  std::vector<std::vector<Vertex>> adj(n);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t lineno = i + 2;
    if (!next_line(in, line)) throw ParseError(lineno, "expected " + std::to_string(m) + " edges");
    auto uv = parse_numbers(line, lineno);
    if (uv.size() != 2) throw ParseError(lineno, "edge line must be 'u v'");
    auto [u, v] = std::pair(uv[0], uv[1]);
    if (u >= v) throw ParseError(lineno, "edge endpoints must satisfy u < v");
    if (v >= n) throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range");
    for (Vertex w : adj[u])
      if (w == v) throw ParseError(lineno, "duplicate edge");
    adj[u].push_back(v);
    edges.emplace_back(u, v);
  }
  while (next_line(in, line))
    if (!line.empty()) throw ParseError(m + 2, "trailing content after edge list");
  return Graph::from_edges(n, edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Coloring read_coloring(std::istream& in, std::size_t n) {
  std::string line;
  if (!next_line(in, line)) line.clear();
  if (line.size() != n)
    throw ParseError(1, "coloring has " + std::to_string(line.size()) + " characters, expected " +
                            std::to_string(n));
  std::vector<Color> colors(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (line[i] == 'R') colors[i] = Color::Red;
    else if (line[i] == 'B') colors[i] = Color::Blue;
    else throw ParseError(1, "invalid color '" + std::string(1, line[i]) + "'");
  }
  return Coloring(std::move(colors));
}

void write_coloring(std::ostream& out, const Coloring& c) {
  for (Color x : c.colors()) out << (x == Color::Red ? 'R' : 'B');
  out << '\n';
}

VertexSet read_vertex_set(std::istream& in, std::size_t n) {
  std::string line;
  if (!next_line(in, line)) line.clear();
  auto idx = parse_numbers(line, 1);
  VertexSet s(n);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= n) throw ParseError(1, "vertex " + std::to_string(idx[i]) + " out of range");
    if (i > 0 && idx[i] <= idx[i - 1]) throw ParseError(1, "indices must be strictly ascending");
    s.insert(idx[i]);
  }
  return s;
}

void write_vertex_set(std::ostream& out, const VertexSet& s) {
  bool first = true;
  s.for_each([&](Vertex v) {
    if (!first) out << ' ';
    out << v;
    first = false;
  });
  out << '\n';
}

std::string to_string(const Graph& g) {
  std::ostringstream ss;
  write_graph(ss, g);
  return ss.str();
}

std::string to_string(const Coloring& c) {
  std::ostringstream ss;
  write_coloring(ss, c);
  return ss.str();
}

std::string to_string(const VertexSet& s) {
  std::ostringstream ss;
  write_vertex_set(ss, s);
  return ss.str();
}

Graph graph_from_string(const std::string& text) {
  std::istringstream ss(text);
  return read_graph(ss);
}

Coloring coloring_from_string(const std::string& text, std::size_t n) {
  std::istringstream ss(text);
  return read_coloring(ss, n);
}

VertexSet vertex_set_from_string(const std::string& text, std::size_t n) {
  std::istringstream ss(text);
  return read_vertex_set(ss, n);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& path) { return graph_from_string(read_file(path)); }

Coloring load_coloring(const std::string& path, std::size_t n) {
  return coloring_from_string(read_file(path), n);
}

VertexSet load_vertex_set(const std::string& path, std::size_t n) {
  return vertex_set_from_string(read_file(path), n);
}

void save(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  f << contents;
}

}  // namespace rbsep::io
