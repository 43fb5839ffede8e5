#pragma once

#include <iosfwd>
#include <string>

#include "rbsep/graph.hpp"

namespace rbsep::io {

// Graph:     "n m\n" then m lines "u v\n" with u < v, edges ascending.
// Coloring:  one line of n characters over {R, B}.
// VertexSet: one line of ascending space-separated indices; empty line = empty set.
//
// Readers throw ParseError carrying the offending 1-based line number.

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

Coloring read_coloring(std::istream& in, std::size_t n);
void write_coloring(std::ostream& out, const Coloring& c);

VertexSet read_vertex_set(std::istream& in, std::size_t n);
void write_vertex_set(std::ostream& out, const VertexSet& s);

std::string to_string(const Graph& g);
std::string to_string(const Coloring& c);
std::string to_string(const VertexSet& s);

Graph graph_from_string(const std::string& text);
Coloring coloring_from_string(const std::string& text, std::size_t n);
VertexSet vertex_set_from_string(const std::string& text, std::size_t n);

/// Whole file as bytes. Throws Error(InvalidArgument) when unreadable.
std::string read_file(const std::string& path);
Graph load_graph(const std::string& path);
Coloring load_coloring(const std::string& path, std::size_t n);
VertexSet load_vertex_set(const std::string& path, std::size_t n);
void save(const std::string& path, const std::string& contents);

}  // namespace rbsep::io
