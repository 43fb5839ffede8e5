#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rbsep/graph.hpp"

namespace rbsep {

struct ColoredGraph {
  Graph graph;
  Coloring coloring;
};

// --- plain families -------------------------------------------------------

[[nodiscard]] Graph path_graph(std::size_t n);
[[nodiscard]] Graph cycle_graph(std::size_t n);
/// Center 0 joined to leaves 1..n-1.
[[nodiscard]] Graph star_graph(std::size_t n);
[[nodiscard]] Graph complete_graph(std::size_t n);

// --- extremal families ----------------------------------------------------

struct PowerSetGraph {
  Graph graph;
  /// The adversarial coloring for this k (one entry).
  std::vector<Coloring> colorings;
};

/// Order 2^k. Vertices: s_1..s_k (0..k-1); then one vertex per subset of
/// {s_1..s_k} of size >= 2, in increasing bitmask order (s_i = bit i-1),
/// forming a clique and joined to their members; finally isolated v_∅.
[[nodiscard]] PowerSetGraph gen_power_set_graph(std::size_t k);

/// Complement of the half-graph H_k: cliques v_1..v_k (0..k-1) and
/// w_1..w_k (k..2k-1), v_i ~ w_j iff i > j. Coloring: v_i Blue iff i odd;
/// w_i Red iff i odd when k is odd, Blue iff i odd when k is even.
[[nodiscard]] ColoredGraph gen_half_graph_complement(std::size_t k);

/// Complete multipartite graph, parts laid out consecutively; each part gets
/// ceil(k_i/2) Red vertices first, then Blue. `strict` demands t >= 2 and
/// every part odd and >= 5. Throws Error(InvalidParts).
[[nodiscard]] ColoredGraph gen_complete_multipartite(const std::vector<std::size_t>& parts,
                                                     bool strict = false);

/// k paths of order 6 sharing endpoint x = 0; path i occupies 5i-4..5i with
/// 5i-4 adjacent to x. Coloring alternates along the bipartition with x Red.
[[nodiscard]] ColoredGraph gen_spider(std::size_t k);

// --- hardness reductions ----------------------------------------------------

struct SplitReduction {
  Graph graph;
  Coloring coloring;
  /// sep_RB(graph, coloring) = (minimum cover size) + cover_offset.
  std::size_t cover_offset = 1;
  std::size_t element_base = 0;  // u_i = element_base + i
  std::size_t set_base = 0;      // v_j = set_base + j
  Vertex red = 0;                // r
  Vertex isolated_a = 0;         // b
  Vertex isolated_b = 0;         // b'
};

/// Set cover instance -> split graph with a single red vertex.
/// Throws Error(UncoveredElement) / Error(InvalidArgument).
[[nodiscard]] SplitReduction gen_split_from_set_cover(
    std::size_t universe, const std::vector<std::vector<std::size_t>>& sets);

/// Red copy of g (0..n-1), blue copy (n..2n-1), and path u1..u4 (2n..2n+3)
/// with u1 joined to both copies of the pivot; u1..u3 Red, u4 Blue.
/// sep_RB = γ(g) + 1. Throws Error(BadPivot) unless deg(pivot) = 2.
[[nodiscard]] ColoredGraph gen_two_copies_ds(const Graph& g, Vertex pivot);

/// Blue copy of g plus k+1 isolated Red vertices. sep_RB <= k iff γ(g) <= k.
[[nodiscard]] ColoredGraph gen_copies_plus_independent(const Graph& g, std::size_t k);

/// CNF with at most three literals per clause and each literal used at most
/// twice. Literals are DIMACS-style: +v / -v for variable v in 1..variables.
struct SatInstance {
  std::size_t variables = 0;
  std::vector<std::vector<int>> clauses;

  /// Throws Error(LiteralCapExceeded) or Error(InvalidArgument).
  void validate() const;
  [[nodiscard]] bool satisfied_by(const std::vector<bool>& assignment) const;
  /// Brute force; nullopt when unsatisfiable. Test scale only.
  [[nodiscard]] std::optional<std::vector<bool>> find_assignment() const;
};

/// Layout of the 16-vertex domination gadget H(v1, v2), relative to its base:
/// v1, v2, u1..u4, p1..p6, q1..q4. p_i joins the i-th pair of u's and q_j the
/// j-th triple, both in lexicographic order.
struct DominationGadgetLayout {
  static constexpr std::size_t kSize = 16;
  static constexpr std::size_t kV1 = 0, kV2 = 1, kU = 2, kP = 6, kQ = 12;
};

struct MaxsepGadget {
  Graph graph;
  Coloring coloring;
  std::size_t k = 0;  // 4m + 9n
  /// Base index of every domination gadget.
  std::vector<std::size_t> gadget_bases;
  std::size_t variables = 0;

  [[nodiscard]] Vertex literal_vertex(int literal) const;
  [[nodiscard]] Vertex var_a(std::size_t var) const { return 32 * var; }
  [[nodiscard]] Vertex var_b(std::size_t var) const { return 32 * var + 1; }
  [[nodiscard]] Vertex clause_a(std::size_t j) const { return 32 * variables + 16 * j; }
  [[nodiscard]] Vertex clause_b(std::size_t j) const { return clause_a(j) + 1; }

  /// All u-vertices plus the true literal of each variable.
  [[nodiscard]] VertexSet prescribed_set(const std::vector<bool>& assignment) const;
};

/// Variable i (0-based) owns H(x^a, x^b) at 32i and H(x, x̄) at 32i+16;
/// clause j owns H(c^a, c^b) at 32n+16j. Coloring: every p Blue, every q Red,
/// x^a and c^a Red, everything else Blue.
[[nodiscard]] MaxsepGadget gen_maxsep_gadget(const SatInstance& sat);

// --- fuzz sources -----------------------------------------------------------

inline constexpr std::size_t kTwinFreeRetries = 2000;

/// G(n, p) resampled until twin-free. Throws Error(TwinFreeUnreachable).
[[nodiscard]] Graph gen_random_twin_free(std::size_t n, double edge_prob, std::uint64_t seed,
                                         std::size_t max_tries = kTwinFreeRetries);

/// Uniform labelled tree from a random Prüfer sequence.
[[nodiscard]] Graph gen_random_tree(std::size_t n, std::uint64_t seed);

/// Decodes a Prüfer sequence of length n - 2 over 0..n-1.
[[nodiscard]] Graph tree_from_pruefer(std::size_t n, std::span<const Vertex> sequence);

/// Uniformly random coloring from a seed.
[[nodiscard]] Coloring random_coloring(std::size_t n, std::uint64_t seed);

// --- textual specs ----------------------------------------------------------

/// `family:param=value,...`, e.g. `half-complement:k=2`, `multipartite:parts=5/5`,
/// `sat-gadget:vars=2,cnf=1.-2/2`. Parameters may also be separated by ';',
/// the form used inside CSV cells.
struct GeneratorSpec {
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;

  /// Throws Error(InvalidArgument) on malformed text.
  static GeneratorSpec parse(const std::string& text);
  [[nodiscard]] std::string to_string(char separator = ',') const;
  [[nodiscard]] std::optional<std::string> get(const std::string& key) const;
  [[nodiscard]] std::size_t get_size(const std::string& key) const;
  [[nodiscard]] std::size_t get_size(const std::string& key, std::size_t fallback) const;
};

struct Generated {
  Graph graph;
  std::optional<Coloring> coloring;
  /// Decision threshold carried by reductions (k for sat-gadget, etc.).
  std::optional<std::size_t> k;
  std::string provenance;
};

[[nodiscard]] Generated generate(const GeneratorSpec& spec);

}  // namespace rbsep
