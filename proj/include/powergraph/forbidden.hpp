// Forbidden induced subgraph detection: a generic backtracking matcher for
// patterns of up to six vertices, and specialised searches for stars, the
// 4-cycle and triangles. Every search returns a witness (or nothing) rather
// than a bare verdict so that callers can print and re-verify it.

#ifndef POWERGRAPH_FORBIDDEN_HPP_
#define POWERGRAPH_FORBIDDEN_HPP_

#include "powergraph/group.hpp"
#include "powergraph/power_graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace powergraph {

inline constexpr std::size_t kMaxPatternVertices = 6;

struct PatternGraph {
  std::size_t k = 0;
  std::array<std::array<bool, kMaxPatternVertices>, kMaxPatternVertices> adj{};
  std::string name;

  /// Throws std::invalid_argument on k > 6, loops, or out-of-range edges.
  static PatternGraph from_edges(std::size_t k,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                 std::string name);

  std::size_t degree(std::size_t v) const;
  /// Same graph with vertex i renamed to perm[i].
  PatternGraph relabelled(const std::vector<std::size_t>& perm) const;

  /// K_{1,r}; vertex 0 is the centre.
  static PatternGraph star(std::size_t r);
  static PatternGraph claw() { return star(3); }
  /// 4-cycle 0-1-2-3-0.
  static PatternGraph c4();
  static PatternGraph triangle();
};

/// witness.vertices[i] is the graph vertex matched to pattern vertex i.
struct Witness {
  std::vector<std::size_t> vertices;
  std::string pattern;
};

/// True when the witness vertices are distinct and induce exactly the pattern.
bool verify_witness(const PowerGraph& graph, const PatternGraph& pattern, const Witness& w);

std::optional<Witness> find_induced(const PowerGraph& graph, const PatternGraph& pattern);

/// Induced K_{1,r}: a vertex with an independent r-set in its neighbourhood.
std::optional<Witness> find_star(const PowerGraph& graph, std::size_t r);
inline std::optional<Witness> find_claw(const PowerGraph& graph) { return find_star(graph, 3); }

/// Induced C_4 ordered u, x, w, y: u, w nonadjacent, x, y nonadjacent common
/// neighbours. Pairs are scanned in ascending order.
std::optional<Witness> find_induced_c4(const PowerGraph& graph);

std::optional<Witness> find_triangle(const PowerGraph& graph);

enum class C4ScanMode { AllPairs, MaximalOnly };

/// A pair x, y of elements with neither cyclic subgroup containing the other
/// and with <x> ∩ <y> not of prime-power order. Such a pair exists iff the
/// power graph has an induced 4-cycle.
std::optional<std::pair<Elem, Elem>> find_c4_pair(const FiniteGroup& g,
                                                  C4ScanMode mode = C4ScanMode::MaximalOnly);

/// Checks the defining conditions of a pair returned by find_c4_pair.
bool verify_c4_pair(const FiniteGroup& g, Elem x, Elem y);

} // namespace powergraph

#endif // POWERGRAPH_FORBIDDEN_HPP_
