// Power graph of a finite group: distinct x, y adjacent iff one lies in the
// cyclic subgroup generated by the other. Vertices are element indices.

#ifndef POWERGRAPH_POWER_GRAPH_HPP_
#define POWERGRAPH_POWER_GRAPH_HPP_

#include "powergraph/bitset.hpp"
#include "powergraph/group.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace powergraph {

class GraphError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class PowerGraph {
public:
  /// Throws GraphError unless rows form a symmetric loopless n x n matrix.
  PowerGraph(std::vector<BitSet> rows, std::string group_label);

  std::size_t size() const { return rows_.size(); }
  const std::string& group_label() const { return label_; }

  bool is_adjacent(std::size_t u, std::size_t w) const { return rows_[u].test(w); }
  const BitSet& neighbors(std::size_t v) const { return rows_[v]; }
  BitSet common_neighbors(std::size_t u, std::size_t w) const { return rows_[u] & rows_[w]; }
  std::size_t degree(std::size_t v) const { return rows_[v].count(); }

  std::size_t edge_count() const;
  /// Edges (u, w) with u < w in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const PowerGraph&, const PowerGraph&) = default;

private:
  std::vector<BitSet> rows_;
  std::string label_;
};

PowerGraph power_graph(const FiniteGroup& g);

inline constexpr std::size_t kIndependenceBound = 256;

/// Exact independence number by branch and bound; throws GraphError when the
/// graph has more than kIndependenceBound vertices.
std::size_t independence_number(const PowerGraph& graph);

/// Undirected DOT; vertex labels are "index (order)".
std::string to_dot(const PowerGraph& graph, const FiniteGroup& g);
/// {"schema":1,"group":...,"n":...,"edges":[[u,w],...]} with sorted edges.
std::string to_json(const PowerGraph& graph);
/// Inverse of to_json.
PowerGraph power_graph_from_json(const std::string& text);

} // namespace powergraph

#endif // POWERGRAPH_POWER_GRAPH_HPP_
