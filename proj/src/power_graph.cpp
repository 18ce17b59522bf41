#include "powergraph/power_graph.hpp"

#include "powergraph/subgroups.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace powergraph {

PowerGraph::PowerGraph(std::vector<BitSet> rows, std::string group_label)
    : rows_(std::move(rows)), label_(std::move(group_label)) {
  const std::size_t n = rows_.size();
  for (std::size_t u = 0; u < n; ++u) {
    if (rows_[u].size() != n)
      throw GraphError("adjacency row " + std::to_string(u) + " has wrong length");
    if (rows_[u].test(u))
      throw GraphError("loop at vertex " + std::to_string(u));
    rows_[u].for_each([&](std::size_t w) {
      if (!rows_[w].test(u))
        throw GraphError("asymmetric pair (" + std::to_string(u) + "," + std::to_string(w) + ")");
    });
  }
}

std::size_t PowerGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_)
    twice += r.count();
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> PowerGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < rows_.size(); ++u)
    rows_[u].for_each([&](std::size_t w) {
      if (u < w)
        out.emplace_back(u, w);
    });
  return out;
}

PowerGraph power_graph(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<BitSet> rows(n, BitSet(n));
  for (Elem y = 0; y < n; ++y) {
    Elem x = y;
    while (x != g.identity()) {
      if (x != y) {
        rows[x].set(y);
        rows[y].set(x);
      }
      x = g.mul(x, y);
    }
    if (y != g.identity()) {
      rows[y].set(g.identity());
      rows[g.identity()].set(y);
    }
  }
  return PowerGraph(std::move(rows), g.label());
}

namespace {

// Maximum clique in the complement graph restricted to `active`, with greedy
// colouring bounds (colour classes are cliques of the original graph).
class IndependentSetSearch {
public:
  IndependentSetSearch(const PowerGraph& g, const BitSet& active) : active_(active) {
    const std::size_t n = g.size();
    nonadj_.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
      BitSet r = ~g.neighbors(v);
      r.reset(v);
      r &= active_;
      nonadj_.push_back(std::move(r));
    }
  }

  std::size_t run() {
    best_ = 0;
    expand(0, active_);
    return best_;
  }

private:
  void expand(std::size_t depth, BitSet cand) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    colour_sort(cand, order, colour);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (depth + colour[i] <= best_)
        return;
      const std::size_t v = order[i];
      BitSet next = cand & nonadj_[v];
      if (next.none())
        best_ = std::max(best_, depth + 1);
      else
        expand(depth + 1, std::move(next));
      cand.reset(v);
    }
  }

  void colour_sort(const BitSet& cand, std::vector<std::size_t>& order,
                   std::vector<std::size_t>& colour) const {
    BitSet uncoloured = cand;
    std::size_t k = 0;
    while (uncoloured.any()) {
      ++k;
      BitSet q = uncoloured;
      while (q.any()) {
        const std::size_t v = q.find_first();
        q.reset(v);
        // Same colour class must be pairwise adjacent in the original graph.
        q.and_not(nonadj_[v]);
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(k);
      }
    }
  }

  BitSet active_;
  std::vector<BitSet> nonadj_;
  std::size_t best_ = 0;
};

} // namespace

std::size_t independence_number(const PowerGraph& graph) {
  const std::size_t n = graph.size();
  if (n > kIndependenceBound)
    throw GraphError("independence_number: " + std::to_string(n) + " vertices exceed bound " +
                     std::to_string(kIndependenceBound));
  if (n <= 1)
    return n;
  // Universal vertices (the identity at least) never join a larger
  // independent set, so drop them.
  BitSet active(n, true);
  for (std::size_t v = 0; v < n; ++v)
    if (graph.degree(v) == n - 1)
      active.reset(v);
  if (active.none())
    return 1;
  return IndependentSetSearch(graph, active).run();
}

std::string to_dot(const PowerGraph& graph, const FiniteGroup& g) {
  std::ostringstream os;
  os << "graph \"P(" << graph.group_label() << ")\" {\n";
  for (std::size_t v = 0; v < graph.size(); ++v)
    os << "  " << v << " [label=\"" << v << " (" << g.order_of(static_cast<Elem>(v)) << ")\"];\n";
  for (const auto& [u, w] : graph.edges())
    os << "  " << u << " -- " << w << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const PowerGraph& graph) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["group"] = graph.group_label();
  j["n"] = graph.size();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, w] : graph.edges())
    edges.push_back({u, w});
  j["edges"] = std::move(edges);
  return j.dump() + "\n";
}

PowerGraph power_graph_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.value("schema", 0) != 1)
      throw GraphError("unsupported graph JSON schema");
    const auto n = j.at("n").get<std::size_t>();
    std::vector<BitSet> rows(n, BitSet(n));
    for (const auto& e : j.at("edges")) {
      const auto u = e.at(0).get<std::size_t>();
      const auto w = e.at(1).get<std::size_t>();
      if (u >= n || w >= n)
        throw GraphError("edge endpoint out of range");
      rows[u].set(w);
      rows[w].set(u);
    }
    return PowerGraph(std::move(rows), j.value("group", std::string{}));
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("invalid graph JSON: ") + e.what());
  }
}

} // namespace powergraph
