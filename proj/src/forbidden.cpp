#include "powergraph/forbidden.hpp"

#include "powergraph/numth.hpp"
#include "powergraph/subgroups.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace powergraph {

PatternGraph PatternGraph::from_edges(std::size_t k,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                      std::string name) {
  if (k > kMaxPatternVertices)
    throw std::invalid_argument("pattern has more than 6 vertices");
  PatternGraph p;
  p.k = k;
  p.name = std::move(name);
  for (auto [a, b] : edges) {
    if (a >= k || b >= k || a == b)
      throw std::invalid_argument("bad pattern edge");
    p.adj[a][b] = p.adj[b][a] = true;
  }
  return p;
}

std::size_t PatternGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t u = 0; u < k; ++u)
    d += adj[v][u];
  return d;
}

PatternGraph PatternGraph::relabelled(const std::vector<std::size_t>& perm) const {
  PatternGraph p;
  p.k = k;
  p.name = name;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      p.adj[perm[a]][perm[b]] = adj[a][b];
  return p;
}

PatternGraph PatternGraph::star(std::size_t r) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 1; i <= r; ++i)
    e.emplace_back(0, i);
  return from_edges(r + 1, e, "K1," + std::to_string(r));
}

PatternGraph PatternGraph::c4() {
  return from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, "C4");
}

PatternGraph PatternGraph::triangle() {
  return from_edges(3, {{0, 1}, {1, 2}, {0, 2}}, "K3");
}

bool verify_witness(const PowerGraph& graph, const PatternGraph& pattern, const Witness& w) {
  if (w.vertices.size() != pattern.k)
    return false;
  for (std::size_t a = 0; a < pattern.k; ++a) {
    if (w.vertices[a] >= graph.size())
      return false;
    for (std::size_t b = a + 1; b < pattern.k; ++b) {
      if (w.vertices[a] == w.vertices[b])
        return false;
      if (graph.is_adjacent(w.vertices[a], w.vertices[b]) != pattern.adj[a][b])
        return false;
    }
  }
  return true;
}

namespace {

class InducedMatcher {
public:
  InducedMatcher(const PowerGraph& g, const PatternGraph& p) : g_(g), p_(p) {
    order_.resize(p.k);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return p.degree(a) > p.degree(b); });
    // Vertices of degree >= d, for each pattern degree d.
    min_degree_.assign(p.k + 1, BitSet(g.size()));
    for (std::size_t v = 0; v < g.size(); ++v) {
      const std::size_t dv = g.degree(v);
      for (std::size_t d = 0; d <= p.k; ++d)
        if (dv >= d)
          min_degree_[d].set(v);
    }
    image_.assign(p.k, 0);
  }

  std::optional<Witness> run() {
    if (p_.k > g_.size())
      return std::nullopt;
    if (p_.k == 0)
      return Witness{{}, p_.name};
    if (!assign(0))
      return std::nullopt;
    return Witness{image_, p_.name};
  }

private:
  bool assign(std::size_t t) {
    if (t == p_.k)
      return true;
    const std::size_t pv = order_[t];
    BitSet cand = min_degree_[p_.degree(pv)];
    for (std::size_t s = 0; s < t; ++s) {
      const std::size_t ps = order_[s];
      const std::size_t gv = image_[ps];
      if (p_.adj[pv][ps])
        cand &= g_.neighbors(gv);
      else
        cand.and_not(g_.neighbors(gv));
      cand.reset(gv);
    }
    for (std::size_t v = cand.find_first(); v != BitSet::npos; v = cand.find_next(v + 1)) {
      image_[pv] = v;
      if (assign(t + 1))
        return true;
    }
    return false;
  }

  const PowerGraph& g_;
  const PatternGraph& p_;
  std::vector<std::size_t> order_;
  std::vector<BitSet> min_degree_;
  std::vector<std::size_t> image_;
};

bool independent_subset(const PowerGraph& g, const BitSet& cand, std::size_t need,
                        std::vector<std::size_t>& chosen) {
  if (need == 0)
    return true;
  if (cand.count() < need)
    return false;
  for (std::size_t u = cand.find_first(); u != BitSet::npos; u = cand.find_next(u + 1)) {
    BitSet next = cand;
    next.and_not(g.neighbors(u));
    // Only larger indices, so each set is visited once.
    next.reset_prefix(u + 1);
    chosen.push_back(u);
    if (independent_subset(g, next, need - 1, chosen))
      return true;
    chosen.pop_back();
  }
  return false;
}

} // namespace

std::optional<Witness> find_induced(const PowerGraph& graph, const PatternGraph& pattern) {
  if (pattern.k > kMaxPatternVertices)
    throw std::invalid_argument("pattern has more than 6 vertices");
  return InducedMatcher(graph, pattern).run();
}

std::optional<Witness> find_star(const PowerGraph& graph, std::size_t r) {
  if (r == 0)
    throw std::invalid_argument("find_star: r must be positive");
  const std::string name = "K1," + std::to_string(r);
  for (std::size_t v = 0; v < graph.size(); ++v) {
    if (graph.degree(v) < r)
      continue;
    std::vector<std::size_t> leaves;
    if (independent_subset(graph, graph.neighbors(v), r, leaves)) {
      Witness w{{v}, name};
      w.vertices.insert(w.vertices.end(), leaves.begin(), leaves.end());
      return w;
    }
  }
  return std::nullopt;
}

std::optional<Witness> find_induced_c4(const PowerGraph& graph) {
  const std::size_t n = graph.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w = u + 1; w < n; ++w) {
      if (graph.is_adjacent(u, w))
        continue;
      const BitSet common = graph.common_neighbors(u, w);
      if (common.count() < 2)
        continue;
      for (std::size_t x = common.find_first(); x != BitSet::npos; x = common.find_next(x + 1)) {
        BitSet rest = common;
        rest.and_not(graph.neighbors(x));
        const std::size_t y = rest.find_next(x + 1);
        if (y != BitSet::npos)
          return Witness{{u, x, w, y}, "C4"};
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> find_triangle(const PowerGraph& graph) {
  for (std::size_t u = 0; u < graph.size(); ++u) {
    const BitSet& nu = graph.neighbors(u);
    for (std::size_t w = nu.find_next(u + 1); w != BitSet::npos; w = nu.find_next(w + 1)) {
      const BitSet common = graph.common_neighbors(u, w);
      const std::size_t v = common.find_next(w + 1);
      if (v != BitSet::npos)
        return Witness{{u, w, v}, "K3"};
    }
  }
  return std::nullopt;
}

namespace {

// Inside one cyclic group of order m: subgroups of orders d1, d2 meet in the
// subgroup of order gcd(d1, d2). Returns such an incomparable pair with a
// non-prime-power gcd, if one exists.
std::optional<std::pair<std::uint64_t, std::uint64_t>> incomparable_divisors(std::uint64_t m) {
  if (!is_nonconforming(classify_order(m)))
    return std::nullopt;
  std::vector<std::uint64_t> divs;
  for (std::uint64_t d = 1; d <= m; ++d)
    if (m % d == 0)
      divs.push_back(d);
  for (std::size_t i = 0; i < divs.size(); ++i)
    for (std::size_t j = i + 1; j < divs.size(); ++j) {
      const auto a = divs[i], b = divs[j];
      if (b % a != 0 && !is_prime_power(gcd(a, b)))
        return std::make_pair(a, b);
    }
  return std::nullopt;
}

} // namespace

bool verify_c4_pair(const FiniteGroup& g, Elem x, Elem y) {
  if (x == g.identity() || y == g.identity())
    return false;
  const auto cx = cyclic_subgroup(g, x);
  const auto cy = cyclic_subgroup(g, y);
  if (cx.members.test(y) || cy.members.test(x))
    return false;
  return !is_prime_power(cx.members.intersection_count(cy.members));
}

std::optional<std::pair<Elem, Elem>> find_c4_pair(const FiniteGroup& g, C4ScanMode mode) {
  const std::size_t n = g.order();
  if (mode == C4ScanMode::AllPairs) {
    std::vector<BitSet> cyc;
    cyc.reserve(n);
    for (Elem x = 0; x < n; ++x)
      cyc.push_back(cyclic_subgroup(g, x).members);
    for (Elem x = 0; x < n; ++x) {
      if (x == g.identity())
        continue;
      for (Elem y = x + 1; y < n; ++y) {
        if (y == g.identity() || cyc[y].test(x) || cyc[x].test(y))
          continue;
        if (!is_prime_power(cyc[x].intersection_count(cyc[y])))
          return std::make_pair(x, y);
      }
    }
    return std::nullopt;
  }

  // Any violating pair lies either inside one maximal cyclic subgroup (whose
  // order is then nonconforming) or in two distinct ones whose intersection
  // contains theirs.
  const auto mc = maximal_cyclic_subgroups(g);
  for (std::size_t i = 0; i < mc.size(); ++i) {
    if (auto d = incomparable_divisors(mc[i].order)) {
      const auto m = mc[i].order;
      return std::make_pair(g.pow(mc[i].generator, m / d->first),
                            g.pow(mc[i].generator, m / d->second));
    }
    for (std::size_t j = i + 1; j < mc.size(); ++j)
      if (!is_prime_power(mc[i].members.intersection_count(mc[j].members)))
        return std::make_pair(mc[i].generator, mc[j].generator);
  }
  return std::nullopt;
}

} // namespace powergraph
