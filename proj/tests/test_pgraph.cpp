#include "powergraph/catalog.hpp"
#include "powergraph/power_graph.hpp"
#include "powergraph/subgroups.hpp"

#include <doctest.h>

using namespace powergraph;

namespace {

// Adjacency straight from the definition, one cyclic subgroup per element.
std::vector<std::vector<bool>> naive_adjacency(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<BitSet> cyc;
  for (Elem x = 0; x < n; ++x)
    cyc.push_back(cyclic_subgroup(g, x).members);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      adj[x][y] = x != y && (cyc[y].test(x) || cyc[x].test(y));
  return adj;
}

std::size_t brute_alpha(const PowerGraph& g) {
  const std::size_t n = g.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool independent = true;
    for (std::size_t u = 0; u < n && independent; ++u)
      for (std::size_t w = u + 1; w < n && independent; ++w)
        independent = !((mask >> u & 1) && (mask >> w & 1) && g.is_adjacent(u, w));
    if (independent)
      best = std::max(best, static_cast<std::size_t>(std::popcount(mask)));
  }
  return best;
}

std::vector<FiniteGroup> catalog_up_to(std::uint64_t max) {
  std::vector<FiniteGroup> out;
  for (const auto& e : generate_catalog({max, all_families()}))
    out.push_back(build_group(e.descriptor));
  return out;
}

} // namespace

TEST_CASE("power graph matches the definition") {
  for (const auto& g : catalog_up_to(200)) {
    CAPTURE(g.label());
    const PowerGraph pg = power_graph(g);
    const auto adj = naive_adjacency(g);
    std::size_t edges = 0;
    for (std::size_t x = 0; x < g.order(); ++x)
      for (std::size_t y = 0; y < g.order(); ++y) {
        REQUIRE(pg.is_adjacent(x, y) == adj[x][y]);
        edges += adj[x][y];
      }
    REQUIRE(pg.edge_count() * 2 == edges);
    REQUIRE(pg.degree(g.identity()) == g.order() - 1);
  }
}

TEST_CASE("small power graphs") {
  const PowerGraph trivial = power_graph(cyclic(1));
  CHECK(trivial.size() == 1);
  CHECK(trivial.edge_count() == 0);

  std::size_t z6_edges = 0;
  const auto adj = naive_adjacency(cyclic(6));
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = x + 1; y < 6; ++y)
      z6_edges += adj[x][y];
  CHECK(power_graph(cyclic(6)).edge_count() == z6_edges);
  CHECK(z6_edges == 13);

  for (std::uint64_t n : {2, 4, 8, 9, 25, 27, 49, 64})
    CHECK(power_graph(cyclic(n)).edge_count() == n * (n - 1) / 2);
  for (unsigned k = 1; k <= 6; ++k) {
    const PowerGraph pg = power_graph(elementary_abelian(2, k));
    CHECK(pg.edge_count() == pg.size() - 1);
  }
  const PowerGraph klein = power_graph(elementary_abelian(2, 2));
  CHECK(klein.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {0, 3}});
}

TEST_CASE("neighbourhoods") {
  const FiniteGroup q8 = generalized_quaternion(8);
  const PowerGraph pg = power_graph(q8);
  CHECK(pg.neighbors(0).count() == 7);
  CHECK(pg.common_neighbors(3, 3) == pg.neighbors(3));
  const BitSet c = pg.common_neighbors(1, 4);
  CHECK(c.test(0));
  CHECK(c.test(2));
  for (Elem x = 0; x < 8; ++x)
    if (q8.order_of(x) == 4)
      CHECK(pg.degree(x) == 3);
  CHECK(pg.degree(2) == 7);
}

TEST_CASE("independence number") {
  CHECK(independence_number(power_graph(cyclic(9))) == 1);
  CHECK(independence_number(power_graph(cyclic(6))) == 2);
  CHECK(independence_number(power_graph(elementary_abelian(2, 2))) == 3);
  CHECK(independence_number(power_graph(cyclic(1))) == 1);
  for (const auto& g : catalog_up_to(18)) {
    CAPTURE(g.label());
    const PowerGraph pg = power_graph(g);
    CHECK(independence_number(pg) == brute_alpha(pg));
  }
  CHECK(independence_number(power_graph(elementary_abelian(2, 7))) == 127);
  CHECK_THROWS_AS(independence_number(power_graph(cyclic(257))), GraphError);
}

TEST_CASE("graph validation") {
  std::vector<BitSet> rows(2, BitSet(2));
  rows[0].set(1);
  CHECK_THROWS_AS(PowerGraph(rows, "x"), GraphError);
  rows[1].set(1);
  rows[1].set(0);
  CHECK_THROWS_AS(PowerGraph(rows, "x"), GraphError);
}

TEST_CASE("exports") {
  const FiniteGroup z3 = cyclic(3);
  CHECK(to_dot(power_graph(z3), z3) ==
        "graph \"P(Z3)\" {\n"
        "  0 [label=\"0 (1)\"];\n"
        "  1 [label=\"1 (3)\"];\n"
        "  2 [label=\"2 (3)\"];\n"
        "  0 -- 1;\n"
        "  0 -- 2;\n"
        "  1 -- 2;\n"
        "}\n");
  CHECK(to_json(power_graph(elementary_abelian(2, 2))) ==
        "{\"schema\":1,\"group\":\"E4\",\"n\":4,\"edges\":[[0,1],[0,2],[0,3]]}\n");
  for (const auto& g : catalog_up_to(40)) {
    const PowerGraph pg = power_graph(g);
    const std::string text = to_json(pg);
    CHECK(power_graph_from_json(text) == pg);
    CHECK(to_json(power_graph_from_json(text)) == text);
  }
  CHECK_THROWS(power_graph_from_json("{\"schema\":2,\"group\":\"x\",\"n\":1,\"edges\":[]}"));
  CHECK_THROWS(power_graph_from_json("not json"));
  CHECK_THROWS(power_graph_from_json("{\"schema\":1,\"group\":\"x\",\"n\":2,\"edges\":[[0,5]]}"));
}
