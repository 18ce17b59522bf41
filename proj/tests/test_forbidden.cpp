#include "powergraph/catalog.hpp"
#include "powergraph/forbidden.hpp"
#include "powergraph/subgroups.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

using namespace powergraph;

namespace {

std::vector<FiniteGroup> catalog_up_to(std::uint64_t max) {
  std::vector<FiniteGroup> out;
  for (const auto& e : generate_catalog({max, all_families()}))
    out.push_back(build_group(e.descriptor));
  return out;
}

// Exhaustive scan of 4-subsets for an induced 4-cycle.
bool has_c4_by_subsets(const PowerGraph& g) {
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          const std::size_t v[4] = {a, b, c, d};
          int edges = 0;
          bool degrees_two = true;
          for (int i = 0; i < 4; ++i) {
            int deg = 0;
            for (int j = 0; j < 4; ++j)
              deg += i != j && g.is_adjacent(v[i], v[j]);
            degrees_two = degrees_two && deg == 2;
            edges += deg;
          }
          // 2-regular on four vertices is exactly C4.
          if (degrees_two && edges == 8)
            return true;
        }
  return false;
}

std::vector<std::uint64_t> orders_of(const FiniteGroup& g, const Witness& w) {
  std::vector<std::uint64_t> out;
  for (auto v : w.vertices)
    out.push_back(g.order_of(static_cast<Elem>(v)));
  return out;
}

} // namespace

TEST_CASE("pattern graphs") {
  const PatternGraph claw = PatternGraph::claw();
  CHECK(claw.name == "K1,3");
  CHECK(claw.degree(0) == 3);
  CHECK(PatternGraph::star(4).k == 5);
  CHECK(PatternGraph::c4().degree(2) == 2);
  CHECK(PatternGraph::triangle().name == "K3");
  CHECK_THROWS_AS(PatternGraph::from_edges(7, {}, "big"), std::invalid_argument);
  CHECK_THROWS_AS(PatternGraph::from_edges(3, {{1, 1}}, "loop"), std::invalid_argument);
  CHECK_THROWS_AS(PatternGraph::from_edges(3, {{0, 3}}, "range"), std::invalid_argument);
  CHECK_THROWS_AS(find_star(power_graph(cyclic(3)), 0), std::invalid_argument);
}

TEST_CASE("generic matcher examples") {
  const PowerGraph klein = power_graph(elementary_abelian(2, 2));
  const auto w = find_induced(klein, PatternGraph::claw());
  REQUIRE(w);
  CHECK(w->vertices == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK_FALSE(find_induced(power_graph(cyclic(16)), PatternGraph::c4()));

  const FiniteGroup g = build_group(parse_descriptor("Z4xZ2xZ3"));
  const PowerGraph pg = power_graph(g);
  CHECK(has_c4_by_subsets(pg));
  const auto c4 = find_induced(pg, PatternGraph::c4());
  REQUIRE(c4);
  CHECK(verify_witness(pg, PatternGraph::c4(), *c4));
}

TEST_CASE("star searches") {
  const FiniteGroup q8 = generalized_quaternion(8);
  const PowerGraph pq8 = power_graph(q8);
  const auto claw = find_claw(pq8);
  REQUIRE(claw);
  CHECK(verify_witness(pq8, PatternGraph::claw(), *claw));
  CHECK(orders_of(q8, *claw) == std::vector<std::uint64_t>{1, 4, 4, 4});
  CHECK_FALSE(find_star(pq8, 4));

  const FiniteGroup z30 = cyclic(30);
  const auto w30 = find_claw(power_graph(z30));
  REQUIRE(w30);
  CHECK(verify_witness(power_graph(z30), PatternGraph::claw(), *w30));

  const FiniteGroup z36 = cyclic(36);
  const auto w36 = find_claw(power_graph(z36));
  REQUIRE(w36);
  CHECK(orders_of(z36, *w36) == std::vector<std::uint64_t>{1, 9, 6, 4});
}

TEST_CASE("4-cycle searches") {
  const FiniteGroup z60 = cyclic(60);
  const PowerGraph p60 = power_graph(z60);
  const auto w = find_induced_c4(p60);
  REQUIRE(w);
  CHECK(verify_witness(p60, PatternGraph::c4(), *w));
  CHECK_FALSE(find_induced_c4(power_graph(cyclic(6))));
  CHECK_FALSE(has_c4_by_subsets(power_graph(cyclic(6))));
  CHECK_FALSE(find_induced_c4(power_graph(symmetric(3))));
  CHECK_FALSE(find_induced_c4(power_graph(cyclic(35))));
}

TEST_CASE("triangle search") {
  CHECK_FALSE(find_triangle(power_graph(elementary_abelian(2, 3))));
  const auto t = find_triangle(power_graph(cyclic(3)));
  REQUIRE(t);
  CHECK(t->vertices == std::vector<std::size_t>{0, 1, 2});
  CHECK(find_triangle(power_graph(cyclic(4))));
}

TEST_CASE("structural 4-cycle pairs") {
  const FiniteGroup g = build_group(parse_descriptor("Z4xZ2xZ3"));
  for (auto mode : {C4ScanMode::AllPairs, C4ScanMode::MaximalOnly}) {
    const auto pair = find_c4_pair(g, mode);
    REQUIRE(pair);
    CHECK(verify_c4_pair(g, pair->first, pair->second));
  }
  const auto mx = find_c4_pair(g, C4ScanMode::MaximalOnly);
  CHECK(g.order_of(mx->first) == 12);
  CHECK(g.order_of(mx->second) == 12);
  CHECK(cyclic_subgroup(g, mx->first).members.intersection_count(
            cyclic_subgroup(g, mx->second).members) == 6);

  CHECK_FALSE(find_c4_pair(generalized_quaternion(8)));
  CHECK_FALSE(find_c4_pair(build_group(parse_descriptor("Z6xZ2"))));
  // A single maximal cyclic subgroup can carry the violating pair.
  const auto z60 = find_c4_pair(cyclic(60));
  REQUIRE(z60);
  CHECK(verify_c4_pair(cyclic(60), z60->first, z60->second));
  CHECK_FALSE(verify_c4_pair(cyclic(60), 0, 1));
}

TEST_CASE("fast searches agree with the generic matcher") {
  const PatternGraph claw = PatternGraph::claw(), k14 = PatternGraph::star(4),
                     c4 = PatternGraph::c4(), k3 = PatternGraph::triangle();
  for (const auto& g : catalog_up_to(200)) {
    CAPTURE(g.label());
    const PowerGraph pg = power_graph(g);
    const auto fast3 = find_claw(pg), fast4 = find_star(pg, 4), fastc = find_induced_c4(pg),
               fastt = find_triangle(pg);
    REQUIRE(fast3.has_value() == find_induced(pg, claw).has_value());
    REQUIRE(fast4.has_value() == find_induced(pg, k14).has_value());
    REQUIRE(fastc.has_value() == find_induced(pg, c4).has_value());
    REQUIRE(fastt.has_value() == find_induced(pg, k3).has_value());
    if (fast3)
      REQUIRE(verify_witness(pg, claw, *fast3));
    if (fast4)
      REQUIRE(verify_witness(pg, k14, *fast4));
    if (fastc)
      REQUIRE(verify_witness(pg, c4, *fastc));
    if (fastt)
      REQUIRE(verify_witness(pg, k3, *fastt));
    if (g.order() <= 40)
      REQUIRE(fastc.has_value() == has_c4_by_subsets(pg));
    const auto all = find_c4_pair(g, C4ScanMode::AllPairs);
    const auto max = find_c4_pair(g, C4ScanMode::MaximalOnly);
    REQUIRE(all.has_value() == fastc.has_value());
    REQUIRE(max.has_value() == all.has_value());
    if (max)
      REQUIRE(verify_c4_pair(g, max->first, max->second));
  }
}

TEST_CASE("relabelled patterns give the same answer") {
  const std::vector<PatternGraph> patterns = {PatternGraph::claw(), PatternGraph::c4(),
                                              PatternGraph::triangle(),
                                              PatternGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}, "P4")};
  for (const auto& g : catalog_up_to(30)) {
    const PowerGraph pg = power_graph(g);
    for (const auto& p : patterns) {
      const bool present = find_induced(pg, p).has_value();
      std::vector<std::size_t> perm(p.k);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      do {
        const PatternGraph q = p.relabelled(perm);
        const auto w = find_induced(pg, q);
        REQUIRE(w.has_value() == present);
        if (w)
          REQUIRE(verify_witness(pg, q, *w));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}
