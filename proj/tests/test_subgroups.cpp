#include "powergraph/catalog.hpp"
#include "powergraph/numth.hpp"
#include "powergraph/subgroups.hpp"

#include <doctest.h>

using namespace powergraph;

namespace {

std::vector<Elem> elems(const BitSet& b) {
  std::vector<Elem> out;
  b.for_each([&](std::size_t i) { out.push_back(static_cast<Elem>(i)); });
  return out;
}

Elem first_of_order(const FiniteGroup& g, std::uint64_t k) {
  for (Elem x = 0; x < g.order(); ++x)
    if (g.order_of(x) == k)
      return x;
  FAIL("no element of order " << k);
  return 0;
}

const std::vector<FiniteGroup>& catalog_groups() {
  static const std::vector<FiniteGroup> groups = [] {
    std::vector<FiniteGroup> out;
    for (const auto& e : generate_catalog({200, all_families()}))
      out.push_back(build_group(e.descriptor));
    return out;
  }();
  return groups;
}

} // namespace

TEST_CASE("cyclic subgroups") {
  const FiniteGroup z12 = cyclic(12);
  CHECK(elems(cyclic_subgroup(z12, 0).members) == std::vector<Elem>{0});
  const auto c = cyclic_subgroup(z12, 2);
  CHECK(elems(c.members) == std::vector<Elem>{0, 2, 4, 6, 8, 10});
  CHECK(c.order == 6);
  // In the metacyclic encoding of Q8, element 1 is a = i and 2 is a^2 = -1.
  const FiniteGroup q8 = generalized_quaternion(8);
  CHECK(elems(cyclic_subgroup(q8, 1).members) == std::vector<Elem>{0, 1, 2, 3});
}

TEST_CASE("maximal cyclic subgroups") {
  CHECK(maximal_cyclic_subgroups(cyclic(12)).size() == 1);
  const auto q8 = maximal_cyclic_subgroups(generalized_quaternion(8));
  REQUIRE(q8.size() == 3);
  for (const auto& m : q8)
    CHECK(m.order == 4);
  const auto klein = maximal_cyclic_subgroups(elementary_abelian(2, 2));
  REQUIRE(klein.size() == 3);
  for (const auto& m : klein)
    CHECK(m.order == 2);
  CHECK(maximal_cyclics_partition(elementary_abelian(2, 2)));
  CHECK_FALSE(maximal_cyclics_partition(generalized_quaternion(8)));
  CHECK(maximal_cyclics_partition(cyclic(30)));
  CHECK(maximal_cyclics_partition(symmetric(3)));
}

TEST_CASE("centralizers and centres") {
  const FiniteGroup q8 = generalized_quaternion(8);
  CHECK(elems(center(q8).members) == std::vector<Elem>{0, 2});
  const FiniteGroup s3 = symmetric(3);
  const Elem r = first_of_order(s3, 3);
  CHECK(centralizer(s3, r) == ElementSet{cyclic_subgroup(s3, r).members, true});
  CHECK(center(s3).size() == 1);
  CHECK(center(cyclic(10)).size() == 10);
  CHECK(center(generalized_quaternion(8)).subgroup);
}

TEST_CASE("generated subgroups and Hughes subgroups") {
  const FiniteGroup q8 = generalized_quaternion(8);
  CHECK(subgroup_generated(q8, BitSet(8)).size() == 1);
  BitSet one(12);
  one.set(5);
  CHECK(subgroup_generated(cyclic(12), one).size() == 12);
  BitSet ij(8);
  ij.set(1);
  ij.set(4);
  CHECK(subgroup_generated(q8, ij).size() == 8);

  CHECK(hughes_subgroup(elementary_abelian(2, 2), 2).size() == 1);
  CHECK(hughes_subgroup(q8, 2).size() == 8);
  const FiniteGroup z4z2 = direct_product(cyclic(4), cyclic(2));
  const auto h = hughes_subgroup(z4z2, 2);
  CHECK(h.size() == 8);
  CHECK_FALSE(is_cyclic(z4z2));
}

TEST_CASE("Sylow subgroups") {
  const FiniteGroup z12 = cyclic(12);
  CHECK(elems(sylow_subgroup(z12, 2).members) == std::vector<Elem>{0, 3, 6, 9});
  const FiniteGroup s3 = symmetric(3);
  CHECK(sylow_subgroup(s3, 3) == ElementSet{cyclic_subgroup(s3, first_of_order(s3, 3)).members, true});
  const auto inv = sylow_elements(s3, 2);
  CHECK(inv.size() == 4);
  CHECK_FALSE(is_subgroup(s3, inv.members));
  CHECK(sylow_subgroup(s3, 5).size() == 1);
  CHECK(sylow_subgroup(symmetric(4), 2).size() == 8);
  CHECK(sylow_subgroup(alternating(5), 2).size() == 4);
}

TEST_CASE("global invariants") {
  const FiniteGroup z12 = cyclic(12);
  CHECK(is_nilpotent(z12));
  CHECK(is_cyclic(z12));
  CHECK(exponent(z12) == 12);
  CHECK(order_spectrum(z12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK_FALSE(is_nilpotent(symmetric(3)));
  CHECK(order_spectrum(symmetric(3)) == std::vector<std::uint64_t>{1, 2, 3});
  const FiniteGroup q8 = generalized_quaternion(8);
  CHECK(is_nilpotent(q8));
  CHECK_FALSE(is_cyclic(q8));
  CHECK(exponent(q8) == 4);
  CHECK(conjugacy_classes(symmetric(3)).size() == 3);
  CHECK(conjugacy_classes(q8).size() == 5);
}

TEST_CASE("restriction to a subgroup") {
  const FiniteGroup s4 = symmetric(4);
  const ElementSet p = sylow_subgroup(s4, 2);
  const Embedded e = restrict_to(s4, p);
  CHECK(e.group.order() == 8);
  CHECK(e.lift(s4, whole_group(e.group)) == p);
  CHECK_THROWS_AS(restrict_to(s4, sylow_elements(s4, 2)), GroupError);
}

TEST_CASE("catalog-wide subgroup invariants") {
  for (const auto& g : catalog_groups()) {
    CAPTURE(g.label());
    BitSet covered(g.order());
    for (const auto& m : maximal_cyclic_subgroups(g))
      covered |= m.members;
    REQUIRE(covered.count() == g.order());
    for (auto p : factorize(g.order()).primes()) {
      const ElementSet s = sylow_subgroup(g, p);
      REQUIRE(s.size() == prime_part(g.order(), p));
      REQUIRE(is_subgroup(g, s.members));
      const ElementSet h = hughes_subgroup(g, p);
      const Embedded he = restrict_to(g, h);
      REQUIRE(he.lift(g, hughes_subgroup(he.group, p)) == h);
    }
    REQUIRE(is_subgroup(g, center(g).members));
  }
}
