// Subgroup machinery over a FiniteGroup: cyclic subgroups, centralizers,
// Sylow subgroups, Hughes subgroups and related invariants.

#ifndef POWERGRAPH_SUBGROUPS_HPP_
#define POWERGRAPH_SUBGROUPS_HPP_

#include "powergraph/bitset.hpp"
#include "powergraph/group.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace powergraph {

/// A set of elements of one group. `subgroup` records that the set is known
/// to be closed (it is set by the operations that produce subgroups).
struct ElementSet {
  BitSet members;
  bool subgroup = false;

  std::size_t size() const { return members.count(); }
  bool contains(Elem x) const { return members.test(x); }
  std::vector<Elem> elements() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.members == b.members;
  }
};

struct CyclicSubgroup {
  Elem generator;
  BitSet members;
  std::uint64_t order;
};

ElementSet make_set(const FiniteGroup& g, std::initializer_list<Elem> elems);
ElementSet whole_group(const FiniteGroup& g);

CyclicSubgroup cyclic_subgroup(const FiniteGroup& g, Elem x);

/// Distinct maximal cyclic subgroups, sorted by (order desc, generator asc);
/// each is represented by its smallest generator.
std::vector<CyclicSubgroup> maximal_cyclic_subgroups(const FiniteGroup& g);

/// True iff distinct maximal cyclic subgroups pairwise meet trivially.
bool maximal_cyclics_partition(const FiniteGroup& g);

ElementSet centralizer(const FiniteGroup& g, Elem x);
ElementSet center(const FiniteGroup& g);

/// Smallest subgroup containing s.
ElementSet subgroup_generated(const FiniteGroup& g, const BitSet& s);

/// Subgroup generated by all elements whose order is not p.
ElementSet hughes_subgroup(const FiniteGroup& g, std::uint64_t p);

/// All elements of p-power order (identity included); not closed in general.
ElementSet sylow_elements(const FiniteGroup& g, std::uint64_t p);

/// One Sylow p-subgroup ({identity} when p does not divide |G|).
ElementSet sylow_subgroup(const FiniteGroup& g, std::uint64_t p);

bool is_subgroup(const FiniteGroup& g, const BitSet& s);
bool is_normal(const FiniteGroup& g, const ElementSet& h);

bool is_cyclic(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);
std::uint64_t exponent(const FiniteGroup& g);
/// Sorted set of element orders.
std::vector<std::uint64_t> order_spectrum(const FiniteGroup& g);
std::size_t count_of_order(const FiniteGroup& g, std::uint64_t k);

/// Conjugacy classes ordered by smallest member; each list ascending.
std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g);

/// A subgroup re-materialized as a FiniteGroup. to_parent[i] is the parent
/// element for local element i; local indices follow ascending parent order.
struct Embedded {
  FiniteGroup group;
  std::vector<Elem> to_parent;

  ElementSet lift(const FiniteGroup& parent, const ElementSet& local) const;
};

Embedded restrict_to(const FiniteGroup& g, const ElementSet& h);

} // namespace powergraph

#endif // POWERGRAPH_SUBGROUPS_HPP_
