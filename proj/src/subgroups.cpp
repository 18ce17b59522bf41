#include "powergraph/subgroups.hpp"

#include "powergraph/numth.hpp"

#include <algorithm>
#include <functional>

namespace powergraph {

std::vector<Elem> ElementSet::elements() const {
  std::vector<Elem> out;
  out.reserve(size());
  members.for_each([&](std::size_t i) { out.push_back(static_cast<Elem>(i)); });
  return out;
}

ElementSet make_set(const FiniteGroup& g, std::initializer_list<Elem> elems) {
  ElementSet s{BitSet(g.order()), false};
  for (Elem e : elems)
    s.members.set(e);
  return s;
}

ElementSet whole_group(const FiniteGroup& g) {
  return {BitSet(g.order(), true), true};
}

CyclicSubgroup cyclic_subgroup(const FiniteGroup& g, Elem x) {
  CyclicSubgroup c{x, BitSet(g.order()), g.order_of(x)};
  Elem y = g.identity();
  do {
    c.members.set(y);
    y = g.mul(y, x);
  } while (y != g.identity());
  return c;
}

namespace {

std::vector<BitSet> all_cyclic_members(const FiniteGroup& g) {
  std::vector<BitSet> out;
  out.reserve(g.order());
  for (Elem x = 0; x < g.order(); ++x)
    out.push_back(cyclic_subgroup(g, x).members);
  return out;
}

} // namespace

std::vector<CyclicSubgroup> maximal_cyclic_subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const auto cyc = all_cyclic_members(g);
  std::vector<CyclicSubgroup> out;
  for (Elem x = 0; x < n; ++x) {
    const auto ox = g.order_of(x);
    bool keep = true;
    // x must be the smallest generator of <x>.
    cyc[x].for_each([&](std::size_t y) {
      if (y < x && g.order_of(static_cast<Elem>(y)) == ox)
        keep = false;
    });
    for (Elem y = 0; y < n && keep; ++y)
      if (g.order_of(y) > ox && cyc[y].test(x))
        keep = false;
    if (keep)
      out.push_back({x, cyc[x], ox});
  }
  std::stable_sort(out.begin(), out.end(), [](const CyclicSubgroup& a, const CyclicSubgroup& b) {
    return a.order > b.order;
  });
  return out;
}

bool maximal_cyclics_partition(const FiniteGroup& g) {
  const auto mc = maximal_cyclic_subgroups(g);
  for (std::size_t i = 0; i < mc.size(); ++i)
    for (std::size_t j = i + 1; j < mc.size(); ++j)
      if (mc[i].members.intersection_count(mc[j].members) != 1)
        return false;
  return true;
}

ElementSet centralizer(const FiniteGroup& g, Elem x) {
  ElementSet c{BitSet(g.order()), true};
  for (Elem y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x))
      c.members.set(y);
  return c;
}

ElementSet center(const FiniteGroup& g) {
  ElementSet z{BitSet(g.order()), true};
  for (Elem y = 0; y < g.order(); ++y) {
    bool central = true;
    for (Elem x = 0; x < g.order() && central; ++x)
      central = g.mul(x, y) == g.mul(y, x);
    if (central)
      z.members.set(y);
  }
  return z;
}

namespace {

// Closure of `members` (already closed) after appending generator `gen`.
void close_with(const FiniteGroup& g, BitSet& in, std::vector<Elem>& members,
                std::vector<Elem>& gens, Elem gen) {
  gens.push_back(gen);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Elem s : gens) {
      const Elem p = g.mul(members[i], s);
      if (!in.test(p)) {
        in.set(p);
        members.push_back(p);
      }
    }
}

struct Closure {
  BitSet in;
  std::vector<Elem> members;
  std::vector<Elem> gens;

  explicit Closure(const FiniteGroup& g) : in(g.order()), members{g.identity()} {
    in.set(g.identity());
  }
  void add(const FiniteGroup& g, Elem x) {
    if (!in.test(x))
      close_with(g, in, members, gens, x);
  }
};

} // namespace

ElementSet subgroup_generated(const FiniteGroup& g, const BitSet& s) {
  Closure c(g);
  s.for_each([&](std::size_t x) { c.add(g, static_cast<Elem>(x)); });
  return {std::move(c.in), true};
}

ElementSet hughes_subgroup(const FiniteGroup& g, std::uint64_t p) {
  BitSet s(g.order());
  for (Elem x = 0; x < g.order(); ++x)
    if (g.order_of(x) != p)
      s.set(x);
  return subgroup_generated(g, s);
}

ElementSet sylow_elements(const FiniteGroup& g, std::uint64_t p) {
  ElementSet s{BitSet(g.order()), false};
  for (Elem x = 0; x < g.order(); ++x)
    if (prime_part(g.order_of(x), p) == g.order_of(x))
      s.members.set(x);
  return s;
}

ElementSet sylow_subgroup(const FiniteGroup& g, std::uint64_t p) {
  const std::uint64_t target = prime_part(g.order(), p);
  if (target == 1)
    return make_set(g, {g.identity()});

  const auto pelems = sylow_elements(g, p).elements();
  Elem seed = g.identity();
  for (Elem x : pelems)
    if (g.order_of(x) > g.order_of(seed))
      seed = x;

  // Grow by p-elements whose closure stays a p-group; backtrack when stuck.
  std::function<std::optional<Closure>(const Closure&)> extend =
      [&](const Closure& h) -> std::optional<Closure> {
    if (h.members.size() == target)
      return h;
    for (Elem x : pelems) {
      if (h.in.test(x))
        continue;
      Closure k = h;
      k.add(g, x);
      if (prime_part(k.members.size(), p) != k.members.size())
        continue;
      if (auto r = extend(k))
        return r;
    }
    return std::nullopt;
  };

  Closure start(g);
  start.add(g, seed);
  auto found = extend(start);
  if (!found || found->members.size() != target)
    throw GroupError(GroupErrorKind::SearchExhausted,
                     "no Sylow " + std::to_string(p) + "-subgroup found in " + g.label());
  return {std::move(found->in), true};
}

bool is_subgroup(const FiniteGroup& g, const BitSet& s) {
  if (!s.test(g.identity()))
    return false;
  bool closed = true;
  s.for_each([&](std::size_t a) {
    if (!closed)
      return;
    s.for_each([&](std::size_t b) {
      if (closed && !s.test(g.mul(static_cast<Elem>(a), static_cast<Elem>(b))))
        closed = false;
    });
  });
  return closed;
}

bool is_normal(const FiniteGroup& g, const ElementSet& h) {
  const auto hs = h.elements();
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y : hs)
      if (!h.contains(g.conj(y, x)))
        return false;
  return true;
}

bool is_cyclic(const FiniteGroup& g) {
  for (Elem x = 0; x < g.order(); ++x)
    if (g.order_of(x) == g.order())
      return true;
  return false;
}

bool is_abelian(const FiniteGroup& g) {
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = x + 1; y < g.order(); ++y)
      if (g.mul(x, y) != g.mul(y, x))
        return false;
  return true;
}

// G is nilpotent iff every set of p-elements is closed.
bool is_nilpotent(const FiniteGroup& g) {
  for (auto p : factorize(g.order()).primes())
    if (!is_subgroup(g, sylow_elements(g, p).members))
      return false;
  return true;
}

std::uint64_t exponent(const FiniteGroup& g) {
  std::uint64_t e = 1;
  for (auto o : g.orders())
    e = lcm(e, o);
  return e;
}

std::vector<std::uint64_t> order_spectrum(const FiniteGroup& g) {
  std::vector<std::uint64_t> out(g.orders().begin(), g.orders().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t count_of_order(const FiniteGroup& g, std::uint64_t k) {
  return static_cast<std::size_t>(std::count(g.orders().begin(), g.orders().end(), k));
}

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g) {
  BitSet seen(g.order());
  std::vector<std::vector<Elem>> out;
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen.test(x))
      continue;
    BitSet cls(g.order());
    for (Elem y = 0; y < g.order(); ++y)
      cls.set(g.conj(x, y));
    seen |= cls;
    std::vector<Elem> members;
    cls.for_each([&](std::size_t i) { members.push_back(static_cast<Elem>(i)); });
    out.push_back(std::move(members));
  }
  return out;
}

ElementSet Embedded::lift(const FiniteGroup& parent, const ElementSet& local) const {
  ElementSet out{BitSet(parent.order()), local.subgroup};
  local.members.for_each([&](std::size_t i) { out.members.set(to_parent[i]); });
  return out;
}

Embedded restrict_to(const FiniteGroup& g, const ElementSet& h) {
  if (!is_subgroup(g, h.members))
    throw GroupError(GroupErrorKind::PreconditionViolated, "restrict_to: set is not a subgroup");
  auto elems = h.elements();
  std::vector<Elem> local(g.order(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i)
    local[elems[i]] = static_cast<Elem>(i);
  const std::size_t m = elems.size();
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table[i * m + j] = local[g.mul(elems[i], elems[j])];
  return {FiniteGroup::from_trusted_table(std::move(table), "sub(" + g.label() + ")"),
          std::move(elems)};
}

} // namespace powergraph
