#include "powergraph/group.hpp"

#include "powergraph/bitset.hpp"
#include "powergraph/numth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace powergraph {

const char* to_string(GroupErrorKind k) {
  switch (k) {
  case GroupErrorKind::NotLatinSquare:
    return "NotLatinSquare";
  case GroupErrorKind::NoIdentity:
    return "NoIdentity";
  case GroupErrorKind::NotAssociative:
    return "NotAssociative";
  case GroupErrorKind::NoInverse:
    return "NoInverse";
  case GroupErrorKind::InvalidParameters:
    return "InvalidParameters";
  case GroupErrorKind::InvalidAction:
    return "InvalidAction";
  case GroupErrorKind::ExceedsBound:
    return "ExceedsBound";
  case GroupErrorKind::SearchExhausted:
    return "SearchExhausted";
  case GroupErrorKind::PreconditionViolated:
    return "PreconditionViolated";
  case GroupErrorKind::BadFile:
    return "BadFile";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void fail(GroupErrorKind kind, const std::string& msg) {
  throw GroupError(kind, msg);
}

std::string triple_str(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << a << "," << b << "," << c << ")";
  return os.str();
}

void check_latin(const std::vector<Elem>& t, std::size_t n) {
  for (std::size_t i = 0; i < n * n; ++i)
    if (t[i] >= n)
      fail(GroupErrorKind::NotLatinSquare,
           "entry at row " + std::to_string(i / n) + ", column " + std::to_string(i % n) +
               " is out of range");
  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (seen[t[r * n + c]]++)
        fail(GroupErrorKind::NotLatinSquare, "row " + std::to_string(r) + " repeats " +
                                                 std::to_string(t[r * n + c]));
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      if (seen[t[r * n + c]]++)
        fail(GroupErrorKind::NotLatinSquare, "column " + std::to_string(c) + " repeats " +
                                                 std::to_string(t[r * n + c]));
    }
  }
}

void check_associative_with(const std::vector<Elem>& t, std::size_t n, std::size_t g) {
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t xg = t[x * n + g];
    for (std::size_t y = 0; y < n; ++y)
      if (t[xg * n + y] != t[x * n + t[g * n + y]])
        fail(GroupErrorKind::NotAssociative, "triple " + triple_str(x, g, y));
  }
}

// Elements g with (xg)y = x(gy) for all x, y form a submagma, so checking a
// set whose right-multiplication closure is everything suffices (Light's test).
void check_associative(const std::vector<Elem>& t, std::size_t n) {
  if (n <= kFullAssociativityCheck) {
    for (std::size_t g = 0; g < n; ++g)
      check_associative_with(t, n, g);
    return;
  }
  BitSet reached(n);
  std::vector<std::size_t> gens;
  std::vector<std::size_t> members;
  for (std::size_t cand = 0; cand < n; ++cand) {
    if (reached.test(cand))
      continue;
    gens.push_back(cand);
    reached.set(cand);
    members.push_back(cand);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t g : gens) {
        const std::size_t p = t[members[i] * n + g];
        if (!reached.test(p)) {
          reached.set(p);
          members.push_back(p);
        }
      }
  }
  for (std::size_t g : gens)
    check_associative_with(t, n, g);
}

} // namespace

FiniteGroup FiniteGroup::from_table(std::vector<Elem> table, std::string label,
                                    std::size_t bound) {
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(table.size()))));
  if (n == 0)
    fail(GroupErrorKind::InvalidParameters, "empty table");
  if (n * n != table.size())
    fail(GroupErrorKind::NotLatinSquare, "table is not square");
  if (n > bound)
    fail(GroupErrorKind::ExceedsBound,
         "order " + std::to_string(n) + " exceeds bound " + std::to_string(bound));

  check_latin(table, n);
  check_associative(table, n);

  std::size_t e = n;
  for (std::size_t cand = 0; cand < n && e == n; ++cand) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      ok = table[cand * n + j] == j && table[j * n + cand] == j;
    if (ok)
      e = cand;
  }
  if (e == n)
    fail(GroupErrorKind::NoIdentity, "no two-sided identity");

  for (std::size_t i = 0; i < n; ++i) {
    // In a Latin square the right inverse is unique.
    std::size_t j = 0;
    while (table[i * n + j] != e)
      ++j;
    if (table[j * n + i] != e)
      fail(GroupErrorKind::NoInverse, "element " + std::to_string(i));
  }

  return from_trusted_table(std::move(table), std::move(label));
}

FiniteGroup FiniteGroup::from_trusted_table(std::vector<Elem> table, std::string label) {
  FiniteGroup g;
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(table.size()))));
  std::size_t e = 0;
  while (table[e * n] != 0 || table[e * n + (n - 1)] != n - 1)
    ++e;
  g.inverses_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (table[i * n + j] == e) {
        g.inverses_[i] = static_cast<Elem>(j);
        break;
      }
  g.orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t k = 1;
    std::size_t x = i;
    while (x != e) {
      x = table[x * n + i];
      ++k;
    }
    g.orders_[i] = k;
  }
  g.n_ = n;
  g.table_ = std::move(table);
  g.identity_ = static_cast<Elem>(e);
  g.label_ = std::move(label);
  return g;
}

FiniteGroup FiniteGroup::from_rows(const std::vector<std::vector<Elem>>& rows, std::string label,
                                   std::size_t bound) {
  const std::size_t n = rows.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n)
      fail(GroupErrorKind::NotLatinSquare, "table is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return from_table(std::move(flat), std::move(label), bound);
}

Elem FiniteGroup::pow(Elem a, std::uint64_t k) const {
  k %= orders_[a];
  Elem r = identity_;
  Elem base = a;
  while (k) {
    if (k & 1)
      r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

namespace {

void check_bound(std::uint64_t order, std::size_t bound) {
  if (order > bound)
    fail(GroupErrorKind::ExceedsBound,
         "order " + std::to_string(order) + " exceeds bound " + std::to_string(bound));
}

// Elements b^j a^i, j < m, i < n, with b^-1 a b = a^k and b^m = a^t.
FiniteGroup metacyclic(std::uint64_t n, std::uint64_t m, std::uint64_t k, std::uint64_t t,
                       std::string label, std::size_t bound) {
  check_bound(n * m, bound);
  const std::size_t order = n * m;
  std::vector<std::uint64_t> kpow(m + 1);
  kpow[0] = 1 % n;
  for (std::uint64_t l = 1; l <= m; ++l)
    kpow[l] = kpow[l - 1] * (k % n) % n;

  std::vector<Elem> table(order * order);
  for (std::uint64_t x = 0; x < order; ++x) {
    const std::uint64_t j = x / n, i = x % n;
    for (std::uint64_t y = 0; y < order; ++y) {
      const std::uint64_t l = y / n, kk = y % n;
      std::uint64_t bj = j + l;
      std::uint64_t ai = (i * kpow[l] + kk) % n;
      if (bj >= m) {
        bj -= m;
        ai = (ai + t) % n;
      }
      table[x * order + y] = static_cast<Elem>(bj * n + ai);
    }
  }
  FiniteGroup g = FiniteGroup::from_table(std::move(table), std::move(label), bound);

  // Defining relations, read back from the table.
  if (n > 1 && g.order_of(1) != n)
    fail(GroupErrorKind::InvalidParameters, g.label() + ": generator a has wrong order");
  if (m > 1) {
    const auto b = static_cast<Elem>(n);
    const auto a = static_cast<Elem>(n > 1 ? 1 : 0);
    if (g.pow(b, m) != static_cast<Elem>(t % n))
      fail(GroupErrorKind::InvalidParameters, g.label() + ": relation b^m = a^t fails");
    if (g.conj(a, b) != g.pow(a, k))
      fail(GroupErrorKind::InvalidParameters, g.label() + ": relation a^b = a^k fails");
  }
  return g;
}

unsigned exact_log(std::uint64_t value, std::uint64_t base) {
  unsigned e = 0;
  while (value > 1 && value % base == 0) {
    value /= base;
    ++e;
  }
  return value == 1 ? e : 0;
}

} // namespace

FiniteGroup cyclic(std::uint64_t n, std::size_t bound) {
  if (n == 0)
    fail(GroupErrorKind::InvalidParameters, "cyclic group order must be positive");
  check_bound(n, bound);
  std::vector<Elem> table(n * n);
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j)
      table[i * n + j] = static_cast<Elem>((i + j) % n);
  return FiniteGroup::from_table(std::move(table), "Z" + std::to_string(n), bound);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t bound) {
  const std::uint64_t ng = g.order(), nh = h.order();
  check_bound(ng * nh, bound);
  const std::size_t n = ng * nh;
  std::vector<Elem> table(n * n);
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y) {
      const auto a = g.mul(static_cast<Elem>(x / nh), static_cast<Elem>(y / nh));
      const auto b = h.mul(static_cast<Elem>(x % nh), static_cast<Elem>(y % nh));
      table[x * n + y] = static_cast<Elem>(std::uint64_t{a} * nh + b);
    }
  return FiniteGroup::from_table(std::move(table), g.label() + "x" + h.label(), bound);
}

FiniteGroup abelian(std::span<const std::uint64_t> factors, std::size_t bound) {
  if (factors.empty())
    fail(GroupErrorKind::InvalidParameters, "abelian: no factors");
  std::uint64_t total = 1;
  for (auto f : factors) {
    if (f == 0)
      fail(GroupErrorKind::InvalidParameters, "abelian: factor 0");
    total *= f;
    check_bound(total, bound);
  }
  FiniteGroup g = cyclic(factors[0], bound);
  for (std::size_t i = 1; i < factors.size(); ++i)
    g = direct_product(g, cyclic(factors[i], bound), bound);
  return g;
}

FiniteGroup elementary_abelian(std::uint64_t p, unsigned k, std::size_t bound) {
  if (!is_prime(p) || k == 0)
    fail(GroupErrorKind::InvalidParameters, "elementary_abelian needs a prime and k >= 1");
  std::uint64_t order = 1;
  for (unsigned i = 0; i < k; ++i) {
    order *= p;
    check_bound(order, bound);
  }
  std::vector<std::uint64_t> factors(k, p);
  FiniteGroup g = abelian(factors, bound);
  g.set_label("E" + std::to_string(order));
  return g;
}

FiniteGroup dihedral(std::uint64_t order, std::size_t bound) {
  if (order < 2 || order % 2)
    fail(GroupErrorKind::InvalidParameters, "dihedral order must be even and >= 2");
  const std::uint64_t m = order / 2;
  return metacyclic(m, 2, m - 1, 0, "D" + std::to_string(order), bound);
}

FiniteGroup generalized_quaternion(std::uint64_t order, std::size_t bound) {
  const unsigned n = exact_log(order, 2);
  if (n < 3)
    fail(GroupErrorKind::InvalidParameters, "quaternion order must be 2^n with n >= 3");
  const std::uint64_t a = order / 2;
  return metacyclic(a, 2, a - 1, a / 2, "Q" + std::to_string(order), bound);
}

FiniteGroup semidihedral(std::uint64_t order, std::size_t bound) {
  const unsigned n = exact_log(order, 2);
  if (n < 3)
    fail(GroupErrorKind::InvalidParameters, "semidihedral order must be 2^n with n >= 3");
  const std::uint64_t a = order / 2;
  return metacyclic(a, 2, a / 2 - 1, 0, "SD" + std::to_string(order), bound);
}

FiniteGroup modular(std::uint64_t p, unsigned n, std::size_t bound) {
  if (!is_prime(p) || n < 3)
    fail(GroupErrorKind::InvalidParameters, "modular group needs a prime p and n >= 3");
  std::uint64_t a = 1;
  for (unsigned i = 0; i + 1 < n; ++i) {
    a *= p;
    check_bound(a, bound);
  }
  check_bound(a * p, bound);
  return metacyclic(a, p, a / p + 1, 0, "M" + std::to_string(a * p), bound);
}

FiniteGroup semidirect_cyclic(std::uint64_t n, std::uint64_t m, std::uint64_t k,
                              std::size_t bound) {
  if (n == 0 || m == 0)
    fail(GroupErrorKind::InvalidParameters, "semidirect factors must be positive");
  if (gcd(k % n, n) != 1 && n > 1)
    fail(GroupErrorKind::InvalidAction, "gcd(k, n) != 1");
  if (pow_mod(k, m, n) != 1 % n)
    fail(GroupErrorKind::InvalidAction, "k^m != 1 mod n");
  const std::uint64_t kr = n > 1 ? k % n : 0;
  return metacyclic(n, m, kr, 0,
                    "Z" + std::to_string(n) + ":Z" + std::to_string(m) + "(" +
                        std::to_string(kr) + ")",
                    bound);
}

FiniteGroup from_permutations(std::uint32_t degree, const std::vector<Permutation>& generators,
                              std::string label, std::size_t bound) {
  for (const auto& g : generators) {
    if (g.size() != degree)
      fail(GroupErrorKind::InvalidParameters, "generator has wrong degree");
    std::vector<char> seen(degree);
    for (auto v : g) {
      if (v >= degree || seen[v]++)
        fail(GroupErrorKind::InvalidParameters, "generator is not a permutation");
    }
  }
  auto compose = [degree](const Permutation& x, const Permutation& y) {
    Permutation r(degree);
    for (std::uint32_t i = 0; i < degree; ++i)
      r[i] = y[x[i]];
    return r;
  };

  Permutation id(degree);
  for (std::uint32_t i = 0; i < degree; ++i)
    id[i] = i;
  std::vector<Permutation> elems{id};
  std::map<Permutation, Elem> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      Permutation p = compose(elems[head], g);
      if (index.count(p))
        continue;
      if (elems.size() == bound)
        fail(GroupErrorKind::ExceedsBound, "permutation closure exceeds bound " +
                                               std::to_string(bound));
      index.emplace(p, static_cast<Elem>(elems.size()));
      elems.push_back(std::move(p));
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      table[x * n + y] = index.at(compose(elems[x], elems[y]));
  return FiniteGroup::from_table(std::move(table), std::move(label), bound);
}

FiniteGroup symmetric(std::uint32_t degree, std::size_t bound) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    Permutation swap(degree), cycle(degree);
    for (std::uint32_t i = 0; i < degree; ++i) {
      swap[i] = i;
      cycle[i] = (i + 1) % degree;
    }
    std::swap(swap[0], swap[1]);
    gens = {swap, cycle};
  }
  return from_permutations(degree, gens, "S" + std::to_string(degree), bound);
}

FiniteGroup alternating(std::uint32_t degree, std::size_t bound) {
  std::vector<Permutation> gens;
  for (std::uint32_t s = 0; s + 2 < degree; ++s) {
    Permutation c(degree);
    for (std::uint32_t i = 0; i < degree; ++i)
      c[i] = i;
    c[s] = s + 1;
    c[s + 1] = s + 2;
    c[s + 2] = s;
    gens.push_back(std::move(c));
  }
  return from_permutations(degree, gens, "A" + std::to_string(degree), bound);
}

} // namespace powergraph
