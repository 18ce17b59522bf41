// Finite groups stored as Cayley tables, plus the family constructors.
//
// Element orderings are fixed per constructor so that witnesses printed in
// reports are stable:
//   cyclic(n)            additive residues 0..n-1
//   direct_product(G,H)  (g,h) -> g*|H| + h  (lexicographic)
//   metacyclic families  b^j a^i -> j*|a| + i (so 0..|a|-1 is <a>)
//   from_permutations    breadth-first discovery from the identity

#ifndef POWERGRAPH_GROUP_HPP_
#define POWERGRAPH_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace powergraph {

using Elem = std::uint32_t;

struct ElementSet;
struct Embedded;

inline constexpr std::size_t kDefaultConstructionBound = 5000;
// Up to this order associativity is verified on every triple.
inline constexpr std::size_t kFullAssociativityCheck = 256;

enum class GroupErrorKind {
  NotLatinSquare,
  NoIdentity,
  NotAssociative,
  NoInverse,
  InvalidParameters,
  InvalidAction,
  ExceedsBound,
  SearchExhausted,
  PreconditionViolated,
  BadFile,
};

const char* to_string(GroupErrorKind k);

class GroupError : public std::runtime_error {
public:
  GroupError(GroupErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
  GroupErrorKind kind() const { return kind_; }

private:
  GroupErrorKind kind_;
};

class FiniteGroup {
public:
  /// Validates the table (Latin square, associativity, identity, inverses).
  /// Rows are flattened: table[i*n + j] = i*j.
  static FiniteGroup from_table(std::vector<Elem> table, std::string label,
                                std::size_t bound = kDefaultConstructionBound);
  static FiniteGroup from_rows(const std::vector<std::vector<Elem>>& rows, std::string label,
                               std::size_t bound = kDefaultConstructionBound);

  std::size_t order() const { return n_; }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return table_[std::size_t{a} * n_ + b]; }
  Elem inv(Elem a) const { return inverses_[a]; }
  std::uint64_t order_of(Elem a) const { return orders_[a]; }
  Elem pow(Elem a, std::uint64_t k) const;
  Elem conj(Elem a, Elem g) const { return mul(mul(inv(g), a), g); } // g^-1 a g

  const std::string& label() const { return label_; }
  std::span<const Elem> table() const { return table_; }
  std::span<const std::uint64_t> orders() const { return orders_; }
  std::span<const Elem> inverses() const { return inverses_; }

  void set_label(std::string label) { label_ = std::move(label); }

private:
  friend Embedded restrict_to(const FiniteGroup& g, const ElementSet& h);

  FiniteGroup() = default;
  // For tables already known to be groups (subgroups of a validated group).
  static FiniteGroup from_trusted_table(std::vector<Elem> table, std::string label);

  std::size_t n_ = 0;
  std::vector<Elem> table_;
  Elem identity_ = 0;
  std::vector<Elem> inverses_;
  std::vector<std::uint64_t> orders_;
  std::string label_;
};

// Family constructors. Labels use the canonical descriptor grammar.

FiniteGroup cyclic(std::uint64_t n, std::size_t bound = kDefaultConstructionBound);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           std::size_t bound = kDefaultConstructionBound);
FiniteGroup abelian(std::span<const std::uint64_t> factors,
                    std::size_t bound = kDefaultConstructionBound);
FiniteGroup elementary_abelian(std::uint64_t p, unsigned k,
                               std::size_t bound = kDefaultConstructionBound);

/// Dihedral group of the given order (order = 2m, m >= 1).
FiniteGroup dihedral(std::uint64_t order, std::size_t bound = kDefaultConstructionBound);
/// Q_{2^n}, n >= 3.
FiniteGroup generalized_quaternion(std::uint64_t order,
                                   std::size_t bound = kDefaultConstructionBound);
/// SD_{2^n}, n >= 3: a^{2^{n-1}} = b^2 = 1, a^b = a^{2^{n-2}-1}.
FiniteGroup semidihedral(std::uint64_t order, std::size_t bound = kDefaultConstructionBound);
/// M_{p^n}, n >= 3: a^{p^{n-1}} = b^p = 1, a^b = a^{p^{n-2}+1}.
FiniteGroup modular(std::uint64_t p, unsigned n, std::size_t bound = kDefaultConstructionBound);

/// Z_n : Z_m with b^-1 a b = a^k. Requires gcd(k, n) = 1 and k^m = 1 mod n.
FiniteGroup semidirect_cyclic(std::uint64_t n, std::uint64_t m, std::uint64_t k,
                              std::size_t bound = kDefaultConstructionBound);

using Permutation = std::vector<std::uint32_t>;

/// Closure of the generators under composition, (x*y)(i) = y(x(i)).
FiniteGroup from_permutations(std::uint32_t degree, const std::vector<Permutation>& generators,
                              std::string label, std::size_t bound = kDefaultConstructionBound);
FiniteGroup symmetric(std::uint32_t degree, std::size_t bound = kDefaultConstructionBound);
FiniteGroup alternating(std::uint32_t degree, std::size_t bound = kDefaultConstructionBound);

} // namespace powergraph

#endif // POWERGRAPH_GROUP_HPP_
