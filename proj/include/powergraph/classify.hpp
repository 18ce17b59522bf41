// Structural group-theoretic predicates for claw-, K_{1,4}- and C_4-free
// power graphs, and the per-group audit that compares each of them against
// brute-force subgraph search.

#ifndef POWERGRAPH_CLASSIFY_HPP_
#define POWERGRAPH_CLASSIFY_HPP_

#include "powergraph/forbidden.hpp"
#include "powergraph/group.hpp"
#include "powergraph/power_graph.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace powergraph {

// Structural predicates. Each returns true when the power graph is predicted
// to be free of the corresponding induced subgraph.

/// Cyclic of order p^m q^n with min(m, n) <= 1.
bool claw_free_structural(const FiniteGroup& g);
/// Q_8, Z_2 x Z_2, Z_{p^k}, Z_{pqr}, or Z_{p^m q^n} with min(m, n) <= 2.
/// Q_8 is recognised as (order 8, one involution, non-cyclic) and the Klein
/// group as (order 4, exponent 2).
bool k14_free_structural(const FiniteGroup& g);
/// Every nontrivial element has prime-power order.
bool eppo(const FiniteGroup& g);
/// First element whose order is not of the form p^m, p^m q or pqr.
std::optional<Elem> find_nonconforming_element(const FiniteGroup& g);
/// For nilpotent G: a p-group, Z_{pqr}, or P x Q with H_p(P) cyclic and
/// exp(Q) = q for some labelling of the two Sylow subgroups.
/// Throws GroupError(PreconditionViolated) when G is not nilpotent.
bool nilpotent_c4_structural(const FiniteGroup& g);

enum class Relation {
  Iff,                    // structural == brute_force
  StructuralImpliesBrute, // necessary-only: structural -> brute_force
  BruteImpliesStructural, // necessary-only: brute_force -> structural
  Check,                  // no brute-force side; the structural check must hold
};

const char* to_string(Relation r);

struct Verdict {
  std::string claim;
  Relation relation = Relation::Check;
  bool structural = false;
  std::optional<bool> brute_force;
  std::vector<std::uint64_t> witness;
  std::string note;
  bool agrees = false;
};

/// Builds a verdict and fills in `agrees` according to the relation.
Verdict make_verdict(std::string claim, Relation relation, bool structural,
                     std::optional<bool> brute_force, std::vector<std::uint64_t> witness = {},
                     std::string note = {});

struct AuditReport {
  std::string group_label;
  std::uint64_t group_order = 0;
  std::vector<Verdict> verdicts;
  std::chrono::nanoseconds elapsed{0};

  std::vector<std::string> disagreements() const;
  const Verdict* find(const std::string& claim) const;
};

/// Necessary conditions on centralizers of elements of order pqr, p^m q
/// (m > 1) and pq in a group with C_4-free power graph; one verdict per
/// applicable conjugacy class. Throws GroupError(PreconditionViolated) when
/// the power graph has an induced C_4.
std::vector<Verdict> centralizer_audits(const FiniteGroup& g);

/// Necessary conditions determined by the shape of Z(G), for groups that are
/// not of prime-power order and have a C_4-free power graph. Throws
/// GroupError(PreconditionViolated) otherwise.
std::vector<Verdict> center_audits(const FiniteGroup& g);

/// Largest order audit_group accepts; bounds the brute-force 4-cycle search.
inline constexpr std::size_t kAuditHardCap = 500;

/// Runs every brute-force detector and structural predicate on one group.
AuditReport audit_group(const FiniteGroup& g);

} // namespace powergraph

#endif // POWERGRAPH_CLASSIFY_HPP_
