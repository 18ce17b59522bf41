#include "powergraph/classify.hpp"

#include "powergraph/numth.hpp"
#include "powergraph/subgroups.hpp"

#include <algorithm>

namespace powergraph {

namespace {

std::uint64_t set_exponent(const FiniteGroup& g, const ElementSet& s) {
  std::uint64_t e = 1;
  s.members.for_each([&](std::size_t x) { e = lcm(e, g.order_of(static_cast<Elem>(x))); });
  return e;
}

bool set_is_cyclic(const FiniteGroup& g, const ElementSet& s) {
  const std::size_t n = s.size();
  bool found = false;
  s.members.for_each([&](std::size_t x) {
    if (g.order_of(static_cast<Elem>(x)) == n)
      found = true;
  });
  return found;
}

std::vector<std::uint64_t> primes_of(std::uint64_t n) { return factorize(n).primes(); }

bool is_squarefree_with(const Factorization& f, std::size_t nprimes) {
  if (f.pairs.size() != nprimes)
    return false;
  return std::all_of(f.pairs.begin(), f.pairs.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

// H_p of a Sylow p-subgroup of h (a subgroup of g), as a subset of g.
ElementSet hughes_of_sylow(const FiniteGroup& g, const Embedded& h, std::uint64_t p) {
  const ElementSet sp = sylow_subgroup(h.group, p);
  const Embedded sp_group = restrict_to(h.group, sp);
  const ElementSet hp = hughes_subgroup(sp_group.group, p);
  return h.lift(g, sp_group.lift(h.group, hp));
}

// Sylow p-subgroup of h, lifted to g.
ElementSet sylow_of(const FiniteGroup& g, const Embedded& h, std::uint64_t p) {
  return h.lift(g, sylow_subgroup(h.group, p));
}

bool is_normal_in(const FiniteGroup& g, const ElementSet& sub, const ElementSet& in) {
  const auto subs = sub.elements();
  bool ok = true;
  in.members.for_each([&](std::size_t x) {
    if (!ok)
      return;
    for (Elem y : subs)
      if (!sub.contains(g.conj(y, static_cast<Elem>(x)))) {
        ok = false;
        return;
      }
  });
  return ok;
}

bool cyclic_normal_in(const FiniteGroup& g, const ElementSet& sub, const ElementSet& in) {
  return set_is_cyclic(g, sub) && is_normal_in(g, sub, in);
}

std::string class_claim(const std::string& base, Elem rep) {
  return base + "/x=" + std::to_string(rep);
}

// Representatives (smallest member) of conjugacy classes.
std::vector<Elem> class_representatives(const FiniteGroup& g) {
  std::vector<Elem> reps;
  for (const auto& cls : conjugacy_classes(g))
    reps.push_back(cls.front());
  return reps;
}

std::vector<Verdict> centralizer_checks(const FiniteGroup& g) {
  using namespace order_form;
  std::vector<Verdict> out;
  for (Elem x : class_representatives(g)) {
    const std::uint64_t ox = g.order_of(x);
    const ElementSet cx = centralizer(g, x);
    const auto form = classify_order(ox);

    if (std::holds_alternative<ThreeDistinctPrimes>(form)) {
      const bool ok = cx.members == cyclic_subgroup(g, x).members;
      out.push_back(make_verdict(class_claim("audit-centralizer-pqr", x), Relation::Check, ok,
                                 std::nullopt, {x}, "C_G(x) = <x>"));
      continue;
    }
    const auto* pmq = std::get_if<PrimePowerTimesPrime>(&form);
    if (!pmq)
      continue;
    const Embedded c = restrict_to(g, cx);
    const std::uint64_t p = pmq->p, q = pmq->q;

    if (pmq->m > 1) {
      const bool exp_q = set_exponent(g, sylow_of(g, c, q)) == q;
      const ElementSet hp = hughes_of_sylow(g, c, p);
      const bool hp_ok = cyclic_normal_in(g, hp, cx);
      out.push_back(make_verdict(class_claim("audit-centralizer-pmq", x), Relation::Check,
                                 exp_q && hp_ok, std::nullopt, {x},
                                 "exp(S_q(C_G(x))) = q; H_p(S_p(C_G(x))) cyclic and normal"));
      continue;
    }

    // |x| = pq.
    const auto cprimes = primes_of(cx.size());
    std::vector<std::uint64_t> extra;
    for (auto r : cprimes)
      if (r != p && r != q)
        extra.push_back(r);
    bool ok = false;
    std::string note;
    if (extra.size() == 1) {
      const std::uint64_t r = extra.front();
      bool prime_exponents = true;
      for (auto s : cprimes)
        prime_exponents = prime_exponents && set_exponent(g, sylow_of(g, c, s)) == s;
      ok = prime_exponents && cyclic_normal_in(g, sylow_of(g, c, r), cx);
      note = "|C_G(x)| = p^u q^v r^w: Sylow exponents prime; S_r(C_G(x)) cyclic and normal "
             "(direct-product decomposition not recognised)";
    } else if (extra.empty()) {
      for (auto [r, s] : {std::pair{p, q}, std::pair{q, p}}) {
        if (set_exponent(g, sylow_of(g, c, r)) == r &&
            cyclic_normal_in(g, hughes_of_sylow(g, c, s), cx))
          ok = true;
      }
      note = "|C_G(x)| = p^u q^v: exp(S_r) = r and H_s(S_s) cyclic normal for {r,s} = {p,q}";
    } else {
      note = "|C_G(x)| has more than one prime outside {p,q}";
    }
    out.push_back(make_verdict(class_claim("audit-centralizer-pq", x), Relation::Check, ok,
                               std::nullopt, {x}, note));
  }
  return out;
}

std::vector<Verdict> center_checks(const FiniteGroup& g) {
  std::vector<Verdict> out;
  const ElementSet z = center(g);
  const Factorization zf = factorize(z.size());
  const auto gprimes = primes_of(g.order());
  const FiniteGroup& whole = g;
  const Embedded gz = restrict_to(g, z);

  if (zf.pairs.size() >= 3) {
    const bool ok = is_cyclic(g) && is_squarefree_with(factorize(g.order()), 3);
    out.push_back(make_verdict("audit-center-pqr", Relation::Check, ok, std::nullopt, {},
                               "Z(G) has three or more prime divisors: G = Z_pqr"));
    return out;
  }

  if (zf.pairs.size() == 2) {
    const std::uint64_t p0 = zf.pairs[0].prime, p1 = zf.pairs[1].prime;
    out.push_back(make_verdict("audit-center-two-primes-shape", Relation::Check,
                               nilpotent_c4_structural(gz.group), std::nullopt, {},
                               "Z(G) = P x Q with H_p(P) cyclic and exp(Q) = q; the C_G(P) "
                               "clause is not checked"));
    for (auto [p, q] : {std::pair{p0, p1}, std::pair{p1, p0}}) {
      if (set_exponent(g, sylow_of(g, gz, p)) == p)
        continue;
      const ElementSet sp = sylow_subgroup(g, p);
      const bool ok = gprimes.size() == 2 && set_is_cyclic(g, sp) && is_normal(g, sp) &&
                      set_exponent(g, sylow_subgroup(g, q)) == q;
      out.push_back(make_verdict("audit-center-two-primes-p=" + std::to_string(p),
                                 Relation::Check, ok, std::nullopt, {},
                                 "exp(S_p(Z)) > p: pi(G) = {p,q}, S_p(G) cyclic normal, "
                                 "exp(S_q(G)) = q"));
    }
    std::vector<std::uint64_t> extra;
    for (auto r : gprimes)
      if (r != p0 && r != p1)
        extra.push_back(r);
    if (!extra.empty()) {
      bool ok = extra.size() == 1;
      for (auto r : extra)
        ok = ok && prime_part(g.order(), r) == r;
      out.push_back(make_verdict("audit-center-two-primes-extra", Relation::Check, ok,
                                 std::nullopt, {},
                                 "at most one prime r outside pi(Z(G)), and |S_r(G)| = r"));
    }
    return out;
  }

  if (zf.pairs.size() != 1)
    return out;
  const std::uint64_t p = zf.pairs[0].prime;
  const bool elementary = set_exponent(g, z) == p;
  if (elementary && z.size() == p)
    return out;

  if (!elementary) {
    bool ok = set_is_cyclic(g, z);
    for (auto q : gprimes)
      if (q != p)
        ok = ok && set_exponent(whole, sylow_subgroup(g, q)) == q;
    out.push_back(make_verdict("audit-center-p-cyclic", Relation::Check, ok, std::nullopt, {},
                               "Z(G) cyclic and exp(S_q(G)) = q for q != p"));
  }
  for (Elem x : class_representatives(g)) {
    const std::uint64_t ox = g.order_of(x);
    if (ox == 1 || !is_prime_power(ox) || ox % p == 0)
      continue;
    const std::uint64_t q = factorize(ox).pairs[0].prime;
    const ElementSet cx = centralizer(g, x);
    const Embedded c = restrict_to(g, cx);
    const auto cprimes = primes_of(cx.size());
    const bool pi_ok = cprimes == std::vector<std::uint64_t>{std::min(p, q), std::max(p, q)};
    if (!elementary) {
      const bool ok = pi_ok && cyclic_normal_in(g, sylow_of(g, c, p), cx);
      out.push_back(make_verdict(class_claim("audit-center-p-centralizer", x), Relation::Check,
                                 ok, std::nullopt, {x},
                                 "pi(C_G(x)) = {p,q}; S_p(C_G(x)) cyclic and normal"));
    } else {
      bool ok = pi_ok;
      if (ox > q)
        ok = ok && set_exponent(g, sylow_of(g, c, p)) == p &&
             cyclic_normal_in(g, sylow_of(g, c, q), cx);
      out.push_back(make_verdict(class_claim("audit-center-elementary", x), Relation::Check, ok,
                                 std::nullopt, {x},
                                 "pi(C_G(x)) = {p,q}; if |x| > q: exp(S_p(C_G(x))) = p and "
                                 "S_q(C_G(x)) cyclic normal"));
    }
  }
  return out;
}

std::vector<std::uint64_t> to_witness(const std::optional<Witness>& w) {
  if (!w)
    return {};
  return {w->vertices.begin(), w->vertices.end()};
}

} // namespace

bool claw_free_structural(const FiniteGroup& g) {
  if (!is_cyclic(g))
    return false;
  const auto f = factorize(g.order());
  if (f.pairs.size() <= 1)
    return true;
  return f.pairs.size() == 2 && std::min(f.pairs[0].exponent, f.pairs[1].exponent) <= 1;
}

bool k14_free_structural(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (!is_cyclic(g)) {
    const bool q8 = n == 8 && count_of_order(g, 2) == 1;
    const bool klein = n == 4 && exponent(g) == 2;
    return q8 || klein;
  }
  const auto f = factorize(n);
  switch (f.pairs.size()) {
  case 0:
  case 1:
    return true;
  case 2:
    return std::min(f.pairs[0].exponent, f.pairs[1].exponent) <= 2;
  case 3:
    return is_squarefree_with(f, 3);
  default:
    return false;
  }
}

bool eppo(const FiniteGroup& g) {
  return std::all_of(g.orders().begin(), g.orders().end(),
                     [](std::uint64_t o) { return is_prime_power(o); });
}

std::optional<Elem> find_nonconforming_element(const FiniteGroup& g) {
  for (Elem x = 0; x < g.order(); ++x)
    if (is_nonconforming(classify_order(g.order_of(x))))
      return x;
  return std::nullopt;
}

bool nilpotent_c4_structural(const FiniteGroup& g) {
  if (!is_nilpotent(g))
    throw GroupError(GroupErrorKind::PreconditionViolated,
                     g.label() + " is not nilpotent");
  const auto f = factorize(g.order());
  switch (f.pairs.size()) {
  case 0:
  case 1:
    return true;
  case 3:
    return is_cyclic(g) && is_squarefree_with(f, 3);
  case 2:
    break;
  default:
    return false;
  }
  const std::uint64_t p0 = f.pairs[0].prime, p1 = f.pairs[1].prime;
  const Embedded s0 = restrict_to(g, sylow_subgroup(g, p0));
  const Embedded s1 = restrict_to(g, sylow_subgroup(g, p1));
  auto shape = [](const Embedded& p_part, std::uint64_t p, const Embedded& q_part,
                  std::uint64_t q) {
    const ElementSet hp = hughes_subgroup(p_part.group, p);
    return set_is_cyclic(p_part.group, hp) && exponent(q_part.group) == q;
  };
  return shape(s0, p0, s1, p1) || shape(s1, p1, s0, p0);
}

const char* to_string(Relation r) {
  switch (r) {
  case Relation::Iff:
    return "iff";
  case Relation::StructuralImpliesBrute:
    return "structural-implies-brute";
  case Relation::BruteImpliesStructural:
    return "brute-implies-structural";
  case Relation::Check:
    return "check";
  }
  return "unknown";
}

Verdict make_verdict(std::string claim, Relation relation, bool structural,
                     std::optional<bool> brute_force, std::vector<std::uint64_t> witness,
                     std::string note) {
  Verdict v{std::move(claim), relation,          structural, brute_force,
            std::move(witness), std::move(note), false};
  switch (relation) {
  case Relation::Iff:
    v.agrees = brute_force && *brute_force == structural;
    break;
  case Relation::StructuralImpliesBrute:
    v.agrees = brute_force && (!structural || *brute_force);
    break;
  case Relation::BruteImpliesStructural:
    v.agrees = brute_force && (!*brute_force || structural);
    break;
  case Relation::Check:
    v.agrees = structural;
    break;
  }
  return v;
}

std::vector<std::string> AuditReport::disagreements() const {
  std::vector<std::string> out;
  for (const auto& v : verdicts)
    if (!v.agrees)
      out.push_back(v.claim);
  return out;
}

const Verdict* AuditReport::find(const std::string& claim) const {
  for (const auto& v : verdicts)
    if (v.claim == claim)
      return &v;
  return nullptr;
}

std::vector<Verdict> centralizer_audits(const FiniteGroup& g) {
  if (find_induced_c4(power_graph(g)))
    throw GroupError(GroupErrorKind::PreconditionViolated,
                     "centralizer audits need a C4-free power graph; " + g.label() + " has one");
  return centralizer_checks(g);
}

std::vector<Verdict> center_audits(const FiniteGroup& g) {
  if (is_prime_power(g.order()))
    throw GroupError(GroupErrorKind::PreconditionViolated,
                     "center audits need a group that is not of prime-power order");
  if (find_induced_c4(power_graph(g)))
    throw GroupError(GroupErrorKind::PreconditionViolated,
                     "center audits need a C4-free power graph; " + g.label() + " has one");
  return center_checks(g);
}

AuditReport audit_group(const FiniteGroup& g) {
  const auto start = std::chrono::steady_clock::now();
  if (g.order() > kAuditHardCap)
    throw GroupError(GroupErrorKind::PreconditionViolated,
                     "audit limited to order " + std::to_string(kAuditHardCap));
  AuditReport rep;
  rep.group_label = g.label();
  rep.group_order = g.order();
  auto& out = rep.verdicts;

  const PowerGraph pg = power_graph(g);
  const auto claw = find_claw(pg);
  const auto k14 = find_star(pg, 4);
  const auto c4 = find_induced_c4(pg);
  const auto tri = find_triangle(pg);
  const bool cyclic_group = is_cyclic(g);
  const bool prime_power_order = is_prime_power(g.order());

  out.push_back(make_verdict("thm-clawfree", Relation::Iff, claw_free_structural(g), !claw,
                             to_witness(claw)));
  if (prime_power_order)
    out.push_back(make_verdict("lemma-clawfree-pgroup", Relation::Iff, cyclic_group, !claw,
                               to_witness(claw)));
  if (claw_free_structural(g) && g.order() <= kIndependenceBound) {
    const auto alpha = independence_number(pg);
    out.push_back(make_verdict("thm-clawfree-independence", Relation::Check,
                               alpha >= 1 && alpha <= 2, std::nullopt, {},
                               "alpha = " + std::to_string(alpha)));
  }

  out.push_back(make_verdict("thm-k14free", Relation::Iff, k14_free_structural(g), !k14,
                             to_witness(k14)));
  if (!k14 && !cyclic_group) {
    const auto mc = maximal_cyclic_subgroups(g);
    std::vector<std::uint64_t> gens;
    for (const auto& m : mc)
      gens.push_back(m.generator);
    out.push_back(make_verdict("lemma-three-maximal-cyclics", Relation::Check, mc.size() == 3,
                               std::nullopt, gens,
                               std::to_string(mc.size()) + " maximal cyclic subgroups"));
    bool cover = mc.size() == 3;
    if (cover) {
      const BitSet i01 = mc[0].members & mc[1].members;
      const BitSet i12 = mc[1].members & mc[2].members;
      const BitSet i02 = mc[0].members & mc[2].members;
      cover = i01 == i12 && i12 == i02;
      for (const auto& m : mc)
        cover = cover && m.order * 2 == g.order();
    }
    out.push_back(make_verdict("thm-three-cover", Relation::Check, cover, std::nullopt, gens,
                               "equal pairwise intersections, each of index 2"));
  }

  const auto pair_all = find_c4_pair(g, C4ScanMode::AllPairs);
  const auto pair_max = find_c4_pair(g, C4ScanMode::MaximalOnly);
  auto pair_witness = [](const std::optional<std::pair<Elem, Elem>>& p) {
    return p ? std::vector<std::uint64_t>{p->first, p->second} : std::vector<std::uint64_t>{};
  };
  out.push_back(make_verdict("lemma-c4", Relation::Iff, !pair_all, !c4,
                             c4 ? to_witness(c4) : pair_witness(pair_all)));
  out.push_back(make_verdict("lemma-c4-maximal-reduction", Relation::Iff, !pair_max, !pair_all,
                             pair_witness(pair_max)));
  out.push_back(make_verdict("cor-eppo-c4", Relation::StructuralImpliesBrute, eppo(g), !c4,
                             to_witness(c4)));
  const auto violator = find_nonconforming_element(g);
  out.push_back(make_verdict("thm-order-form", Relation::BruteImpliesStructural, !violator, !c4,
                             violator ? std::vector<std::uint64_t>{*violator}
                                      : std::vector<std::uint64_t>{}));
  if (is_nilpotent(g))
    out.push_back(make_verdict("thm-nilpotent-c4", Relation::Iff, nilpotent_c4_structural(g),
                               !c4, to_witness(c4)));
  out.push_back(make_verdict("remark-triangle-free", Relation::Iff, exponent(g) <= 2, !tri,
                             to_witness(tri)));

  for (auto p : factorize(g.order()).primes()) {
    const ElementSet h = hughes_subgroup(g, p);
    const Embedded he = restrict_to(g, h);
    const ElementSet hh = he.lift(g, hughes_subgroup(he.group, p));
    out.push_back(make_verdict("remark-hughes-idempotent/p=" + std::to_string(p), Relation::Check,
                               hh == h, std::nullopt, {},
                               "|H_p(G)| = " + std::to_string(h.size())));
  }

  if (!c4) {
    for (auto& v : centralizer_checks(g))
      out.push_back(std::move(v));
    if (!prime_power_order)
      for (auto& v : center_checks(g))
        out.push_back(std::move(v));
  }

  rep.elapsed = std::chrono::steady_clock::now() - start;
  return rep;
}

} // namespace powergraph
