#include "powergraph/catalog.hpp"
#include "powergraph/classify.hpp"
#include "powergraph/subgroups.hpp"

#include <doctest.h>

#include <set>

using namespace powergraph;

namespace {

FiniteGroup G(const char* d) { return build_group(parse_descriptor(d)); }

bool all_agree(const AuditReport& r) { return r.disagreements().empty(); }

} // namespace

TEST_CASE("claw-free shape") {
  CHECK(claw_free_structural(G("Z9")));
  CHECK(claw_free_structural(G("Z12")));
  CHECK(claw_free_structural(G("Z1")));
  CHECK_FALSE(claw_free_structural(G("Z36")));
  CHECK_FALSE(claw_free_structural(G("Z30")));
  CHECK_FALSE(claw_free_structural(G("Q8")));
}

TEST_CASE("K1,4-free shape") {
  CHECK(k14_free_structural(G("Q8")));
  CHECK(k14_free_structural(G("Z30")));
  CHECK(k14_free_structural(G("Z2xZ2")));
  CHECK(k14_free_structural(G("E4")));
  CHECK(k14_free_structural(G("Z72")));
  CHECK_FALSE(k14_free_structural(G("Z8xZ2")));
  CHECK_FALSE(k14_free_structural(G("D8")));
  CHECK_FALSE(k14_free_structural(G("Z216")));
  CHECK_FALSE(k14_free_structural(G("Z60")));
}

TEST_CASE("element orders") {
  CHECK(eppo(G("S4")));
  CHECK_FALSE(eppo(G("Z6")));
  CHECK(eppo(G("Z7:Z3(2)")));
  const FiniteGroup z60 = G("Z60");
  const auto v = find_nonconforming_element(z60);
  REQUIRE(v);
  CHECK(z60.order_of(*v) == 60);
  CHECK_FALSE(find_nonconforming_element(G("Z12")));
  CHECK_FALSE(find_nonconforming_element(G("M27")));
  CHECK_FALSE(find_nonconforming_element(G("Q16")));
}

TEST_CASE("nilpotent 4-cycle classification") {
  CHECK(nilpotent_c4_structural(G("Z6xZ2")));
  CHECK_FALSE(nilpotent_c4_structural(G("Z4xZ2xZ3")));
  CHECK(nilpotent_c4_structural(G("Z30")));
  CHECK(nilpotent_c4_structural(G("Q16")));
  CHECK(nilpotent_c4_structural(G("Q8xZ9")) == false);
  CHECK_FALSE(nilpotent_c4_structural(G("Z210")));
  CHECK_THROWS_AS(nilpotent_c4_structural(G("S3")), GroupError);
}

TEST_CASE("verdict relations") {
  CHECK(make_verdict("a", Relation::Iff, true, true).agrees);
  CHECK_FALSE(make_verdict("a", Relation::Iff, true, false).agrees);
  CHECK(make_verdict("a", Relation::StructuralImpliesBrute, false, false).agrees);
  CHECK_FALSE(make_verdict("a", Relation::StructuralImpliesBrute, true, false).agrees);
  CHECK(make_verdict("a", Relation::BruteImpliesStructural, false, false).agrees);
  CHECK_FALSE(make_verdict("a", Relation::BruteImpliesStructural, false, true).agrees);
  CHECK(make_verdict("a", Relation::Check, true, std::nullopt).agrees);
  CHECK_FALSE(make_verdict("a", Relation::Check, false, std::nullopt).agrees);
  CHECK_FALSE(make_verdict("a", Relation::Iff, true, std::nullopt).agrees);
  CHECK(std::string(to_string(Relation::StructuralImpliesBrute)) == "structural-implies-brute");
}

TEST_CASE("centralizer audits") {
  const auto z30 = centralizer_audits(G("Z30"));
  const auto* pqr = [&]() -> const Verdict* {
    for (const auto& v : z30)
      if (v.claim.rfind("audit-centralizer-pqr", 0) == 0)
        return &v;
    return nullptr;
  }();
  REQUIRE(pqr);
  CHECK(pqr->agrees);

  const FiniteGroup z12 = G("Z12");
  std::size_t pmq = 0;
  for (const auto& v : centralizer_audits(z12)) {
    CHECK(v.agrees);
    pmq += v.claim.rfind("audit-centralizer-pmq", 0) == 0;
  }
  CHECK(pmq == 4);
  CHECK(centralizer_audits(G("S3")).empty());
  CHECK_THROWS_AS(centralizer_audits(G("Z60")), GroupError);
}

TEST_CASE("centre audits") {
  const auto z30 = center_audits(G("Z30"));
  REQUIRE(z30.size() == 1);
  CHECK(z30[0].claim == "audit-center-pqr");
  CHECK(z30[0].agrees);
  CHECK(center_audits(G("S3")).empty());
  CHECK(center_audits(G("Z7:Z3(2)")).empty());
  const auto z12 = center_audits(G("Z12"));
  REQUIRE_FALSE(z12.empty());
  for (const auto& v : z12)
    CHECK(v.agrees);
  // Non-catalog groups reach the p-group centre branches.
  for (const char* d : {"Z4xD6", "Z2xZ2xD6", "Z8xD6", "Z4xA4", "Z9xZ7:Z3(2)"}) {
    const std::string name = d;
    CAPTURE(name);
    const auto vs = center_audits(G(d));
    REQUIRE_FALSE(vs.empty());
    for (const auto& v : vs)
      CHECK(v.agrees);
  }
  CHECK_THROWS_AS(center_audits(G("Q8")), GroupError);
  CHECK_THROWS_AS(center_audits(G("Z60")), GroupError);
}

TEST_CASE("audit examples") {
  const AuditReport q8 = audit_group(G("Q8"));
  CHECK(all_agree(q8));
  REQUIRE(q8.find("lemma-three-maximal-cyclics"));
  CHECK(q8.find("lemma-three-maximal-cyclics")->structural);
  CHECK(q8.find("thm-three-cover")->structural);
  CHECK(q8.find("thm-k14free")->brute_force == true);

  const AuditReport z36 = audit_group(G("Z36"));
  CHECK(all_agree(z36));
  const Verdict* claw = z36.find("thm-clawfree");
  REQUIRE(claw);
  CHECK_FALSE(claw->structural);
  CHECK(claw->brute_force == false);
  CHECK(claw->witness.size() == 4);

  const AuditReport z6 = audit_group(G("Z6"));
  CHECK(z6.find("cor-eppo-c4")->structural == false);
  CHECK(z6.find("cor-eppo-c4")->brute_force == true);
  CHECK(z6.find("cor-eppo-c4")->agrees);

  for (const char* d : {"Z1", "Z60", "S4", "A5", "Z4xD6", "Q8xZ3", "Z2xS4", "SD32"}) {
    const std::string name = d;
    CAPTURE(name);
    const AuditReport r = audit_group(G(d));
    CHECK(all_agree(r));
    std::set<std::string> claims;
    for (const auto& v : r.verdicts)
      CHECK(claims.insert(v.claim).second);
  }
  CHECK_THROWS_AS(audit_group(G("Z501")), GroupError);
}
