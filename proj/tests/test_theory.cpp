#include <doctest.h>

#include "centauts/catalog.hpp"
#include "centauts/error.hpp"
#include "centauts/families.hpp"
#include "centauts/theory.hpp"

using namespace centauts;

namespace {

const CheckResult& find_check(const TheoremReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.check == name) return c;
  FAIL("missing check " << name);
  return r.checks.front();
}

}  // namespace

TEST_CASE("theorem_condition: examples") {
  ConditionSide d8 = theorem_condition(catalog_group("D8"));
  CHECK(d8.rEqS);
  CHECK(d8.residualIso);
  CHECK(d8.expEq);
  CHECK(d8.all);
  ConditionSide m16 = theorem_condition(catalog_group("M16"));
  CHECK_FALSE(m16.expEq);
  CHECK_FALSE(m16.all);
  ConditionSide dc = theorem_condition(catalog_group("D8xC2"));
  CHECK_FALSE(dc.rEqS);
  CHECK_FALSE(dc.all);
  CHECK_THROWS_AS(theorem_condition(catalog_group("D16")), Error);
  CHECK_THROWS_AS(theorem_condition(catalog_group("C4")), Error);
}

TEST_CASE("verify_theorem: examples") {
  GroupContext d8(catalog_group("D8"));
  TheoremCheck a = verify_theorem(d8);
  CHECK(a.condition.all);
  CHECK(a.oracle.autcentEqualsAutZZ);
  CHECK(a.oracle.autcentOrder == 4);
  CHECK(a.oracle.autZZOrder == 4);
  CHECK(a.agree);
  CHECK_FALSE(a.separating.has_value());

  GroupContext dq(catalog_group("D8xQ8"));
  TheoremCheck b = verify_theorem(dq);
  CHECK(b.invariants.r() == 4);
  CHECK(b.invariants.s() == 4);
  CHECK(b.condition.all);
  CHECK(b.oracle.autcentEqualsAutZZ);
  CHECK(b.agree);

  GroupContext dc(catalog_group("D8xC2"));
  TheoremCheck c = verify_theorem(dc);
  CHECK_FALSE(c.condition.all);
  CHECK_FALSE(c.oracle.autcentEqualsAutZZ);
  CHECK(c.oracle.autZZOrder < c.oracle.autcentOrder);
  CHECK(c.oracle.autZZSubsetAutcent);
  REQUIRE(c.separating.has_value());
  CHECK(dc.autcent().contains(*c.separating));
  CHECK_FALSE(dc.aut_zz().contains(*c.separating));
  CHECK(c.agree);
}

TEST_CASE("Aut^Z_Z is contained in Autcent on every p-group of the catalog") {
  for (const auto& e : catalog()) {
    GroupContext ctx(e.build());
    if (!ctx.prime()) continue;
    CAPTURE(e.name);
    CHECK(ctx.aut_zz().is_subset_of(ctx.autcent()));
  }
}

TEST_CASE("prop1: examples") {
  GroupContext d8(catalog_group("D8"));
  auto entries = verify_proposition1(d8);
  REQUIRE(entries.size() == 2);
  // sorted by size: trivial first, then Z
  CHECK_FALSE(entries[0].lhs);
  CHECK_FALSE(entries[0].rhs);
  CHECK(entries[1].lhs);
  CHECK(entries[1].rhs);
  for (const auto& e : entries) CHECK(e.holds());

  GroupContext dq(catalog_group("D8xQ8"));
  for (const auto& e : verify_proposition1(dq)) {
    if (e.m != dq.center()) continue;
    CHECK_FALSE(e.lhs);
    CHECK_FALSE(e.rhs);
    CHECK(e.autMZOrder == 256);
    CHECK(e.homFormula == 256);
    CHECK(dq.inn().size() == 16);
  }
  GroupContext ab(catalog_group("C4"));
  CHECK_THROWS_AS(verify_proposition1(ab), Error);
}

TEST_CASE("cor1 and attar: examples") {
  for (const char* name : {"D8", "Q8", "Heis3"}) {
    CAPTURE(name);
    GroupContext ctx(catalog_group(name));
    EquivalenceCheck c = verify_corollary1(ctx);
    CHECK(c.lhs);
    CHECK(c.rhs);
  }
  GroupContext dq(catalog_group("D8xQ8"));
  EquivalenceCheck c = verify_corollary1(dq);
  CHECK_FALSE(c.lhs);
  CHECK_FALSE(c.rhs);
  CHECK(dq.autcent().size() == 256);
  CHECK(dq.inn().size() == 16);

  GroupContext c4(catalog_group("C4"));
  EquivalenceCheck a = verify_attar(c4);
  CHECK(a.lhs);
  CHECK(a.rhs);
  GroupContext d8(catalog_group("D8"));
  CHECK(verify_attar(d8).lhs);
  CHECK(verify_attar(d8).rhs);
  EquivalenceCheck adq = verify_attar(dq);
  CHECK_FALSE(adq.lhs);
  CHECK_FALSE(adq.rhs);
  CHECK(dq.aut_zz().size() == 256);
}

TEST_CASE("lemma3: purely non-abelian groups and the witness construction") {
  GroupContext d8(catalog_group("D8"));
  Lemma3Check a = verify_lemma3(d8);
  CHECK(a.autcentEqualsAutZZ);
  CHECK(a.purelyNonabelian);
  CHECK_FALSE(a.witnessRequired);
  CHECK(a.holds());

  for (const char* name : {"D8xC2", "Q8xC4", "Heis3xC3", "D8xC2xC2", "M16xC4"}) {
    CAPTURE(name);
    GroupContext ctx(catalog_group(name));
    Lemma3Check c = verify_lemma3(ctx);
    CHECK_FALSE(c.purelyNonabelian);
    CHECK_FALSE(c.autcentEqualsAutZZ);
    REQUIRE(c.witness.has_value());
    const Lemma3Witness& w = *c.witness;
    CHECK(ctx.group().element_order(w.z) == *ctx.prime());
    CHECK(ctx.frattini().contains(w.z));
    CHECK(w.isAutomorphism);
    CHECK(w.isCentral);
    CHECK(w.movesCentral);
    CHECK(ctx.center().contains(w.movedCentral));
    CHECK(w.alpha(w.movedCentral) != w.movedCentral);
    CHECK(ctx.autcent().contains(w.alpha));
    CHECK_FALSE(ctx.aut_zz().contains(w.alpha));
    CHECK(c.holds());
  }
}

TEST_CASE("lemma3 on abelian groups: C2 is a counterexample") {
  // For abelian G, Autcent = Aut(G) and Aut^Z_Z = {id}; they agree only when
  // |Aut(G)| = 1, i.e. |G| <= 2, and C2 is its own abelian direct factor.
  GroupContext c2(cyclic_group(2));
  Lemma3Check c = verify_lemma3(c2);
  CHECK(c.autcentEqualsAutZZ);
  CHECK_FALSE(c.purelyNonabelian);
  CHECK_FALSE(c.witnessRequired);
  CHECK_FALSE(c.holds());
  for (const auto& e : catalog()) {
    GroupContext ctx(e.build());
    if (!ctx.prime() || !ctx.abelian()) continue;
    CAPTURE(e.name);
    CHECK((ctx.autcent() == ctx.aut_zz()) == (e.order <= 2));
    CHECK(verify_lemma3(ctx).holds() == (e.order != 2));
  }
  TheoremReport r = analyze_group("C2", cyclic_group(2), {"lemma3"});
  CHECK(find_check(r, "lemma3").status == CheckStatus::Fail);
  CHECK(r.verdict == Verdict::Counterexample);
  TheoremReport c4 = analyze_group("C4", catalog_group("C4"), {"lemma3"});
  CHECK(find_check(c4, "lemma3").status == CheckStatus::Pass);
  GroupContext s3(catalog_group("S3"));
  CHECK_THROWS_AS(verify_lemma3(s3), Error);
}

TEST_CASE("lemma4 sweeps") {
  Lemma4Sweep s2 = verify_lemma4_sweep(2, 3);
  CHECK(s2.holds());
  CHECK(s2.triples > 0);
  Lemma4Sweep s3 = verify_lemma4_sweep(3, 3);
  CHECK(s3.holds());
  CHECK(s3.triples == s2.triples);  // same partition structure
  // triple count at p=2, e=3: pairs (A,B) with equal length, B >= A, B != A,
  // times the 7 types C of order <= 8 ([] [1] [2] [1,1] [3] [2,1] [1,1,1])
  // pairs: ([1],[2]) ([1],[3]) ([2],[3]) ([1,1],[2,1]) -> 4
  CHECK(s2.triples == 4 * 7);
  CHECK(s2.strictCount > 0);
  CHECK(s2.strictCount < s2.triples);
}

TEST_CASE("analyze_group: applicability and verdicts") {
  TheoremReport d8 = analyze_group("D8", catalog_group("D8"), known_checks());
  CHECK(d8.verdict == Verdict::Agree);
  CHECK(d8.checks.size() == known_checks().size());
  CHECK(d8.condition.has_value());
  CHECK(d8.oracle.has_value());
  CHECK(find_check(d8, "theorem").status == CheckStatus::Pass);
  CHECK(find_check(d8, "lemma0a").status == CheckStatus::Pass);
  CHECK(find_check(d8, "lemma4").status == CheckStatus::NotApplicable);  // G/Z and G/gamma_2 agree

  TheoremReport s3 = analyze_group("S3", catalog_group("S3"), known_checks());
  for (const auto& c : s3.checks) {
    CAPTURE(c.check);
    CHECK((c.status == CheckStatus::NotApplicable || c.check == "lemma0"));
  }
  CHECK(s3.verdict == Verdict::Agree);

  TheoremReport d16 = analyze_group("D16", catalog_group("D16"), {"theorem", "cor1", "attar"});
  CHECK(find_check(d16, "theorem").status == CheckStatus::NotApplicable);
  CHECK(find_check(d16, "cor1").status == CheckStatus::Pass);
  CHECK(find_check(d16, "attar").status == CheckStatus::Pass);

  TheoremReport m16 = analyze_group("M16", catalog_group("M16"), {"lemma4"});
  CHECK(find_check(m16, "lemma4").status == CheckStatus::Pass);  // A = [1,1], B = [2,1], C = [2]
  CHECK(find_check(m16, "lemma4").data["strict"] == true);
  TheoremReport c8c4 = analyze_group("C8:C4", catalog_group("C8:C4"), {"lemma4"});
  CHECK(find_check(c8c4, "lemma4").status == CheckStatus::Pass);

  CHECK_THROWS_AS(analyze_group("x", catalog_group("D8"), {"nonsense"}), Error);
}

TEST_CASE("analyze_group: budget errors are captured, not thrown") {
  AnalysisOptions tight;
  tight.limits.budget = 10;
  TheoremReport r = analyze_group("Q8xQ8", catalog_group("Q8xQ8"), {"theorem"}, tight);
  CHECK(r.verdict == Verdict::Error);
  CHECK(find_check(r, "theorem").status == CheckStatus::Error);
  CHECK(find_check(r, "theorem").data["errorKind"] == "BudgetExceeded");
}

TEST_CASE("catalog contents") {
  CHECK(catalog_group("Q8").order() == 8);
  Group h = catalog_group("Heis3");
  CHECK(h.order() == 27);
  CHECK(nilpotency_class(h) == 2);
  CHECK(exponent(h) == 3);
  CHECK_THROWS_AS(catalog_group("nope"), Error);
  std::size_t classTwo = 0;
  for (const auto& e : catalog()) {
    Group g = e.build();
    CHECK(g.order() == e.order);
    auto p = p_group_prime(g);
    if (p && nilpotency_class(g) == 2 && ((*p == 2 && g.order() <= 64) || (*p == 3 && g.order() <= 81))) ++classTwo;
  }
  CHECK(classTwo >= 25);
}
