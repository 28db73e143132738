#include <doctest.h>

#include "centauts/automorphism.hpp"
#include "centauts/catalog.hpp"
#include "centauts/error.hpp"
#include "centauts/families.hpp"
#include "oracles.hpp"

using namespace centauts;

namespace {

std::vector<std::vector<std::size_t>> tables(const AutSet& s) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& a : s) out.emplace_back(a.images.begin(), a.images.end());
  return out;
}

std::size_t count_bijective(const Group& g, const std::vector<CentralHom>& homs) {
  std::size_t n = 0;
  for (const auto& f : homs) n += is_bijective(alpha_map(g, f));
  return n;
}

}  // namespace

TEST_CASE("minimal generating sets") {
  CHECK(minimal_generating_set(cyclic_group(4)).size() == 1);
  CHECK(minimal_generating_set(catalog_group("D8")).size() == 2);
  CHECK(minimal_generating_set(catalog_group("C2xC2xC2")).size() == 3);
  CHECK(minimal_generating_set(catalog_group("D8xQ8")).size() == 4);
  CHECK_THROWS_AS(minimal_generating_set(catalog_group("S3")), Error);
  for (const auto& e : catalog()) {
    Group g = e.build();
    if (!p_group_prime(g)) continue;
    CAPTURE(e.name);
    auto gens = minimal_generating_set(g);
    CHECK(subgroup_generated(g, gens).size() == g.order());
    // |G/Phi| = p^d
    std::size_t pd = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) pd *= *p_group_prime(g);
    CHECK(pd * frattini_subgroup(g).size() == g.order());
  }
}

TEST_CASE("all_automorphisms: examples") {
  CHECK(all_automorphisms(cyclic_group(2)).size() == 1);
  CHECK(all_automorphisms(catalog_group("Q8")).size() == 24);
  CHECK(all_automorphisms(catalog_group("D8")).size() == 8);
  CHECK(all_automorphisms(catalog_group("C2^4")).size() == 20160);
  CHECK(all_automorphisms(catalog_group("S3")).size() == 6);
  CHECK(all_automorphisms(catalog_group("A4")).size() == 24);
  CHECK(all_automorphisms(Group::from_cayley_table({{0}})).size() == 1);
}

TEST_CASE("all_automorphisms agrees with the naive enumerator (order <= 32)") {
  for (const auto& e : catalog()) {
    if (e.order > 32) continue;
    CAPTURE(e.name);
    Group g = e.build();
    CHECK(tables(all_automorphisms(g)) == oracle::automorphisms(oracle::table_of(g)));
  }
}

TEST_CASE("budget exhaustion is an error, not a truncation") {
  try {
    all_automorphisms(catalog_group("C2^4"), SearchLimits{100});
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("AutSet is a group: closure, inverses, identity") {
  for (const char* name : {"D8", "Q8", "M16", "Heis3", "D8xC2", "C4:C4", "SD16"}) {
    CAPTURE(name);
    Group g = catalog_group(name);
    AutSet all = all_automorphisms(g);
    CHECK(all.contains(identity_automorphism(g)));
    for (const auto& a : all) {
      CHECK(all.contains(inverse(a)));
      for (const auto& b : all) CHECK(all.contains(compose(a, b)));
    }
  }
}

TEST_CASE("inner automorphisms") {
  CHECK(inner_automorphisms(cyclic_group(8)).size() == 1);
  CHECK(inner_automorphisms(catalog_group("D8")).size() == 4);
  CHECK(inner_automorphisms(catalog_group("Heis3")).size() == 9);
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    Group g = e.build();
    AutSet inn = inner_automorphisms(g);
    CHECK(inn.size() * center(g).size() == g.order());
    // Inn <= Autcent exactly when the class is at most 2
    if (auto p = p_group_prime(g)) {
      bool allCentral = true;
      for (const auto& a : inn) allCentral = allCentral && is_central_automorphism(g, a);
      CHECK(allCentral == (nilpotency_class(g) <= 2));
    }
  }
}

TEST_CASE("central automorphisms") {
  Group d8 = catalog_group("D8");
  CHECK(is_central_automorphism(d8, identity_automorphism(d8)));
  for (const auto& a : inner_automorphisms(d8)) CHECK(is_central_automorphism(d8, a));
  CHECK(autcent(d8) == inner_automorphisms(d8));
  Group q8 = catalog_group("Q8");
  AutSet acQ8 = autcent(q8);
  CHECK(acQ8.size() == 4);
  CHECK(acQ8 == inner_automorphisms(q8));
  // an automorphism of order 3 permutes i, j, k and is not central
  std::size_t order3 = 0;
  for (const auto& a : all_automorphisms(q8)) {
    if (a == identity_automorphism(q8) || compose(a, compose(a, a)) != identity_automorphism(q8)) continue;
    ++order3;
    CHECK_FALSE(is_central_automorphism(q8, a));
  }
  CHECK(order3 == 8);
  CHECK(autcent(catalog_group("D8xQ8")).size() == 256);
}

TEST_CASE("autcent's two paths agree on the catalog") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    Group g = e.build();
    AutSet all = all_automorphisms(g);
    AutSet inn = inner_automorphisms(g);
    // autcent throws InternalDisagreement if the filters differ
    AutSet ac = autcent(g, all, inn);
    std::vector<Automorphism> byCentralizer;
    for (const auto& a : all) {
      bool commutes = true;
      for (const auto& i : inn) commutes = commutes && compose(a, i) == compose(i, a);
      if (commutes) byCentralizer.push_back(a);
    }
    CHECK(ac == AutSet(byCentralizer));
  }
}

TEST_CASE("aut_fixing_quotient and aut_fixing_subgroup") {
  Group d8 = catalog_group("D8");
  AutSet all = all_automorphisms(d8);
  CHECK(aut_fixing_quotient(d8, whole_group(d8), all) == all);
  CHECK(aut_fixing_quotient(d8, trivial_subgroup(d8), all).size() == 1);
  CHECK(aut_fixing_quotient(d8, center(d8), all).size() == 4);
  CHECK(aut_fixing_subgroup(d8, trivial_subgroup(d8), all) == all);
  CHECK(aut_fixing_subgroup(d8, whole_group(d8), all).size() == 1);
  CHECK(aut_fixing_subgroup(d8, center(d8), all).size() == 8);
  for (const Subgroup& s : all_subgroups_of(d8, whole_group(d8))) {
    if (!is_normal(d8, s)) CHECK_THROWS_AS(aut_fixing_quotient(d8, s, all), Error);
  }
}

TEST_CASE("homomorphisms into central subgroups") {
  Group d8 = catalog_group("D8");
  auto triv = homs_to_central_subgroup(d8, trivial_subgroup(d8));
  REQUIRE(triv.size() == 1);
  CHECK(std::all_of(triv[0].values.begin(), triv[0].values.end(), [&](Element v) { return v == d8.identity(); }));
  CHECK(homs_to_central_subgroup(d8, center(d8)).size() == 4);
  Group q8 = catalog_group("Q8");
  CHECK(homs_to_central_subgroup(q8, center(q8)).size() == 4);
  // a non-central subgroup is refused
  for (const Subgroup& s : all_subgroups_of(d8, whole_group(d8)))
    if (!s.is_subset_of(center(d8))) CHECK_THROWS_AS(homs_to_central_subgroup(d8, s), Error);
}

TEST_CASE("homs_to_central_subgroup agrees with the naive hom enumerator") {
  for (const auto& e : catalog()) {
    if (e.order > 32) continue;
    Group g = e.build();
    CAPTURE(e.name);
    auto t = oracle::table_of(g);
    for (const Subgroup& m : all_subgroups_of(g, center(g))) {
      // homs G -> M found on M's own table, then mapped back into G
      Group mg = induced_group(g, m);
      std::vector<std::vector<std::size_t>> expected;
      oracle::for_each_hom(t, oracle::table_of(mg), [&](const std::vector<std::size_t>& f) {
        std::vector<std::size_t> v;
        for (auto x : f) v.push_back(m.members()[x]);
        expected.push_back(std::move(v));
      });
      std::sort(expected.begin(), expected.end());
      std::vector<std::vector<std::size_t>> got;
      for (const auto& f : homs_to_central_subgroup(g, m)) got.emplace_back(f.values.begin(), f.values.end());
      CHECK(got == expected);
    }
  }
}

TEST_CASE("alpha_f: criterion matches bijectivity, round trip with f_alpha (order <= 32)") {
  Group c2 = cyclic_group(2);
  auto homs = homs_to_central_subgroup(c2, whole_group(c2));
  REQUIRE(homs.size() == 2);
  for (const auto& f : homs) {
    bool zero = f.values[1] == c2.identity();
    CHECK(alpha_criterion(c2, f) == zero);
    CHECK(alpha_from_f(c2, f).has_value() == zero);
    if (zero) CHECK(*alpha_from_f(c2, f) == identity_automorphism(c2));
  }

  Group d8 = catalog_group("D8");
  auto dh = homs_to_central_subgroup(d8, center(d8));
  CHECK(count_bijective(d8, dh) == 4);

  std::size_t pairs = 0;
  for (const auto& e : catalog()) {
    if (e.order > 32) continue;
    Group g = e.build();
    CAPTURE(e.name);
    AutSet all = all_automorphisms(g);
    for (const Subgroup& m : all_subgroups_of(g, center(g))) {
      auto fs = homs_to_central_subgroup(g, m);
      std::vector<Automorphism> images;
      for (const auto& f : fs) {
        ++pairs;
        const bool bij = is_bijective(alpha_map(g, f));
        CHECK(alpha_criterion(g, f) == bij);
        auto a = alpha_from_f(g, f);
        CHECK(a.has_value() == bij);
        if (!a) continue;
        CHECK(all.contains(*a));
        CHECK(f_from_alpha(g, *a, m) == f);
        images.push_back(*a);
      }
      // injective
      AutSet distinct(images);
      CHECK(distinct.size() == images.size());
      // every element of Aut^M comes from some f
      for (const auto& a : aut_fixing_quotient(g, m, all)) {
        auto f = f_from_alpha(g, a, m);
        auto back = alpha_from_f(g, f);
        REQUIRE(back.has_value());
        CHECK(*back == a);
      }
    }
  }
  CHECK(pairs > 1000);
}

TEST_CASE("f_from_alpha refuses automorphisms that leave M") {
  Group q8 = catalog_group("Q8");
  for (const auto& a : all_automorphisms(q8)) {
    if (is_central_automorphism(q8, a)) continue;
    CHECK_THROWS_AS(f_from_alpha(q8, a, center(q8)), Error);
    break;
  }
}

TEST_CASE("lemma0 reports: examples") {
  Group d8 = catalog_group("D8");
  Lemma0Report r = verify_lemma0(d8, center(d8), all_automorphisms(d8));
  CHECK(r.hypothesisHolds);
  CHECK(r.homCount == 4);
  CHECK(r.autMCount == 4);
  CHECK(r.bijectionHolds);
  CHECK(r.isomorphismHolds);
  CHECK(r.holds());

  Group q8 = catalog_group("Q8");
  Lemma0Report rq = verify_lemma0(q8, center(q8), all_automorphisms(q8));
  CHECK(rq.hypothesisHolds);
  CHECK(rq.homCount == 4);
  CHECK(rq.autMCount == 4);

  Group e = catalog_group("C2xC2");
  Lemma0Report re = verify_lemma0(e, whole_group(e), all_automorphisms(e));
  CHECK_FALSE(re.hypothesisHolds);
  CHECK(re.holds());
  // Hom(G, G) has 16 maps but only 6 automorphisms
  CHECK(re.homCount == 16);
  CHECK(re.autMCount == 6);
}

TEST_CASE("lemma0a reports: examples") {
  for (auto [name, order] : {std::pair{"D8", 4}, {"Q8", 4}, {"Heis3", 9}, {"D8xQ8", 256}}) {
    CAPTURE(name);
    Group g = catalog_group(name);
    Lemma0aReport r = verify_lemma0a(g, autcent(g));
    CHECK(r.autcentOrder == static_cast<std::size_t>(order));
    CHECK(r.formula == order);
    CHECK(r.holds());
  }
  try {
    Group g = catalog_group("D8xC2");
    verify_lemma0a(g, autcent(g));
    FAIL("expected NotPurelyNonabelian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPurelyNonabelian);
  }
}

TEST_CASE("purely non-abelian detection") {
  CHECK_FALSE(is_purely_nonabelian(cyclic_group(4)));
  CHECK_FALSE(is_purely_nonabelian(catalog_group("C2xC2")));
  CHECK(is_purely_nonabelian(catalog_group("D8")));
  CHECK(is_purely_nonabelian(catalog_group("Q8")));
  CHECK_FALSE(is_purely_nonabelian(catalog_group("D8xC2")));
  CHECK_FALSE(is_purely_nonabelian(catalog_group("Q8xC4")));
  CHECK(is_purely_nonabelian(catalog_group("D8xQ8")));
  CHECK(is_purely_nonabelian(catalog_group("C4oD8")));
  CHECK(is_purely_nonabelian(catalog_group("M16")));
  CHECK_FALSE(is_purely_nonabelian(catalog_group("Heis3xC3")));

  Group g = catalog_group("D8xC2xC2");
  auto d = find_abelian_direct_factor(g);
  REQUIRE(d.has_value());
  CHECK(d->a.size() == 4);
  CHECK(d->h.size() == 8);
  CHECK(intersection(g, d->h, d->a).is_trivial());
}

TEST_CASE("direct factor search agrees with a search over all subgroup pairs (order <= 32)") {
  for (const auto& e : catalog()) {
    if (e.order > 32 || e.order == 1) continue;
    Group g = e.build();
    CAPTURE(e.name);
    auto subs = all_subgroups_of(g, whole_group(g));
    bool found = false;
    for (const auto& a : subs) {
      if (a.is_trivial() || !is_abelian(g, a) || !is_normal(g, a)) continue;
      for (const auto& h : subs) {
        if (h.size() * a.size() != g.order() || !is_normal(g, h)) continue;
        if (!intersection(g, h, a).is_trivial()) continue;
        bool commute = true;
        for (Element x : h.members())
          for (Element y : a.members()) commute = commute && g.mul(x, y) == g.mul(y, x);
        found = found || commute;
      }
    }
    CHECK(is_purely_nonabelian(g) == !found);
  }
}
