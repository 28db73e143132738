#include "centauts/theory.hpp"

#include <algorithm>
#include <limits>

#include "centauts/error.hpp"

namespace centauts {

using nlohmann::json;

// --- GroupContext -----------------------------------------------------------

GroupContext::GroupContext(Group g, SearchLimits limits, std::size_t cap)
    : group_(std::move(g)), limits_(limits), cap_(cap), abelian_(group_.is_abelian()) {}

std::optional<int> GroupContext::nil_class() {
  if (!class_) {
    try {
      class_ = std::optional<int>(nilpotency_class(group_));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotNilpotent) throw;
      class_ = std::optional<int>();
    }
  }
  return *class_;
}

const Subgroup& GroupContext::center() {
  if (!center_) center_ = centauts::center(group_);
  return *center_;
}

const Subgroup& GroupContext::gamma2() {
  if (!gamma2_) gamma2_ = commutator_subgroup(group_);
  return *gamma2_;
}

const Subgroup& GroupContext::frattini() {
  if (!frattini_) frattini_ = frattini_subgroup(group_);
  return *frattini_;
}

const std::vector<Subgroup>& GroupContext::central_subgroups() {
  if (!centralSubgroups_) centralSubgroups_ = all_subgroups_of(group_, center(), cap_);
  return *centralSubgroups_;
}

const AutSet& GroupContext::aut() {
  if (!aut_) aut_ = all_automorphisms(group_, limits_);
  return *aut_;
}

const AutSet& GroupContext::inn() {
  if (!inn_) inn_ = inner_automorphisms(group_);
  return *inn_;
}

const AutSet& GroupContext::autcent() {
  if (!autcent_) autcent_ = centauts::autcent(group_, aut(), inn());
  return *autcent_;
}

const AutSet& GroupContext::aut_zz() {
  if (!autZZ_) {
    autZZ_ = aut_fixing_subgroup(group_, center(), aut_fixing_quotient(group_, center(), aut()));
  }
  return *autZZ_;
}

const std::optional<DirectDecomposition>& GroupContext::abelian_factor() {
  if (!factor_) factor_ = find_abelian_direct_factor(group_, cap_);
  return *factor_;
}

namespace {

void require_p_group(GroupContext& ctx) {
  if (!ctx.prime()) {
    throw Error(ErrorKind::NotPGroup, "order " + std::to_string(ctx.group().order()) +
                                          " is not a prime power");
  }
}

void require_nonabelian_p_group(GroupContext& ctx) {
  require_p_group(ctx);
  if (ctx.abelian()) throw Error(ErrorKind::HypothesisViolated, "group is abelian");
}

json big_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max()) return v.convert_to<std::int64_t>();
  return v.str();
}

json type_json(const AbelianType& t) { return t.exps(); }

json members_json(const Subgroup& s) {
  return std::vector<Element>(s.members().begin(), s.members().end());
}

}  // namespace

// --- the class-2 characterization ------------------------------------------

ConditionSide theorem_condition(const ClassTwoInvariants& inv) {
  ConditionSide c;
  c.rEqS = inv.r() == inv.s();
  c.residualIso = inv.zResidual == inv.abResidual;
  c.expEq = inv.expZ == inv.expGamma2;
  c.all = c.rEqS && c.residualIso && c.expEq;
  return c;
}

ConditionSide theorem_condition(const Group& g) { return theorem_condition(class_two_invariants(g)); }

TheoremCheck verify_theorem(GroupContext& ctx) {
  TheoremCheck out;
  out.invariants = class_two_invariants(ctx.group());
  out.condition = theorem_condition(out.invariants);
  const AutSet& ac = ctx.autcent();
  const AutSet& zz = ctx.aut_zz();
  out.oracle.autcentOrder = ac.size();
  out.oracle.autZZOrder = zz.size();
  out.oracle.innOrder = ctx.inn().size();
  out.oracle.autcentEqualsAutZZ = ac == zz;
  out.oracle.autcentEqualsInn = ac == ctx.inn();
  out.oracle.autZZSubsetAutcent = zz.is_subset_of(ac);
  out.separating = first_difference(ac, zz);
  out.agree = out.condition.all == out.oracle.autcentEqualsAutZZ;
  return out;
}

// --- inner-automorphism characterizations ------------------------------------

std::vector<Prop1Entry> verify_proposition1(GroupContext& ctx) {
  require_nonabelian_p_group(ctx);
  const Group& g = ctx.group();
  const unsigned p = *ctx.prime();
  const auto cls = ctx.nil_class();
  const Group gz = quotient(g, ctx.center()).target;
  const AbelianType gzAb = quotient_type(gz, commutator_subgroup(gz), p);

  std::vector<Prop1Entry> out;
  for (const Subgroup& m : ctx.central_subgroups()) {
    Prop1Entry e;
    e.m = m;
    const AutSet autMZ = aut_fixing_subgroup(g, ctx.center(), aut_fixing_quotient(g, m, ctx.aut()));
    e.lhs = autMZ == ctx.inn();
    e.rhs = cls == 2 && ctx.gamma2().is_subset_of(m) && is_cyclic(g, m);
    e.autMZOrder = autMZ.size();
    e.homFormula = hom_order(gzAb, subgroup_type(g, m, p));
    e.countReconciled = e.homFormula == e.autMZOrder;
    out.push_back(std::move(e));
  }
  return out;
}

EquivalenceCheck verify_corollary1(GroupContext& ctx) {
  require_nonabelian_p_group(ctx);
  EquivalenceCheck c;
  c.lhs = ctx.autcent() == ctx.inn();
  c.rhs = ctx.center() == ctx.gamma2() && is_cyclic(ctx.group(), ctx.center());
  return c;
}

EquivalenceCheck verify_attar(GroupContext& ctx) {
  require_p_group(ctx);
  EquivalenceCheck c;
  c.lhs = ctx.aut_zz() == ctx.inn();
  c.rhs = ctx.abelian() || (ctx.nil_class() == 2 && is_cyclic(ctx.group(), ctx.center()));
  return c;
}

// --- purely non-abelian groups ---------------------------------------------

std::optional<Lemma3Witness> lemma3_witness(GroupContext& ctx) {
  require_nonabelian_p_group(ctx);
  const auto& factor = ctx.abelian_factor();
  if (!factor) return std::nullopt;
  const Group& g = ctx.group();
  const unsigned p = *ctx.prime();

  Lemma3Witness w;
  w.decomposition = *factor;
  const Subgroup& h = factor->h;
  const Subgroup& a = factor->a;

  // z: least nontrivial element of order p in Z(H) and Phi(G)
  std::optional<Element> z;
  for (Element x : h.members()) {
    if (g.element_order(x) != p || !ctx.frattini().contains(x)) continue;
    bool centralInH = std::all_of(h.members().begin(), h.members().end(),
                                  [&](Element y) { return g.mul(x, y) == g.mul(y, x); });
    if (centralInH) {
      z = x;
      break;
    }
  }
  if (!z) return std::nullopt;
  w.z = *z;

  auto lift = [&](const Subgroup& s) {
    std::vector<Element> gens;
    for (Element i : minimal_generating_set(induced_group(g, s))) gens.push_back(s.members()[i]);
    return gens;
  };
  w.generators = lift(h);
  const std::vector<Element> aGens = lift(a);
  w.generators.insert(w.generators.end(), aGens.begin(), aGens.end());

  std::vector<Element> images;
  for (Element x : w.generators) images.push_back(g.mul(x, w.z));
  auto alpha = automorphism_from_generator_images(g, w.generators, images);
  w.isAutomorphism = alpha.has_value();
  if (alpha) {
    w.alpha = std::move(*alpha);
    w.isCentral = is_central_automorphism(g, w.alpha);
    for (Element y : aGens) {
      if (w.alpha(y) != y && ctx.center().contains(y)) {
        w.movedCentral = y;
        w.movesCentral = true;
        break;
      }
    }
    w.separates = ctx.autcent().contains(w.alpha) && !ctx.aut_zz().contains(w.alpha);
  }
  return w;
}

Lemma3Check verify_lemma3(GroupContext& ctx) {
  require_p_group(ctx);
  Lemma3Check c;
  c.autcentEqualsAutZZ = ctx.autcent() == ctx.aut_zz();
  c.purelyNonabelian = ctx.purely_nonabelian();
  c.witnessRequired = !c.purelyNonabelian && !ctx.abelian();
  if (c.witnessRequired) c.witness = lemma3_witness(ctx);
  return c;
}

// --- Hom-order comparison ---------------------------------------------------

Lemma4Sweep verify_lemma4_sweep(unsigned p, std::size_t maxExp) {
  Lemma4Sweep sweep;
  sweep.p = p;
  sweep.maxExp = maxExp;
  const auto types = enumerate_types(p, maxExp);
  for (const auto& a : types) {
    for (const auto& b : types) {
      if (a.rank() != b.rank() || a.is_trivial()) continue;
      bool dominated = true, someStrict = false;
      for (std::size_t j = 0; j < a.rank(); ++j) {
        dominated = dominated && b.exps()[j] >= a.exps()[j];
        someStrict = someStrict || b.exps()[j] > a.exps()[j];
      }
      if (!dominated || !someStrict) continue;
      for (const auto& c : types) {
        Lemma4Comparison r = lemma4_compare(a, b, c);
        ++sweep.triples;
        if (r.strict) ++sweep.strictCount;
        if (!r.equivalenceHolds) sweep.failures.push_back({a, b, c, r});
      }
    }
  }
  return sweep;
}

// --- per-group reports ------------------------------------------------------

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not-applicable";
    case CheckStatus::Error: return "error";
  }
  return "unknown";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Agree: return "agree";
    case Verdict::Counterexample: return "COUNTEREXAMPLE";
    case Verdict::Error: return "error";
  }
  return "unknown";
}

namespace {

CheckStatus status_of(bool holds) { return holds ? CheckStatus::Pass : CheckStatus::Fail; }

CheckResult not_applicable(std::string name, std::string why) {
  return CheckResult{std::move(name), CheckStatus::NotApplicable, std::move(why), json::object()};
}

json condition_json(const ConditionSide& c) {
  return {{"rEqS", c.rEqS}, {"residualIso", c.residualIso}, {"expEq", c.expEq}, {"all", c.all}};
}

json oracle_json(const OracleSide& o) {
  return {{"autcentOrder", o.autcentOrder},
          {"autZZOrder", o.autZZOrder},
          {"innOrder", o.innOrder},
          {"autcentEqualsAutZZ", o.autcentEqualsAutZZ},
          {"autcentEqualsInn", o.autcentEqualsInn},
          {"autZZSubsetAutcent", o.autZZSubsetAutcent}};
}

json invariants_json(const ClassTwoInvariants& inv) {
  return {{"zType", type_json(inv.zType)},         {"abType", type_json(inv.abType)},
          {"r", inv.r()},                          {"s", inv.s()},
          {"c", inv.c},                            {"k", inv.k},
          {"mBarType", type_json(inv.mBarType)},   {"nBarType", type_json(inv.nBarType)},
          {"zResidual", type_json(inv.zResidual)}, {"abResidual", type_json(inv.abResidual)},
          {"expZ", inv.expZ},                      {"expGamma2", inv.expGamma2}};
}

CheckResult run_theorem(GroupContext& ctx, TheoremReport& report) {
  if (!ctx.prime() || ctx.nil_class() != 2) return not_applicable("theorem", "needs a p-group of class 2");
  TheoremCheck t = verify_theorem(ctx);
  report.condition = t.condition;
  report.oracle = t.oracle;
  CheckResult r{"theorem", status_of(t.agree && t.oracle.autZZSubsetAutcent), "", json::object()};
  r.detail = std::string("condition ") + (t.condition.all ? "true" : "false") +
             ", Autcent = Aut^Z_Z " + (t.oracle.autcentEqualsAutZZ ? "true" : "false");
  r.data = {{"invariants", invariants_json(t.invariants)},
            {"condition", condition_json(t.condition)},
            {"oracle", oracle_json(t.oracle)}};
  if (t.separating) r.data["separating"] = t.separating->images;
  if (!t.agree) r.data["witness"] = {{"automorphism", t.separating ? json(t.separating->images) : json()}};
  return r;
}

CheckResult run_prop1(GroupContext& ctx) {
  if (!ctx.prime() || ctx.abelian()) return not_applicable("prop1", "needs a non-abelian p-group");
  auto entries = verify_proposition1(ctx);
  bool holds = true;
  std::size_t bothTrue = 0;
  json rows = json::array();
  for (const auto& e : entries) {
    holds = holds && e.holds();
    bothTrue += e.lhs && e.rhs;
    rows.push_back({{"m", members_json(e.m)},
                    {"lhs", e.lhs},
                    {"rhs", e.rhs},
                    {"autMZOrder", e.autMZOrder},
                    {"homFormula", big_json(e.homFormula)},
                    {"countReconciled", e.countReconciled}});
  }
  CheckResult r{"prop1", status_of(holds),
                std::to_string(entries.size()) + " central subgroups, " + std::to_string(bothTrue) +
                    " with Aut^M_Z = Inn",
                {{"entries", rows}}};
  if (!holds) {
    for (const auto& e : entries)
      if (!e.holds()) {
        r.data["witness"] = {{"m", members_json(e.m)}};
        break;
      }
  }
  return r;
}

CheckResult run_cor1(GroupContext& ctx) {
  if (!ctx.prime() || ctx.abelian()) return not_applicable("cor1", "needs a non-abelian p-group");
  EquivalenceCheck c = verify_corollary1(ctx);
  return CheckResult{"cor1", status_of(c.holds()),
                     std::string("Autcent = Inn ") + (c.lhs ? "true" : "false") +
                         ", Z = gamma_2 cyclic " + (c.rhs ? "true" : "false"),
                     {{"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"autcentOrder", ctx.autcent().size()},
                      {"innOrder", ctx.inn().size()}}};
}

CheckResult run_attar(GroupContext& ctx) {
  if (!ctx.prime()) return not_applicable("attar", "needs a p-group");
  EquivalenceCheck c = verify_attar(ctx);
  return CheckResult{"attar", status_of(c.holds()),
                     std::string("Aut^Z_Z = Inn ") + (c.lhs ? "true" : "false") +
                         ", abelian or class 2 with cyclic Z " + (c.rhs ? "true" : "false"),
                     {{"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"autZZOrder", ctx.aut_zz().size()},
                      {"innOrder", ctx.inn().size()}}};
}

CheckResult run_lemma0(GroupContext& ctx) {
  const Group& g = ctx.group();
  bool holds = true;
  std::size_t applicable = 0;
  json rows = json::array();
  json witness;
  for (const Subgroup& m : ctx.central_subgroups()) {
    Lemma0Report l = verify_lemma0(g, m, ctx.aut(), ctx.limits());
    applicable += l.hypothesisHolds;
    if (!l.holds() && witness.is_null()) witness = {{"m", members_json(m)}};
    holds = holds && l.holds();
    rows.push_back({{"m", members_json(m)},
                    {"hypothesisHolds", l.hypothesisHolds},
                    {"homCount", l.homCount},
                    {"autMCount", l.autMCount},
                    {"bijectionHolds", l.bijectionHolds},
                    {"homOverZCount", l.homOverZCount},
                    {"homOverZFormula", l.homOverZFormula ? big_json(*l.homOverZFormula) : json()},
                    {"autMZCount", l.autMZCount},
                    {"isomorphismHolds", l.isomorphismHolds}});
  }
  CheckResult r{"lemma0", status_of(holds),
                std::to_string(applicable) + " of " + std::to_string(rows.size()) +
                    " central subgroups meet the kernel hypothesis",
                {{"entries", rows}}};
  if (!witness.is_null()) r.data["witness"] = witness;
  return r;
}

CheckResult run_lemma0a(GroupContext& ctx) {
  if (!ctx.prime()) return not_applicable("lemma0a", "needs a p-group");
  if (!ctx.purely_nonabelian()) return not_applicable("lemma0a", "group has an abelian direct factor");
  Lemma0aReport l = verify_lemma0a(ctx.group(), ctx.autcent(), ctx.limits());
  return CheckResult{"lemma0a", status_of(l.holds()),
                     "|Autcent| = " + std::to_string(l.autcentOrder) +
                         ", |Hom(G/gamma_2, Z)| = " + l.formula.str(),
                     {{"autcentOrder", l.autcentOrder},
                      {"formula", big_json(l.formula)},
                      {"homCount", l.homCount},
                      {"countsEqual", l.countsEqual},
                      {"correspondenceBijective", l.correspondenceBijective}}};
}

CheckResult run_lemma3(GroupContext& ctx) {
  if (!ctx.prime()) return not_applicable("lemma3", "needs a p-group");
  Lemma3Check c = verify_lemma3(ctx);
  json data = {{"autcentEqualsAutZZ", c.autcentEqualsAutZZ},
               {"purelyNonabelian", c.purelyNonabelian},
               {"witnessRequired", c.witnessRequired}};
  if (c.witness) {
    const auto& w = *c.witness;
    data["construction"] = {{"h", members_json(w.decomposition.h)},
                            {"a", members_json(w.decomposition.a)},
                            {"z", w.z},
                            {"generators", w.generators},
                            {"alpha", w.alpha.images},
                            {"isAutomorphism", w.isAutomorphism},
                            {"isCentral", w.isCentral},
                            {"movedCentral", w.movedCentral},
                            {"movesCentral", w.movesCentral},
                            {"separates", w.separates}};
  }
  std::string detail = c.purelyNonabelian ? "purely non-abelian" : "has an abelian direct factor";
  if (ctx.abelian() && !c.purelyNonabelian) detail += " (abelian: H = 1, no witness construction)";
  if (c.witnessRequired) detail += c.witness && c.witness->valid() ? ", witness valid" : ", witness missing or invalid";
  CheckResult r{"lemma3", status_of(c.holds()), detail, data};
  if (!c.holds()) r.data["witness"] = {{"autcentEqualsAutZZ", c.autcentEqualsAutZZ}};
  return r;
}

CheckResult run_lemma4(GroupContext& ctx) {
  if (!ctx.prime() || ctx.nil_class() != 2) return not_applicable("lemma4", "needs a p-group of class 2");
  const ClassTwoInvariants inv = class_two_invariants(ctx.group());
  if (inv.r() != inv.s() || inv.zType == inv.abType)
    return not_applicable("lemma4", "needs r = s and G/Z not isomorphic to G/gamma_2");
  const AbelianType zc = subgroup_type(ctx.group(), ctx.center(), inv.p);
  const Lemma4Comparison l = lemma4_compare(inv.zType, inv.abType, zc);
  CheckResult r{"lemma4", status_of(l.equivalenceHolds),
                "A = G/Z " + inv.zType.to_string() + ", B = G/gamma_2 " + inv.abType.to_string() +
                    ", C = Z " + zc.to_string(),
                {{"a", type_json(inv.zType)},
                 {"b", type_json(inv.abType)},
                 {"c", type_json(zc)},
                 {"t", l.t},
                 {"threshold", big_json(l.threshold)},
                 {"strict", l.strict},
                 {"homAC", big_json(l.homAC)},
                 {"homBC", big_json(l.homBC)}}};
  if (!l.equivalenceHolds) r.data["witness"] = {{"a", type_json(inv.zType)}};
  return r;
}

}  // namespace

TheoremReport analyze_group(const std::string& groupId, const Group& g,
                            const std::vector<std::string>& checks, const AnalysisOptions& options) {
  for (const auto& name : checks) {
    if (std::find(known_checks().begin(), known_checks().end(), name) == known_checks().end())
      throw Error(ErrorKind::ConfigError, "unknown check '" + name + "'");
  }
  TheoremReport report;
  report.groupId = groupId;
  report.order = g.order();
  report.prime = p_group_prime(g);
  GroupContext ctx(g, options.limits, options.cap);
  report.nilClass = ctx.nil_class();

  for (const auto& name : known_checks()) {
    if (std::find(checks.begin(), checks.end(), name) == checks.end()) continue;
    CheckResult r;
    try {
      if (name == "theorem") r = run_theorem(ctx, report);
      else if (name == "prop1") r = run_prop1(ctx);
      else if (name == "cor1") r = run_cor1(ctx);
      else if (name == "lemma0") r = run_lemma0(ctx);
      else if (name == "lemma0a") r = run_lemma0a(ctx);
      else if (name == "lemma3") r = run_lemma3(ctx);
      else if (name == "lemma4") r = run_lemma4(ctx);
      else r = run_attar(ctx);
    } catch (const Error& e) {
      r = CheckResult{name, CheckStatus::Error, e.what(), {{"errorKind", std::string(to_string(e.kind()))}}};
    }
    report.checks.push_back(std::move(r));
  }

  report.verdict = Verdict::Agree;
  for (const auto& c : report.checks) {
    if (c.status == CheckStatus::Fail) {
      report.verdict = Verdict::Counterexample;
      break;
    }
    if (c.status == CheckStatus::Error) report.verdict = Verdict::Error;
  }
  return report;
}

}  // namespace centauts
