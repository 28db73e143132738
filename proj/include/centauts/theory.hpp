#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "centauts/abelian.hpp"
#include "centauts/automorphism.hpp"
#include "centauts/group.hpp"

namespace centauts {

/// Lazily computed structure of one group, shared by all checks run on it.
/// Not synchronized: use one context per thread.
class GroupContext {
 public:
  explicit GroupContext(Group g, SearchLimits limits = {}, std::size_t cap = kDefaultElementCap);

  const Group& group() const noexcept { return group_; }
  const SearchLimits& limits() const noexcept { return limits_; }
  std::size_t cap() const noexcept { return cap_; }
  std::optional<unsigned> prime() const { return p_group_prime(group_); }
  bool abelian() const noexcept { return abelian_; }
  // nullopt for groups that are not nilpotent
  std::optional<int> nil_class();

  const Subgroup& center();
  const Subgroup& gamma2();
  const Subgroup& frattini();
  const std::vector<Subgroup>& central_subgroups();

  const AutSet& aut();
  const AutSet& inn();
  const AutSet& autcent();
  // Aut^{Z(G)}_{Z(G)}(G), taken directly from aut()
  const AutSet& aut_zz();

  const std::optional<DirectDecomposition>& abelian_factor();
  bool purely_nonabelian() { return !abelian_factor().has_value(); }

 private:
  Group group_;
  SearchLimits limits_;
  std::size_t cap_;
  bool abelian_;
  std::optional<std::optional<int>> class_;
  std::optional<Subgroup> center_, gamma2_, frattini_;
  std::optional<std::vector<Subgroup>> centralSubgroups_;
  std::optional<AutSet> aut_, inn_, autcent_, autZZ_;
  std::optional<std::optional<DirectDecomposition>> factor_;
};

// --- the class-2 characterization ------------------------------------------

struct ConditionSide {
  bool rEqS = false;
  bool residualIso = false;
  bool expEq = false;
  bool all = false;
};

struct OracleSide {
  std::size_t autcentOrder = 0;
  std::size_t autZZOrder = 0;
  std::size_t innOrder = 0;
  bool autcentEqualsAutZZ = false;
  bool autcentEqualsInn = false;
  bool autZZSubsetAutcent = false;
};

/// WrongClass / NotPGroup unless G is a p-group of class exactly 2.
ConditionSide theorem_condition(const Group& g);
ConditionSide theorem_condition(const ClassTwoInvariants& inv);

struct TheoremCheck {
  ClassTwoInvariants invariants;
  ConditionSide condition;
  OracleSide oracle;
  bool agree = false;
  // an automorphism in Autcent but not in Aut^Z_Z, when one exists
  std::optional<Automorphism> separating;
};

TheoremCheck verify_theorem(GroupContext& ctx);

// --- inner-automorphism characterizations ------------------------------------

struct Prop1Entry {
  Subgroup m;
  bool lhs = false;  // Aut^M_Z(G) = Inn(G)
  bool rhs = false;  // class 2, gamma_2 <= M, M cyclic
  std::size_t autMZOrder = 0;
  BigInt homFormula;  // |Hom(G/Z, M)| from types
  bool countReconciled = false;

  bool holds() const noexcept { return lhs == rhs && countReconciled; }
};

// HypothesisViolated for abelian groups, NotPGroup for non-p-groups.
std::vector<Prop1Entry> verify_proposition1(GroupContext& ctx);

struct EquivalenceCheck {
  bool lhs = false;
  bool rhs = false;
  bool holds() const noexcept { return lhs == rhs; }
};

// Autcent = Inn  vs  Z = gamma_2 and Z cyclic. Non-abelian p-groups.
EquivalenceCheck verify_corollary1(GroupContext& ctx);
// Aut^Z_Z = Inn  vs  abelian or (class 2 and Z cyclic). p-groups.
EquivalenceCheck verify_attar(GroupContext& ctx);

// --- purely non-abelian groups ---------------------------------------------

struct Lemma3Witness {
  DirectDecomposition decomposition;
  Element z = 0;                    // order p, in Z(H) and Phi(G)
  std::vector<Element> generators;  // minimal generators of H then of A
  Automorphism alpha;               // w -> w z on every generator
  bool isAutomorphism = false;
  bool isCentral = false;
  Element movedCentral = 0;  // a generator of A with alpha(y) != y
  bool movesCentral = false;
  bool separates = false;  // in Autcent, not in Aut^Z_Z
  bool valid() const noexcept { return isAutomorphism && isCentral && movesCentral && separates; }
};

struct Lemma3Check {
  bool autcentEqualsAutZZ = false;
  bool purelyNonabelian = false;
  std::optional<Lemma3Witness> witness;
  // the construction needs H != 1, so abelian groups never require one
  bool witnessRequired = false;

  bool holds() const noexcept {
    if (autcentEqualsAutZZ && !purelyNonabelian) return false;
    if (witnessRequired) return witness && witness->valid() && !autcentEqualsAutZZ;
    return true;
  }
};

/// Builds the automorphism w -> w z (w in a minimal generating set of
/// H x A) for a non-abelian p-group with an abelian direct factor.
std::optional<Lemma3Witness> lemma3_witness(GroupContext& ctx);

// Any p-group, abelian ones included (C2 satisfies the hypothesis but is its
// own abelian direct factor). NotPGroup for non-p-groups.
Lemma3Check verify_lemma3(GroupContext& ctx);

// --- Hom-order comparison ---------------------------------------------------

struct Lemma4SweepFailure {
  AbelianType a, b, c;
  Lemma4Comparison result;
};

struct Lemma4Sweep {
  unsigned p = 2;
  std::size_t maxExp = 0;
  std::size_t triples = 0;
  std::size_t strictCount = 0;
  std::vector<Lemma4SweepFailure> failures;
  bool holds() const noexcept { return failures.empty(); }
};

/// Every (A, B, C) at prime p satisfying the comparison's hypotheses with
/// |A|, |B|, |C| <= p^maxExp.
Lemma4Sweep verify_lemma4_sweep(unsigned p, std::size_t maxExp);

// --- per-group reports ------------------------------------------------------

enum class CheckStatus { Pass, Fail, NotApplicable, Error };
std::string to_string(CheckStatus s);

enum class Verdict { Agree, Counterexample, Error };
std::string to_string(Verdict v);

struct CheckResult {
  std::string check;
  CheckStatus status = CheckStatus::NotApplicable;
  std::string detail;
  nlohmann::json data = nlohmann::json::object();
};

struct TheoremReport {
  std::string groupId;
  std::size_t order = 0;
  std::optional<unsigned> prime;
  std::optional<int> nilClass;
  std::optional<ConditionSide> condition;
  std::optional<OracleSide> oracle;
  std::vector<CheckResult> checks;
  Verdict verdict = Verdict::Agree;
};

inline const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {"theorem", "prop1",   "cor1",   "lemma0",
                                                 "lemma0a", "lemma3", "lemma4", "attar"};
  return names;
}

struct AnalysisOptions {
  SearchLimits limits;
  std::size_t cap = kDefaultElementCap;
};

/// Runs the named checks in the order of known_checks(); errors raised by a
/// check are captured in its CheckResult.
TheoremReport analyze_group(const std::string& groupId, const Group& g,
                            const std::vector<std::string>& checks,
                            const AnalysisOptions& options = {});

}  // namespace centauts
