#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "centauts/abelian.hpp"
#include "centauts/group.hpp"

namespace centauts {

struct Automorphism {
  std::vector<Element> images;

  Element operator()(Element x) const noexcept { return images[x]; }
  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
};

Automorphism identity_automorphism(const Group& g);
// (a o b)(x) = a(b(x))
Automorphism compose(const Automorphism& a, const Automorphism& b);
Automorphism inverse(const Automorphism& a);
bool is_automorphism(const Group& g, std::span<const Element> images);
// Extends gens[i] -> images[i] along words in the generators and validates
// the result on all pairs; nullopt if it is not a well-defined automorphism.
std::optional<Automorphism> automorphism_from_generator_images(const Group& g,
                                                               std::span<const Element> gens,
                                                               std::span<const Element> images);

/// A set of automorphisms kept sorted by image table, so set equality is
/// vector equality.
class AutSet {
 public:
  AutSet() = default;
  explicit AutSet(std::vector<Automorphism> elems);

  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  const std::vector<Automorphism>& elements() const noexcept { return elems_; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }
  bool contains(const Automorphism& a) const;
  bool is_subset_of(const AutSet& other) const;

  friend bool operator==(const AutSet&, const AutSet&) = default;

 private:
  std::vector<Automorphism> elems_;
};

AutSet intersect(const AutSet& a, const AutSet& b);
// First element of a not in b, if any.
std::optional<Automorphism> first_difference(const AutSet& a, const AutSet& b);

struct SearchLimits {
  // Maximum number of generator-image assignments tried by one search.
  std::uint64_t budget = 10'000'000;
};

// Greedy, by decreasing element order then index, picking elements outside
// <Phi(G), chosen so far>. Size is the rank of G/Phi(G).
std::vector<Element> minimal_generating_set(const Group& g);

AutSet all_automorphisms(const Group& g, const SearchLimits& limits = {});
AutSet inner_automorphisms(const Group& g);

bool is_central_automorphism(const Group& g, const Automorphism& a);

/// Central automorphisms, computed both as the centrality filter of `all`
/// and as the centralizer of `inner` in `all`; InternalDisagreement if the
/// two differ.
AutSet autcent(const Group& g, const AutSet& all, const AutSet& inner);
AutSet autcent(const Group& g, const SearchLimits& limits = {});

// {a in within : x^-1 a(x) in N for all x}; NotNormal unless N is normal.
AutSet aut_fixing_quotient(const Group& g, const Subgroup& n, const AutSet& within);
// {a in within : a(m) = m for all m in M}
AutSet aut_fixing_subgroup(const Group& g, const Subgroup& m, const AutSet& within);

/// A homomorphism G -> M with M a central subgroup.
struct CentralHom {
  Subgroup target;
  std::vector<Element> values;

  friend bool operator==(const CentralHom& a, const CentralHom& b) { return a.values == b.values; }
};

/// Every homomorphism G -> M, found as homomorphisms from G/gamma_2(G) into
/// M and pulled back. Sorted by value table. NotCentral unless M <= Z(G).
std::vector<CentralHom> homs_to_central_subgroup(const Group& g, const Subgroup& m,
                                                 const SearchLimits& limits = {});

// f(m) != m^-1 for every nontrivial m in the target.
bool alpha_criterion(const Group& g, const CentralHom& f);
// x -> x f(x), without any bijectivity check.
std::vector<Element> alpha_map(const Group& g, const CentralHom& f);
bool is_bijective(std::span<const Element> map);

/// x -> x f(x) if the criterion accepts f, nullopt otherwise. Throws
/// InternalDisagreement if an accepted map is not bijective.
std::optional<Automorphism> alpha_from_f(const Group& g, const CentralHom& f);

/// f_a(x) = x^-1 a(x); NotCentral if some value lies outside M.
CentralHom f_from_alpha(const Group& g, const Automorphism& a, const Subgroup& m);

struct Lemma0Report {
  bool hypothesisHolds = false;  // M <= intersection of ker f over Hom(G, M)
  std::size_t homCount = 0;      // |Hom(G, M)|
  std::size_t autMCount = 0;     // |Aut^M(G)|
  bool bijectionHolds = false;   // f -> alpha_f is a bijection onto Aut^M(G)
  std::size_t homOverZCount = 0;  // homs vanishing on Z(G), i.e. |Hom(G/Z, M)|
  std::optional<BigInt> homOverZFormula;  // hom_order of (G/Z)^ab and M; p-groups only
  std::size_t autMZCount = 0;    // |Aut^M_Z(G)|
  bool isomorphismHolds = false;  // f -> alpha_f maps those homs onto Aut^M_Z(G)

  bool holds() const noexcept { return !hypothesisHolds || (bijectionHolds && isomorphismHolds); }
};

// NotCentral unless M <= Z(G).
Lemma0Report verify_lemma0(const Group& g, const Subgroup& m, const AutSet& all,
                           const SearchLimits& limits = {});

struct Lemma0aReport {
  std::size_t autcentOrder = 0;
  BigInt formula;  // hom_order(type(G/gamma_2), type(Z))
  std::size_t homCount = 0;
  bool countsEqual = false;
  // a -> f_a is injective and its image is all of Hom(G/gamma_2, Z)
  bool correspondenceBijective = false;

  bool holds() const noexcept { return countsEqual && correspondenceBijective; }
};

// NotPurelyNonabelian / NotPGroup when the hypotheses fail.
Lemma0aReport verify_lemma0a(const Group& g, const AutSet& autcentSet,
                             const SearchLimits& limits = {});

struct DirectDecomposition {
  Subgroup h;
  Subgroup a;  // abelian, nontrivial
};

/// An internal direct decomposition G = H x A with A abelian and as large as
/// possible (so H is purely non-abelian), or nullopt.
std::optional<DirectDecomposition> find_abelian_direct_factor(
    const Group& g, std::size_t cap = kDefaultElementCap);
bool is_purely_nonabelian(const Group& g, std::size_t cap = kDefaultElementCap);

}  // namespace centauts
