#include "centauts/automorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "centauts/error.hpp"

namespace centauts {
namespace {

// Breadth-first words over an ordered generating set, split into stages:
// stage j adds the elements of <g_0..g_j> missing from <g_0..g_{j-1}>, and
// lists every product x*g_k (x in stage <= j, k <= j) not used as a tree
// edge. A map defined on generators is a homomorphism on <g_0..g_j> iff it
// satisfies the relations of stages 0..j.
class StagedWords {
 public:
  struct Fresh {
    Element x;
    Element parent;
    std::uint8_t gen;
  };
  struct Relation {
    Element x;
    std::uint8_t gen;
    Element product;
  };

  StagedWords(const Group& g, std::vector<Element> gens) : gens_(std::move(gens)) {
    const std::size_t d = gens_.size();
    fresh_.resize(d);
    relations_.resize(d);
    std::vector<std::uint8_t> mask(g.order(), 0);
    std::vector<Element> list{g.identity()};
    mask[g.identity()] = 1;
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t oldCount = list.size();
      for (std::size_t i = 0; i < list.size(); ++i) {
        const Element x = list[i];
        for (std::size_t k = 0; k <= j; ++k) {
          if (i < oldCount && k < j) continue;
          const Element y = g.mul(x, gens_[k]);
          if (!mask[y]) {
            mask[y] = 1;
            list.push_back(y);
            fresh_[j].push_back({y, x, static_cast<std::uint8_t>(k)});
          } else {
            relations_[j].push_back({x, static_cast<std::uint8_t>(k), y});
          }
        }
      }
    }
    if (list.size() != g.order()) {
      throw Error(ErrorKind::InternalDisagreement, "generating set does not generate the group");
    }
  }

  std::size_t stages() const noexcept { return gens_.size(); }
  const std::vector<Element>& gens() const noexcept { return gens_; }
  const std::vector<Fresh>& fresh(std::size_t j) const { return fresh_[j]; }
  const std::vector<Relation>& relations(std::size_t j) const { return relations_[j]; }

 private:
  std::vector<Element> gens_;
  std::vector<std::vector<Fresh>> fresh_;
  std::vector<std::vector<Relation>> relations_;
};

std::string candidate_space(const std::vector<std::vector<Element>>& cands) {
  BigInt total = 1;
  for (const auto& c : cands) total *= c.size();
  return total.str();
}

// Enumerates homomorphisms src -> dst by assigning generator images from
// cands[j]. accept(j, c) may veto an image after the stage-j relations pass;
// emit receives the full image table.
template <class Accept, class Emit>
void staged_search(const StagedWords& words, const Group& src, const Group& dst,
                   const std::vector<std::vector<Element>>& cands, std::uint64_t budget,
                   Accept&& accept, Emit&& emit) {
  const std::size_t d = words.stages();
  std::vector<Element> img(src.order(), dst.identity());
  std::vector<Element> genImg(d, dst.identity());
  if (d == 0) {
    emit(img);
    return;
  }
  std::uint64_t nodes = 0;
  auto recurse = [&](auto&& self, std::size_t j) -> void {
    for (Element c : cands[j]) {
      if (++nodes > budget) {
        throw Error(ErrorKind::BudgetExceeded,
                    "automorphism search passed " + std::to_string(budget) +
                        " assignments; candidate space is " + candidate_space(cands));
      }
      genImg[j] = c;
      for (const auto& f : words.fresh(j)) img[f.x] = dst.mul(img[f.parent], genImg[f.gen]);
      bool ok = true;
      for (const auto& r : words.relations(j)) {
        if (img[r.product] != dst.mul(img[r.x], genImg[r.gen])) {
          ok = false;
          break;
        }
      }
      if (!ok || !accept(j, c)) continue;
      if (j + 1 == d) {
        emit(img);
      } else {
        self(self, j + 1);
      }
    }
  };
  recurse(recurse, 0);
}

std::vector<Element> by_order_desc(const Group& g) {
  std::vector<Element> elems(g.order());
  std::iota(elems.begin(), elems.end(), Element{0});
  std::stable_sort(elems.begin(), elems.end(), [&](Element a, Element b) {
    return g.element_order(a) > g.element_order(b);
  });
  return elems;
}

// Irredundant generating set for any group, same greedy order as the
// minimal one.
std::vector<Element> greedy_generating_set(const Group& g) {
  std::vector<Element> gens;
  Subgroup cur = trivial_subgroup(g);
  for (Element x : by_order_desc(g)) {
    if (cur.size() == g.order()) break;
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = subgroup_generated(g, gens);
  }
  return gens;
}

std::vector<Element> generating_set(const Group& g) {
  if (g.order() > 1 && p_group_prime(g)) return minimal_generating_set(g);
  return greedy_generating_set(g);
}

void require_central(const Group& g, const Subgroup& m) {
  if (m.parent_order() != g.order()) throw Error(ErrorKind::NotCentral, "subgroup of a different group");
  if (!is_central(g, m)) throw Error(ErrorKind::NotCentral, "subgroup is not central");
}

}  // namespace

// --- Automorphism / AutSet -------------------------------------------------

Automorphism identity_automorphism(const Group& g) {
  Automorphism a;
  a.images.resize(g.order());
  std::iota(a.images.begin(), a.images.end(), Element{0});
  return a;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  Automorphism r;
  r.images.resize(b.images.size());
  for (std::size_t x = 0; x < b.images.size(); ++x) r.images[x] = a.images[b.images[x]];
  return r;
}

Automorphism inverse(const Automorphism& a) {
  Automorphism r;
  r.images.resize(a.images.size());
  for (std::size_t x = 0; x < a.images.size(); ++x) r.images[a.images[x]] = static_cast<Element>(x);
  return r;
}

bool is_bijective(std::span<const Element> map) {
  std::vector<std::uint8_t> hit(map.size(), 0);
  for (Element y : map) {
    if (y >= map.size() || hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

bool is_automorphism(const Group& g, std::span<const Element> images) {
  if (images.size() != g.order() || !is_bijective(images)) return false;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y)
      if (images[g.mul(static_cast<Element>(x), static_cast<Element>(y))] !=
          g.mul(images[x], images[y]))
        return false;
  return true;
}

std::optional<Automorphism> automorphism_from_generator_images(const Group& g,
                                                               std::span<const Element> gens,
                                                               std::span<const Element> images) {
  if (gens.size() != images.size()) return std::nullopt;
  constexpr Element kUnset = static_cast<Element>(-1);
  std::vector<Element> map(g.order(), kUnset);
  std::vector<Element> queue{g.identity()};
  map[g.identity()] = g.identity();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Element y = g.mul(queue[i], gens[k]);
      if (map[y] == kUnset) {
        map[y] = g.mul(map[queue[i]], images[k]);
        queue.push_back(y);
      }
    }
  }
  if (queue.size() != g.order() || !is_automorphism(g, map)) return std::nullopt;
  return Automorphism{std::move(map)};
}

AutSet::AutSet(std::vector<Automorphism> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool AutSet::contains(const Automorphism& a) const {
  return std::binary_search(elems_.begin(), elems_.end(), a);
}

bool AutSet::is_subset_of(const AutSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

AutSet intersect(const AutSet& a, const AutSet& b) {
  std::vector<Automorphism> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return AutSet(std::move(out));
}

std::optional<Automorphism> first_difference(const AutSet& a, const AutSet& b) {
  for (const auto& x : a)
    if (!b.contains(x)) return x;
  return std::nullopt;
}

// --- generation and enumeration -------------------------------------------

std::vector<Element> minimal_generating_set(const Group& g) {
  if (g.order() == 1) return {};
  if (!p_group_prime(g)) {
    throw Error(ErrorKind::NotPGroup, "order " + std::to_string(g.order()) + " is not a prime power");
  }
  Subgroup phi = frattini_subgroup(g);
  std::vector<Element> chosen;
  std::vector<Element> seed(phi.members().begin(), phi.members().end());
  Subgroup cur = phi;
  for (Element x : by_order_desc(g)) {
    if (cur.size() == g.order()) break;
    if (cur.contains(x)) continue;
    chosen.push_back(x);
    seed.push_back(x);
    cur = subgroup_generated(g, seed);
  }
  return chosen;
}

AutSet all_automorphisms(const Group& g, const SearchLimits& limits) {
  const std::vector<Element> gens = generating_set(g);
  const StagedWords words(g, gens);
  const std::size_t d = gens.size();

  std::vector<std::vector<Element>> cands(d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t x = 0; x < g.order(); ++x)
      if (g.element_order(static_cast<Element>(x)) == g.element_order(gens[j]))
        cands[j].push_back(static_cast<Element>(x));

  // For p-groups, images must stay independent modulo Phi(G) (Burnside basis
  // theorem); spans[j] marks the cosets reached by the first j images.
  const bool pGroup = g.order() > 1 && p_group_prime(g).has_value();
  std::optional<QuotientMap> frattiniQuot;
  std::vector<std::vector<std::uint8_t>> spans;
  if (pGroup) {
    frattiniQuot = quotient(g, frattini_subgroup(g));
    const Group& q = frattiniQuot->target;
    spans.assign(d + 1, std::vector<std::uint8_t>(q.order(), 0));
    spans[0][q.identity()] = 1;
  }
  auto accept = [&](std::size_t j, Element c) {
    if (!pGroup) return true;
    const Group& q = frattiniQuot->target;
    const Element pc = frattiniQuot->projection[c];
    if (spans[j][pc]) return false;
    auto& next = spans[j + 1];
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t s = 0; s < q.order(); ++s) {
      if (!spans[j][s]) continue;
      Element acc = static_cast<Element>(s);
      do {
        next[acc] = 1;
        acc = q.mul(acc, pc);
      } while (acc != s);
    }
    return true;
  };

  std::vector<Automorphism> found;
  staged_search(words, g, g, cands, limits.budget, accept, [&](const std::vector<Element>& img) {
    if (is_bijective(img)) {
      found.push_back(Automorphism{img});
    } else if (pGroup) {
      throw Error(ErrorKind::InternalDisagreement, "independent generator images gave a non-bijection");
    }
  });
  return AutSet(std::move(found));
}

AutSet inner_automorphisms(const Group& g) {
  std::vector<Automorphism> out;
  out.reserve(g.order());
  for (std::size_t h = 0; h < g.order(); ++h) {
    Automorphism a;
    a.images.resize(g.order());
    for (std::size_t x = 0; x < g.order(); ++x)
      a.images[x] = g.conjugate(static_cast<Element>(x), static_cast<Element>(h));
    out.push_back(std::move(a));
  }
  return AutSet(std::move(out));
}

namespace {

bool central_against(const Group& g, const Subgroup& z, const Automorphism& a) {
  for (std::size_t x = 0; x < g.order(); ++x)
    if (!z.contains(g.mul(g.inv(static_cast<Element>(x)), a.images[x]))) return false;
  return true;
}

}  // namespace

bool is_central_automorphism(const Group& g, const Automorphism& a) {
  return central_against(g, center(g), a);
}

AutSet autcent(const Group& g, const AutSet& all, const AutSet& inner) {
  const Subgroup z = center(g);
  std::vector<Automorphism> byFilter;
  std::vector<Automorphism> byCentralizer;
  for (const auto& a : all) {
    if (central_against(g, z, a)) byFilter.push_back(a);
    bool commutes = std::all_of(inner.begin(), inner.end(), [&](const Automorphism& i) {
      return compose(a, i) == compose(i, a);
    });
    if (commutes) byCentralizer.push_back(a);
  }
  AutSet a(std::move(byFilter));
  AutSet b(std::move(byCentralizer));
  if (!(a == b)) {
    throw Error(ErrorKind::InternalDisagreement,
                "central filter gives " + std::to_string(a.size()) +
                    " automorphisms, centralizer of Inn gives " + std::to_string(b.size()));
  }
  return a;
}

AutSet autcent(const Group& g, const SearchLimits& limits) {
  return autcent(g, all_automorphisms(g, limits), inner_automorphisms(g));
}

AutSet aut_fixing_quotient(const Group& g, const Subgroup& n, const AutSet& within) {
  if (!is_normal(g, n)) throw Error(ErrorKind::NotNormal, "subgroup is not normal");
  std::vector<Automorphism> out;
  for (const auto& a : within)
    if (central_against(g, n, a)) out.push_back(a);
  return AutSet(std::move(out));
}

AutSet aut_fixing_subgroup(const Group& g, const Subgroup& m, const AutSet& within) {
  (void)g;
  std::vector<Automorphism> out;
  for (const auto& a : within) {
    bool fixes = std::all_of(m.members().begin(), m.members().end(),
                             [&](Element x) { return a.images[x] == x; });
    if (fixes) out.push_back(a);
  }
  return AutSet(std::move(out));
}

// --- central homomorphisms --------------------------------------------------

std::vector<CentralHom> homs_to_central_subgroup(const Group& g, const Subgroup& m,
                                                 const SearchLimits& limits) {
  require_central(g, m);
  const QuotientMap ab = quotient(g, commutator_subgroup(g));
  const Group& q = ab.target;
  const std::vector<Element> gens = generating_set(q);
  const StagedWords words(q, gens);

  std::vector<std::vector<Element>> cands(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (Element x : m.members())
      if (q.element_order(gens[j]) % g.element_order(x) == 0) cands[j].push_back(x);

  std::vector<CentralHom> out;
  staged_search(
      words, q, g, cands, limits.budget, [](std::size_t, Element) { return true; },
      [&](const std::vector<Element>& img) {
        CentralHom f{m, std::vector<Element>(g.order())};
        for (std::size_t x = 0; x < g.order(); ++x) f.values[x] = img[ab.projection[x]];
        out.push_back(std::move(f));
      });
  std::sort(out.begin(), out.end(),
            [](const CentralHom& a, const CentralHom& b) { return a.values < b.values; });
  return out;
}

bool alpha_criterion(const Group& g, const CentralHom& f) {
  return std::all_of(f.target.members().begin(), f.target.members().end(), [&](Element x) {
    return x == g.identity() || f.values[x] != g.inv(x);
  });
}

std::vector<Element> alpha_map(const Group& g, const CentralHom& f) {
  std::vector<Element> map(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) map[x] = g.mul(static_cast<Element>(x), f.values[x]);
  return map;
}

std::optional<Automorphism> alpha_from_f(const Group& g, const CentralHom& f) {
  if (!alpha_criterion(g, f)) return std::nullopt;
  Automorphism a{alpha_map(g, f)};
  if (!is_bijective(a.images)) {
    throw Error(ErrorKind::InternalDisagreement, "criterion accepted a non-bijective x -> x f(x)");
  }
  return a;
}

CentralHom f_from_alpha(const Group& g, const Automorphism& a, const Subgroup& m) {
  require_central(g, m);
  CentralHom f{m, std::vector<Element>(g.order())};
  for (std::size_t x = 0; x < g.order(); ++x) {
    f.values[x] = g.mul(g.inv(static_cast<Element>(x)), a.images[x]);
    if (!m.contains(f.values[x])) {
      throw Error(ErrorKind::NotCentral, "x^-1 a(x) leaves the target at x = " + std::to_string(x));
    }
  }
  return f;
}

// --- correspondence checks ------------------------------------------------

Lemma0Report verify_lemma0(const Group& g, const Subgroup& m, const AutSet& all,
                           const SearchLimits& limits) {
  require_central(g, m);
  Lemma0Report r;
  const auto homs = homs_to_central_subgroup(g, m, limits);
  r.homCount = homs.size();
  r.hypothesisHolds = std::all_of(homs.begin(), homs.end(), [&](const CentralHom& f) {
    return std::all_of(m.members().begin(), m.members().end(),
                       [&](Element x) { return f.values[x] == g.identity(); });
  });

  const AutSet autM = aut_fixing_quotient(g, m, all);
  r.autMCount = autM.size();
  std::vector<Automorphism> alphas;
  bool allAccepted = true;
  for (const auto& f : homs) {
    if (auto a = alpha_from_f(g, f)) {
      alphas.push_back(std::move(*a));
    } else {
      allAccepted = false;
    }
  }
  AutSet alphaSet(std::move(alphas));
  r.bijectionHolds = allAccepted && alphaSet.size() == homs.size() && alphaSet == autM;

  const Subgroup z = center(g);
  std::vector<Automorphism> alphasOverZ;
  for (const auto& f : homs) {
    bool killsZ = std::all_of(z.members().begin(), z.members().end(),
                              [&](Element x) { return f.values[x] == g.identity(); });
    if (!killsZ) continue;
    ++r.homOverZCount;
    alphasOverZ.push_back(Automorphism{alpha_map(g, f)});
  }
  const AutSet autMZ = aut_fixing_subgroup(g, z, autM);
  r.autMZCount = autMZ.size();
  if (auto p = p_group_prime(g)) {
    const Group gz = quotient(g, z).target;
    const AbelianType zab = quotient_type(gz, commutator_subgroup(gz), *p);
    r.homOverZFormula = hom_order(zab, subgroup_type(g, m, *p));
  }
  AutSet overZ(std::move(alphasOverZ));
  r.isomorphismHolds = overZ.size() == r.homOverZCount && overZ == autMZ &&
                       (!r.homOverZFormula || *r.homOverZFormula == r.homOverZCount);
  return r;
}

Lemma0aReport verify_lemma0a(const Group& g, const AutSet& autcentSet, const SearchLimits& limits) {
  auto p = p_group_prime(g);
  if (!p) throw Error(ErrorKind::NotPGroup, "order " + std::to_string(g.order()) + " is not a prime power");
  if (!is_purely_nonabelian(g)) throw Error(ErrorKind::NotPurelyNonabelian, "group has an abelian direct factor");

  Lemma0aReport r;
  const Subgroup z = center(g);
  r.autcentOrder = autcentSet.size();
  r.formula = hom_order(quotient_type(g, commutator_subgroup(g), *p), subgroup_type(g, z, *p));
  const auto homs = homs_to_central_subgroup(g, z, limits);
  r.homCount = homs.size();
  r.countsEqual = r.formula == r.autcentOrder && r.formula == r.homCount;

  std::vector<std::vector<Element>> images;
  for (const auto& a : autcentSet) images.push_back(f_from_alpha(g, a, z).values);
  std::sort(images.begin(), images.end());
  const bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
  std::vector<std::vector<Element>> expected;
  for (const auto& f : homs) expected.push_back(f.values);
  r.correspondenceBijective = injective && images == expected;
  return r;
}

std::optional<DirectDecomposition> find_abelian_direct_factor(const Group& g, std::size_t cap) {
  const Subgroup z = center(g);
  if (z.is_trivial()) return std::nullopt;
  std::vector<Subgroup> central = all_subgroups_of(g, z, cap);
  std::vector<Subgroup> normals = normal_subgroups(g, cap);
  std::sort(central.begin(), central.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  for (const auto& a : central) {
    if (a.is_trivial()) break;
    if (!is_abelian(g, a)) continue;
    for (const auto& h : normals) {
      if (h.size() * a.size() != g.order()) continue;
      if (!intersection(g, h, a).is_trivial()) continue;
      bool commute = true;
      for (Element x : h.members()) {
        for (Element y : a.members())
          if (g.mul(x, y) != g.mul(y, x)) {
            commute = false;
            break;
          }
        if (!commute) break;
      }
      if (commute) return DirectDecomposition{h, a};
    }
  }
  return std::nullopt;
}

bool is_purely_nonabelian(const Group& g, std::size_t cap) {
  return !find_abelian_direct_factor(g, cap).has_value();
}

}  // namespace centauts
