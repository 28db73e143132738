#include "centauts/catalog.hpp"

#include <algorithm>

#include "centauts/error.hpp"
#include "centauts/families.hpp"

namespace centauts {

namespace {

Group product(std::initializer_list<Group> factors) {
  auto it = factors.begin();
  Group g = *it;
  for (++it; it != factors.end(); ++it) g = direct_product(g, *it, kHardElementCap);
  return g;
}

Group abelian(unsigned p, std::vector<unsigned> exps) { return abelian_group(AbelianType(p, std::move(exps))); }

Group d8() { return from_permutation_generators(4, {{1, 2, 3, 0}, {0, 3, 2, 1}}); }
Group q8() { return dicyclic_group(8); }
Group m16() { return metacyclic_group(8, 2, 5); }
Group c4od8() { return bilinear_extension({2, 2}, {4}, {{{0, 2}, {0, 0}}}); }

// 2^{1+4}: central products of two D8 (+) or of D8 and Q8 (-)
Group extraspecial_plus() {
  return bilinear_extension({2, 2, 2, 2}, {2},
                            {{{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}});
}
Group extraspecial_minus() {
  return bilinear_extension({2, 2, 2, 2}, {2},
                            {{{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}}});
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c = {
      // abelian
      {"C2", "cyclic of order 2", [] { return cyclic_group(2); }},
      {"C3", "cyclic of order 3", [] { return cyclic_group(3); }},
      {"C4", "cyclic of order 4", [] { return cyclic_group(4); }},
      {"C5", "cyclic of order 5", [] { return cyclic_group(5); }},
      {"C8", "cyclic of order 8", [] { return cyclic_group(8); }},
      {"C9", "cyclic of order 9", [] { return cyclic_group(9); }},
      {"C16", "cyclic of order 16", [] { return cyclic_group(16); }},
      {"C27", "cyclic of order 27", [] { return cyclic_group(27); }},
      {"C2xC2", "Klein four group", [] { return abelian(2, {1, 1}); }},
      {"C2xC4", "abelian of type [2,1]", [] { return abelian(2, {2, 1}); }},
      {"C2xC8", "abelian of type [3,1]", [] { return abelian(2, {3, 1}); }},
      {"C4xC4", "abelian of type [2,2]", [] { return abelian(2, {2, 2}); }},
      {"C3xC3", "elementary abelian of order 9", [] { return abelian(3, {1, 1}); }},
      {"C3xC9", "abelian of type [2,1] at p=3", [] { return abelian(3, {2, 1}); }},
      {"C2xC2xC2", "elementary abelian of order 8", [] { return abelian(2, {1, 1, 1}); }},
      {"C2xC2xC4", "abelian of type [2,1,1]", [] { return abelian(2, {2, 1, 1}); }},
      {"C2^4", "elementary abelian of order 16", [] { return abelian(2, {1, 1, 1, 1}); }},
      {"C3^3", "elementary abelian of order 27", [] { return abelian(3, {1, 1, 1}); }},
      // class 2, order 8
      {"D8", "dihedral of order 8, from permutations of a square", d8},
      {"Q8", "quaternion of order 8", q8},
      // class 2, order 16
      {"M16", "modular: a^8 = b^2 = 1, b^-1 a b = a^5", m16},
      {"C4:C4", "a^4 = b^4 = 1, b^-1 a b = a^3", [] { return metacyclic_group(4, 4, 3); }},
      {"C4oD8", "central product of C4 and D8", c4od8},
      {"H(4,2,2)", "upper unitriangular triples mod (4,2,2)", [] { return heisenberg_group(4, 2, 2); }},
      {"D8xC2", "D8 x C2", [] { return product({d8(), cyclic_group(2)}); }},
      {"Q8xC2", "Q8 x C2", [] { return product({q8(), cyclic_group(2)}); }},
      // class 2, order 32
      {"Q8xC4", "Q8 x C4", [] { return product({q8(), cyclic_group(4)}); }},
      {"D8xC4", "D8 x C4", [] { return product({d8(), cyclic_group(4)}); }},
      {"D8xC2xC2", "D8 x C2 x C2", [] { return product({d8(), abelian(2, {1, 1})}); }},
      {"Q8xC2xC2", "Q8 x C2 x C2", [] { return product({q8(), abelian(2, {1, 1})}); }},
      {"M16xC2", "M16 x C2", [] { return product({m16(), cyclic_group(2)}); }},
      {"H(4,4,2)", "upper unitriangular triples mod (4,4,2)", [] { return heisenberg_group(4, 4, 2); }},
      {"H(8,2,2)", "upper unitriangular triples mod (8,2,2)", [] { return heisenberg_group(8, 2, 2); }},
      {"2^(1+4)+", "extraspecial of order 32, central product D8 o D8", extraspecial_plus},
      {"2^(1+4)-", "extraspecial of order 32, central product D8 o Q8", extraspecial_minus},
      {"C8:C4", "a^8 = b^4 = 1, b^-1 a b = a^5", [] { return metacyclic_group(8, 4, 5); }},
      {"M32", "modular: a^16 = b^2 = 1, b^-1 a b = a^9", [] { return metacyclic_group(16, 2, 9); }},
      {"C4:C8", "a^4 = b^8 = 1, b^-1 a b = a^3", [] { return metacyclic_group(4, 8, 3); }},
      {"C4oD8xC2", "(C4 o D8) x C2", [] { return product({c4od8(), cyclic_group(2)}); }},
      // class 2, order 64
      {"D8xQ8", "D8 x Q8", [] { return product({d8(), q8()}); }},
      {"D8xD8", "D8 x D8", [] { return product({d8(), d8()}); }},
      {"Q8xQ8", "Q8 x Q8", [] { return product({q8(), q8()}); }},
      {"H(4,4,4)", "upper unitriangular matrices over Z/4", [] { return heisenberg_group(4, 4, 4); }},
      {"M16xC4", "M16 x C4", [] { return product({m16(), cyclic_group(4)}); }},
      {"D8xC8", "D8 x C8", [] { return product({d8(), cyclic_group(8)}); }},
      // class 2, p = 3
      {"Heis3", "Heisenberg group mod 3, extraspecial of exponent 3", [] { return heisenberg_group(3, 3, 3); }},
      {"M27", "extraspecial of exponent 9: a^9 = b^3 = 1, b^-1 a b = a^4",
       [] { return metacyclic_group(9, 3, 4); }},
      {"Heis3xC3", "Heis3 x C3", [] { return product({heisenberg_group(3, 3, 3), cyclic_group(3)}); }},
      {"M27xC3", "M27 x C3", [] { return product({metacyclic_group(9, 3, 4), cyclic_group(3)}); }},
      {"C9:C9", "a^9 = b^9 = 1, b^-1 a b = a^4", [] { return metacyclic_group(9, 9, 4); }},
      {"H(9,3,3)", "upper unitriangular triples mod (9,3,3)", [] { return heisenberg_group(9, 3, 3); }},
      {"C3xC3.C9", "central extension of C3 x C3 by C9 with cocycle 3 u1 u2'",
       [] { return bilinear_extension({3, 3}, {9}, {{{0, 3}, {0, 0}}}); }},
      // class 2, p = 5
      {"Heis5", "Heisenberg group mod 5, extraspecial of exponent 5", [] { return heisenberg_group(5, 5, 5); }},
      {"M125", "extraspecial of exponent 25: a^25 = b^5 = 1, b^-1 a b = a^6",
       [] { return metacyclic_group(25, 5, 6); }},
      // class > 2
      {"D16", "dihedral of order 16", [] { return dihedral_group(16); }},
      {"Q16", "generalized quaternion of order 16", [] { return dicyclic_group(16); }},
      {"SD16", "semidihedral: a^8 = b^2 = 1, b^-1 a b = a^3", [] { return metacyclic_group(8, 2, 3); }},
      {"D32", "dihedral of order 32", [] { return dihedral_group(32); }},
      // not p-groups
      {"S3", "symmetric group on 3 points", [] { return dihedral_group(6); }},
      {"C6", "cyclic of order 6", [] { return cyclic_group(6); }},
      {"A4", "alternating group on 4 points",
       [] { return from_permutation_generators(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}); }},
  };
  for (auto& e : c) e.order = e.build().order();
  std::stable_sort(c.begin(), c.end(),
                   [](const CatalogEntry& a, const CatalogEntry& b) { return a.order < b.order; });
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw Error(ErrorKind::ConfigError, "unknown catalog group '" + name + "'");
}

Group catalog_group(const std::string& name) { return catalog_entry(name).build(); }

}  // namespace centauts
