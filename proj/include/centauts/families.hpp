#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "centauts/abelian.hpp"
#include "centauts/group.hpp"

namespace centauts {

// Builds the Cayley table of a group on 0..n-1 from a multiplication rule;
// the result is validated like any other table.
Group group_from_rule(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                      std::size_t cap = kDefaultElementCap);

Group cyclic_group(std::size_t m);
// Direct product of cyclic groups C_{p^a1} x C_{p^a2} x ...
Group abelian_group(const AbelianType& type);

// <a, b | a^m = b^n = 1, b^-1 a b = a^r>, elements b^j a^i at index j*m + i.
// Requires r^n = 1 mod m.
Group metacyclic_group(std::size_t m, std::size_t n, std::size_t r);
// Dihedral group of the given order (2m).
Group dihedral_group(std::size_t order);
// Dicyclic group of order 4m; generalized quaternion when the order is a power of 2.
Group dicyclic_group(std::size_t order);

// Triples (x, y, z) mod (m1, m2, m3) with
// (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y'); m3 must divide m1 and m2.
Group heisenberg_group(std::size_t m1, std::size_t m2, std::size_t m3);

/// Central extension of A = Z_{a_1} x ... by Z = Z_{z_1} x ... through a
/// bilinear cocycle: (u, w)(u', w') = (u + u', w + w' + beta(u, u')) with
/// beta_l(u, u') = sum_{i,j} forms[l][i][j] u_i u'_j mod z_l.
/// Throws HypothesisViolated if some coefficient is not well defined on the
/// given moduli.
Group bilinear_extension(const std::vector<std::size_t>& aMods, const std::vector<std::size_t>& zMods,
                         const std::vector<std::vector<std::vector<std::size_t>>>& forms);

}  // namespace centauts
