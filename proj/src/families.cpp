#include "centauts/families.hpp"

#include "centauts/error.hpp"

namespace centauts {

Group group_from_rule(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                      std::size_t cap) {
  if (n > std::min(cap, kHardElementCap)) {
    throw Error(ErrorKind::SizeLimitExceeded, "rule group of order " + std::to_string(n));
  }
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t v = mul(x, y);
      if (v >= n) throw Error(ErrorKind::NotAGroup, "rule produced an out-of-range element");
      table[x * n + y] = static_cast<Element>(v);
    }
  return Group::from_flat_table(n, std::move(table), {}, cap);
}

Group cyclic_group(std::size_t m) {
  if (m == 0) throw Error(ErrorKind::HypothesisViolated, "cyclic group of order 0");
  return group_from_rule(m, [m](std::size_t x, std::size_t y) { return (x + y) % m; });
}

Group abelian_group(const AbelianType& type) {
  Group g = cyclic_group(1);
  for (unsigned a : type.exps()) {
    std::size_t m = 1;
    for (unsigned i = 0; i < a; ++i) m *= type.prime();
    g = direct_product(g, cyclic_group(m), kHardElementCap);
  }
  return g;
}

Group metacyclic_group(std::size_t m, std::size_t n, std::size_t r) {
  if (m == 0 || n == 0) throw Error(ErrorKind::HypothesisViolated, "metacyclic group with zero modulus");
  std::vector<std::size_t> rpow(n + 1, 1 % m);
  for (std::size_t j = 1; j <= n; ++j) rpow[j] = rpow[j - 1] * (r % m) % m;
  if (rpow[n] != 1 % m) throw Error(ErrorKind::HypothesisViolated, "r^n != 1 mod m");
  // (b^j a^i)(b^l a^k) = b^(j+l) a^(i r^l + k)
  return group_from_rule(m * n, [=](std::size_t x, std::size_t y) {
    std::size_t j = x / m, i = x % m, l = y / m, k = y % m;
    return ((j + l) % n) * m + (i * rpow[l] + k) % m;
  });
}

Group dihedral_group(std::size_t order) {
  if (order < 2 || order % 2) throw Error(ErrorKind::HypothesisViolated, "dihedral order must be even");
  std::size_t m = order / 2;
  return metacyclic_group(m, 2, m - 1);
}

Group dicyclic_group(std::size_t order) {
  if (order < 4 || order % 4) throw Error(ErrorKind::HypothesisViolated, "dicyclic order must be 4m");
  const std::size_t m2 = order / 2;  // a has order 2m, b^2 = a^m
  const std::size_t m = order / 4;
  // a^i b^j at index j*2m + i; b a^k = a^-k b
  return group_from_rule(order, [=](std::size_t x, std::size_t y) {
    std::size_t j = x / m2, i = x % m2, l = y / m2, k = y % m2;
    std::size_t exp = j ? (i + m2 - k) : (i + k);
    if (j && l) return (exp + m) % m2;
    return ((j + l) % 2) * m2 + exp % m2;
  });
}

Group heisenberg_group(std::size_t m1, std::size_t m2, std::size_t m3) {
  if (m3 == 0 || m1 % m3 || m2 % m3)
    throw Error(ErrorKind::HypothesisViolated, "m3 must divide m1 and m2");
  return group_from_rule(m1 * m2 * m3, [=](std::size_t a, std::size_t b) {
    std::size_t x = a / (m2 * m3), y = a / m3 % m2, z = a % m3;
    std::size_t x2 = b / (m2 * m3), y2 = b / m3 % m2, z2 = b % m3;
    return ((x + x2) % m1) * m2 * m3 + ((y + y2) % m2) * m3 + (z + z2 + x * y2) % m3;
  });
}

Group bilinear_extension(const std::vector<std::size_t>& aMods, const std::vector<std::size_t>& zMods,
                         const std::vector<std::vector<std::vector<std::size_t>>>& forms) {
  if (forms.size() != zMods.size()) throw Error(ErrorKind::HypothesisViolated, "one form per central factor");
  for (std::size_t l = 0; l < zMods.size(); ++l) {
    if (forms[l].size() != aMods.size()) throw Error(ErrorKind::HypothesisViolated, "form has wrong shape");
    for (std::size_t i = 0; i < aMods.size(); ++i) {
      if (forms[l][i].size() != aMods.size()) throw Error(ErrorKind::HypothesisViolated, "form has wrong shape");
      for (std::size_t j = 0; j < aMods.size(); ++j) {
        std::size_t coef = forms[l][i][j];
        if ((coef * aMods[i]) % zMods[l] || (coef * aMods[j]) % zMods[l])
          throw Error(ErrorKind::HypothesisViolated, "cocycle not well defined on the moduli");
      }
    }
  }
  std::size_t aOrder = 1, zOrder = 1;
  for (auto m : aMods) aOrder *= m;
  for (auto m : zMods) zOrder *= m;

  auto decode = [](std::size_t v, const std::vector<std::size_t>& mods) {
    std::vector<std::size_t> digits(mods.size());
    for (std::size_t i = mods.size(); i-- > 0;) {
      digits[i] = v % mods[i];
      v /= mods[i];
    }
    return digits;
  };
  auto encode = [](const std::vector<std::size_t>& digits, const std::vector<std::size_t>& mods) {
    std::size_t v = 0;
    for (std::size_t i = 0; i < mods.size(); ++i) v = v * mods[i] + digits[i] % mods[i];
    return v;
  };
  return group_from_rule(aOrder * zOrder, [&](std::size_t x, std::size_t y) {
    auto u = decode(x / zOrder, aMods), u2 = decode(y / zOrder, aMods);
    auto w = decode(x % zOrder, zMods), w2 = decode(y % zOrder, zMods);
    std::vector<std::size_t> su(aMods.size()), sw(zMods.size());
    for (std::size_t i = 0; i < aMods.size(); ++i) su[i] = u[i] + u2[i];
    for (std::size_t l = 0; l < zMods.size(); ++l) {
      std::size_t beta = 0;
      for (std::size_t i = 0; i < aMods.size(); ++i)
        for (std::size_t j = 0; j < aMods.size(); ++j) beta += forms[l][i][j] * u[i] * u2[j];
      sw[l] = w[l] + w2[l] + beta;
    }
    return encode(su, aMods) * zOrder + encode(sw, zMods);
  });
}

}  // namespace centauts
