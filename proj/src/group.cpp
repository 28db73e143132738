#include "centauts/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "centauts/error.hpp"

namespace centauts {
namespace {

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  std::size_t limit = std::min(cap, kHardElementCap);
  if (n > limit) {
    throw Error(ErrorKind::SizeLimitExceeded,
                std::string(what) + " has " + std::to_string(n) + " elements, cap is " +
                    std::to_string(limit));
  }
}

// Closure of gens under multiplication; returns members in discovery order.
std::vector<Element> close_under_mul(const Group& g, std::span<const Element> gens,
                                     std::vector<std::uint8_t>& mask) {
  mask.assign(g.order(), 0);
  std::vector<Element> out{g.identity()};
  mask[g.identity()] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    Element x = out[i];
    for (Element s : gens) {
      Element y = g.mul(x, s);
      if (!mask[y]) {
        mask[y] = 1;
        out.push_back(y);
      }
    }
  }
  return out;
}

std::string cycle_string(const std::vector<std::uint32_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::ostringstream out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << j;
      first = false;
      j = perm[j];
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

}  // namespace

// --- Group ----------------------------------------------------------------

Group Group::from_cayley_table(const std::vector<std::vector<std::int64_t>>& table,
                               std::size_t cap) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::NotAGroup, "empty table");
  check_cap(n, cap, "Cayley table");
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw Error(ErrorKind::NotAGroup, "row " + std::to_string(i) + " has length " +
                                            std::to_string(table[i].size()) + ", expected " +
                                            std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t v = table[i][j];
      if (v < 0 || static_cast<std::uint64_t>(v) >= n) {
        throw Error(ErrorKind::NotAGroup, "entry (" + std::to_string(i) + "," +
                                              std::to_string(j) + ") = " + std::to_string(v) +
                                              " out of range");
      }
      flat.push_back(static_cast<Element>(v));
    }
  }
  return from_flat_table(n, std::move(flat), {}, cap);
}

Group Group::from_flat_table(std::size_t n, std::vector<Element> table,
                             std::vector<std::string> labels, std::size_t cap) {
  if (n == 0) throw Error(ErrorKind::NotAGroup, "empty table");
  check_cap(n, cap, "group");
  if (table.size() != n * n) throw Error(ErrorKind::NotAGroup, "table is not n x n");
  for (Element v : table) {
    if (v >= n) throw Error(ErrorKind::NotAGroup, "entry out of range");
  }
  if (!labels.empty() && labels.size() != n) {
    throw Error(ErrorKind::NotAGroup, "label count does not match order");
  }

  Group g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);

  std::optional<Element> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = g.mul(static_cast<Element>(e), static_cast<Element>(x)) == x &&
           g.mul(static_cast<Element>(x), static_cast<Element>(e)) == x;
    }
    if (ok) identity = static_cast<Element>(e);
  }
  if (!identity) throw Error(ErrorKind::NotAGroup, "no two-sided identity");
  g.identity_ = *identity;

  g.inv_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    std::optional<Element> y;
    for (std::size_t c = 0; c < n; ++c) {
      if (g.mul(static_cast<Element>(x), static_cast<Element>(c)) == g.identity_) {
        y = static_cast<Element>(c);
        break;
      }
    }
    if (!y || g.mul(*y, static_cast<Element>(x)) != g.identity_) {
      throw Error(ErrorKind::NotAGroup, "element " + std::to_string(x) + " has no inverse");
    }
    g.inv_[x] = *y;
  }

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Element xy = g.mul(static_cast<Element>(x), static_cast<Element>(y));
      for (std::size_t z = 0; z < n; ++z) {
        if (g.mul(xy, static_cast<Element>(z)) !=
            g.mul(static_cast<Element>(x), g.mul(static_cast<Element>(y), static_cast<Element>(z)))) {
          throw Error(ErrorKind::NotAGroup, "associativity fails at (" + std::to_string(x) + "," +
                                                std::to_string(y) + "," + std::to_string(z) + ")");
        }
      }
    }
  }

  g.orders_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t k = 1;
    Element acc = static_cast<Element>(x);
    while (acc != g.identity_) {
      acc = g.mul(acc, static_cast<Element>(x));
      ++k;
    }
    g.orders_[x] = k;
  }
  return g;
}

Element Group::power(Element x, std::uint64_t k) const noexcept {
  k %= orders_[x];
  Element acc = identity_;
  Element base = x;
  while (k) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

Element Group::commutator(Element g, Element h) const noexcept {
  return mul(mul(inv(g), inv(h)), mul(g, h));
}

Element Group::conjugate(Element x, Element g) const noexcept {
  return mul(mul(inv(g), x), g);
}

std::string Group::label(Element x) const {
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

bool Group::is_abelian() const noexcept {
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = x + 1; y < n_; ++y)
      if (table_[x * n_ + y] != table_[y * n_ + x]) return false;
  return true;
}

// --- Subgroup -------------------------------------------------------------

Subgroup::Subgroup(std::size_t parentOrder, std::vector<Element> members)
    : members_(std::move(members)), mask_(parentOrder, 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Element x : members_) mask_.at(x) = 1;
}

bool Subgroup::is_subset_of(const Subgroup& other) const noexcept {
  return std::all_of(members_.begin(), members_.end(),
                     [&](Element x) { return other.contains(x); });
}

// --- construction ---------------------------------------------------------

Group from_permutation_generators(std::size_t degree,
                                  const std::vector<std::vector<std::size_t>>& gens,
                                  std::size_t cap) {
  using Perm = std::vector<std::uint32_t>;
  std::vector<Perm> generators;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto& gen = gens[k];
    if (gen.size() != degree) {
      throw Error(ErrorKind::NotAGroup, "generator " + std::to_string(k) + " has length " +
                                            std::to_string(gen.size()) + ", degree is " +
                                            std::to_string(degree));
    }
    std::vector<bool> hit(degree, false);
    Perm p(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      if (gen[i] >= degree || hit[gen[i]]) {
        throw Error(ErrorKind::NotAGroup,
                    "generator " + std::to_string(k) + " is not a bijection on [0," +
                        std::to_string(degree) + ")");
      }
      hit[gen[i]] = true;
      p[i] = static_cast<std::uint32_t>(gen[i]);
    }
    generators.push_back(std::move(p));
  }

  const std::size_t limit = std::min(cap, kHardElementCap);
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Perm> elems{id};
  std::map<Perm, std::size_t> index{{id, 0}};
  auto compose = [degree](const Perm& x, const Perm& g) {
    Perm r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = g[x[i]];
    return r;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Perm& gen : generators) {
      Perm y = compose(elems[i], gen);
      if (index.emplace(y, elems.size()).second) {
        elems.push_back(std::move(y));
        if (elems.size() > limit) {
          throw Error(ErrorKind::SizeLimitExceeded,
                      "permutation closure exceeds " + std::to_string(limit) + " elements");
        }
      }
    }
  }

  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = static_cast<Element>(index.at(compose(elems[i], elems[j])));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const Perm& p : elems) labels.push_back(cycle_string(p));
  return Group::from_flat_table(n, std::move(table), std::move(labels), cap);
}

Group direct_product(const Group& g, const Group& h, std::size_t cap) {
  const std::size_t a = g.order(), b = h.order(), n = a * b;
  check_cap(n, cap, "direct product");
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto gx = static_cast<Element>(x / b), hx = static_cast<Element>(x % b);
    for (std::size_t y = 0; y < n; ++y) {
      const auto gy = static_cast<Element>(y / b), hy = static_cast<Element>(y % b);
      table[x * n + y] = static_cast<Element>(std::size_t{g.mul(gx, gy)} * b + h.mul(hx, hy));
    }
  }
  std::vector<std::string> labels;
  if (g.has_labels() || h.has_labels()) {
    labels.reserve(n);
    for (std::size_t x = 0; x < n; ++x)
      labels.push_back("(" + g.label(static_cast<Element>(x / b)) + "," +
                       h.label(static_cast<Element>(x % b)) + ")");
  }
  return Group::from_flat_table(n, std::move(table), std::move(labels), cap);
}

Group induced_group(const Group& g, const Subgroup& s) {
  const auto members = s.members();
  const std::size_t m = members.size();
  std::vector<Element> pos(g.order(), 0);
  for (std::size_t i = 0; i < m; ++i) pos[members[i]] = static_cast<Element>(i);
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Element prod = g.mul(members[i], members[j]);
      if (!s.contains(prod)) throw Error(ErrorKind::NotAGroup, "subset is not closed");
      table[i * m + j] = pos[prod];
    }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    for (Element x : members) labels.push_back(g.label(x));
  }
  return Group::from_flat_table(m, std::move(table), std::move(labels), kHardElementCap);
}

// --- subgroups ------------------------------------------------------------

Subgroup whole_group(const Group& g) {
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), Element{0});
  return Subgroup(g.order(), std::move(all));
}

Subgroup trivial_subgroup(const Group& g) { return Subgroup(g.order(), {g.identity()}); }

Subgroup make_subgroup(const Group& g, std::vector<Element> members) {
  for (Element x : members) {
    if (x >= g.order()) throw Error(ErrorKind::NotAGroup, "member index out of range");
  }
  Subgroup s(g.order(), std::move(members));
  if (!s.contains(g.identity())) throw Error(ErrorKind::NotAGroup, "subset lacks the identity");
  for (Element x : s.members()) {
    if (!s.contains(g.inv(x)))
      throw Error(ErrorKind::NotAGroup, "subset not closed under inverses at " + std::to_string(x));
    for (Element y : s.members()) {
      if (!s.contains(g.mul(x, y)))
        throw Error(ErrorKind::NotAGroup, "subset not closed at (" + std::to_string(x) + "," +
                                              std::to_string(y) + ")");
    }
  }
  return s;
}

Subgroup subgroup_generated(const Group& g, std::span<const Element> seed) {
  for (Element x : seed) {
    if (x >= g.order()) throw Error(ErrorKind::NotAGroup, "seed index out of range");
  }
  std::vector<std::uint8_t> mask;
  return Subgroup(g.order(), close_under_mul(g, seed, mask));
}

Subgroup center(const Group& g) {
  std::vector<Element> z;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (std::size_t y = 0; y < g.order() && central; ++y)
      central = g.mul(static_cast<Element>(x), static_cast<Element>(y)) ==
                g.mul(static_cast<Element>(y), static_cast<Element>(x));
    if (central) z.push_back(static_cast<Element>(x));
  }
  return Subgroup(g.order(), std::move(z));
}

Subgroup commutator_of(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::vector<std::uint8_t> seen(g.order(), 0);
  std::vector<Element> seed;
  for (Element x : a.members())
    for (Element y : b.members()) {
      Element c = g.commutator(x, y);
      if (!seen[c]) {
        seen[c] = 1;
        seed.push_back(c);
      }
    }
  return subgroup_generated(g, seed);
}

Subgroup commutator_subgroup(const Group& g) {
  Subgroup all = whole_group(g);
  return commutator_of(g, all, all);
}

Subgroup frattini_subgroup(const Group& g) {
  if (g.order() == 1) return trivial_subgroup(g);
  auto p = p_group_prime(g);
  if (!p) throw Error(ErrorKind::NotPGroup, "order " + std::to_string(g.order()) + " is not a prime power");
  std::vector<std::uint8_t> seen(g.order(), 0);
  std::vector<Element> seed;
  auto add = [&](Element x) {
    if (!seen[x]) {
      seen[x] = 1;
      seed.push_back(x);
    }
  };
  for (std::size_t x = 0; x < g.order(); ++x) {
    add(g.power(static_cast<Element>(x), *p));
    for (std::size_t y = 0; y < g.order(); ++y)
      add(g.commutator(static_cast<Element>(x), static_cast<Element>(y)));
  }
  return subgroup_generated(g, seed);
}

Subgroup intersection(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Element> common;
  for (Element x : a.members())
    if (b.contains(x)) common.push_back(x);
  return Subgroup(g.order(), std::move(common));
}

bool is_normal(const Group& g, const Subgroup& n) {
  for (Element x : n.members())
    for (std::size_t y = 0; y < g.order(); ++y)
      if (!n.contains(g.conjugate(x, static_cast<Element>(y)))) return false;
  return true;
}

bool is_abelian(const Group& g, const Subgroup& s) {
  for (Element x : s.members())
    for (Element y : s.members())
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

bool is_cyclic(const Group& g, const Subgroup& s) {
  return std::any_of(s.members().begin(), s.members().end(),
                     [&](Element x) { return g.element_order(x) == s.size(); });
}

bool is_central(const Group& g, const Subgroup& s) {
  for (Element x : s.members())
    for (std::size_t y = 0; y < g.order(); ++y)
      if (g.mul(x, static_cast<Element>(y)) != g.mul(static_cast<Element>(y), x)) return false;
  return true;
}

QuotientMap quotient(const Group& g, const Subgroup& n) {
  for (Element x : n.members())
    for (std::size_t y = 0; y < g.order(); ++y)
      if (!n.contains(g.conjugate(x, static_cast<Element>(y)))) {
        throw Error(ErrorKind::NotNormal, "conjugate of " + std::to_string(x) + " by " +
                                              std::to_string(y) + " leaves the subgroup");
      }
  constexpr Element kUnassigned = static_cast<Element>(-1);
  QuotientMap q{Group::from_flat_table(1, {0}), std::vector<Element>(g.order(), kUnassigned), {}};
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (q.projection[x] != kUnassigned) continue;
    auto id = static_cast<Element>(q.representatives.size());
    q.representatives.push_back(static_cast<Element>(x));
    for (Element m : n.members()) q.projection[g.mul(static_cast<Element>(x), m)] = id;
  }
  const std::size_t k = q.representatives.size();
  std::vector<Element> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      table[i * k + j] = q.projection[g.mul(q.representatives[i], q.representatives[j])];
  q.target = Group::from_flat_table(k, std::move(table), {}, kHardElementCap);
  return q;
}

// --- invariants -----------------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<unsigned> prime_power_base(std::size_t n) {
  if (n < 2) return std::nullopt;
  std::size_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return static_cast<unsigned>(p);
}

std::optional<unsigned> p_group_prime(const Group& g) { return prime_power_base(g.order()); }

std::size_t exponent(const Group& g) { return exponent(g, whole_group(g)); }

std::size_t exponent(const Group& g, const Subgroup& s) {
  std::size_t e = 1;
  for (Element x : s.members()) e = std::lcm(e, g.element_order(x));
  return e;
}

int nilpotency_class(const Group& g) {
  if (g.order() == 1) return 0;
  Subgroup all = whole_group(g);
  Subgroup cur = all;
  int cls = 0;
  while (!cur.is_trivial()) {
    Subgroup next = commutator_of(g, cur, all);
    ++cls;
    if (next == cur) {
      throw Error(ErrorKind::NotNilpotent, "lower central series stabilizes at order " +
                                               std::to_string(cur.size()));
    }
    cur = std::move(next);
  }
  return cls;
}

// --- subgroup lattice -----------------------------------------------------

std::vector<Subgroup> all_subgroups_of(const Group& g, const Subgroup& s, std::size_t cap) {
  constexpr std::size_t kMaxSubgroups = 200000;
  check_cap(s.size(), cap, "subgroup");

  struct Node {
    std::vector<Element> gens;
    std::vector<Element> members;
  };
  std::set<std::vector<Element>> seen;
  std::vector<Node> nodes;
  nodes.push_back({{}, {g.identity()}});
  seen.insert(nodes.back().members);

  std::vector<std::uint8_t> mask;
  std::vector<std::uint8_t> inNode(g.order(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::fill(inNode.begin(), inNode.end(), 0);
    for (Element x : nodes[i].members) inNode[x] = 1;
    for (Element x : s.members()) {
      if (inNode[x]) continue;
      std::vector<Element> gens = nodes[i].gens;
      gens.push_back(x);
      std::vector<Element> members = close_under_mul(g, gens, mask);
      std::sort(members.begin(), members.end());
      if (seen.insert(members).second) {
        nodes.push_back({std::move(gens), std::move(members)});
        if (nodes.size() > kMaxSubgroups) {
          throw Error(ErrorKind::SizeLimitExceeded, "more than " + std::to_string(kMaxSubgroups) +
                                                        " subgroups");
        }
      }
    }
  }

  std::vector<Subgroup> out;
  out.reserve(nodes.size());
  for (auto& node : nodes) out.emplace_back(g.order(), std::move(node.members));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> normal_subgroups(const Group& g, std::size_t cap) {
  std::vector<Subgroup> out;
  for (auto& s : all_subgroups_of(g, whole_group(g), cap))
    if (is_normal(g, s)) out.push_back(std::move(s));
  return out;
}

}  // namespace centauts
