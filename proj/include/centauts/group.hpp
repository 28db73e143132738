#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace centauts {

// Elements of a group are dense indices 0..n-1.
using Element = std::uint16_t;

inline constexpr std::size_t kHardElementCap = 4096;
inline constexpr std::size_t kDefaultElementCap = 512;

/// A finite group stored as a full multiplication table.
///
/// Immutable once built; every constructor validates the group axioms
/// (identity, inverses, associativity on all triples) and throws
/// Error{NotAGroup} with a witness on failure.
class Group {
 public:
  static Group from_cayley_table(const std::vector<std::vector<std::int64_t>>& table,
                                 std::size_t cap = kDefaultElementCap);
  static Group from_flat_table(std::size_t n, std::vector<Element> table,
                               std::vector<std::string> labels = {},
                               std::size_t cap = kDefaultElementCap);

  std::size_t order() const noexcept { return n_; }
  Element identity() const noexcept { return identity_; }

  Element mul(Element x, Element y) const noexcept { return table_[std::size_t{x} * n_ + y]; }
  Element inv(Element x) const noexcept { return inv_[x]; }
  Element power(Element x, std::uint64_t k) const noexcept;
  // [g,h] = g^-1 h^-1 g h
  Element commutator(Element g, Element h) const noexcept;
  // g^-1 x g
  Element conjugate(Element x, Element g) const noexcept;
  std::size_t element_order(Element x) const noexcept { return orders_[x]; }

  std::span<const Element> table() const noexcept { return table_; }
  std::span<const Element> row(Element x) const noexcept {
    return std::span<const Element>(table_).subspan(std::size_t{x} * n_, n_);
  }

  bool has_labels() const noexcept { return !labels_.empty(); }
  std::string label(Element x) const;

  bool is_abelian() const noexcept;

  friend bool operator==(const Group& a, const Group& b) noexcept {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  Group() = default;

  std::size_t n_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::vector<std::size_t> orders_;
  std::vector<std::string> labels_;
};

/// A subset of a parent group's elements closed under multiplication.
/// The parent is passed alongside at every call site; the subgroup only
/// remembers the parent's order so mismatched pairings are caught.
class Subgroup {
 public:
  Subgroup() = default;
  // members must already be closed; they are sorted and deduplicated here.
  Subgroup(std::size_t parentOrder, std::vector<Element> members);

  std::size_t size() const noexcept { return members_.size(); }
  std::size_t parent_order() const noexcept { return mask_.size(); }
  std::span<const Element> members() const noexcept { return members_; }
  bool contains(Element x) const noexcept { return x < mask_.size() && mask_[x] != 0; }
  bool is_trivial() const noexcept { return members_.size() <= 1; }
  bool is_subset_of(const Subgroup& other) const noexcept;

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.members_ == b.members_ && a.mask_.size() == b.mask_.size();
  }
  // Ordering by (size, members).
  friend bool operator<(const Subgroup& a, const Subgroup& b) noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members_ < b.members_;
  }

 private:
  std::vector<Element> members_;
  std::vector<std::uint8_t> mask_;
};

struct QuotientMap {
  Group target;
  // source element -> target element
  std::vector<Element> projection;
  // target element -> least source index in its coset
  std::vector<Element> representatives;
};

// --- construction ---------------------------------------------------------

/// Permutations are given in image form: gen[i] is the image of point i.
/// Products act left to right: (x*g)[i] = g[x[i]]. Elements are indexed in
/// breadth-first discovery order from the identity, expanding each element
/// by the generators in their given order.
Group from_permutation_generators(std::size_t degree,
                                  const std::vector<std::vector<std::size_t>>& gens,
                                  std::size_t cap = kDefaultElementCap);

// Index of (g, h) is g*|H| + h.
Group direct_product(const Group& g, const Group& h, std::size_t cap = kDefaultElementCap);

// The subgroup as a group in its own right; element i is members()[i].
Group induced_group(const Group& g, const Subgroup& s);

// --- subgroups ------------------------------------------------------------

Subgroup whole_group(const Group& g);
Subgroup trivial_subgroup(const Group& g);
// Validates closure; throws NotAGroup if the set is not a subgroup.
Subgroup make_subgroup(const Group& g, std::vector<Element> members);
Subgroup subgroup_generated(const Group& g, std::span<const Element> seed);

Subgroup center(const Group& g);
Subgroup commutator_subgroup(const Group& g);
// [A, B] = <[a,b] : a in A, b in B>
Subgroup commutator_of(const Group& g, const Subgroup& a, const Subgroup& b);
Subgroup frattini_subgroup(const Group& g);
Subgroup intersection(const Group& g, const Subgroup& a, const Subgroup& b);

bool is_normal(const Group& g, const Subgroup& n);
bool is_abelian(const Group& g, const Subgroup& s);
bool is_cyclic(const Group& g, const Subgroup& s);
bool is_central(const Group& g, const Subgroup& s);

QuotientMap quotient(const Group& g, const Subgroup& n);

// --- invariants -----------------------------------------------------------

std::optional<unsigned> p_group_prime(const Group& g);
// p if n = p^k with k >= 1, nullopt otherwise.
std::optional<unsigned> prime_power_base(std::size_t n);
bool is_prime(std::uint64_t n);

std::size_t exponent(const Group& g);
std::size_t exponent(const Group& g, const Subgroup& s);

// Length of the lower central series; 0 for the trivial group.
int nilpotency_class(const Group& g);

// --- subgroup lattice -----------------------------------------------------

std::vector<Subgroup> all_subgroups_of(const Group& g, const Subgroup& s,
                                       std::size_t cap = kDefaultElementCap);
std::vector<Subgroup> normal_subgroups(const Group& g, std::size_t cap = kDefaultElementCap);

}  // namespace centauts
