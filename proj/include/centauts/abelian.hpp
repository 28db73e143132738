#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

#include "centauts/group.hpp"

namespace centauts {

using BigInt = boost::multiprecision::cpp_int;

BigInt big_pow(unsigned base, std::size_t exp);

/// Invariant-factor type of a finite abelian p-group: exps = [a1 >= a2 >= ... > 0]
/// encodes C_{p^a1} x C_{p^a2} x ...; the empty list is the trivial group.
class AbelianType {
 public:
  AbelianType() = default;
  // Throws HypothesisViolated unless p is prime and exps is positive and
  // nonincreasing.
  AbelianType(unsigned p, std::vector<unsigned> exps);

  unsigned prime() const noexcept { return p_; }
  const std::vector<unsigned>& exps() const noexcept { return exps_; }
  std::size_t rank() const noexcept { return exps_.size(); }
  bool is_trivial() const noexcept { return exps_.empty(); }
  // sum of exps, so order = p^log_order
  std::size_t log_order() const noexcept;
  BigInt order() const { return big_pow(p_, log_order()); }
  // exponent = p^(a1); 0 for the trivial group (exponent 1)
  unsigned log_exponent() const noexcept { return exps_.empty() ? 0 : exps_.front(); }

  // Factors [from, to) as a type of its own.
  AbelianType slice(std::size_t from, std::size_t to) const;

  std::string to_string() const;

  // Isomorphism of finite abelian p-groups is equality of types.
  friend bool operator==(const AbelianType& a, const AbelianType& b) noexcept {
    return a.exps_ == b.exps_ && (a.exps_.empty() || a.p_ == b.p_);
  }

 private:
  unsigned p_ = 2;
  std::vector<unsigned> exps_;
};

/// Invariant type of an abelian p-group, read off from the census of
/// elements killed by p^i for i = 0, 1, ...
AbelianType invariants(const Group& a, unsigned p);

/// Type of G/N (must be abelian).
AbelianType quotient_type(const Group& g, const Subgroup& n, unsigned p);
/// Type of an abelian subgroup.
AbelianType subgroup_type(const Group& g, const Subgroup& s, unsigned p);

/// |Hom(A, B)| = prod over i, j of p^min(a_i, b_j).
/// PrimeMismatch if both types are nontrivial and their primes differ.
BigInt hom_order(const AbelianType& a, const AbelianType& b);

struct ClassTwoInvariants {
  unsigned p = 2;
  AbelianType zType;   // G/Z(G)
  AbelianType abType;  // G/gamma_2(G)
  unsigned c = 0;      // exponent of G/Z(G) is p^c
  std::size_t k = 0;   // number of leading zType factors equal to c
  AbelianType mBarType;
  AbelianType nBarType;
  AbelianType zResidual;
  AbelianType abResidual;
  std::size_t expZ = 1;
  std::size_t expGamma2 = 1;

  std::size_t r() const noexcept { return zType.rank(); }
  std::size_t s() const noexcept { return abType.rank(); }
};

/// WrongClass unless G has nilpotency class exactly 2; NotPGroup otherwise.
/// Throws InternalDisagreement if the structural facts every class-2 p-group
/// satisfies (k >= 2, r <= s, b_j >= a_j, exp(G/Z) = exp(gamma_2)) fail.
ClassTwoInvariants class_two_invariants(const Group& g);

struct Lemma4Comparison {
  std::size_t t = 0;  // 1-based
  BigInt threshold;   // p^(a_t + 1)
  bool strict = false;  // exponent of C >= threshold
  BigInt homAC;
  BigInt homBC;
  // strict == (homAC < homBC)
  bool equivalenceHolds = false;
};

/// Requires equal lengths, a common prime, b_j >= a_j everywhere and
/// b_j > a_j somewhere; HypothesisViolated names the failed condition.
Lemma4Comparison lemma4_compare(const AbelianType& a, const AbelianType& b,
                                const AbelianType& c);

// All types at prime p with sum of exps <= maxLogOrder, in a fixed order.
std::vector<AbelianType> enumerate_types(unsigned p, std::size_t maxLogOrder);

}  // namespace centauts
