#include "centauts/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "centauts/error.hpp"

namespace centauts {

BigInt big_pow(unsigned base, std::size_t exp) {
  BigInt r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

AbelianType::AbelianType(unsigned p, std::vector<unsigned> exps) : p_(p), exps_(std::move(exps)) {
  if (!is_prime(p)) throw Error(ErrorKind::HypothesisViolated, std::to_string(p) + " is not prime");
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) throw Error(ErrorKind::HypothesisViolated, "type entries must be positive");
    if (i > 0 && exps_[i] > exps_[i - 1])
      throw Error(ErrorKind::HypothesisViolated, "type entries must be nonincreasing");
  }
}

std::size_t AbelianType::log_order() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::size_t{0});
}

AbelianType AbelianType::slice(std::size_t from, std::size_t to) const {
  to = std::min(to, exps_.size());
  from = std::min(from, to);
  return AbelianType(p_, std::vector<unsigned>(exps_.begin() + static_cast<std::ptrdiff_t>(from),
                                               exps_.begin() + static_cast<std::ptrdiff_t>(to)));
}

std::string AbelianType::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < exps_.size(); ++i) out << (i ? "," : "") << exps_[i];
  out << ']';
  return out.str();
}

AbelianType invariants(const Group& a, unsigned p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPGroup, std::to_string(p) + " is not prime");
  if (a.order() > 1) {
    auto q = p_group_prime(a);
    if (!q || *q != p) {
      throw Error(ErrorKind::NotPGroup,
                  "order " + std::to_string(a.order()) + " is not a power of " + std::to_string(p));
    }
  }
  if (!a.is_abelian()) throw Error(ErrorKind::NotAbelian, "group is not abelian");

  // logs[i] = log_p #{x : x^(p^i) = 1} = sum_j min(a_j, i)
  std::vector<std::size_t> logs{0};
  std::size_t pi = 1;
  while (true) {
    pi *= p;
    std::size_t count = 0;
    for (std::size_t x = 0; x < a.order(); ++x)
      if (pi % a.element_order(static_cast<Element>(x)) == 0) ++count;
    std::size_t log = 0;
    for (std::size_t c = count; c > 1; c /= p) {
      if (c % p != 0) throw Error(ErrorKind::InternalDisagreement, "census count is not a power of p");
      ++log;
    }
    logs.push_back(log);
    if (count == a.order()) break;
  }
  // d[i] = #{j : a_j >= i}
  std::vector<std::size_t> d(logs.size() + 1, 0);
  for (std::size_t i = 1; i < logs.size(); ++i) d[i] = logs[i] - logs[i - 1];
  std::vector<unsigned> exps;
  for (std::size_t i = logs.size() - 1; i >= 1; --i) {
    if (d[i] < d[i + 1]) throw Error(ErrorKind::InternalDisagreement, "census is not a type census");
    exps.insert(exps.end(), d[i] - d[i + 1], static_cast<unsigned>(i));
  }
  return AbelianType(p, std::move(exps));
}

AbelianType quotient_type(const Group& g, const Subgroup& n, unsigned p) {
  return invariants(quotient(g, n).target, p);
}

AbelianType subgroup_type(const Group& g, const Subgroup& s, unsigned p) {
  return invariants(induced_group(g, s), p);
}

BigInt hom_order(const AbelianType& a, const AbelianType& b) {
  if (a.is_trivial() || b.is_trivial()) return 1;
  if (a.prime() != b.prime()) {
    throw Error(ErrorKind::PrimeMismatch, "primes " + std::to_string(a.prime()) + " and " +
                                              std::to_string(b.prime()));
  }
  std::size_t total = 0;
  for (unsigned ai : a.exps())
    for (unsigned bj : b.exps()) total += std::min(ai, bj);
  return big_pow(a.prime(), total);
}

ClassTwoInvariants class_two_invariants(const Group& g) {
  auto p = p_group_prime(g);
  if (!p) throw Error(ErrorKind::NotPGroup, "order " + std::to_string(g.order()) + " is not a prime power");
  int cls = nilpotency_class(g);
  if (cls != 2) throw Error(ErrorKind::WrongClass, "nilpotency class is " + std::to_string(cls));

  ClassTwoInvariants inv;
  inv.p = *p;
  Subgroup z = center(g);
  Subgroup gamma2 = commutator_subgroup(g);
  inv.zType = quotient_type(g, z, *p);
  inv.abType = quotient_type(g, gamma2, *p);
  inv.expZ = exponent(g, z);
  inv.expGamma2 = exponent(g, gamma2);
  inv.c = inv.zType.log_exponent();
  const auto& a = inv.zType.exps();
  const auto& b = inv.abType.exps();
  while (inv.k < a.size() && a[inv.k] == inv.c) ++inv.k;
  inv.mBarType = inv.zType.slice(0, inv.k);
  inv.nBarType = inv.abType.slice(0, inv.k);
  inv.zResidual = inv.zType.slice(inv.k, a.size());
  inv.abResidual = inv.abType.slice(inv.k, b.size());

  if (inv.k < 2) throw Error(ErrorKind::InternalDisagreement, "k < 2 for a class-2 group");
  if (a.size() > b.size()) throw Error(ErrorKind::InternalDisagreement, "r > s for a class-2 group");
  for (std::size_t j = 0; j < a.size(); ++j)
    if (b[j] < a[j]) throw Error(ErrorKind::InternalDisagreement, "b_j < a_j for a class-2 group");
  if (big_pow(*p, inv.c) != inv.expGamma2)
    throw Error(ErrorKind::InternalDisagreement, "exp(G/Z) != exp(gamma_2)");
  return inv;
}

Lemma4Comparison lemma4_compare(const AbelianType& a, const AbelianType& b, const AbelianType& c) {
  if (a.rank() != b.rank()) throw Error(ErrorKind::HypothesisViolated, "A and B have different lengths");
  if (a.prime() != b.prime() || (!c.is_trivial() && c.prime() != a.prime()))
    throw Error(ErrorKind::HypothesisViolated, "types use different primes");
  const auto& as = a.exps();
  const auto& bs = b.exps();
  std::size_t lastStrict = 0;
  for (std::size_t j = 0; j < as.size(); ++j) {
    if (bs[j] < as[j]) {
      throw Error(ErrorKind::HypothesisViolated, "b_" + std::to_string(j + 1) + " < a_" +
                                                     std::to_string(j + 1));
    }
    if (bs[j] > as[j]) lastStrict = j + 1;
  }
  if (lastStrict == 0) throw Error(ErrorKind::HypothesisViolated, "b_j = a_j for every j");

  Lemma4Comparison out;
  // smallest t with a_j = b_j for all j > t is the last index where they differ
  out.t = lastStrict;
  out.threshold = big_pow(a.prime(), as[out.t - 1] + 1);
  out.strict = big_pow(a.prime(), c.log_exponent()) >= out.threshold;
  out.homAC = hom_order(a, c);
  out.homBC = hom_order(b, c);
  out.equivalenceHolds = out.strict == (out.homAC < out.homBC);
  return out;
}

namespace {

void partitions(unsigned remaining, unsigned maxPart, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(remaining, maxPart); part >= 1; --part) {
    cur.push_back(part);
    partitions(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<AbelianType> enumerate_types(unsigned p, std::size_t maxLogOrder) {
  std::vector<AbelianType> out;
  for (unsigned m = 0; m <= maxLogOrder; ++m) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(m, m, cur, parts);
    for (auto& e : parts) out.emplace_back(p, std::move(e));
  }
  return out;
}

}  // namespace centauts
