#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qk/ideals.hpp"

namespace qk {

/// Outcome of a predicate. When `ok` is false, `witness` holds the offending
/// elements (ideals are reported by their apex) and `note` says why.
struct Verdict {
  bool ok = true;
  std::vector<Element> witness;
  std::string note;

  explicit operator bool() const { return ok; }
  static Verdict yes() { return {}; }
  static Verdict no(std::vector<Element> w, std::string note = {}) { return {false, std::move(w), std::move(note)}; }
};

/// True iff some x^k with 1 <= k <= |Q| lies in `s`.
bool some_power_in(const FiniteQuantale& q, Element x, const ElementSet& s);

/// Proper, and x & y in P forces x or y in P.
Verdict is_prime(const Ideal& p);
/// Proper, and I & J within P forces I or J within P, over all ideal pairs.
Verdict is_prime_idealwise(const Ideal& p);

/// Proper, and x & x in I forces x in I. Computes the ideal-wise form as well
/// and throws ContractViolation if the two disagree.
Verdict is_semiprime(const Ideal& i);
Verdict is_semiprime_idealwise(const Ideal& i);
/// The semiprime condition without the properness requirement.
Verdict semiprime_condition(const Ideal& i);

/// Proper, and x & y in I forces x in I or some power of y in I.
Verdict is_primary(const Ideal& i);
/// Primary with radical `p`. Throws NotPrime if `p` is not prime.
Verdict is_p_primary(const Ideal& i, const Ideal& p);

enum class RadicalAlgorithm { Powers, Primes, Mcsets };

/// Throws NotCommutative.
Ideal radical(const Ideal& i, RadicalAlgorithm algorithm = RadicalAlgorithm::Powers);
/// The multiplicatively-closed characterization quantified over every
/// multiplicatively closed subset (n <= 8, TooLarge otherwise).
Ideal radical_all_mcsets(const Ideal& i);
bool is_radical_ideal(const Ideal& i);

bool is_maximal(const Ideal& i);

/// Prime ideals in apex order. Throws NotCommutative.
std::vector<Ideal> spectrum(const FiniteQuantale& q);
std::vector<Ideal> primes_over(const Ideal& i);
/// Inclusion-minimal primes over a proper ideal. Throws NotProper.
std::vector<Ideal> minimal_primes_over(const Ideal& i);
/// Minimal primes over `i` that lie inside the prime `p`. Throws NotPrime, and
/// InvalidArgument unless `i` is within `p`.
std::vector<Ideal> minimal_primes_between(const Ideal& i, const Ideal& p);

/// Throws Degenerate when bottom = top.
std::vector<Ideal> maximal_ideals(const FiniteQuantale& q);
/// The unique maximal ideal, if there is exactly one.
std::optional<Ideal> is_local(const FiniteQuantale& q);
Ideal jacobson(const FiniteQuantale& q);
Ideal nilradical(const FiniteQuantale& q);

/// {x | x & y = bot for some y != bot}
ElementSet zero_divisors(const FiniteQuantale& q);
bool is_qd(const FiniteQuantale& q);
bool is_reduced(const FiniteQuantale& q);

/// A subset containing top and closed under &.
class McSet {
 public:
  const FiniteQuantale& carrier() const { return carrier_; }
  const ElementSet& members() const { return members_; }
  bool contains(Element x) const { return members_.contains(x); }

  friend bool operator==(const McSet& a, const McSet& b) {
    return a.carrier_.same_carrier(b.carrier_) && a.members_ == b.members_;
  }

  /// Throws NotMc.
  static McSet make(const FiniteQuantale& q, const ElementSet& s);

 private:
  McSet(FiniteQuantale q, ElementSet m) : carrier_(std::move(q)), members_(std::move(m)) {}

  FiniteQuantale carrier_;
  ElementSet members_;
};

bool is_mc(const FiniteQuantale& q, const ElementSet& s);
/// {top, x, x^2, ...}
McSet mc_generated(const FiniteQuantale& q, Element x);
/// Every multiplicatively closed subset (n <= 8, TooLarge otherwise).
std::vector<McSet> all_mcsets(const FiniteQuantale& q);
/// {x | x & y in S for some y}
McSet saturation(const McSet& s);
/// x & y in S forces x, y in S.
bool is_saturated(const McSet& s);
/// The complement of S equals the union of the primes disjoint from S.
bool complement_is_union_of_primes(const McSet& s);
/// The complement of S equals the ideal join of the primes disjoint from S.
bool complement_is_join_of_primes(const McSet& s);
/// An ideal maximal among those disjoint from S; lowest apex on ties.
/// Throws NoAvoidingIdeal when bot is in S.
Ideal maximal_avoiding(const McSet& s);

/// An element of `stable` outside every ideal in `ps`.
///
/// Requires `stable` closed under join and &, ps[2..] prime, and `stable` not
/// contained in any ps[j]; otherwise throws HypothesisViolated naming the
/// failed hypothesis.
Element prime_avoidance(const FiniteQuantale& q, const ElementSet& stable, const std::vector<Ideal>& ps);

/// I v J = Q. When true, checks I ^ J = I & J (ContractViolation otherwise).
bool are_coprime(const Ideal& i, const Ideal& j);

}  // namespace qk
