#pragma once

#include <vector>

#include "qk/hom.hpp"
#include "qk/quantale.hpp"

namespace qk {

/// A nonempty down-closed, join-closed subset of a carrier.
///
/// Members are stored explicitly; `apex` is derived. Construct through the
/// functions below, which validate membership.
class Ideal {
 public:
  const FiniteQuantale& carrier() const { return carrier_; }
  const ElementSet& members() const { return members_; }

  bool contains(Element x) const { return members_.contains(x); }
  std::size_t size() const { return members_.count(); }
  /// Join of all members.
  Element apex() const { return carrier_.join_of(members_); }
  bool is_whole() const { return members_.count() == carrier_.size(); }
  bool is_proper() const { return !is_whole(); }
  bool is_zero() const { return members_.count() == 1; }
  bool is_subset_of(const Ideal& o) const { return members_.is_subset_of(o.members_); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.carrier_.same_carrier(b.carrier_) && a.members_ == b.members_;
  }

  /// Trusts that `members` is an ideal of `q`.
  static Ideal unchecked(FiniteQuantale q, ElementSet members) { return Ideal(std::move(q), std::move(members)); }

 private:
  Ideal(FiniteQuantale q, ElementSet m) : carrier_(std::move(q)), members_(std::move(m)) {}

  FiniteQuantale carrier_;
  ElementSet members_;
};

/// Orders ideals by apex index; gives the canonical listing order.
bool apex_less(const Ideal& a, const Ideal& b);

bool is_ideal(const FiniteQuantale& q, const ElementSet& subset);
/// Throws InvalidArgument if `subset` is not an ideal.
Ideal make_ideal(const FiniteQuantale& q, const ElementSet& subset);

/// The down-set of `a`.
Ideal principal(const FiniteQuantale& q, Element a);
Ideal zero_ideal(const FiniteQuantale& q);
Ideal whole(const FiniteQuantale& q);

/// Least ideal containing `s`, computed from the definition
/// (down-closure of the join of all l & t with t in s). Throws EmptyGeneratorSet.
Ideal generated(const FiniteQuantale& q, const ElementSet& s);

/// All ideals, one per element, in element order. Throws NotCommutative.
std::vector<Ideal> enumerate_ideals(const FiniteQuantale& q);
/// Filters every subset of the carrier through `is_ideal` (n <= 20, TooLarge otherwise).
std::vector<ElementSet> brute_force_ideals(const FiniteQuantale& q);

Ideal meet_ideals(const Ideal& i, const Ideal& j);
Ideal join_ideals(const Ideal& i, const Ideal& j);
/// Throws NotCommutative.
Ideal product_ideals(const Ideal& i, const Ideal& j);
/// Product computed from the definition: finite joins of pairwise products.
Ideal product_by_closure(const Ideal& i, const Ideal& j);
/// (I:J) = {x | x & j in I for every j in J}. Throws NotCommutative.
Ideal residual(const Ideal& i, const Ideal& j);

/// Meet and join of a family; an empty family gives the whole carrier and the
/// zero ideal respectively.
Ideal meet_all(const FiniteQuantale& q, const std::vector<Ideal>& family);
Ideal join_all(const FiniteQuantale& q, const std::vector<Ideal>& family);

/// {x | x & t = bot for all t in s}. Throws EmptyGeneratorSet, NotCommutative.
Ideal annihilator(const FiniteQuantale& q, const ElementSet& s);

/// The quantale of ideals of a base carrier. Element k of `quantale`
/// corresponds to `ideals[k]`; labels are "I_<apex label>".
struct IdealQuantale {
  FiniteQuantale quantale;
  FiniteQuantale base;
  std::vector<Ideal> ideals;
};

/// Throws NotCommutative, TooLarge.
IdealQuantale ideal_quantale(const FiniteQuantale& q, std::size_t cap = kDefaultElementCap);

/// a -> down-set of a is an order and &-isomorphism onto the ideal quantale.
bool principal_map_is_isomorphism(const IdealQuantale& iq);

/// Preimage of `j` under `h`. Throws CarrierMismatch, and HomInvalid when the
/// preimage is empty (possible only if `h` does not send bottom to bottom).
Ideal contraction(const QuantaleHom& h, const Ideal& j);
/// Ideal generated by the image of `i` under `h`. Throws CarrierMismatch.
Ideal extension(const QuantaleHom& h, const Ideal& i);

/// Members as a comma-separated label list, e.g. "{bot,a}".
std::string format_members(const Ideal& i);

}  // namespace qk
