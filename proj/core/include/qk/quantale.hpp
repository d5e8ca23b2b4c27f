#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qk/element_set.hpp"
#include "qk/error.hpp"

namespace qk {

inline constexpr std::size_t kDefaultElementCap = 4096;

enum class AxiomStatus { Unchecked, Valid, Invalid };

/// A finite lattice with a binary multiplication, all operations tabulated.
///
/// Instances are immutable and cheap to copy: copies share the same tables.
/// Two handles denote the same carrier iff `same_carrier` holds, which is how
/// ideals and homomorphisms detect mixing of unrelated instances.
///
/// Built only through `build_quantale`; the multiplication is accepted even if
/// it violates the quantale axioms (see `check_axioms`).
class FiniteQuantale {
 public:
  const std::string& name() const;
  std::size_t size() const;

  const std::vector<std::string>& labels() const;
  const std::string& label(Element x) const;
  std::optional<Element> find(std::string_view label) const;
  /// Throws UndeclaredLabel.
  Element at(std::string_view label) const;

  bool leq(Element a, Element b) const;
  Element join(Element a, Element b) const;
  Element meet(Element a, Element b) const;
  Element mul(Element a, Element b) const;
  Element bottom() const;
  Element top() const;

  /// Join of a subset; bottom for the empty set.
  Element join_of(const ElementSet& s) const;
  /// Meet of a subset; top for the empty set.
  Element meet_of(const ElementSet& s) const;

  /// {y | y <= x}
  const ElementSet& down_set(Element x) const;
  /// {y | x <= y}
  const ElementSet& up_set(Element x) const;
  ElementSet all() const { return ElementSet::full(size()); }
  ElementSet empty_set() const { return ElementSet(size()); }

  /// Covering pairs (a, b): a < b with nothing strictly between, sorted.
  std::vector<std::pair<Element, Element>> covers() const;

  /// Row-major n*n multiplication table.
  std::span<const Element> mul_table() const;

  bool is_commutative() const;
  AxiomStatus axiom_status() const { return status_; }
  FiniteQuantale with_status(AxiomStatus s) const {
    auto copy = *this;
    copy.status_ = s;
    return copy;
  }
  FiniteQuantale renamed(std::string name) const;

  bool same_carrier(const FiniteQuantale& other) const { return tables_ == other.tables_; }

  struct Tables;

 private:
  explicit FiniteQuantale(std::shared_ptr<const Tables> t) : tables_(std::move(t)) {}
  friend FiniteQuantale make_quantale(std::shared_ptr<const Tables>);

  std::shared_ptr<const Tables> tables_;
  AxiomStatus status_ = AxiomStatus::Unchecked;
};

/// Labels, order and multiplication compare equal.
bool structurally_equal(const FiniteQuantale& a, const FiniteQuantale& b);

/// Builds a carrier from generating order pairs (a <= b), taking the
/// reflexive-transitive closure. `mul` is row-major n*n.
///
/// Errors: DuplicateLabel, InvalidArgument (index out of range, wrong table
/// size), TooLarge, NotAPartialOrder, NotALattice, MissingBound.
FiniteQuantale build_quantale(std::string name, std::vector<std::string> labels,
                              std::span<const std::pair<Element, Element>> order, std::span<const Element> mul,
                              std::size_t cap = kDefaultElementCap);

/// Label-level front end of `build_quantale`. Also reports UndeclaredLabel and
/// RowArity.
FiniteQuantale build_quantale(std::string name, std::vector<std::string> labels,
                              const std::vector<std::pair<std::string, std::string>>& order,
                              const std::vector<std::vector<std::string>>& mul, std::size_t cap = kDefaultElementCap);

/// Same lattice, different multiplication table. Status is reset to Unchecked.
FiniteQuantale replace_mul(const FiniteQuantale& q, std::span<const Element> mul);

struct AxiomWitness {
  std::string axiom;
  std::vector<Element> elements;
};

struct AxiomReport {
  bool lattice_ok = true;
  bool assoc_ok = true;
  bool comm_ok = true;
  bool distrib_ok = true;
  bool identity_ok = true;
  std::vector<AxiomWitness> counterexamples;

  bool all_ok() const { return lattice_ok && assoc_ok && comm_ok && distrib_ok && identity_ok; }
};

/// Exhaustive check of the integral commutative quantale axioms. Binary
/// distributivity plus x&bot = bot covers joins of every finite family.
AxiomReport check_axioms(const FiniteQuantale& q);

/// Runs `check_axioms` and records the outcome in the returned handle.
FiniteQuantale checked(const FiniteQuantale& q);

/// Throws NotCommutative.
void require_commutative(const FiniteQuantale& q);

/// n-fold product x & ... & x, n >= 1 (InvalidArgument otherwise).
Element power(const FiniteQuantale& q, Element x, unsigned n);

/// Join over k = 0..n of x^(n-k) & y^k, with x^0 = y^0 = top.
Element power_of_join(const FiniteQuantale& q, Element x, Element y, unsigned n);

/// x & y = top for some y.
bool is_unit(const FiniteQuantale& q, Element x);

}  // namespace qk
