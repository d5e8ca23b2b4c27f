#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qk/classify.hpp"

namespace qk {

/// J ^ J' = I forces J = I or J' = I, over all ideal pairs.
Verdict is_irreducible(const Ideal& i);
/// J ^ J' within I forces J or J' within I, over all ideal pairs. The
/// element-wise form is computed as well; ContractViolation if they disagree.
Verdict is_strongly_irreducible(const Ideal& i);
Verdict is_strongly_irreducible_idealwise(const Ideal& i);
/// down(a) ^ down(b) within I forces a or b in I.
Verdict is_strongly_irreducible_elementwise(const Ideal& i);

/// An irreducible ideal containing `i` and missing `x`: the lowest-apex ideal
/// maximal among those. Empty when `x` is in `i`.
std::optional<Ideal> irreducible_avoiding(const Ideal& i, Element x);

enum class DecompositionKind { Primary, Irreducible };

struct Decomposition {
  Ideal target;
  std::vector<Ideal> components;
  DecompositionKind kind = DecompositionKind::Primary;
  /// Radicals of the components (primary kind only).
  std::vector<Ideal> radicals;
  bool minimal = false;
};

/// Thrown by `primary_decomposition` when the primary ideals over the target
/// meet in something larger. `gap` is that meet.
class NotDecomposableError : public Error {
 public:
  NotDecomposableError(Ideal target, Ideal gap);
  const Ideal& target() const { return target_; }
  const Ideal& gap() const { return gap_; }

 private:
  Ideal target_;
  Ideal gap_;
};

/// Irredundant meet of proper irreducible ideals. Throws NotProper.
Decomposition irreducible_decomposition(const Ideal& i);
/// Minimal primary decomposition. Throws NotProper, NotDecomposableError.
Decomposition primary_decomposition(const Ideal& i);
/// Merges components with equal radicals and drops redundant ones. Throws
/// InvalidDecomposition when the input is not a primary decomposition.
Decomposition minimize(const Decomposition& d);
/// Both minimality conditions: distinct radicals, and no component contains
/// the meet of the others.
bool is_minimal_decomposition(const Decomposition& d);
/// Every minimal primary decomposition of `i` (n <= 10, TooLarge otherwise),
/// components in apex order. Empty when `i` is not decomposable.
std::vector<Decomposition> enumerate_minimal_decompositions(const Ideal& i);

struct UniquenessReport {
  Ideal target;
  Decomposition decomposition;
  std::vector<Ideal> associated_primes;
  std::vector<Ideal> colon_primes;
  std::vector<Ideal> isolated;
  std::vector<Ideal> embedded;
  bool associated_equals_colon = false;
  bool isolated_are_minimal_primes = false;
  /// For each isolated prime P, its component equals {a | a & b in I for some b outside P}.
  bool isolated_components_characterized = false;
  /// Every enumerated minimal decomposition has the same isolated components.
  bool isolated_components_match = false;
  std::size_t decompositions_enumerated = 0;
};

/// Throws NotDecomposableError.
UniquenessReport uniqueness_report(const Ideal& i);

/// (P' : x) for a primary P'. Checks the three cases (x in P'; x outside P';
/// x outside the radical) and throws ContractViolation if one fails.
/// Throws NotPrimary.
Ideal quotient_by_element(const Ideal& p_primary, Element x);

/// The ideal lattice is distributive.
bool is_arithmetic(const FiniteQuantale& q);

struct ArithmeticReport {
  bool arithmetic = false;
  std::vector<Ideal> irreducible;
  std::vector<Ideal> strongly_irreducible;
  /// Ideal apexes (I, J, K) with I ^ (J v K) != (I ^ J) v (I ^ K).
  std::vector<Element> distributivity_witness;
  /// An irreducible ideal that is not strongly irreducible.
  std::optional<Element> irreducible_not_strong;
  bool every_ideal_meet_of_strongly_irreducible = false;
  /// Arithmetic iff the two sets coincide, and if arithmetic every ideal is the
  /// meet of the strongly irreducible ideals over it.
  bool consistent = false;
};

ArithmeticReport arithmetic_equivalence_check(const FiniteQuantale& q);

/// Lowest-apex strongly irreducible ideal minimal over `i`. Throws NotProper.
Ideal minimal_strongly_irreducible_over(const Ideal& i);

/// Ideals form a chain. Throws ContractViolation if this disagrees with every
/// ideal being strongly irreducible.
bool totally_ordered_ideals(const FiniteQuantale& q);

struct Classification {
  Ideal ideal;
  bool proper = false;
  bool maximal = false;
  bool minimal_ideal = false;
  bool minimal_prime = false;
  bool prime = false;
  bool semiprime = false;
  bool primary = false;
  bool radical_ideal = false;
  bool irreducible = false;
  bool strongly_irreducible = false;
  Ideal radical;
  /// Flag name to counterexample, for flags that are false and have one.
  std::map<std::string, std::vector<Element>> witnesses;
};

Classification classify(const Ideal& i);

}  // namespace qk
