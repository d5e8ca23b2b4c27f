#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qk/hom.hpp"
#include "qk/quantale.hpp"

namespace qk {

enum class Suite {
  Axioms,
  LemmaBip,
  PropositionBpi,
  Annihilator,
  Cep,
  Lpsp,
  Avoidance,
  RadicalLemma,
  Spkr,
  Saturation,
  Primary,
  Pqx,
  Uniqueness,
  Irreducible,
  Arithmetic,
  Collapse,
  All,
};

std::string_view to_string(Suite s);
/// Throws InvalidArgument for an unknown name.
Suite parse_suite(std::string_view name);
/// Every concrete suite in run order (excludes All).
const std::vector<Suite>& all_suites();

enum class LawStatus { Pass, Fail, Skipped };
std::string_view to_string(LawStatus s);

struct LawResult {
  std::string suite;
  std::string law;
  std::string statement;
  LawStatus status = LawStatus::Pass;
  /// Number of instances of the law that were evaluated.
  std::uint64_t checked = 0;
  /// Some quantifier ranged over a random sample rather than exhaustively.
  bool sampled = false;
  /// Labels of the first counterexample (ideals and subsets by their apex or members).
  std::vector<std::string> witness;
  std::string note;
};

struct SuiteTiming {
  std::string suite;
  double seconds = 0;
};

struct VerificationReport {
  std::string instance;
  std::vector<LawResult> laws;
  std::vector<SuiteTiming> timings;

  std::size_t count(LawStatus s) const;
  bool all_pass() const { return count(LawStatus::Fail) == 0; }
};

struct VerifyOptions {
  std::uint64_t seed = 0x5eed5eedULL;
  /// Subset families are enumerated exhaustively up to this many elements.
  std::size_t exhaustive_subsets = 8;
  /// Pairs and triples are enumerated exhaustively up to this many elements.
  std::size_t exhaustive_tuples = 64;
  std::size_t samples = 10000;
};

/// Runs one suite (or all). `homs` feeds the cep suite; when empty, `All`
/// falls back to `canonical_homs(q)` and an explicit `Cep` throws HomRequired.
/// On a noncommutative instance every suite except axioms is reported skipped.
VerificationReport run_suite(const FiniteQuantale& q, Suite suite, const std::vector<QuantaleHom>& homs = {},
                             const VerifyOptions& options = {});

/// The identity, the embedding a -> down(a) into the ideal quantale, and for
/// each prime P the map onto the two-element chain sending P to bottom.
std::vector<QuantaleHom> canonical_homs(const FiniteQuantale& q);

struct CrossOracleReport {
  bool ideals_match = false;
  bool radicals_agree = false;
  bool product_matches = false;
  bool isomorphism = false;
  std::size_t ideal_count = 0;

  bool all_ok() const { return ideals_match && radicals_agree && product_matches && isomorphism; }
};

/// Independent re-computations of the ideal lattice, radicals, products and
/// the ideal quantale. Throws TooLarge above 12 elements.
CrossOracleReport cross_oracle(const FiniteQuantale& q);

}  // namespace qk
