#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qk/quantale.hpp"

namespace qk {

/// Finite poset on points 1..points, given by strict relations (a < b).
struct FinitePoset {
  unsigned points = 0;
  std::vector<std::pair<unsigned, unsigned>> less;
};

/// Finite topology on points 1..points given by a subbase; bit i of a mask is point i+1.
struct FiniteTopology {
  unsigned points = 0;
  std::vector<std::uint64_t> subbase;
};

/// Subsets of {1..k}, join = union, & = intersection.
FiniteQuantale powerset(unsigned k, std::size_t cap = kDefaultElementCap);
/// Chain 0 < 1 < ... < n-1 with a & b = max(0, a + b - (n-1)).
FiniteQuantale lukasiewicz(unsigned n, std::size_t cap = kDefaultElementCap);
/// Chain 0 < ... < n-1 with & = min (a frame).
FiniteQuantale chain_frame(unsigned n, std::size_t cap = kDefaultElementCap);
/// Lower sets of a finite poset, & = intersection.
FiniteQuantale lower_sets(const FinitePoset& poset, std::size_t cap = kDefaultElementCap);
/// Open sets of a finite topology, & = intersection.
FiniteQuantale opens(const FiniteTopology& topology, std::size_t cap = kDefaultElementCap);
/// The diamond M3 (three atoms under a coatom m) with a top adjoined; every
/// product of non-top elements is bottom. Its ideal lattice is not distributive.
FiniteQuantale m3_quantale();
/// The one-element quantale (bottom = top).
FiniteQuantale trivial_quantale();

/// All partial orders on `points` labelled points.
std::vector<FinitePoset> all_posets(unsigned points);
/// All topologies on `points` labelled points (each given by its full list of opens).
std::vector<FiniteTopology> all_topologies(unsigned points);

struct PowersetGen { unsigned k; };
struct LukasiewiczGen { unsigned n; };
struct ChainGen { unsigned n; };
struct LowerSetsGen { FinitePoset poset; };
struct OpensGen { FiniteTopology topology; };
struct M3Gen {};
struct TrivialGen {};
struct IdealQuantaleGen { FiniteQuantale base; };

using GeneratorSpec =
    std::variant<PowersetGen, LukasiewiczGen, ChainGen, LowerSetsGen, OpensGen, M3Gen, TrivialGen, IdealQuantaleGen>;

/// Parses `KIND[:ARG]`:
///   powerset:K  lukasiewicz:N  chain:N  m3  trivial
///   lowersets:P[:a<b,...]   (points 1..P)
///   opens:P[:S,...]         (subbase sets as digit strings, e.g. 1,12)
///   ideal_quantale:FILE     (FILE resolved through `load`)
/// Throws InvalidArgument.
GeneratorSpec parse_generator_spec(std::string_view text,
                                   const std::function<FiniteQuantale(const std::string&)>& load = {});

/// Builds the instance and, when small enough for an exhaustive check
/// (n <= 256), records its axiom status. Throws TooLarge past `cap`.
FiniteQuantale generate(const GeneratorSpec& spec, std::size_t cap = kDefaultElementCap);

}  // namespace qk
