#include "qk/decompose.hpp"

#include <algorithm>

namespace qk {

namespace {

bool size_then_apex(const Ideal& a, const Ideal& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.apex() < b.apex();
}

void sort_by_apex(std::vector<Ideal>& v) { std::ranges::sort(v, apex_less); }

bool same_set(std::vector<Ideal> a, std::vector<Ideal> b) {
  sort_by_apex(a);
  sort_by_apex(b);
  return a == b;
}

Ideal meet_except(const FiniteQuantale& q, const std::vector<Ideal>& v, std::size_t skip) {
  ElementSet acc = q.all();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (k != skip) acc &= v[k].members();
  return Ideal::unchecked(q, acc);
}

// Drops components, in ascending size order, whose removal keeps the meet.
std::vector<Ideal> drop_redundant(const Ideal& target, std::vector<Ideal> comps) {
  const auto& q = target.carrier();
  std::ranges::sort(comps, size_then_apex);
  std::size_t k = 0;
  while (k < comps.size()) {
    if (comps.size() > 1 && meet_except(q, comps, k) == target)
      comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(k));
    else
      ++k;
  }
  sort_by_apex(comps);
  return comps;
}

std::vector<Ideal> radicals_of(const std::vector<Ideal>& comps) {
  std::vector<Ideal> out;
  out.reserve(comps.size());
  for (const auto& c : comps) out.push_back(radical(c));
  return out;
}

std::vector<Ideal> primary_candidates(const Ideal& i) {
  std::vector<Ideal> out;
  for (auto& j : enumerate_ideals(i.carrier()))
    if (i.is_subset_of(j) && is_primary(j)) out.push_back(std::move(j));
  return out;
}

}  // namespace

Verdict is_irreducible(const Ideal& i) {
  const auto ideals = enumerate_ideals(i.carrier());
  for (const auto& j : ideals) {
    if (j == i) continue;
    for (const auto& k : ideals)
      if (k != i && meet_ideals(j, k) == i) return Verdict::no({j.apex(), k.apex()});
  }
  return Verdict::yes();
}

Verdict is_strongly_irreducible_idealwise(const Ideal& i) {
  const auto ideals = enumerate_ideals(i.carrier());
  for (const auto& j : ideals) {
    if (j.is_subset_of(i)) continue;
    for (const auto& k : ideals)
      if (!k.is_subset_of(i) && meet_ideals(j, k).is_subset_of(i)) return Verdict::no({j.apex(), k.apex()});
  }
  return Verdict::yes();
}

Verdict is_strongly_irreducible_elementwise(const Ideal& i) {
  const auto& q = i.carrier();
  require_commutative(q);
  for (Element a = 0; a < q.size(); ++a) {
    if (i.contains(a)) continue;
    for (Element b = 0; b < q.size(); ++b)
      if (!i.contains(b) && (q.down_set(a) & q.down_set(b)).is_subset_of(i.members())) return Verdict::no({a, b});
  }
  return Verdict::yes();
}

Verdict is_strongly_irreducible(const Ideal& i) {
  auto idealwise = is_strongly_irreducible_idealwise(i);
  auto elementwise = is_strongly_irreducible_elementwise(i);
  if (idealwise.ok != elementwise.ok)
    throw Error(ErrorKind::ContractViolation,
                "ideal-wise and element-wise strong irreducibility disagree on " + format_members(i));
  return idealwise;
}

std::optional<Ideal> irreducible_avoiding(const Ideal& i, Element x) {
  if (i.contains(x)) return std::nullopt;
  std::vector<Ideal> avoiding;
  for (auto& j : enumerate_ideals(i.carrier()))
    if (i.is_subset_of(j) && !j.contains(x)) avoiding.push_back(std::move(j));
  for (const auto& j : avoiding) {
    bool maximal = std::ranges::none_of(avoiding, [&](const Ideal& k) { return k != j && j.is_subset_of(k); });
    if (maximal) return j;
  }
  return std::nullopt;
}

NotDecomposableError::NotDecomposableError(Ideal target, Ideal gap)
    : Error(ErrorKind::NotDecomposable, format_members(target) + " is not a meet of primary ideals; they meet in " +
                                            format_members(gap)),
      target_(std::move(target)),
      gap_(std::move(gap)) {}

Decomposition irreducible_decomposition(const Ideal& i) {
  if (!i.is_proper()) throw Error(ErrorKind::NotProper, "decomposition of the whole carrier");
  const auto& q = i.carrier();
  std::vector<Ideal> candidates;
  for (auto& j : enumerate_ideals(q))
    if (j.is_proper() && i.is_subset_of(j) && is_irreducible(j)) candidates.push_back(std::move(j));
  if (meet_all(q, candidates) != i)
    throw Error(ErrorKind::ContractViolation, format_members(i) + " is not the meet of the irreducible ideals over it");
  return {i, drop_redundant(i, std::move(candidates)), DecompositionKind::Irreducible, {}, true};
}

Decomposition primary_decomposition(const Ideal& i) {
  if (!i.is_proper()) throw Error(ErrorKind::NotProper, "decomposition of the whole carrier");
  const auto& q = i.carrier();
  auto candidates = primary_candidates(i);
  auto gap = meet_all(q, candidates);
  if (gap != i) throw NotDecomposableError(i, gap);
  Decomposition d{i, drop_redundant(i, std::move(candidates)), DecompositionKind::Primary, {}, false};
  d.radicals = radicals_of(d.components);
  return minimize(d);
}

bool is_minimal_decomposition(const Decomposition& d) {
  const auto& q = d.target.carrier();
  for (std::size_t a = 0; a < d.radicals.size(); ++a)
    for (std::size_t b = a + 1; b < d.radicals.size(); ++b)
      if (d.radicals[a] == d.radicals[b]) return false;
  for (std::size_t k = 0; k < d.components.size(); ++k)
    if (meet_except(q, d.components, k).is_subset_of(d.components[k])) return false;
  return true;
}

Decomposition minimize(const Decomposition& d) {
  const auto& q = d.target.carrier();
  if (d.kind != DecompositionKind::Primary)
    throw Error(ErrorKind::InvalidDecomposition, "only primary decompositions can be minimized");
  if (d.components.empty()) throw Error(ErrorKind::InvalidDecomposition, "no components");
  for (const auto& c : d.components) {
    if (!c.carrier().same_carrier(q)) throw Error(ErrorKind::InvalidDecomposition, "component from another carrier");
    if (!is_primary(c)) throw Error(ErrorKind::InvalidDecomposition, format_members(c) + " is not primary");
  }
  if (meet_all(q, d.components) != d.target)
    throw Error(ErrorKind::InvalidDecomposition, "components do not meet in " + format_members(d.target));

  // Merge components sharing a radical; the merged ideal must be primary for it.
  std::vector<Ideal> radicals = radicals_of(d.components);
  std::vector<Ideal> merged;
  std::vector<bool> used(d.components.size(), false);
  for (std::size_t a = 0; a < d.components.size(); ++a) {
    if (used[a]) continue;
    std::vector<Ideal> group{d.components[a]};
    for (std::size_t b = a + 1; b < d.components.size(); ++b)
      if (!used[b] && radicals[b] == radicals[a]) {
        used[b] = true;
        group.push_back(d.components[b]);
      }
    auto m = meet_all(q, group);
    if (!is_p_primary(m, radicals[a]))
      throw Error(ErrorKind::ContractViolation,
                  "meet of " + format_members(radicals[a]) + "-primary ideals is not " + format_members(radicals[a]) +
                      "-primary");
    merged.push_back(std::move(m));
  }

  Decomposition out{d.target, drop_redundant(d.target, std::move(merged)), DecompositionKind::Primary, {}, false};
  out.radicals = radicals_of(out.components);
  out.minimal = is_minimal_decomposition(out);
  if (!out.minimal) throw Error(ErrorKind::ContractViolation, "minimization did not reach a minimal decomposition");
  return out;
}

std::vector<Decomposition> enumerate_minimal_decompositions(const Ideal& i) {
  const auto& q = i.carrier();
  if (q.size() > 10) throw Error(ErrorKind::TooLarge, "enumerating decompositions is limited to 10 elements");
  if (!i.is_proper()) throw Error(ErrorKind::NotProper, "decomposition of the whole carrier");
  const auto candidates = primary_candidates(i);
  const auto radicals = radicals_of(candidates);
  std::vector<Decomposition> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << candidates.size()); ++mask) {
    Decomposition d{i, {}, DecompositionKind::Primary, {}, false};
    for (std::size_t k = 0; k < candidates.size(); ++k)
      if ((mask >> k) & 1U) {
        d.components.push_back(candidates[k]);
        d.radicals.push_back(radicals[k]);
      }
    if (meet_all(q, d.components) != i || !is_minimal_decomposition(d)) continue;
    d.minimal = true;
    out.push_back(std::move(d));
  }
  return out;
}

UniquenessReport uniqueness_report(const Ideal& i) {
  const auto& q = i.carrier();
  auto d = primary_decomposition(i);
  UniquenessReport r{i, d, d.radicals, {}, {}, {}, false, false, false, false, 0};
  sort_by_apex(r.associated_primes);

  for (Element x = 0; x < q.size(); ++x) {
    auto p = radical(residual(i, principal(q, x)));
    if (is_prime(p) && std::ranges::find(r.colon_primes, p) == r.colon_primes.end()) r.colon_primes.push_back(p);
  }
  sort_by_apex(r.colon_primes);
  r.associated_equals_colon = r.associated_primes == r.colon_primes;

  for (const auto& p : r.associated_primes) {
    bool isolated = std::ranges::none_of(r.associated_primes,
                                         [&](const Ideal& o) { return o != p && o.is_subset_of(p); });
    (isolated ? r.isolated : r.embedded).push_back(p);
  }
  r.isolated_are_minimal_primes = same_set(r.isolated, minimal_primes_over(i));

  auto component_for = [](const Decomposition& dec, const Ideal& p) -> std::optional<Ideal> {
    for (std::size_t k = 0; k < dec.radicals.size(); ++k)
      if (dec.radicals[k] == p) return dec.components[k];
    return std::nullopt;
  };

  r.isolated_components_characterized = true;
  for (const auto& p : r.isolated) {
    ElementSet expected(q.size());
    for (Element a = 0; a < q.size(); ++a)
      for (Element b = 0; b < q.size(); ++b)
        if (!p.contains(b) && i.contains(q.mul(a, b))) {
          expected.insert(a);
          break;
        }
    auto c = component_for(d, p);
    if (!c || c->members() != expected) r.isolated_components_characterized = false;
  }

  r.isolated_components_match = true;
  if (q.size() <= 10) {
    const auto all = enumerate_minimal_decompositions(i);
    r.decompositions_enumerated = all.size();
    for (const auto& other : all)
      for (const auto& p : r.isolated) {
        auto mine = component_for(d, p);
        auto theirs = component_for(other, p);
        if (!mine || !theirs || *mine != *theirs) r.isolated_components_match = false;
      }
  } else {
    r.decompositions_enumerated = 1;
  }
  return r;
}

Ideal quotient_by_element(const Ideal& p_primary, Element x) {
  const auto& q = p_primary.carrier();
  if (!is_primary(p_primary)) throw Error(ErrorKind::NotPrimary, format_members(p_primary) + " is not primary");
  if (x >= q.size()) throw Error(ErrorKind::InvalidArgument, "element index out of range");
  const auto p = radical(p_primary);
  auto result = residual(p_primary, principal(q, x));
  auto violated = [&](const std::string& what) {
    throw Error(ErrorKind::ContractViolation, "(" + format_members(p_primary) + " : " + q.label(x) + ") " + what);
  };
  if (p_primary.contains(x)) {
    if (!result.is_whole()) violated("should be the whole carrier");
  } else {
    if (!is_p_primary(result, p)) violated("should be " + format_members(p) + "-primary");
    if (!p.contains(x) && result != p_primary) violated("should equal " + format_members(p_primary));
  }
  return result;
}

bool is_arithmetic(const FiniteQuantale& q) {
  const auto ideals = enumerate_ideals(q);
  for (const auto& i : ideals)
    for (const auto& j : ideals)
      for (const auto& k : ideals)
        if (meet_ideals(i, join_ideals(j, k)) != join_ideals(meet_ideals(i, j), meet_ideals(i, k))) return false;
  return true;
}

ArithmeticReport arithmetic_equivalence_check(const FiniteQuantale& q) {
  ArithmeticReport r;
  const auto ideals = enumerate_ideals(q);
  for (const auto& i : ideals)
    for (const auto& j : ideals)
      for (const auto& k : ideals)
        if (r.distributivity_witness.empty() &&
            meet_ideals(i, join_ideals(j, k)) != join_ideals(meet_ideals(i, j), meet_ideals(i, k)))
          r.distributivity_witness = {i.apex(), j.apex(), k.apex()};
  r.arithmetic = r.distributivity_witness.empty();

  for (const auto& i : ideals) {
    const bool irr = is_irreducible(i).ok;
    const bool strong = is_strongly_irreducible(i).ok;
    if (irr) r.irreducible.push_back(i);
    if (strong) r.strongly_irreducible.push_back(i);
    if (irr && !strong && !r.irreducible_not_strong) r.irreducible_not_strong = i.apex();
  }

  r.every_ideal_meet_of_strongly_irreducible = true;
  for (const auto& i : ideals) {
    std::vector<Ideal> over;
    for (const auto& s : r.strongly_irreducible)
      if (i.is_subset_of(s)) over.push_back(s);
    if (meet_all(q, over) != i) r.every_ideal_meet_of_strongly_irreducible = false;
  }

  const bool sets_equal = r.irreducible == r.strongly_irreducible;
  r.consistent = (r.arithmetic == sets_equal) && (!r.arithmetic || r.every_ideal_meet_of_strongly_irreducible);
  return r;
}

Ideal minimal_strongly_irreducible_over(const Ideal& i) {
  if (!i.is_proper()) throw Error(ErrorKind::NotProper, "the whole carrier is not inside a proper ideal");
  std::vector<Ideal> over;
  for (auto& j : enumerate_ideals(i.carrier()))
    if (i.is_subset_of(j) && is_strongly_irreducible(j)) over.push_back(std::move(j));
  for (const auto& j : over)
    if (std::ranges::none_of(over, [&](const Ideal& k) { return k != j && k.is_subset_of(j); })) return j;
  throw Error(ErrorKind::ContractViolation, "no strongly irreducible ideal contains " + format_members(i));
}

bool totally_ordered_ideals(const FiniteQuantale& q) {
  const auto ideals = enumerate_ideals(q);
  bool chain = true;
  for (const auto& i : ideals)
    for (const auto& j : ideals)
      if (!i.is_subset_of(j) && !j.is_subset_of(i)) chain = false;
  const bool all_strong = std::ranges::all_of(ideals, [](const Ideal& i) { return is_strongly_irreducible(i).ok; });
  if (chain != all_strong)
    throw Error(ErrorKind::ContractViolation, "chain of ideals disagrees with every ideal being strongly irreducible");
  return chain;
}

Classification classify(const Ideal& i) {
  const auto& q = i.carrier();
  Classification c{i, i.is_proper(), is_maximal(i), i.is_zero(), false, false, false, false, false, false, false,
                   radical(i), {}};
  auto record = [&](bool& flag, const char* name, const Verdict& v) {
    flag = v.ok;
    if (!v.ok && !v.witness.empty()) c.witnesses[name] = v.witness;
  };
  record(c.prime, "prime", is_prime(i));
  record(c.semiprime, "semiprime", is_semiprime(i));
  record(c.primary, "primary", is_primary(i));
  record(c.irreducible, "irreducible", is_irreducible(i));
  record(c.strongly_irreducible, "strongly_irreducible", is_strongly_irreducible(i));
  c.radical_ideal = c.radical == i;
  if (c.prime) {
    const auto primes = spectrum(q);
    c.minimal_prime = std::ranges::none_of(primes, [&](const Ideal& p) { return p != i && p.is_subset_of(i); });
  }
  return c;
}

}  // namespace qk
