#include "qk/classify.hpp"

#include <algorithm>

namespace qk {

namespace {

std::vector<Element> apexes(const Ideal& a, const Ideal& b) { return {a.apex(), b.apex()}; }

Verdict not_proper() { return Verdict::no({}, "not proper"); }

std::vector<Ideal> minimal_of(std::vector<Ideal> family) {
  std::vector<Ideal> out;
  for (const auto& i : family) {
    bool minimal = true;
    for (const auto& j : family)
      if (j != i && j.is_subset_of(i)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(i);
  }
  return out;
}

}  // namespace

bool some_power_in(const FiniteQuantale& q, Element x, const ElementSet& s) {
  Element acc = x;
  for (std::size_t k = 1; k <= q.size(); ++k) {
    if (s.contains(acc)) return true;
    const Element next = q.mul(acc, x);
    if (next == acc) return false;
    acc = next;
  }
  return false;
}

Verdict is_prime(const Ideal& p) {
  const auto& q = p.carrier();
  require_commutative(q);
  if (!p.is_proper()) return not_proper();
  for (Element x = 0; x < q.size(); ++x) {
    if (p.contains(x)) continue;
    for (Element y = 0; y < q.size(); ++y)
      if (!p.contains(y) && p.contains(q.mul(x, y))) return Verdict::no({x, y});
  }
  return Verdict::yes();
}

Verdict is_prime_idealwise(const Ideal& p) {
  const auto& q = p.carrier();
  if (!p.is_proper()) return not_proper();
  const auto ideals = enumerate_ideals(q);
  for (const auto& i : ideals) {
    if (i.is_subset_of(p)) continue;
    for (const auto& j : ideals)
      if (!j.is_subset_of(p) && product_ideals(i, j).is_subset_of(p)) return Verdict::no(apexes(i, j));
  }
  return Verdict::yes();
}

Verdict semiprime_condition(const Ideal& i) {
  const auto& q = i.carrier();
  require_commutative(q);
  for (Element x = 0; x < q.size(); ++x)
    if (!i.contains(x) && i.contains(q.mul(x, x))) return Verdict::no({x});
  return Verdict::yes();
}

Verdict is_semiprime_idealwise(const Ideal& i) {
  const auto& q = i.carrier();
  if (!i.is_proper()) return not_proper();
  for (const auto& j : enumerate_ideals(q))
    if (!j.is_subset_of(i) && product_ideals(j, j).is_subset_of(i)) return Verdict::no({j.apex()});
  return Verdict::yes();
}

Verdict is_semiprime(const Ideal& i) {
  Verdict element = i.is_proper() ? semiprime_condition(i) : not_proper();
  Verdict idealwise = is_semiprime_idealwise(i);
  if (element.ok != idealwise.ok)
    throw Error(ErrorKind::ContractViolation, "element-wise and ideal-wise semiprime tests disagree on " +
                                                  format_members(i));
  return element;
}

Verdict is_primary(const Ideal& i) {
  const auto& q = i.carrier();
  require_commutative(q);
  if (!i.is_proper()) return not_proper();
  for (Element x = 0; x < q.size(); ++x) {
    if (i.contains(x)) continue;
    for (Element y = 0; y < q.size(); ++y)
      if (i.contains(q.mul(x, y)) && !some_power_in(q, y, i.members())) return Verdict::no({x, y});
  }
  return Verdict::yes();
}

Verdict is_p_primary(const Ideal& i, const Ideal& p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, format_members(p) + " is not prime");
  auto v = is_primary(i);
  if (!v) return v;
  const auto r = radical(i);
  if (r != p) return Verdict::no({r.apex()}, "radical differs");
  return v;
}

Ideal radical(const Ideal& i, RadicalAlgorithm algorithm) {
  const auto& q = i.carrier();
  require_commutative(q);
  switch (algorithm) {
    case RadicalAlgorithm::Powers: {
      ElementSet out(q.size());
      for (Element x = 0; x < q.size(); ++x)
        if (some_power_in(q, x, i.members())) out.insert(x);
      return make_ideal(q, out);
    }
    case RadicalAlgorithm::Primes:
      return meet_all(q, primes_over(i));
    case RadicalAlgorithm::Mcsets: {
      ElementSet out(q.size());
      for (Element x = 0; x < q.size(); ++x)
        if (mc_generated(q, x).members().intersects(i.members())) out.insert(x);
      return make_ideal(q, out);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown radical algorithm");
}

Ideal radical_all_mcsets(const Ideal& i) {
  const auto& q = i.carrier();
  const auto mcsets = all_mcsets(q);
  ElementSet out(q.size());
  for (Element x = 0; x < q.size(); ++x) {
    bool every = true;
    for (const auto& s : mcsets)
      if (s.contains(x) && !s.members().intersects(i.members())) {
        every = false;
        break;
      }
    if (every) out.insert(x);
  }
  return make_ideal(q, out);
}

bool is_radical_ideal(const Ideal& i) { return radical(i) == i; }

bool is_maximal(const Ideal& i) {
  if (!i.is_proper()) return false;
  for (const auto& j : enumerate_ideals(i.carrier()))
    if (j.is_proper() && j != i && i.is_subset_of(j)) return false;
  return true;
}

std::vector<Ideal> spectrum(const FiniteQuantale& q) {
  std::vector<Ideal> out;
  for (auto& i : enumerate_ideals(q))
    if (is_prime(i)) out.push_back(std::move(i));
  return out;
}

std::vector<Ideal> primes_over(const Ideal& i) {
  std::vector<Ideal> out;
  for (auto& p : spectrum(i.carrier()))
    if (i.is_subset_of(p)) out.push_back(std::move(p));
  return out;
}

std::vector<Ideal> minimal_primes_over(const Ideal& i) {
  if (!i.is_proper()) throw Error(ErrorKind::NotProper, "no prime contains the whole carrier");
  return minimal_of(primes_over(i));
}

std::vector<Ideal> minimal_primes_between(const Ideal& i, const Ideal& p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, format_members(p) + " is not prime");
  if (!i.is_subset_of(p)) throw Error(ErrorKind::InvalidArgument, format_members(i) + " is not inside " + format_members(p));
  std::vector<Ideal> inside;
  for (auto& r : primes_over(i))
    if (r.is_subset_of(p)) inside.push_back(std::move(r));
  return minimal_of(std::move(inside));
}

std::vector<Ideal> maximal_ideals(const FiniteQuantale& q) {
  if (q.bottom() == q.top()) throw Error(ErrorKind::Degenerate, q.name() + " has bottom = top and no proper ideal");
  std::vector<Ideal> out;
  for (auto& i : enumerate_ideals(q))
    if (is_maximal(i)) out.push_back(std::move(i));
  return out;
}

std::optional<Ideal> is_local(const FiniteQuantale& q) {
  auto m = maximal_ideals(q);
  if (m.size() != 1) return std::nullopt;
  return m.front();
}

Ideal jacobson(const FiniteQuantale& q) { return meet_all(q, maximal_ideals(q)); }

Ideal nilradical(const FiniteQuantale& q) { return radical(zero_ideal(q)); }

ElementSet zero_divisors(const FiniteQuantale& q) {
  ElementSet out(q.size());
  for (Element x = 0; x < q.size(); ++x)
    for (Element y = 0; y < q.size(); ++y)
      if (y != q.bottom() && q.mul(x, y) == q.bottom()) {
        out.insert(x);
        break;
      }
  return out;
}

bool is_qd(const FiniteQuantale& q) { return q.bottom() != q.top() && is_prime(zero_ideal(q)).ok; }

bool is_reduced(const FiniteQuantale& q) { return nilradical(q) == zero_ideal(q); }

bool is_mc(const FiniteQuantale& q, const ElementSet& s) {
  if (s.universe() != q.size() || !s.contains(q.top())) return false;
  for (Element x : s)
    for (Element y : s)
      if (!s.contains(q.mul(x, y))) return false;
  return true;
}

McSet McSet::make(const FiniteQuantale& q, const ElementSet& s) {
  if (!is_mc(q, s)) throw Error(ErrorKind::NotMc, "subset does not contain top or is not closed under &");
  return McSet(q, s);
}

McSet mc_generated(const FiniteQuantale& q, Element x) {
  require_commutative(q);
  ElementSet s(q.size());
  s.insert(q.top());
  s.insert(x);
  bool grew = true;
  while (grew) {
    grew = false;
    for (Element a : s)
      for (Element b : s)
        if (!s.contains(q.mul(a, b))) {
          s.insert(q.mul(a, b));
          grew = true;
        }
  }
  return McSet::make(q, s);
}

std::vector<McSet> all_mcsets(const FiniteQuantale& q) {
  if (q.size() > 8) throw Error(ErrorKind::TooLarge, "enumerating multiplicatively closed sets is limited to 8 elements");
  std::vector<McSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << q.size()); ++mask) {
    auto s = ElementSet::from_mask(q.size(), mask);
    if (is_mc(q, s)) out.push_back(McSet::make(q, s));
  }
  return out;
}

McSet saturation(const McSet& s) {
  const auto& q = s.carrier();
  require_commutative(q);
  ElementSet out(q.size());
  for (Element x = 0; x < q.size(); ++x)
    for (Element y = 0; y < q.size(); ++y)
      if (s.contains(q.mul(x, y))) {
        out.insert(x);
        break;
      }
  return McSet::make(q, out);
}

bool is_saturated(const McSet& s) {
  const auto& q = s.carrier();
  for (Element x = 0; x < q.size(); ++x)
    for (Element y = 0; y < q.size(); ++y)
      if (s.contains(q.mul(x, y)) && (!s.contains(x) || !s.contains(y))) return false;
  return true;
}

bool complement_is_union_of_primes(const McSet& s) {
  const auto& q = s.carrier();
  ElementSet u(q.size());
  for (const auto& p : spectrum(q))
    if (!p.members().intersects(s.members())) u |= p.members();
  return u == s.members().complement();
}

bool complement_is_join_of_primes(const McSet& s) {
  const auto& q = s.carrier();
  std::vector<Ideal> avoiding;
  for (auto& p : spectrum(q))
    if (!p.members().intersects(s.members())) avoiding.push_back(std::move(p));
  if (avoiding.empty()) return s.members().complement().empty();
  return join_all(q, avoiding).members() == s.members().complement();
}

Ideal maximal_avoiding(const McSet& s) {
  const auto& q = s.carrier();
  if (s.contains(q.bottom())) throw Error(ErrorKind::NoAvoidingIdeal, "bottom lies in the set, so every ideal meets it");
  std::vector<Ideal> avoiding;
  for (auto& i : enumerate_ideals(q))
    if (!i.members().intersects(s.members())) avoiding.push_back(std::move(i));
  for (const auto& i : avoiding) {
    bool maximal = true;
    for (const auto& j : avoiding)
      if (j != i && i.is_subset_of(j)) {
        maximal = false;
        break;
      }
    if (maximal) return i;  // apex order makes this the lowest apex
  }
  throw Error(ErrorKind::ContractViolation, "no maximal avoiding ideal found");
}

Element prime_avoidance(const FiniteQuantale& q, const ElementSet& stable, const std::vector<Ideal>& ps) {
  require_commutative(q);
  if (stable.universe() != q.size() || stable.empty())
    throw Error(ErrorKind::HypothesisViolated, "the set must be a nonempty subset of the carrier");
  for (Element x : stable)
    for (Element y : stable)
      if (!stable.contains(q.join(x, y)) || !stable.contains(q.mul(x, y)))
        throw Error(ErrorKind::HypothesisViolated, "the set is not stable under join and &");
  for (std::size_t j = 0; j < ps.size(); ++j) {
    if (!ps[j].carrier().same_carrier(q)) throw Error(ErrorKind::CarrierMismatch, "ideal from another carrier");
    if (j >= 2 && !is_prime(ps[j]))
      throw Error(ErrorKind::HypothesisViolated, "P" + std::to_string(j + 1) + " must be prime");
    if (stable.is_subset_of(ps[j].members()))
      throw Error(ErrorKind::HypothesisViolated, "the set is contained in P" + std::to_string(j + 1));
  }
  for (Element x : stable) {
    bool outside = true;
    for (const auto& p : ps)
      if (p.contains(x)) {
        outside = false;
        break;
      }
    if (outside) return x;
  }
  throw Error(ErrorKind::ContractViolation, "every element of the set lies in some P_j");
}

bool are_coprime(const Ideal& i, const Ideal& j) {
  if (!join_ideals(i, j).is_whole()) return false;
  if (meet_ideals(i, j) != product_ideals(i, j))
    throw Error(ErrorKind::ContractViolation, "coprime ideals whose meet differs from their product");
  return true;
}

}  // namespace qk
