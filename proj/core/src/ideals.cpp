#include "qk/ideals.hpp"

#include <algorithm>

namespace qk {

namespace {

void same_carrier(const Ideal& i, const Ideal& j, const char* op) {
  if (!i.carrier().same_carrier(j.carrier()))
    throw Error(ErrorKind::CarrierMismatch, std::string(op) + " of ideals from different carriers");
}

Ideal down(const FiniteQuantale& q, Element a) { return Ideal::unchecked(q, q.down_set(a)); }

}  // namespace

bool apex_less(const Ideal& a, const Ideal& b) { return a.apex() < b.apex(); }

bool is_ideal(const FiniteQuantale& q, const ElementSet& subset) {
  if (subset.universe() != q.size() || subset.empty()) return false;
  for (Element x : subset) {
    if (!q.down_set(x).is_subset_of(subset)) return false;
    for (Element y : subset)
      if (!subset.contains(q.join(x, y))) return false;
  }
  return true;
}

Ideal make_ideal(const FiniteQuantale& q, const ElementSet& subset) {
  if (!is_ideal(q, subset)) throw Error(ErrorKind::InvalidArgument, "subset is not an ideal of " + q.name());
  return Ideal::unchecked(q, subset);
}

Ideal principal(const FiniteQuantale& q, Element a) {
  if (a >= q.size()) throw Error(ErrorKind::InvalidArgument, "element index out of range");
  return down(q, a);
}

Ideal zero_ideal(const FiniteQuantale& q) { return down(q, q.bottom()); }
Ideal whole(const FiniteQuantale& q) { return down(q, q.top()); }

Ideal generated(const FiniteQuantale& q, const ElementSet& s) {
  if (s.empty()) throw Error(ErrorKind::EmptyGeneratorSet, "cannot generate an ideal from the empty set");
  const auto n = static_cast<Element>(q.size());
  Element acc = q.bottom();
  for (Element t : s)
    for (Element l = 0; l < n; ++l) acc = q.join(acc, q.mul(l, t));
  if (acc != q.join_of(s))
    throw Error(ErrorKind::ContractViolation, "generated ideal disagrees with the down-set of the join");
  return down(q, acc);
}

std::vector<Ideal> enumerate_ideals(const FiniteQuantale& q) {
  require_commutative(q);
  std::vector<Ideal> out;
  out.reserve(q.size());
  for (Element a = 0; a < q.size(); ++a) out.push_back(down(q, a));
  return out;
}

std::vector<ElementSet> brute_force_ideals(const FiniteQuantale& q) {
  if (q.size() > 20) throw Error(ErrorKind::TooLarge, "brute-force ideal filtering is limited to 20 elements");
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << q.size()); ++mask) {
    auto s = ElementSet::from_mask(q.size(), mask);
    if (is_ideal(q, s)) out.push_back(std::move(s));
  }
  return out;
}

Ideal meet_ideals(const Ideal& i, const Ideal& j) {
  same_carrier(i, j, "meet");
  return Ideal::unchecked(i.carrier(), i.members() & j.members());
}

Ideal join_ideals(const Ideal& i, const Ideal& j) {
  same_carrier(i, j, "join");
  const auto& q = i.carrier();
  return down(q, q.join(i.apex(), j.apex()));
}

Ideal product_ideals(const Ideal& i, const Ideal& j) {
  same_carrier(i, j, "product");
  const auto& q = i.carrier();
  require_commutative(q);
  return down(q, q.mul(i.apex(), j.apex()));
}

Ideal product_by_closure(const Ideal& i, const Ideal& j) {
  same_carrier(i, j, "product");
  const auto& q = i.carrier();
  require_commutative(q);
  ElementSet products(q.size());
  for (Element x : i.members())
    for (Element y : j.members()) products.insert(q.mul(x, y));
  // Close under binary joins, then downward.
  bool grew = true;
  while (grew) {
    grew = false;
    for (Element a : products)
      for (Element b : products)
        if (!products.contains(q.join(a, b))) {
          products.insert(q.join(a, b));
          grew = true;
        }
  }
  ElementSet closed(q.size());
  for (Element a : products) closed |= q.down_set(a);
  return Ideal::unchecked(q, closed);
}

Ideal residual(const Ideal& i, const Ideal& j) {
  same_carrier(i, j, "residual");
  const auto& q = i.carrier();
  require_commutative(q);
  ElementSet out(q.size());
  for (Element x = 0; x < q.size(); ++x) {
    bool ok = true;
    for (Element y : j.members())
      if (!i.contains(q.mul(x, y))) {
        ok = false;
        break;
      }
    if (ok) out.insert(x);
  }
  return Ideal::unchecked(q, out);
}

Ideal meet_all(const FiniteQuantale& q, const std::vector<Ideal>& family) {
  ElementSet acc = q.all();
  for (const auto& i : family) {
    if (!i.carrier().same_carrier(q)) throw Error(ErrorKind::CarrierMismatch, "meet of ideals from different carriers");
    acc &= i.members();
  }
  return Ideal::unchecked(q, acc);
}

Ideal join_all(const FiniteQuantale& q, const std::vector<Ideal>& family) {
  Element acc = q.bottom();
  for (const auto& i : family) {
    if (!i.carrier().same_carrier(q)) throw Error(ErrorKind::CarrierMismatch, "join of ideals from different carriers");
    acc = q.join(acc, i.apex());
  }
  return down(q, acc);
}

Ideal annihilator(const FiniteQuantale& q, const ElementSet& s) {
  if (s.empty()) throw Error(ErrorKind::EmptyGeneratorSet, "annihilator of the empty set");
  require_commutative(q);
  ElementSet out(q.size());
  for (Element x = 0; x < q.size(); ++x) {
    bool ok = true;
    for (Element t : s)
      if (q.mul(x, t) != q.bottom()) {
        ok = false;
        break;
      }
    if (ok) out.insert(x);
  }
  return Ideal::unchecked(q, out);
}

IdealQuantale ideal_quantale(const FiniteQuantale& q, std::size_t cap) {
  auto ideals = enumerate_ideals(q);
  if (ideals.size() > cap)
    throw Error(ErrorKind::TooLarge, std::to_string(ideals.size()) + " ideals exceed the cap of " + std::to_string(cap));
  const std::size_t n = ideals.size();
  // Ideals are listed by apex, so ideal k has apex k; the lookup is kept
  // general to avoid relying on that.
  auto index_of = [&](const Ideal& i) -> Element {
    for (Element k = 0; k < n; ++k)
      if (ideals[k].members() == i.members()) return k;
    throw Error(ErrorKind::ContractViolation, "ideal operation left the ideal lattice");
  };
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& i : ideals) labels.push_back("I_" + q.label(i.apex()));
  std::vector<std::pair<Element, Element>> order;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (a != b && ideals[a].is_subset_of(ideals[b])) order.emplace_back(a, b);
  std::vector<Element> mul(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) mul[a * n + b] = index_of(product_ideals(ideals[a], ideals[b]));
  auto iq = build_quantale("ideals_" + q.name(), std::move(labels), order, mul, cap);
  return {std::move(iq), q, std::move(ideals)};
}

bool principal_map_is_isomorphism(const IdealQuantale& iq) {
  const auto& q = iq.base;
  const auto& t = iq.quantale;
  if (q.size() != t.size()) return false;
  std::vector<Element> image(q.size());
  for (Element a = 0; a < q.size(); ++a) {
    const auto p = principal(q, a);
    auto it = std::ranges::find_if(iq.ideals, [&](const Ideal& i) { return i.members() == p.members(); });
    if (it == iq.ideals.end()) return false;
    image[a] = static_cast<Element>(it - iq.ideals.begin());
  }
  std::vector<bool> hit(q.size(), false);
  for (Element v : image) hit[v] = true;
  if (std::ranges::find(hit, false) != hit.end()) return false;
  for (Element a = 0; a < q.size(); ++a)
    for (Element b = 0; b < q.size(); ++b) {
      if (q.leq(a, b) != t.leq(image[a], image[b])) return false;
      if (image[q.mul(a, b)] != t.mul(image[a], image[b])) return false;
    }
  return true;
}

Ideal contraction(const QuantaleHom& h, const Ideal& j) {
  if (!j.carrier().same_carrier(h.target()))
    throw Error(ErrorKind::CarrierMismatch, "contraction along " + h.name() + " needs an ideal of its target");
  const auto& q = h.source();
  ElementSet out(q.size());
  for (Element x = 0; x < q.size(); ++x)
    if (j.contains(h(x))) out.insert(x);
  if (out.empty())
    throw Error(ErrorKind::HomInvalid, h.name() + " maps no element into " + format_members(j) +
                                           " (bottom is not preserved), so the preimage is empty");
  return make_ideal(q, out);
}

Ideal extension(const QuantaleHom& h, const Ideal& i) {
  if (!i.carrier().same_carrier(h.source()))
    throw Error(ErrorKind::CarrierMismatch, "extension along " + h.name() + " needs an ideal of its source");
  ElementSet image(h.target().size());
  for (Element x : i.members()) image.insert(h(x));
  return generated(h.target(), image);
}

std::string format_members(const Ideal& i) {
  std::string s = "{";
  bool first = true;
  for (Element x : i.members()) {
    if (!first) s += ',';
    s += i.carrier().label(x);
    first = false;
  }
  return s + "}";
}

}  // namespace qk
