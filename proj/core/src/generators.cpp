#include "qk/generators.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "qk/ideals.hpp"

namespace qk {

namespace {

std::string set_label(std::uint64_t mask) {
  std::string s = "{";
  bool first = true;
  for (unsigned i = 0; i < 64; ++i) {
    if (((mask >> i) & 1U) == 0) continue;
    if (!first) s += ',';
    s += std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

// Lattice of subsets ordered by inclusion, & = intersection. `masks` must be
// closed under intersection and union.
FiniteQuantale subset_frame(std::string name, std::vector<std::uint64_t> masks, std::size_t cap) {
  if (masks.size() > cap)
    throw Error(ErrorKind::TooLarge,
                std::to_string(masks.size()) + " elements exceed the cap of " + std::to_string(cap));
  std::ranges::sort(masks);
  const std::size_t n = masks.size();
  std::map<std::uint64_t, Element> index;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    index[masks[i]] = static_cast<Element>(i);
    labels.push_back(set_label(masks[i]));
  }
  std::vector<std::pair<Element, Element>> order;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || (masks[i] & ~masks[j]) != 0) continue;
      // Only covers: masks[j] minimal strictly above masks[i]. Checking single
      // point additions suffices for lower-set and power-set lattices; other
      // families fall back to the full inclusion relation.
      order.emplace_back(static_cast<Element>(i), static_cast<Element>(j));
    }
  }
  std::vector<Element> mul(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mul[i * n + j] = index.at(masks[i] & masks[j]);
  return build_quantale(std::move(name), std::move(labels), order, mul, cap);
}

// Same as subset_frame but passes only one-point covers; valid when every
// inclusion L < M in the family factors through one-point additions.
FiniteQuantale graded_subset_frame(std::string name, std::vector<std::uint64_t> masks, std::size_t cap) {
  if (masks.size() > cap)
    throw Error(ErrorKind::TooLarge,
                std::to_string(masks.size()) + " elements exceed the cap of " + std::to_string(cap));
  std::ranges::sort(masks);
  const std::size_t n = masks.size();
  std::map<std::uint64_t, Element> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    index[masks[i]] = static_cast<Element>(i);
    labels.push_back(set_label(masks[i]));
  }
  std::vector<std::pair<Element, Element>> order;
  for (std::size_t i = 0; i < n; ++i)
    for (unsigned b = 0; b < 64; ++b) {
      const std::uint64_t bigger = masks[i] | (std::uint64_t{1} << b);
      if (bigger == masks[i]) continue;
      if (auto it = index.find(bigger); it != index.end()) order.emplace_back(static_cast<Element>(i), it->second);
    }
  std::vector<Element> mul(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mul[i * n + j] = index.at(masks[i] & masks[j]);
  return build_quantale(std::move(name), std::move(labels), order, mul, cap);
}

FiniteQuantale chain(std::string name, unsigned n, std::size_t cap, auto&& product) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "a chain needs at least one element");
  if (n > cap) throw Error(ErrorKind::TooLarge, std::to_string(n) + " elements exceed the cap of " + std::to_string(cap));
  std::vector<std::string> labels;
  std::vector<std::pair<Element, Element>> order;
  for (unsigned i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i + 1 < n) order.emplace_back(i, i + 1);
  }
  std::vector<Element> mul(static_cast<std::size_t>(n) * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = product(a, b);
  return build_quantale(std::move(name), std::move(labels), order, mul, cap);
}

// Strict order closure as bit rows; throws NotAPartialOrder on a cycle.
std::vector<std::uint64_t> strict_closure(const FinitePoset& p) {
  if (p.points > 64) throw Error(ErrorKind::TooLarge, "posets are limited to 64 points");
  std::vector<std::uint64_t> below(p.points, 0);  // below[b] has bit a iff a < b
  for (auto [a, b] : p.less) {
    if (a < 1 || b < 1 || a > p.points || b > p.points)
      throw Error(ErrorKind::InvalidArgument, "poset relation mentions a point outside 1.." + std::to_string(p.points));
    below[b - 1] |= std::uint64_t{1} << (a - 1);
  }
  for (unsigned k = 0; k < p.points; ++k)
    for (unsigned i = 0; i < p.points; ++i)
      if ((below[i] >> k) & 1U) below[i] |= below[k];
  for (unsigned i = 0; i < p.points; ++i)
    if ((below[i] >> i) & 1U)
      throw Error(ErrorKind::NotAPartialOrder, "poset relations form a cycle through point " + std::to_string(i + 1));
  return below;
}

unsigned parse_unsigned(std::string_view s, std::string_view what) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw Error(ErrorKind::InvalidArgument, "expected a number for " + std::string(what) + ", got '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

FiniteQuantale powerset(unsigned k, std::size_t cap) {
  if (k > 12 || (std::size_t{1} << k) > cap)
    throw Error(ErrorKind::TooLarge, "powerset of " + std::to_string(k) + " points exceeds the cap of " + std::to_string(cap));
  std::vector<std::uint64_t> masks(std::size_t{1} << k);
  for (std::size_t i = 0; i < masks.size(); ++i) masks[i] = i;
  return graded_subset_frame("powerset" + std::to_string(k), std::move(masks), cap);
}

FiniteQuantale lukasiewicz(unsigned n, std::size_t cap) {
  return chain("lukasiewicz" + std::to_string(n), n, cap, [n](unsigned a, unsigned b) -> Element {
    return a + b >= n - 1 ? a + b - (n - 1) : 0;
  });
}

FiniteQuantale chain_frame(unsigned n, std::size_t cap) {
  return chain("chain" + std::to_string(n), n, cap, [](unsigned a, unsigned b) -> Element { return std::min(a, b); });
}

FiniteQuantale lower_sets(const FinitePoset& poset, std::size_t cap) {
  const auto below = strict_closure(poset);
  std::set<std::uint64_t> seen{0};
  std::vector<std::uint64_t> stack{0};
  while (!stack.empty()) {
    const std::uint64_t cur = stack.back();
    stack.pop_back();
    for (unsigned x = 0; x < poset.points; ++x) {
      const std::uint64_t bit = std::uint64_t{1} << x;
      if ((cur & bit) != 0 || (below[x] & ~cur) != 0) continue;
      if (seen.insert(cur | bit).second) {
        if (seen.size() > cap)
          throw Error(ErrorKind::TooLarge, "lower sets exceed the cap of " + std::to_string(cap));
        stack.push_back(cur | bit);
      }
    }
  }
  return graded_subset_frame("lowersets" + std::to_string(poset.points), {seen.begin(), seen.end()}, cap);
}

FiniteQuantale opens(const FiniteTopology& topology, std::size_t cap) {
  if (topology.points > 64) throw Error(ErrorKind::TooLarge, "topologies are limited to 64 points");
  const std::uint64_t whole = topology.points == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << topology.points) - 1;
  std::set<std::uint64_t> family{0, whole};
  for (auto s : topology.subbase) {
    if ((s & ~whole) != 0) throw Error(ErrorKind::InvalidArgument, "subbase set mentions a point outside the space");
    family.insert(s);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> cur(family.begin(), family.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        grew |= family.insert(cur[i] | cur[j]).second;
        grew |= family.insert(cur[i] & cur[j]).second;
        if (family.size() > cap) throw Error(ErrorKind::TooLarge, "opens exceed the cap of " + std::to_string(cap));
      }
  }
  return subset_frame("opens" + std::to_string(topology.points), {family.begin(), family.end()}, cap);
}

FiniteQuantale m3_quantale() {
  const std::vector<std::string> labels{"bot", "a", "b", "c", "m", "top"};
  const std::vector<std::pair<Element, Element>> order{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 5}};
  std::vector<Element> mul(36, 0);
  for (Element x = 0; x < 6; ++x) {
    mul[x * 6 + 5] = x;
    mul[5 * 6 + x] = x;
  }
  return build_quantale("m3", labels, order, mul);
}

FiniteQuantale trivial_quantale() {
  const std::vector<Element> mul{0};
  return build_quantale("trivial", {"o"}, std::span<const std::pair<Element, Element>>{}, mul);
}

std::vector<FinitePoset> all_posets(unsigned points) {
  if (points > 5) throw Error(ErrorKind::TooLarge, "poset enumeration is limited to 5 points");
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned a = 1; a <= points; ++a)
    for (unsigned b = 1; b <= points; ++b)
      if (a != b) pairs.emplace_back(a, b);
  std::vector<FinitePoset> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << pairs.size()); ++pick) {
    // rel[a] = bitmask of b with a < b
    std::vector<std::uint32_t> rel(points + 1, 0);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((pick >> i) & 1U) rel[pairs[i].first] |= 1U << pairs[i].second;
    bool ok = true;
    for (unsigned a = 1; a <= points && ok; ++a)
      for (unsigned b = 1; b <= points && ok; ++b) {
        if (((rel[a] >> b) & 1U) == 0) continue;
        if ((rel[b] >> a) & 1U) ok = false;             // antisymmetry
        if ((rel[b] & ~rel[a]) != 0) ok = false;        // transitivity
      }
    if (!ok) continue;
    FinitePoset p{points, {}};
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((pick >> i) & 1U) p.less.push_back(pairs[i]);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<FiniteTopology> all_topologies(unsigned points) {
  if (points > 4) throw Error(ErrorKind::TooLarge, "topology enumeration is limited to 4 points");
  const std::uint64_t whole = (std::uint64_t{1} << points) - 1;
  const std::size_t subsets = std::size_t{1} << points;
  // Candidate opens other than the empty set and the whole space.
  std::vector<std::uint64_t> middle;
  for (std::uint64_t s = 1; s + 1 < subsets; ++s) middle.push_back(s);
  std::vector<FiniteTopology> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << middle.size()); ++pick) {
    std::vector<std::uint64_t> family{0};
    for (std::size_t i = 0; i < middle.size(); ++i)
      if ((pick >> i) & 1U) family.push_back(middle[i]);
    if (points > 0) family.push_back(whole);
    std::set<std::uint64_t> fam(family.begin(), family.end());
    bool closed = true;
    for (auto a : family)
      for (auto b : family)
        if (!fam.contains(a | b) || !fam.contains(a & b)) closed = false;
    if (closed) out.push_back({points, std::move(family)});
  }
  return out;
}

GeneratorSpec parse_generator_spec(std::string_view text, const std::function<FiniteQuantale(const std::string&)>& load) {
  auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto need_arg = [&] {
    if (arg.empty()) throw Error(ErrorKind::InvalidArgument, "generator '" + std::string(kind) + "' needs an argument");
  };
  if (kind == "powerset") {
    need_arg();
    return PowersetGen{parse_unsigned(arg, "powerset")};
  }
  if (kind == "lukasiewicz") {
    need_arg();
    return LukasiewiczGen{parse_unsigned(arg, "lukasiewicz")};
  }
  if (kind == "chain") {
    need_arg();
    return ChainGen{parse_unsigned(arg, "chain")};
  }
  if (kind == "m3") return M3Gen{};
  if (kind == "trivial") return TrivialGen{};
  if (kind == "lowersets") {
    need_arg();
    auto parts = split(arg, ':');
    FinitePoset p{parse_unsigned(parts[0], "lowersets points"), {}};
    if (parts.size() > 2) throw Error(ErrorKind::InvalidArgument, "lowersets takes POINTS[:a<b,...]");
    if (parts.size() == 2 && !parts[1].empty())
      for (auto rel : split(parts[1], ',')) {
        auto lt = rel.find('<');
        if (lt == std::string_view::npos)
          throw Error(ErrorKind::InvalidArgument, "poset relation '" + std::string(rel) + "' must look like a<b");
        p.less.emplace_back(parse_unsigned(rel.substr(0, lt), "point"), parse_unsigned(rel.substr(lt + 1), "point"));
      }
    return LowerSetsGen{std::move(p)};
  }
  if (kind == "opens") {
    need_arg();
    auto parts = split(arg, ':');
    FiniteTopology t{parse_unsigned(parts[0], "opens points"), {}};
    if (parts.size() > 2) throw Error(ErrorKind::InvalidArgument, "opens takes POINTS[:S,...]");
    if (parts.size() == 2 && !parts[1].empty())
      for (auto set : split(parts[1], ',')) {
        std::uint64_t mask = 0;
        for (char c : set) {
          if (c < '1' || c > '9')
            throw Error(ErrorKind::InvalidArgument, "subbase set '" + std::string(set) + "' must list points 1-9");
          mask |= std::uint64_t{1} << (c - '1');
        }
        t.subbase.push_back(mask);
      }
    return OpensGen{std::move(t)};
  }
  if (kind == "ideal_quantale") {
    need_arg();
    if (!load) throw Error(ErrorKind::InvalidArgument, "ideal_quantale needs a loader for '" + std::string(arg) + "'");
    return IdealQuantaleGen{load(std::string(arg))};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown generator '" + std::string(kind) + "'");
}

FiniteQuantale generate(const GeneratorSpec& spec, std::size_t cap) {
  FiniteQuantale q = std::visit(
      [cap](const auto& g) -> FiniteQuantale {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, PowersetGen>) return powerset(g.k, cap);
        else if constexpr (std::is_same_v<G, LukasiewiczGen>) return lukasiewicz(g.n, cap);
        else if constexpr (std::is_same_v<G, ChainGen>) return chain_frame(g.n, cap);
        else if constexpr (std::is_same_v<G, LowerSetsGen>) return lower_sets(g.poset, cap);
        else if constexpr (std::is_same_v<G, OpensGen>) return opens(g.topology, cap);
        else if constexpr (std::is_same_v<G, M3Gen>) return m3_quantale();
        else if constexpr (std::is_same_v<G, TrivialGen>) return trivial_quantale();
        else return ideal_quantale(g.base, cap).quantale;
      },
      spec);
  if (q.size() <= 256) q = checked(q);
  return q;
}

}  // namespace qk
