#include "qk/quantale.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace qk {

struct FiniteQuantale::Tables {
  std::string name;
  std::vector<std::string> labels;
  std::unordered_map<std::string, Element> index;
  std::vector<ElementSet> down;
  std::vector<ElementSet> up;
  std::vector<Element> join;
  std::vector<Element> meet;
  std::vector<Element> mul;
  Element bottom = 0;
  Element top = 0;
  bool commutative = true;

  std::size_t n() const { return labels.size(); }
  std::size_t at(Element a, Element b) const { return static_cast<std::size_t>(a) * n() + b; }
};

FiniteQuantale make_quantale(std::shared_ptr<const FiniteQuantale::Tables> t) { return FiniteQuantale(std::move(t)); }

namespace {

bool table_commutative(const FiniteQuantale::Tables& t) {
  const auto n = static_cast<Element>(t.n());
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (t.mul[t.at(a, b)] != t.mul[t.at(b, a)]) return false;
  return true;
}

// Least element of `common` with respect to `cone` (up-sets for joins, down-sets
// for meets): the candidate whose cone is largest must have cone == common.
std::optional<Element> extremal(const ElementSet& common, const std::vector<ElementSet>& cone,
                                const std::vector<std::size_t>& cone_size) {
  std::optional<Element> best;
  for (Element c : common)
    if (!best || cone_size[c] > cone_size[*best]) best = c;
  if (best && cone[*best] == common) return best;
  return std::nullopt;
}

}  // namespace

const std::string& FiniteQuantale::name() const { return tables_->name; }
std::size_t FiniteQuantale::size() const { return tables_->n(); }
const std::vector<std::string>& FiniteQuantale::labels() const { return tables_->labels; }
const std::string& FiniteQuantale::label(Element x) const { return tables_->labels.at(x); }

std::optional<Element> FiniteQuantale::find(std::string_view label) const {
  auto it = tables_->index.find(std::string(label));
  if (it == tables_->index.end()) return std::nullopt;
  return it->second;
}

Element FiniteQuantale::at(std::string_view label) const {
  if (auto x = find(label)) return *x;
  throw Error(ErrorKind::UndeclaredLabel, "'" + std::string(label) + "' is not an element of " + name());
}

bool FiniteQuantale::leq(Element a, Element b) const { return tables_->up[a].contains(b); }
Element FiniteQuantale::join(Element a, Element b) const { return tables_->join[tables_->at(a, b)]; }
Element FiniteQuantale::meet(Element a, Element b) const { return tables_->meet[tables_->at(a, b)]; }
Element FiniteQuantale::mul(Element a, Element b) const { return tables_->mul[tables_->at(a, b)]; }
Element FiniteQuantale::bottom() const { return tables_->bottom; }
Element FiniteQuantale::top() const { return tables_->top; }

Element FiniteQuantale::join_of(const ElementSet& s) const {
  Element acc = bottom();
  for (Element x : s) acc = join(acc, x);
  return acc;
}

Element FiniteQuantale::meet_of(const ElementSet& s) const {
  Element acc = top();
  for (Element x : s) acc = meet(acc, x);
  return acc;
}

const ElementSet& FiniteQuantale::down_set(Element x) const { return tables_->down[x]; }
const ElementSet& FiniteQuantale::up_set(Element x) const { return tables_->up[x]; }

std::vector<std::pair<Element, Element>> FiniteQuantale::covers() const {
  std::vector<std::pair<Element, Element>> out;
  const auto n = static_cast<Element>(size());
  for (Element a = 0; a < n; ++a) {
    ElementSet strict = tables_->up[a];
    strict.erase(a);
    for (Element b : strict) {
      ElementSet between = tables_->down[b] & strict;
      if (between.count() == 1) out.emplace_back(a, b);
    }
  }
  return out;
}

std::span<const Element> FiniteQuantale::mul_table() const { return tables_->mul; }
bool FiniteQuantale::is_commutative() const { return tables_->commutative; }

FiniteQuantale FiniteQuantale::renamed(std::string name) const {
  auto t = std::make_shared<Tables>(*tables_);
  t->name = std::move(name);
  FiniteQuantale q(std::move(t));
  q.status_ = status_;
  return q;
}

bool structurally_equal(const FiniteQuantale& a, const FiniteQuantale& b) {
  if (a.size() != b.size() || a.labels() != b.labels()) return false;
  const auto n = static_cast<Element>(a.size());
  for (Element x = 0; x < n; ++x)
    if (a.up_set(x) != b.up_set(x)) return false;
  return std::ranges::equal(a.mul_table(), b.mul_table());
}

FiniteQuantale build_quantale(std::string name, std::vector<std::string> labels,
                              std::span<const std::pair<Element, Element>> order, std::span<const Element> mul,
                              std::size_t cap) {
  const std::size_t n = labels.size();
  if (n > cap)
    throw Error(ErrorKind::TooLarge, std::to_string(n) + " elements exceed the cap of " + std::to_string(cap));
  if (n == 0) throw Error(ErrorKind::MissingBound, "empty carrier has no bottom or top");

  auto t = std::make_shared<FiniteQuantale::Tables>();
  t->name = std::move(name);
  t->labels = std::move(labels);
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = t->index.emplace(t->labels[i], static_cast<Element>(i));
    if (!fresh) throw Error(ErrorKind::DuplicateLabel, "label '" + t->labels[i] + "' declared twice");
  }
  if (mul.size() != n * n)
    throw Error(ErrorKind::InvalidArgument,
                "multiplication table has " + std::to_string(mul.size()) + " cells, expected " + std::to_string(n * n));
  for (Element v : mul)
    if (v >= n) throw Error(ErrorKind::InvalidArgument, "multiplication table entry out of range");

  // Reflexive-transitive closure via a topological order of the generator graph.
  std::vector<std::vector<Element>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [a, b] : order) {
    if (a >= n || b >= n) throw Error(ErrorKind::InvalidArgument, "order pair index out of range");
    if (a == b) continue;
    succ[a].push_back(b);
    ++indegree[b];
  }
  std::vector<Element> topo;
  topo.reserve(n);
  std::deque<Element> ready;
  for (Element i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    Element v = ready.front();
    ready.pop_front();
    topo.push_back(v);
    for (Element w : succ[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  if (topo.size() != n) {
    Element stuck = 0;
    for (Element i = 0; i < n; ++i)
      if (indegree[i] != 0) {
        stuck = i;
        break;
      }
    throw Error(ErrorKind::NotAPartialOrder,
                "order generators form a cycle through '" + t->labels[stuck] + "' (antisymmetry fails)");
  }

  t->up.assign(n, ElementSet(n));
  t->down.assign(n, ElementSet(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Element v = *it;
    t->up[v].insert(v);
    for (Element w : succ[v]) t->up[v] |= t->up[w];
  }
  for (Element a = 0; a < n; ++a)
    for (Element b : t->up[a]) t->down[b].insert(a);

  std::vector<std::size_t> up_size(n), down_size(n);
  for (Element a = 0; a < n; ++a) {
    up_size[a] = t->up[a].count();
    down_size[a] = t->down[a].count();
  }

  t->join.assign(n * n, 0);
  t->meet.assign(n * n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      auto j = extremal(t->up[a] & t->up[b], t->up, up_size);
      if (!j)
        throw Error(ErrorKind::NotALattice,
                    "'" + t->labels[a] + "' and '" + t->labels[b] + "' have no least upper bound");
      auto m = extremal(t->down[a] & t->down[b], t->down, down_size);
      if (!m)
        throw Error(ErrorKind::NotALattice,
                    "'" + t->labels[a] + "' and '" + t->labels[b] + "' have no greatest lower bound");
      t->join[t->at(a, b)] = t->join[t->at(b, a)] = *j;
      t->meet[t->at(a, b)] = t->meet[t->at(b, a)] = *m;
    }
  }

  std::optional<Element> bottom, top;
  for (Element a = 0; a < n; ++a) {
    if (up_size[a] == n) bottom = a;
    if (down_size[a] == n) top = a;
  }
  if (!bottom || !top) throw Error(ErrorKind::MissingBound, "carrier lacks a global bottom or top");
  t->bottom = *bottom;
  t->top = *top;

  t->mul.assign(mul.begin(), mul.end());
  t->commutative = table_commutative(*t);
  return make_quantale(std::move(t));
}

FiniteQuantale build_quantale(std::string name, std::vector<std::string> labels,
                              const std::vector<std::pair<std::string, std::string>>& order,
                              const std::vector<std::vector<std::string>>& mul, std::size_t cap) {
  std::unordered_map<std::string, Element> index;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!index.emplace(labels[i], static_cast<Element>(i)).second)
      throw Error(ErrorKind::DuplicateLabel, "label '" + labels[i] + "' declared twice");
  auto lookup = [&](const std::string& l) {
    auto it = index.find(l);
    if (it == index.end()) throw Error(ErrorKind::UndeclaredLabel, "'" + l + "' is not declared");
    return it->second;
  };
  std::vector<std::pair<Element, Element>> pairs;
  pairs.reserve(order.size());
  for (const auto& [a, b] : order) pairs.emplace_back(lookup(a), lookup(b));

  const std::size_t n = labels.size();
  if (mul.size() != n)
    throw Error(ErrorKind::RowArity, "expected " + std::to_string(n) + " multiplication rows, got " +
                                         std::to_string(mul.size()));
  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (mul[r].size() != n)
      throw Error(ErrorKind::RowArity, "row '" + labels[r] + "' has " + std::to_string(mul[r].size()) +
                                           " entries, expected " + std::to_string(n));
    for (const auto& l : mul[r]) table.push_back(lookup(l));
  }
  return build_quantale(std::move(name), std::move(labels), pairs, table, cap);
}

FiniteQuantale replace_mul(const FiniteQuantale& q, std::span<const Element> mul) {
  if (mul.size() != q.size() * q.size())
    throw Error(ErrorKind::InvalidArgument, "multiplication table size mismatch");
  for (Element v : mul)
    if (v >= q.size()) throw Error(ErrorKind::InvalidArgument, "multiplication table entry out of range");
  auto covers = q.covers();
  return build_quantale(q.name(), q.labels(), covers, mul, q.size());
}

AxiomReport check_axioms(const FiniteQuantale& q) {
  AxiomReport r;
  const auto n = static_cast<Element>(q.size());
  auto fail = [&](bool& flag, const char* tag, std::vector<Element> w) {
    if (!flag) return;
    flag = false;
    r.counterexamples.push_back({tag, std::move(w)});
  };

  for (Element a = 0; a < n && r.lattice_ok; ++a) {
    if (!q.leq(q.bottom(), a) || !q.leq(a, q.top())) fail(r.lattice_ok, "lattice", {a});
    for (Element b = 0; b < n && r.lattice_ok; ++b) {
      if ((q.up_set(a) & q.up_set(b)) != q.up_set(q.join(a, b)) ||
          (q.down_set(a) & q.down_set(b)) != q.down_set(q.meet(a, b)))
        fail(r.lattice_ok, "lattice", {a, b});
    }
  }

  for (Element x = 0; x < n && r.assoc_ok; ++x)
    for (Element y = 0; y < n && r.assoc_ok; ++y)
      for (Element z = 0; z < n && r.assoc_ok; ++z)
        if (q.mul(x, q.mul(y, z)) != q.mul(q.mul(x, y), z)) fail(r.assoc_ok, "associativity", {x, y, z});

  for (Element x = 0; x < n && r.comm_ok; ++x)
    for (Element y = x + 1; y < n && r.comm_ok; ++y)
      if (q.mul(x, y) != q.mul(y, x)) fail(r.comm_ok, "commutativity", {x, y});

  for (Element x = 0; x < n && r.distrib_ok; ++x) {
    if (q.mul(x, q.bottom()) != q.bottom()) {
      fail(r.distrib_ok, "distributivity", {x, q.bottom()});
      break;
    }
    for (Element y = 0; y < n && r.distrib_ok; ++y)
      for (Element z = 0; z < n && r.distrib_ok; ++z)
        if (q.mul(x, q.join(y, z)) != q.join(q.mul(x, y), q.mul(x, z)))
          fail(r.distrib_ok, "distributivity", {x, y, z});
  }

  for (Element x = 0; x < n && r.identity_ok; ++x)
    if (q.mul(x, q.top()) != x) fail(r.identity_ok, "identity", {x});

  return r;
}

FiniteQuantale checked(const FiniteQuantale& q) {
  return q.with_status(check_axioms(q).all_ok() ? AxiomStatus::Valid : AxiomStatus::Invalid);
}

void require_commutative(const FiniteQuantale& q) {
  if (!q.is_commutative())
    throw Error(ErrorKind::NotCommutative, "ideal theory needs a commutative multiplication; " + q.name() + " is not");
}

Element power(const FiniteQuantale& q, Element x, unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "power exponent must be positive");
  Element acc = x;
  for (unsigned k = 1; k < n; ++k) {
    const Element next = q.mul(acc, x);
    if (next == acc) break;
    acc = next;
  }
  return acc;
}

Element power_of_join(const FiniteQuantale& q, Element x, Element y, unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "power exponent must be positive");
  auto pow0 = [&](Element e, unsigned k) { return k == 0 ? q.top() : power(q, e, k); };
  Element acc = q.bottom();
  for (unsigned k = 0; k <= n; ++k) acc = q.join(acc, q.mul(pow0(x, n - k), pow0(y, k)));
  return acc;
}

bool is_unit(const FiniteQuantale& q, Element x) {
  const auto n = static_cast<Element>(q.size());
  for (Element y = 0; y < n; ++y)
    if (q.mul(x, y) == q.top()) return true;
  return false;
}

}  // namespace qk
