#include "qk/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <random>

#include "qk/classify.hpp"
#include "qk/decompose.hpp"
#include "qk/generators.hpp"
#include "qk/ideals.hpp"

namespace qk {

namespace {

constexpr std::array kSuiteNames{
    std::pair{Suite::Axioms, "axioms"},
    std::pair{Suite::LemmaBip, "lemma_bip"},
    std::pair{Suite::PropositionBpi, "proposition_bpi"},
    std::pair{Suite::Annihilator, "annihilator"},
    std::pair{Suite::Cep, "cep"},
    std::pair{Suite::Lpsp, "lpsp"},
    std::pair{Suite::Avoidance, "avoidance"},
    std::pair{Suite::RadicalLemma, "radical_lemma"},
    std::pair{Suite::Spkr, "spkr"},
    std::pair{Suite::Saturation, "saturation"},
    std::pair{Suite::Primary, "primary"},
    std::pair{Suite::Pqx, "pqx"},
    std::pair{Suite::Uniqueness, "uniqueness"},
    std::pair{Suite::Irreducible, "irreducible"},
    std::pair{Suite::Arithmetic, "arithmetic"},
    std::pair{Suite::Collapse, "collapse"},
    std::pair{Suite::All, "all"},
};

using Strings = std::vector<std::string>;

std::string lbl(const Ideal& i) { return i.carrier().label(i.apex()); }

std::string set_str(const FiniteQuantale& q, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (Element x : s) {
    if (!first) out += ',';
    out += q.label(x);
    first = false;
  }
  return out + "}";
}

std::string family_str(const std::vector<Ideal>& f) {
  std::string out = "[";
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k) out += ',';
    out += lbl(f[k]);
  }
  return out + "]";
}

// Evaluation context of one law: counts instances and keeps the first witness.
class Ctx {
 public:
  explicit Ctx(LawResult& r) : r_(r) {}

  bool failed() const { return r_.status == LawStatus::Fail; }
  void add(std::uint64_t k = 1) { r_.checked += k; }
  void sampled() { r_.sampled = true; }
  void note(std::string n) { r_.note = std::move(n); }

  void at(Strings w) { current_ = std::move(w); }
  const Strings& current() const { return current_; }
  Strings prefix;

  bool expect(bool ok) { return expect(ok, current_); }
  bool expect(bool ok, const Strings& w) {
    if (ok || failed()) return ok;
    r_.status = LawStatus::Fail;
    r_.witness = prefix;
    r_.witness.insert(r_.witness.end(), w.begin(), w.end());
    return false;
  }

 private:
  LawResult& r_;
  Strings current_;
};

struct Env {
  FiniteQuantale q;
  std::vector<Ideal> ideals;
  std::vector<QuantaleHom> homs;
  VerifyOptions opt;
  std::mt19937_64 rng;

  std::size_t n() const { return q.size(); }
  bool degenerate() const { return q.bottom() == q.top(); }
  std::size_t pick(std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

  std::vector<Ideal> proper() const {
    std::vector<Ideal> out;
    for (const auto& i : ideals)
      if (i.is_proper()) out.push_back(i);
    return out;
  }
  std::vector<Ideal> primes() const { return spectrum(q); }
};

// Each helper visits instances, records the current tuple for witnesses,
// counts, and stops at the first failure. `fn` returns whether the law holds.

void each(Ctx& c, const std::vector<Ideal>& list, const std::function<bool(const Ideal&)>& fn) {
  for (const auto& i : list) {
    c.at({lbl(i)});
    c.add();
    if (!c.expect(fn(i))) return;
  }
}

void each_pair(Ctx& c, Env& e, const std::vector<Ideal>& list,
               const std::function<bool(const Ideal&, const Ideal&)>& fn) {
  const std::size_t m = list.size();
  if (m == 0) return;
  auto visit = [&](const Ideal& a, const Ideal& b) {
    c.at({lbl(a), lbl(b)});
    c.add();
    return c.expect(fn(a, b));
  };
  if (m <= e.opt.exhaustive_tuples) {
    for (const auto& a : list)
      for (const auto& b : list)
        if (!visit(a, b)) return;
    return;
  }
  c.sampled();
  for (std::size_t s = 0; s < e.opt.samples; ++s)
    if (!visit(list[e.pick(m)], list[e.pick(m)])) return;
}

void each_triple(Ctx& c, Env& e, const std::vector<Ideal>& list,
                 const std::function<bool(const Ideal&, const Ideal&, const Ideal&)>& fn) {
  const std::size_t m = list.size();
  if (m == 0) return;
  auto visit = [&](const Ideal& a, const Ideal& b, const Ideal& d) {
    c.at({lbl(a), lbl(b), lbl(d)});
    c.add();
    return c.expect(fn(a, b, d));
  };
  if (m <= e.opt.exhaustive_tuples) {
    for (const auto& a : list)
      for (const auto& b : list)
        for (const auto& d : list)
          if (!visit(a, b, d)) return;
    return;
  }
  c.sampled();
  for (std::size_t s = 0; s < e.opt.samples; ++s)
    if (!visit(list[e.pick(m)], list[e.pick(m)], list[e.pick(m)])) return;
}

void each_element(Ctx& c, Env& e, const std::function<bool(Element)>& fn) {
  for (Element x = 0; x < e.n(); ++x) {
    c.at({e.q.label(x)});
    c.add();
    if (!c.expect(fn(x))) return;
  }
}

void each_element_pair(Ctx& c, Env& e, const std::function<bool(Element, Element)>& fn) {
  const auto n = static_cast<Element>(e.n());
  auto visit = [&](Element x, Element y) {
    c.at({e.q.label(x), e.q.label(y)});
    c.add();
    return c.expect(fn(x, y));
  };
  if (n <= e.opt.exhaustive_tuples) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (!visit(x, y)) return;
    return;
  }
  c.sampled();
  for (std::size_t s = 0; s < e.opt.samples; ++s)
    if (!visit(static_cast<Element>(e.pick(n)), static_cast<Element>(e.pick(n)))) return;
}

void each_element_triple(Ctx& c, Env& e, const std::function<bool(Element, Element, Element)>& fn) {
  const auto n = static_cast<Element>(e.n());
  auto visit = [&](Element x, Element y, Element z) {
    c.at({e.q.label(x), e.q.label(y), e.q.label(z)});
    c.add();
    return c.expect(fn(x, y, z));
  };
  if (n <= e.opt.exhaustive_tuples) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          if (!visit(x, y, z)) return;
    return;
  }
  c.sampled();
  for (std::size_t s = 0; s < e.opt.samples; ++s)
    if (!visit(static_cast<Element>(e.pick(n)), static_cast<Element>(e.pick(n)), static_cast<Element>(e.pick(n))))
      return;
}

ElementSet random_subset(Env& e, std::size_t universe) {
  ElementSet s(universe);
  for (Element x = 0; x < universe; ++x)
    if (e.rng() & 1U) s.insert(x);
  if (s.empty()) s.insert(static_cast<Element>(e.pick(universe)));
  return s;
}

// Nonempty subsets of the carrier.
void each_subset(Ctx& c, Env& e, std::size_t exhaustive_limit, const std::function<bool(const ElementSet&)>& fn) {
  const std::size_t n = e.n();
  auto visit = [&](const ElementSet& s) {
    c.at({set_str(e.q, s)});
    c.add();
    return c.expect(fn(s));
  };
  if (n <= exhaustive_limit) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
      if (!visit(ElementSet::from_mask(n, mask))) return;
    return;
  }
  c.sampled();
  for (std::size_t s = 0; s < e.opt.samples; ++s)
    if (!visit(random_subset(e, n))) return;
}

// Nonempty families drawn from `list`.
void each_family(Ctx& c, Env& e, const std::vector<Ideal>& list,
                 const std::function<bool(const std::vector<Ideal>&)>& fn) {
  const std::size_t m = list.size();
  if (m == 0) return;
  auto visit = [&](const ElementSet& pick) {
    std::vector<Ideal> family;
    for (Element k : pick) family.push_back(list[k]);
    c.at({family_str(family)});
    c.add();
    return c.expect(fn(family));
  };
  if (m <= e.opt.exhaustive_subsets) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask)
      if (!visit(ElementSet::from_mask(m, mask))) return;
    return;
  }
  c.sampled();
  for (std::size_t s = 0; s < e.opt.samples; ++s)
    if (!visit(random_subset(e, m))) return;
}

class Runner {
 public:
  Runner(VerificationReport& rep, Env& env, Suite suite) : rep_(rep), env_(env), suite_(to_string(suite)) {}

  void law(std::string id, std::string statement, const std::function<void(Ctx&)>& body) {
    LawResult r{suite_, std::move(id), std::move(statement), LawStatus::Pass, 0, false, {}, {}};
    Ctx c(r);
    try {
      body(c);
    } catch (const std::exception& ex) {
      r.status = LawStatus::Fail;
      r.witness = c.prefix;
      r.witness.insert(r.witness.end(), c.current().begin(), c.current().end());
      if (r.witness.empty()) r.witness.push_back("-");
      r.note = ex.what();
    }
    rep_.laws.push_back(std::move(r));
  }

  void skip(std::string id, std::string statement, std::string why) {
    rep_.laws.push_back({suite_, std::move(id), std::move(statement), LawStatus::Skipped, 0, false, {}, std::move(why)});
  }

  Env& env() { return env_; }

 private:
  VerificationReport& rep_;
  Env& env_;
  std::string suite_;
};

// ---------------------------------------------------------------- suites

void suite_axioms(Runner& run) {
  auto& e = run.env();
  const auto r = check_axioms(e.q);
  const std::uint64_t n = e.n();
  auto witness_of = [&](const char* tag) {
    Strings w;
    for (const auto& cx : r.counterexamples)
      if (cx.axiom == tag)
        for (Element x : cx.elements) w.push_back(e.q.label(x));
    return w;
  };
  struct Row {
    const char* tag;
    const char* statement;
    bool ok;
    std::uint64_t count;
  };
  const Row rows[] = {
      {"lattice", "binary joins and meets are least upper and greatest lower bounds", r.lattice_ok, n * n},
      {"associativity", "x & (y & z) = (x & y) & z", r.assoc_ok, n * n * n},
      {"commutativity", "x & y = y & x", r.comm_ok, n * (n - 1) / 2},
      {"distributivity", "x & (y v z) = (x & y) v (x & z) and x & bot = bot", r.distrib_ok, n * n * n + n},
      {"identity", "x & top = x", r.identity_ok, n},
  };
  for (const auto& row : rows)
    run.law(row.tag, row.statement, [&](Ctx& c) {
      c.add(row.count);
      c.expect(row.ok, witness_of(row.tag));
    });
}

void suite_lemma_bip(Runner& run) {
  auto& e = run.env();
  const auto& q = e.q;
  run.law("bip.1", "x & y <= x ^ y", [&](Ctx& c) {
    each_element_pair(c, e, [&](Element x, Element y) { return q.leq(q.mul(x, y), q.meet(x, y)); });
  });
  run.law("bip.2", "x & bot = bot", [&](Ctx& c) {
    each_element(c, e, [&](Element x) { return q.mul(x, q.bottom()) == q.bottom(); });
  });
  run.law("bip.3", "x <= y implies x & z <= y & z", [&](Ctx& c) {
    each_element_triple(c, e, [&](Element x, Element y, Element z) {
      return !q.leq(x, y) || q.leq(q.mul(x, z), q.mul(y, z));
    });
  });
  run.law("bip.4", "x <= y and u <= v imply x & u <= y & v", [&](Ctx& c) {
    const auto n = static_cast<Element>(e.n());
    auto visit = [&](Element x, Element y, Element u, Element v) {
      c.at({q.label(x), q.label(y), q.label(u), q.label(v)});
      c.add();
      return c.expect(!q.leq(x, y) || !q.leq(u, v) || q.leq(q.mul(x, u), q.mul(y, v)));
    };
    if (n <= 16) {
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          for (Element u = 0; u < n; ++u)
            for (Element v = 0; v < n; ++v)
              if (!visit(x, y, u, v)) return;
      return;
    }
    c.sampled();
    for (std::size_t s = 0; s < e.opt.samples; ++s) {
      auto x = static_cast<Element>(e.pick(n)), y = static_cast<Element>(e.pick(n));
      auto u = static_cast<Element>(e.pick(n)), v = static_cast<Element>(e.pick(n));
      if (!visit(x, y, u, v)) return;
    }
  });
  run.law("bip.5", "(x v y)^k equals the join of x^(k-i) & y^i over 0 <= i <= k, for 1 <= k <= 4", [&](Ctx& c) {
    each_element_pair(c, e, [&](Element x, Element y) {
      for (unsigned k = 1; k <= 4; ++k)
        if (power_of_join(q, x, y, k) != power(q, q.join(x, y), k)) return false;
      return true;
    });
  });
}

void suite_bpi(Runner& run) {
  auto& e = run.env();
  const auto& q = e.q;
  const auto& I = e.ideals;
  const auto Q = whole(q);
  const auto O = zero_ideal(q);
  auto P = [](const Ideal& a, const Ideal& b) { return product_ideals(a, b); };
  auto M = [](const Ideal& a, const Ideal& b) { return meet_ideals(a, b); };
  auto J = [](const Ideal& a, const Ideal& b) { return join_ideals(a, b); };
  auto R = [](const Ideal& a, const Ideal& b) { return residual(a, b); };

  run.law("bpi.ops", "meet, join, product and residual of ideals are ideals", [&](Ctx& c) {
    each_pair(c, e, I, [&](const Ideal& a, const Ideal& b) {
      return is_ideal(q, M(a, b).members()) && is_ideal(q, J(a, b).members()) && is_ideal(q, P(a, b).members()) &&
             is_ideal(q, R(a, b).members());
    });
  });
  run.law("bpi.generated", "<S n T> <= <S> ^ <T> for subsets sharing a member, with equality for ideals", [&](Ctx& c) {
    const std::size_t n = e.n();
    auto check = [&](const ElementSet& s, const ElementSet& t) {
      c.at({set_str(q, s), set_str(q, t)});
      c.add();
      const auto common = s & t;
      if (common.empty()) return true;
      return c.expect(generated(q, common).is_subset_of(M(generated(q, s), generated(q, t))));
    };
    if (n <= 6) {
      for (std::uint64_t a = 1; a < (std::uint64_t{1} << n); ++a)
        for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b)
          if (!check(ElementSet::from_mask(n, a), ElementSet::from_mask(n, b))) return;
    } else {
      c.sampled();
      for (std::size_t s = 0; s < e.opt.samples; ++s)
        if (!check(random_subset(e, n), random_subset(e, n))) return;
    }
    each_pair(c, e, I, [&](const Ideal& a, const Ideal& b) {
      return generated(q, a.members() & b.members()) == M(a, b);
    });
  });
  run.law("bpi.01", "I & (J & K) = (I & J) & K", [&](Ctx& c) {
    each_triple(c, e, I, [&](auto& a, auto& b, auto& d) { return P(a, P(b, d)) == P(P(a, b), d); });
  });
  run.law("bpi.02", "I & J = J & I", [&](Ctx& c) {
    each_pair(c, e, I, [&](auto& a, auto& b) { return P(a, b) == P(b, a); });
  });
  run.law("bpi.03", "Q & I = I", [&](Ctx& c) { each(c, I, [&](auto& a) { return P(Q, a) == a; }); });
  run.law("bpi.04", "0 & I = 0", [&](Ctx& c) { each(c, I, [&](auto& a) { return P(O, a) == O; }); });
  run.law("bpi.05", "I & (join of J_l) = join of (I & J_l)", [&](Ctx& c) {
    each_family(c, e, I, [&](const std::vector<Ideal>& f) {
      for (const auto& a : I) {
        std::vector<Ideal> products;
        for (const auto& b : f) products.push_back(P(a, b));
        if (P(a, join_all(q, f)) != join_all(q, products)) return false;
      }
      return true;
    });
  });
  run.law("bpi.06", "I & J <= I ^ J", [&](Ctx& c) {
    each_pair(c, e, I, [&](auto& a, auto& b) { return P(a, b).is_subset_of(M(a, b)); });
  });
  run.law("bpi.07", "I & (J ^ K) <= (I & J) ^ (I & K)", [&](Ctx& c) {
    each_triple(c, e, I, [&](auto& a, auto& b, auto& d) { return P(a, M(b, d)).is_subset_of(M(P(a, b), P(a, d))); });
  });
  run.law("bpi.08", "(I v K) & (J v K) <= (I & J) v K", [&](Ctx& c) {
    each_triple(c, e, I, [&](auto& a, auto& b, auto& k) { return P(J(a, k), J(b, k)).is_subset_of(J(P(a, b), k)); });
  });
  run.law("bpi.09", "I v K = J v K = Q implies (I & J) v K = Q", [&](Ctx& c) {
    each_triple(c, e, I, [&](auto& a, auto& b, auto& k) {
      return !(J(a, k) == Q && J(b, k) == Q) || J(P(a, b), k) == Q;
    });
  });
  run.law("bpi.10", "I v K = Q implies (I ^ J) v K = J v K", [&](Ctx& c) {
    each_triple(c, e, I, [&](auto& a, auto& b, auto& k) { return J(a, k) != Q || J(M(a, b), k) == J(b, k); });
  });
  run.law("bpi.11", "(I : J) & J <= I", [&](Ctx& c) {
    each_pair(c, e, I, [&](auto& a, auto& b) { return P(R(a, b), b).is_subset_of(a); });
  });
  run.law("bpi.12", "I <= (I : J)", [&](Ctx& c) {
    each_pair(c, e, I, [&](auto& a, auto& b) { return a.is_subset_of(R(a, b)); });
  });
  run.law("bpi.13", "J <= I iff (I : J) = Q", [&](Ctx& c) {
    each_pair(c, e, I, [&](auto& a, auto& b) { return b.is_subset_of(a) == (R(a, b) == Q); });
  });
  run.law("bpi.14", "(I : Q) = I", [&](Ctx& c) { each(c, I, [&](auto& a) { return R(a, Q) == a; }); });
  run.law("bpi.15", "I <= ((I & J) : J)", [&](Ctx& c) {
    each_pair(c, e, I, [&](auto& a, auto& b) { return a.is_subset_of(R(P(a, b), b)); });
  });
  run.law("bpi.16", "(meet of I_l : J) = meet of (I_l : J)", [&](Ctx& c) {
    each_family(c, e, I, [&](const std::vector<Ideal>& f) {
      for (const auto& b : I) {
        std::vector<Ideal> quotients;
        for (const auto& a : f) quotients.push_back(R(a, b));
        if (R(meet_all(q, f), b) != meet_all(q, quotients)) return false;
      }
      return true;
    });
  });
  run.law("bpi.17", "meet of (I : J_l) <= (I : join of J_l)", [&](Ctx& c) {
    each_family(c, e, I, [&](const std::vector<Ideal>& f) {
      for (const auto& a : I) {
        std::vector<Ideal> quotients;
        for (const auto& b : f) quotients.push_back(R(a, b));
        if (!meet_all(q, quotients).is_subset_of(R(a, join_all(q, f)))) return false;
      }
      return true;
    });
  });
  run.law("bpi.18", "((I : J) : K) = (I : (J & K))", [&](Ctx& c) {
    each_triple(c, e, I, [&](auto& a, auto& b, auto& k) { return R(R(a, b), k) == R(a, P(b, k)); });
  });
  run.law("bpi.19", "(I : J) = (I : (I v J))", [&](Ctx& c) {
    each_pair(c, e, I, [&](auto& a, auto& b) { return R(a, b) == R(a, J(a, b)); });
  });
  run.law("bpi.20", "(I : J) = ((I ^ J) : J)", [&](Ctx& c) {
    each_pair(c, e, I, [&](auto& a, auto& b) { return R(a, b) == R(M(a, b), b); });
  });
}

void suite_annihilator(Runner& run) {
  auto& e = run.env();
  const auto& q = e.q;
  const auto O = zero_ideal(q);
  auto A = [&](const ElementSet& s) { return annihilator(q, s); };
  run.law("ann.residual", "Ann(S) = (0 : <S>)", [&](Ctx& c) {
    each_subset(c, e, e.opt.exhaustive_subsets, [&](const ElementSet& s) { return A(s) == residual(O, generated(q, s)); });
  });
  run.law("ann.1", "S <= T implies Ann(T) <= Ann(S)", [&](Ctx& c) {
    const std::size_t n = e.n();
    const bool exhaustive = n <= e.opt.exhaustive_subsets;
    each_subset(c, e, e.opt.exhaustive_subsets, [&](const ElementSet& t) {
      const auto at = A(t);
      if (exhaustive) {
        std::uint64_t tm = 0;
        for (Element x : t) tm |= std::uint64_t{1} << x;
        for (std::uint64_t sm = tm; sm != 0; sm = (sm - 1) & tm) {
          c.add();
          if (!at.is_subset_of(A(ElementSet::from_mask(n, sm)))) {
            c.at({set_str(q, ElementSet::from_mask(n, sm)), set_str(q, t)});
            return false;
          }
        }
        return true;
      }
      auto s = t & random_subset(e, n);
      if (s.empty()) s.insert(*t.first());
      c.at({set_str(q, s), set_str(q, t)});
      return at.is_subset_of(A(s));
    });
  });
  run.law("ann.2", "S <= Ann(Ann(S))", [&](Ctx& c) {
    each_subset(c, e, e.opt.exhaustive_subsets, [&](const ElementSet& s) { return s.is_subset_of(A(A(s).members()).members()); });
  });
  run.law("ann.3", "Ann(S) = Ann(Ann(Ann(S)))", [&](Ctx& c) {
    each_subset(c, e, e.opt.exhaustive_subsets, [&](const ElementSet& s) { return A(s) == A(A(A(s).members()).members()); });
  });
}

void suite_cep(Runner& run) {
  auto& e = run.env();
  const auto& homs = e.homs;
  auto for_homs = [&](Ctx& c, const std::function<void(const QuantaleHom&, const std::vector<Ideal>&)>& body) {
    for (const auto& h : homs) {
      c.prefix = {h.name()};
      c.at({});
      body(h, enumerate_ideals(h.target()));
      if (c.failed()) return;
    }
  };
  auto ext = [](const QuantaleHom& h, const Ideal& i) { return extension(h, i); };
  auto con = [](const QuantaleHom& h, const Ideal& j) { return contraction(h, j); };

  run.law("cep.1", "J^c is an ideal", [&](Ctx& c) {
    for_homs(c, [&](auto& h, auto& T) { each(c, T, [&](auto& j) { return is_ideal(h.source(), con(h, j).members()); }); });
  });
  run.law("cep.2", "I^e is an ideal", [&](Ctx& c) {
    for_homs(c, [&](auto& h, auto&) { each(c, e.ideals, [&](auto& i) { return is_ideal(h.target(), ext(h, i).members()); }); });
  });
  run.law("cep.3a", "I <= I^ec", [&](Ctx& c) {
    for_homs(c, [&](auto& h, auto&) { each(c, e.ideals, [&](auto& i) { return i.is_subset_of(con(h, ext(h, i))); }); });
  });
  run.law("cep.3b", "J^ce <= J", [&](Ctx& c) {
    for_homs(c, [&](auto& h, auto& T) { each(c, T, [&](auto& j) { return ext(h, con(h, j)).is_subset_of(j); }); });
  });
  run.law("cep.3c", "J^c = J^cec", [&](Ctx& c) {
    for_homs(c, [&](auto& h, auto& T) { each(c, T, [&](auto& j) { return con(h, j) == con(h, ext(h, con(h, j))); }); });
  });
  run.law("cep.3d", "I^e = I^ece", [&](Ctx& c) {
    for_homs(c, [&](auto& h, auto&) { each(c, e.ideals, [&](auto& i) { return ext(h, i) == ext(h, con(h, ext(h, i))); }); });
  });
  run.law("cep.4", "extension and contraction are inverse bijections between {I | I^ec = I} and {J | J^ce = J}",
          [&](Ctx& c) {
            for_homs(c, [&](auto& h, auto& T) {
              each(c, e.ideals, [&](auto& i) {
                if (con(h, ext(h, i)) != i) return true;
                const auto j = ext(h, i);
                return ext(h, con(h, j)) == j && con(h, j) == i;
              });
              if (c.failed()) return;
              each(c, T, [&](auto& j) {
                if (ext(h, con(h, j)) != j) return true;
                const auto i = con(h, j);
                return con(h, ext(h, i)) == i && ext(h, i) == j;
              });
            });
          });
  run.law("cep.5a", "(I1 ^ I2)^e <= I1^e ^ I2^e", [&](Ctx& c) {
    for_homs(c, [&](auto& h, auto&) {
      each_pair(c, e, e.ideals, [&](auto& a, auto& b) {
        return ext(h, meet_ideals(a, b)).is_subset_of(meet_ideals(ext(h, a), ext(h, b)));
      });
    });
  });
  run.law("cep.5b", "(I1 & I2)^e = I1^e & I2^e", [&](Ctx& c) {
    for_homs(c, [&](auto& h, auto&) {
      each_pair(c, e, e.ideals, [&](auto& a, auto& b) {
        return ext(h, product_ideals(a, b)) == product_ideals(ext(h, a), ext(h, b));
      });
    });
  });
  run.law("cep.5c", "(I1 : I2)^e <= (I1^e : I2^e)", [&](Ctx& c) {
    for_homs(c, [&](auto& h, auto&) {
      each_pair(c, e, e.ideals, [&](auto& a, auto& b) {
        return ext(h, residual(a, b)).is_subset_of(residual(ext(h, a), ext(h, b)));
      });
    });
  });
  run.law("cep.6a", "(J1 ^ J2)^c = J1^c ^ J2^c", [&](Ctx& c) {
    for_homs(c, [&](auto& h, auto& T) {
      each_pair(c, e, T, [&](auto& a, auto& b) { return con(h, meet_ideals(a, b)) == meet_ideals(con(h, a), con(h, b)); });
    });
  });
  run.law("cep.6b", "J1^c & J2^c <= (J1 & J2)^c", [&](Ctx& c) {
    for_homs(c, [&](auto& h, auto& T) {
      each_pair(c, e, T, [&](auto& a, auto& b) {
        return product_ideals(con(h, a), con(h, b)).is_subset_of(con(h, product_ideals(a, b)));
      });
    });
  });
  run.law("cep.6c", "(J1 : J2)^c <= (J1^c : J2^c)", [&](Ctx& c) {
    for_homs(c, [&](auto& h, auto& T) {
      each_pair(c, e, T, [&](auto& a, auto& b) {
        return con(h, residual(a, b)).is_subset_of(residual(con(h, a), con(h, b)));
      });
    });
  });
  run.law("hom.identity", "the identity map passes the homomorphism check", [&](Ctx& c) {
    std::vector<FiniteQuantale> carriers{e.q};
    for (const auto& h : homs) carriers.push_back(h.target());
    for (const auto& t : carriers) {
      c.at({t.name()});
      c.add();
      std::vector<Element> id(t.size());
      for (Element x = 0; x < id.size(); ++x) id[x] = x;
      if (!c.expect(check_hom(t, t, id).ok)) return;
    }
  });
  run.law("hom.compose", "composites of checked homomorphisms pass the homomorphism check", [&](Ctx& c) {
    for (const auto& f : homs) {
      c.at({f.name()});
      std::vector<QuantaleHom> composites{compose(f, identity_hom(f.source())), compose(identity_hom(f.target()), f)};
      for (const auto& g : homs)
        if (f.target().same_carrier(g.source())) composites.push_back(compose(g, f));
      for (const auto& k : composites) {
        c.at({k.name()});
        c.add();
        if (!c.expect(check_hom(k.source(), k.target(), k.map()).ok)) return;
      }
    }
  });
}

void suite_lpsp(Runner& run) {
  auto& e = run.env();
  const auto& q = e.q;
  const auto primes = e.primes();
  run.law("lpsp.1", "P is prime iff I & J <= P implies I <= P or J <= P", [&](Ctx& c) {
    each(c, e.ideals, [&](auto& p) { return is_prime(p).ok == is_prime_idealwise(p).ok; });
  });
  run.law("lpsp.2", "an ideal inside a prime P lies over a minimal prime inside P", [&](Ctx& c) {
    for (const auto& p : primes) {
      c.prefix = {lbl(p)};
      each(c, e.ideals, [&](auto& i) {
        if (!i.is_subset_of(p)) return true;
        auto found = minimal_primes_between(i, p);
        if (found.empty()) return false;
        return std::ranges::all_of(found, [&](auto& r) { return is_prime(r).ok && i.is_subset_of(r) && r.is_subset_of(p); });
      });
      if (c.failed()) return;
    }
  });
  run.law("lpsp.3", "a proper ideal has finitely many, and at least one, minimal primes over it", [&](Ctx& c) {
    each(c, e.proper(), [&](auto& i) {
      auto mins = minimal_primes_over(i);
      if (mins.empty()) return false;
      for (const auto& m : mins)
        for (const auto& p : primes_over(i))
          if (p != m && p.is_subset_of(m)) return false;
      return true;
    });
  });
  run.law("lpsp.4", "I is semiprime iff J & J <= I implies J <= I", [&](Ctx& c) {
    each(c, e.ideals, [&](auto& i) {
      const bool element = i.is_proper() && semiprime_condition(i).ok;
      return element == is_semiprime_idealwise(i).ok;
    });
  });
  run.law("lpsp.5", "coprime ideals satisfy I ^ J = I & J", [&](Ctx& c) {
    each_pair(c, e, e.ideals, [&](auto& a, auto& b) {
      if (!join_ideals(a, b).is_whole()) return true;
      return meet_ideals(a, b) == product_ideals(a, b);
    });
  });
  if (e.degenerate()) {
    run.skip("max.exists", "every proper ideal lies in a maximal ideal, and maximal ideals are prime",
             "bottom = top, no proper ideal");
    run.skip("max.local", "if every element outside a proper ideal M is a unit then M is the only maximal ideal",
             "bottom = top, no proper ideal");
    return;
  }
  run.law("max.exists", "every proper ideal lies in a maximal ideal, and maximal ideals are prime", [&](Ctx& c) {
    const auto maxs = maximal_ideals(q);
    c.add();
    if (!c.expect(!maxs.empty(), {"no maximal ideal"})) return;
    each(c, maxs, [&](auto& m) { return is_prime(m).ok; });
    if (c.failed()) return;
    each(c, e.proper(), [&](auto& i) {
      return std::ranges::any_of(maxs, [&](auto& m) { return i.is_subset_of(m); });
    });
  });
  run.law("max.local", "if every element outside a proper ideal M is a unit then M is the only maximal ideal",
          [&](Ctx& c) {
            each(c, e.proper(), [&](auto& m) {
              for (Element x = 0; x < q.size(); ++x)
                if (!m.contains(x) && !is_unit(q, x)) return true;
              auto local = is_local(q);
              return local.has_value() && *local == m;
            });
          });
}

void suite_avoidance(Runner& run) {
  auto& e = run.env();
  const auto& q = e.q;
  const auto primes = e.primes();
  run.law("avoid.lemma",
          "for S stable under v and &, ideals P1..Pn with P3..Pn prime and S inside no Pj, some x in S avoids every Pj",
          [&](Ctx& c) {
            auto stable = [&](const ElementSet& s) {
              for (Element x : s)
                for (Element y : s)
                  if (!s.contains(q.join(x, y)) || !s.contains(q.mul(x, y))) return false;
              return true;
            };
            auto try_family = [&](const ElementSet& s, const std::vector<Ideal>& ps) {
              c.at({set_str(q, s), family_str(ps)});
              c.add();
              bool hypothesis = true;
              for (std::size_t j = 0; j < ps.size(); ++j)
                if ((j >= 2 && !is_prime(ps[j])) || s.is_subset_of(ps[j].members())) hypothesis = false;
              if (!hypothesis) {
                try {
                  prime_avoidance(q, s, ps);
                  return c.expect(false);
                } catch (const Error& err) {
                  return c.expect(err.kind() == ErrorKind::HypothesisViolated);
                }
              }
              const Element x = prime_avoidance(q, s, ps);
              return c.expect(s.contains(x) &&
                              std::ranges::none_of(ps, [&](const Ideal& p) { return p.contains(x); }));
            };
            auto visit = [&](const ElementSet& s) {
              if (!stable(s)) return true;
              for (const auto& p1 : e.ideals)
                for (const auto& p2 : e.ideals) {
                  if (!try_family(s, {p1, p2})) return false;
                  std::vector<Ideal> with_all{p1, p2};
                  for (const auto& p : primes) {
                    with_all.push_back(p);
                    if (!try_family(s, {p1, p2, p})) return false;
                  }
                  if (primes.size() > 1 && !try_family(s, with_all)) return false;
                }
              return true;
            };
            const std::size_t n = e.n();
            if (n <= e.opt.exhaustive_subsets) {
              for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
                if (!visit(ElementSet::from_mask(n, mask))) return;
              return;
            }
            c.sampled();
            for (const auto& i : e.ideals)
              if (!visit(i.members())) return;
            for (std::size_t s = 0; s < e.opt.samples / 100; ++s)
              if (!visit(random_subset(e, n))) return;
          });
  run.law("avoid.rpms", "a proper ideal is prime iff its complement is multiplicatively closed", [&](Ctx& c) {
    each(c, e.proper(), [&](auto& p) { return is_prime(p).ok == is_mc(q, p.members().complement()); });
  });
  run.law("avoid.mxkp", "an ideal maximal among those missing a multiplicatively closed S is prime", [&](Ctx& c) {
    std::vector<McSet> sets;
    if (e.n() <= 8) {
      sets = all_mcsets(q);
    } else {
      c.sampled();
      for (Element x = 0; x < q.size(); ++x) sets.push_back(mc_generated(q, x));
    }
    for (const auto& s : sets) {
      if (s.contains(q.bottom())) continue;
      c.at({set_str(q, s.members())});
      c.add();
      if (!c.expect(is_prime(maximal_avoiding(s)).ok)) return;
    }
  });
}

void suite_radical(Runner& run) {
  auto& e = run.env();
  const auto& q = e.q;
  const auto Q = whole(q);
  auto Rad = [](const Ideal& i) { return radical(i); };
  run.law("rad.algorithms", "powers, primes and multiplicatively closed sets give the same radical", [&](Ctx& c) {
    each(c, e.ideals, [&](auto& i) {
      const auto r = radical(i, RadicalAlgorithm::Powers);
      bool ok = r == radical(i, RadicalAlgorithm::Primes) && r == radical(i, RadicalAlgorithm::Mcsets);
      if (e.n() <= 8) ok = ok && r == radical_all_mcsets(i);
      return ok;
    });
  });
  run.law("rad.1", "R(I) is an ideal containing I", [&](Ctx& c) {
    each(c, e.ideals, [&](auto& i) { return is_ideal(q, Rad(i).members()) && i.is_subset_of(Rad(i)); });
  });
  run.law("rad.2", "I <= J implies R(I) <= R(J)", [&](Ctx& c) {
    each_pair(c, e, e.ideals, [&](auto& a, auto& b) { return !a.is_subset_of(b) || Rad(a).is_subset_of(Rad(b)); });
  });
  run.law("rad.3", "R(R(I)) = R(I)", [&](Ctx& c) { each(c, e.ideals, [&](auto& i) { return Rad(Rad(i)) == Rad(i); }); });
  run.law("rad.4", "R(I) = R(I & ... & I), 1 to 4 factors", [&](Ctx& c) {
    each(c, e.ideals, [&](auto& i) {
      Ideal p = i;
      for (int k = 1; k <= 4; ++k) {
        if (Rad(p) != Rad(i)) return false;
        p = product_ideals(p, i);
      }
      return true;
    });
  });
  run.law("rad.5", "R(I ^ J) = R(I) ^ R(J) = R(I & J)", [&](Ctx& c) {
    each_pair(c, e, e.ideals, [&](auto& a, auto& b) {
      const auto m = Rad(meet_ideals(a, b));
      return m == meet_ideals(Rad(a), Rad(b)) && m == Rad(product_ideals(a, b));
    });
  });
  run.law("rad.6", "join of R(I_l) <= R(join of I_l)", [&](Ctx& c) {
    each_family(c, e, e.ideals, [&](const std::vector<Ideal>& f) {
      std::vector<Ideal> rads;
      for (const auto& i : f) rads.push_back(Rad(i));
      return join_all(q, rads).is_subset_of(Rad(join_all(q, f)));
    });
  });
  run.law("rad.7", "R(I) = Q iff I = Q", [&](Ctx& c) { each(c, e.ideals, [&](auto& i) { return (Rad(i) == Q) == (i == Q); }); });
  run.law("rad.8", "R(I v J) = R(R(I) v R(J))", [&](Ctx& c) {
    each_pair(c, e, e.ideals, [&](auto& a, auto& b) { return Rad(join_ideals(a, b)) == Rad(join_ideals(Rad(a), Rad(b))); });
  });
  run.law("rad.nilradical", "N(Q) is the meet of all primes, and N(Q) <= J(Q)", [&](Ctx& c) {
    c.add();
    const auto n = nilradical(q);
    if (!c.expect(n == meet_all(q, spectrum(q)), {set_str(q, n.members())})) return;
    if (e.degenerate()) return;
    c.add();
    c.expect(n.is_subset_of(jacobson(q)), {set_str(q, n.members()), set_str(q, jacobson(q).members())});
  });
  run.law("rad.qd", "Q is reduced with one minimal prime iff Q is a domain; a domain has no nonzero zero-divisors",
          [&](Ctx& c) {
            c.add(2);
            const std::size_t minimal = e.degenerate() ? 0 : minimal_primes_over(zero_ideal(q)).size();
            const bool lhs = is_reduced(q) && minimal == 1;
            if (!c.expect(lhs == is_qd(q), {lhs ? "reduced, one minimal prime" : "not (reduced, one minimal prime)"}))
              return;
            auto zd = zero_divisors(q);
            zd.erase(q.bottom());
            const bool domain = !e.degenerate() && zd.empty();
            c.expect(domain == is_qd(q), {set_str(q, zd)});
          });
}

void suite_spkr(Runner& run) {
  auto& e = run.env();
  const auto& q = e.q;
  run.law("spkr.equivalence", "semiprime iff an intersection of primes iff radical", [&](Ctx& c) {
    for (const auto& i : e.ideals) {
      c.at({lbl(i)});
      c.add(3);
      const bool semiprime = semiprime_condition(i).ok;
      const bool meet_of_primes = meet_all(q, primes_over(i)) == i;
      const bool radical_ideal = is_radical_ideal(i);
      if (!c.expect(semiprime == meet_of_primes && meet_of_primes == radical_ideal && semiprime == radical_ideal))
        return;
    }
  });
  run.law("spkr.corollary", "R(I) is the smallest semiprime ideal containing I", [&](Ctx& c) {
    each(c, e.ideals, [&](auto& i) {
      const auto r = radical(i);
      if (!semiprime_condition(r).ok) return false;
      for (const auto& j : e.ideals)
        if (i.is_subset_of(j) && semiprime_condition(j).ok && !r.is_subset_of(j)) return false;
      return true;
    });
  });
  run.law("spkr.mms", "for semiprime I and x outside I, the powers of x avoid I", [&](Ctx& c) {
    each(c, e.ideals, [&](auto& i) {
      if (!semiprime_condition(i).ok) return true;
      for (Element x = 0; x < q.size(); ++x)
        if (!i.contains(x) && mc_generated(q, x).members().intersects(i.members())) return false;
      return true;
    });
  });
  if (e.n() > 8) {
    run.skip("spkr.rkt", "R(I) = {l | every multiplicatively closed set containing l meets I}",
             "quantifies over all subsets; needs n <= 8");
    return;
  }
  run.law("spkr.rkt", "R(I) = {l | every multiplicatively closed set containing l meets I}", [&](Ctx& c) {
    each(c, e.ideals, [&](auto& i) { return radical(i) == radical_all_mcsets(i); });
  });
}

void suite_saturation(Runner& run) {
  auto& e = run.env();
  const auto& q = e.q;
  std::vector<McSet> sets;
  bool sampled = false;
  if (e.n() <= 8) {
    sets = all_mcsets(q);
  } else {
    sampled = true;
    for (Element x = 0; x < q.size(); ++x) sets.push_back(mc_generated(q, x));
    for (const auto& p : spectrum(q)) sets.push_back(McSet::make(q, p.members().complement()));
  }
  auto each_set = [&](Ctx& c, const std::function<bool(const McSet&)>& fn) {
    if (sampled) c.sampled();
    for (const auto& s : sets) {
      c.at({set_str(q, s.members())});
      c.add();
      if (!c.expect(fn(s))) return;
    }
  };
  run.law("sat.closure", "S <= sat(S), sat(S) is saturated and multiplicatively closed, sat(sat(S)) = sat(S)",
          [&](Ctx& c) {
            each_set(c, [&](const McSet& s) {
              const auto t = saturation(s);
              return s.members().is_subset_of(t.members()) && is_saturated(t) && saturation(t) == t;
            });
          });
  run.law("sat.least", "sat(S) lies inside every saturated multiplicatively closed T containing S", [&](Ctx& c) {
    each_set(c, [&](const McSet& s) {
      const auto t = saturation(s);
      for (const auto& u : sets)
        if (is_saturated(u) && s.members().is_subset_of(u.members()) && !t.members().is_subset_of(u.members()))
          return false;
      return true;
    });
  });
  run.law("sat.primes", "S is saturated iff its complement is a union of primes", [&](Ctx& c) {
    std::size_t differ = 0;
    each_set(c, [&](const McSet& s) {
      if (complement_is_union_of_primes(s) != complement_is_join_of_primes(s)) ++differ;
      return is_saturated(s) == complement_is_union_of_primes(s);
    });
    if (differ > 0)
      c.note("lattice-join reading differs from the union reading on " + std::to_string(differ) + " sets");
  });
}

void suite_primary(Runner& run) {
  auto& e = run.env();
  const auto& q = e.q;
  const auto primes = e.primes();
  run.law("primary.prime", "every prime ideal is primary", [&](Ctx& c) {
    each(c, primes, [&](auto& p) { return is_primary(p).ok; });
  });
  run.law("primary.radical", "the radical of a primary ideal is the smallest prime containing it", [&](Ctx& c) {
    each(c, e.ideals, [&](auto& i) {
      if (!is_primary(i)) return true;
      const auto r = radical(i);
      if (!is_prime(r)) return false;
      return std::ranges::all_of(primes, [&](auto& p) { return !i.is_subset_of(p) || r.is_subset_of(p); });
    });
  });
  run.law("primary.plpd", "R(I1 ^ ... ^ In) = R(I1) ^ ... ^ R(In)", [&](Ctx& c) {
    each_family(c, e, e.ideals, [&](const std::vector<Ideal>& f) {
      std::vector<Ideal> rads;
      for (const auto& i : f) rads.push_back(radical(i));
      return radical(meet_all(q, f)) == meet_all(q, rads);
    });
  });
  run.law("primary.piqp", "a finite meet of P-primary ideals is P-primary", [&](Ctx& c) {
    for (const auto& p : primes) {
      c.prefix = {lbl(p)};
      std::vector<Ideal> pp;
      for (const auto& i : e.ideals)
        if (is_p_primary(i, p)) pp.push_back(i);
      each_family(c, e, pp, [&](const std::vector<Ideal>& f) { return is_p_primary(meet_all(q, f), p).ok; });
      if (c.failed()) return;
    }
  });
  run.law("primary.minimize", "a primary decomposition can be replaced by a minimal one", [&](Ctx& c) {
    std::size_t decomposable = 0;
    const auto proper = e.proper();
    each(c, proper, [&](auto& i) {
      try {
        const auto d = primary_decomposition(i);
        ++decomposable;
        if (meet_all(q, d.components) != i || !d.minimal || !is_minimal_decomposition(d)) return false;
        if (!std::ranges::all_of(d.components, [](auto& k) { return is_primary(k).ok; })) return false;
        const auto again = minimize(d);
        return again.components == d.components;
      } catch (const NotDecomposableError&) {
        return true;
      }
    });
    c.note(std::to_string(decomposable) + " of " + std::to_string(proper.size()) + " proper ideals decomposable");
  });
}

void suite_pqx(Runner& run) {
  auto& e = run.env();
  const auto& q = e.q;
  run.law("pqx", "for P-primary P': x in P' gives (P':x) = Q; x outside P' gives a P-primary (P':x); "
                 "x outside P gives (P':x) = P'",
          [&](Ctx& c) {
            for (const auto& pp : e.ideals) {
              if (!is_primary(pp)) continue;
              const auto p = radical(pp);
              for (Element x = 0; x < q.size(); ++x) {
                c.at({lbl(pp), q.label(x)});
                const auto r = residual(pp, principal(q, x));
                c.add();
                if (pp.contains(x)) {
                  if (!c.expect(r.is_whole())) return;
                  continue;
                }
                if (!c.expect(is_p_primary(r, p).ok)) return;
                if (!p.contains(x)) {
                  c.add();
                  if (!c.expect(r == pp)) return;
                }
              }
            }
          });
}

void suite_uniqueness(Runner& run) {
  auto& e = run.env();
  const auto& q = e.q;
  std::vector<UniquenessReport> reports;
  std::string error;
  try {
    for (const auto& i : e.proper()) {
      try {
        reports.push_back(uniqueness_report(i));
      } catch (const NotDecomposableError&) {
      }
    }
  } catch (const std::exception& ex) {
    error = ex.what();
  }
  auto each_report = [&](Ctx& c, const std::function<bool(const UniquenessReport&)>& fn) {
    if (!error.empty()) throw Error(ErrorKind::ContractViolation, error);
    if (e.n() > 10) c.sampled();
    for (const auto& r : reports) {
      c.at({lbl(r.target)});
      c.add();
      if (!c.expect(fn(r))) return;
    }
  };
  run.law("uniq.associated", "the radicals of a minimal decomposition are the primes R((I:x))", [&](Ctx& c) {
    each_report(c, [](auto& r) { return r.associated_equals_colon; });
  });
  run.law("uniq.isolated", "the isolated primes are the minimal primes over I", [&](Ctx& c) {
    each_report(c, [](auto& r) { return r.isolated_are_minimal_primes; });
  });
  run.law("uniq.idqa", "every prime over I contains an isolated prime", [&](Ctx& c) {
    each_report(c, [&](auto& r) {
      for (const auto& p : primes_over(r.target))
        if (std::ranges::none_of(r.isolated, [&](auto& s) { return s.is_subset_of(p); })) return false;
      return true;
    });
  });
  run.law("uniq.component", "an isolated component is {a | a & b in I for some b outside its radical}", [&](Ctx& c) {
    each_report(c, [](auto& r) { return r.isolated_components_characterized; });
  });
  run.law("uniq.match", "isolated components agree across all minimal decompositions", [&](Ctx& c) {
    each_report(c, [](auto& r) { return r.isolated_components_match; });
  });
  (void)q;
}

void suite_irreducible(Runner& run) {
  auto& e = run.env();
  const auto& q = e.q;
  run.law("irr.strong", "strongly irreducible implies irreducible", [&](Ctx& c) {
    each(c, e.ideals, [&](auto& i) { return !is_strongly_irreducible_idealwise(i) || is_irreducible(i).ok; });
  });
  run.law("irr.elementwise", "I is strongly irreducible iff <a> ^ <b> <= I implies a in I or b in I", [&](Ctx& c) {
    each(c, e.ideals, [&](auto& i) {
      return is_strongly_irreducible_idealwise(i).ok == is_strongly_irreducible_elementwise(i).ok;
    });
  });
  run.law("irr.prime", "prime ideals are strongly irreducible", [&](Ctx& c) {
    each(c, spectrum(q), [&](auto& p) { return is_strongly_irreducible(p).ok; });
  });
  run.law("irr.lir", "for proper I and bot != x outside I some irreducible J contains I and misses x", [&](Ctx& c) {
    for (const auto& i : e.proper())
      for (Element x = 0; x < q.size(); ++x) {
        if (x == q.bottom() || i.contains(x)) continue;
        c.at({lbl(i), q.label(x)});
        c.add();
        auto j = irreducible_avoiding(i, x);
        if (!c.expect(j && is_irreducible(*j).ok && i.is_subset_of(*j) && !j->contains(x))) return;
      }
  });
  run.law("irr.representation", "a proper ideal is the meet of the irreducible ideals containing it", [&](Ctx& c) {
    each(c, e.proper(), [&](auto& i) {
      std::vector<Ideal> over;
      for (const auto& j : e.ideals)
        if (i.is_subset_of(j) && is_irreducible(j)) over.push_back(j);
      return meet_all(q, over) == i;
    });
  });
  run.law("irr.finite", "every proper ideal is an irredundant meet of finitely many irreducible ideals", [&](Ctx& c) {
    each(c, e.proper(), [&](auto& i) {
      const auto d = irreducible_decomposition(i);
      if (meet_all(q, d.components) != i) return false;
      for (std::size_t k = 0; k < d.components.size(); ++k) {
        if (!is_irreducible(d.components[k])) return false;
        auto rest = d.components;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        if (!rest.empty() && meet_all(q, rest) == i) return false;
      }
      return true;
    });
  });
  run.law("irr.prira", "a strongly irreducible proper ideal is prime iff it is radical", [&](Ctx& c) {
    each(c, e.proper(), [&](auto& p) { return !is_strongly_irreducible(p) || is_prime(p).ok == is_radical_ideal(p); });
  });
  run.law("irr.minimal", "every proper ideal lies in a minimal strongly irreducible ideal", [&](Ctx& c) {
    each(c, e.proper(), [&](auto& i) {
      const auto m = minimal_strongly_irreducible_over(i);
      if (!i.is_subset_of(m) || !is_strongly_irreducible(m)) return false;
      for (const auto& j : e.ideals)
        if (j != m && i.is_subset_of(j) && j.is_subset_of(m) && is_strongly_irreducible(j)) return false;
      return true;
    });
  });
  run.law("irr.total", "every ideal is strongly irreducible iff the ideals form a chain", [&](Ctx& c) {
    c.add();
    bool chain = true;
    for (const auto& a : e.ideals)
      for (const auto& b : e.ideals)
        if (!a.is_subset_of(b) && !b.is_subset_of(a)) chain = false;
    const bool all_strong = std::ranges::all_of(e.ideals, [](auto& i) { return is_strongly_irreducible(i).ok; });
    c.expect(chain == all_strong, {chain ? "chain" : "not a chain"});
  });
}

void suite_arithmetic(Runner& run) {
  auto& e = run.env();
  const auto& q = e.q;
  const auto r = arithmetic_equivalence_check(q);
  const std::string verdict =
      std::string("arithmetic (distributive-ideal-lattice definition): ") + (r.arithmetic ? "yes" : "no");
  run.law("arith.equivalence", "arithmetic iff irreducible and strongly irreducible ideals coincide", [&](Ctx& c) {
    c.add(e.ideals.size());
    const bool sets_equal = r.irreducible == r.strongly_irreducible;
    Strings w;
    if (r.irreducible_not_strong) w.push_back(q.label(*r.irreducible_not_strong));
    if (w.empty()) w.push_back(sets_equal ? "sets coincide" : "sets differ");
    c.expect(r.arithmetic == sets_equal, w);
    c.note(verdict);
  });
  run.law("arith.corollary", "in an arithmetic quantale every ideal is the meet of the strongly irreducible ideals over it",
          [&](Ctx& c) {
            c.add(e.ideals.size());
            c.expect(!r.arithmetic || r.every_ideal_meet_of_strongly_irreducible, {"some ideal"});
            c.note(verdict);
          });
}

void suite_collapse(Runner& run) {
  auto& e = run.env();
  const auto& q = e.q;
  if (e.n() <= 20) {
    run.law("collapse.ideals", "the ideals are exactly the principal down-sets", [&](Ctx& c) {
      c.add(std::uint64_t{1} << e.n());
      const auto brute = brute_force_ideals(q);
      std::vector<ElementSet> listed;
      for (const auto& i : e.ideals) listed.push_back(i.members());
      auto a = brute, b = listed;
      std::ranges::sort(a, [](const ElementSet& x, const ElementSet& y) { return size_then_lex_less(x, y); });
      std::ranges::sort(b, [](const ElementSet& x, const ElementSet& y) { return size_then_lex_less(x, y); });
      c.expect(a == b, {std::to_string(a.size()) + " ideals by filtering", std::to_string(b.size()) + " listed"});
    });
  } else {
    run.skip("collapse.ideals", "the ideals are exactly the principal down-sets", "subset filtering needs n <= 20");
  }
  run.law("collapse.apex", "apex(down(a)) = a and down(apex(I)) = I", [&](Ctx& c) {
    each_element(c, e, [&](Element a) { return principal(q, a).apex() == a; });
    if (c.failed()) return;
    each(c, e.ideals, [&](auto& i) { return principal(q, i.apex()) == i; });
  });
  run.law("collapse.generated", "<S> is the least ideal containing S", [&](Ctx& c) {
    each_subset(c, e, e.opt.exhaustive_subsets, [&](const ElementSet& s) {
      const auto g = generated(q, s);
      if (!s.is_subset_of(g.members())) return false;
      return std::ranges::all_of(e.ideals, [&](auto& i) { return !s.is_subset_of(i.members()) || g.is_subset_of(i); });
    });
  });
  run.law("collapse.product", "the apex product equals the closure of pairwise products", [&](Ctx& c) {
    each_pair(c, e, e.ideals, [&](auto& a, auto& b) { return product_ideals(a, b) == product_by_closure(a, b); });
  });
  run.law("collapse.galois", "K & J <= I iff K <= (I : J)", [&](Ctx& c) {
    each_triple(c, e, e.ideals, [&](auto& i, auto& j, auto& k) {
      return product_ideals(k, j).is_subset_of(i) == k.is_subset_of(residual(i, j));
    });
  });
  run.law("collapse.ideal_quantale", "the ideals form a quantale isomorphic to Q via a -> down(a)", [&](Ctx& c) {
    c.add();
    const auto iq = ideal_quantale(q, std::max<std::size_t>(q.size(), 1));
    const auto rep = check_axioms(iq.quantale);
    Strings w;
    for (const auto& cx : rep.counterexamples) w.push_back(cx.axiom);
    if (!c.expect(rep.all_ok(), w)) return;
    c.add();
    c.expect(principal_map_is_isomorphism(iq), {"a -> down(a)"});
  });
}

using SuiteFn = void (*)(Runner&);

SuiteFn suite_fn(Suite s) {
  switch (s) {
    case Suite::Axioms: return suite_axioms;
    case Suite::LemmaBip: return suite_lemma_bip;
    case Suite::PropositionBpi: return suite_bpi;
    case Suite::Annihilator: return suite_annihilator;
    case Suite::Cep: return suite_cep;
    case Suite::Lpsp: return suite_lpsp;
    case Suite::Avoidance: return suite_avoidance;
    case Suite::RadicalLemma: return suite_radical;
    case Suite::Spkr: return suite_spkr;
    case Suite::Saturation: return suite_saturation;
    case Suite::Primary: return suite_primary;
    case Suite::Pqx: return suite_pqx;
    case Suite::Uniqueness: return suite_uniqueness;
    case Suite::Irreducible: return suite_irreducible;
    case Suite::Arithmetic: return suite_arithmetic;
    case Suite::Collapse: return suite_collapse;
    case Suite::All: break;
  }
  throw Error(ErrorKind::InvalidArgument, "no single runner for suite 'all'");
}

}  // namespace

std::string_view to_string(Suite s) {
  for (const auto& [k, name] : kSuiteNames)
    if (k == s) return name;
  return "unknown";
}

Suite parse_suite(std::string_view name) {
  for (const auto& [k, n] : kSuiteNames)
    if (n == name) return k;
  throw Error(ErrorKind::InvalidArgument, "unknown suite '" + std::string(name) + "'");
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites = [] {
    std::vector<Suite> v;
    for (const auto& [k, n] : kSuiteNames)
      if (k != Suite::All) v.push_back(k);
    return v;
  }();
  return suites;
}

std::string_view to_string(LawStatus s) {
  switch (s) {
    case LawStatus::Pass: return "pass";
    case LawStatus::Fail: return "fail";
    case LawStatus::Skipped: return "skipped";
  }
  return "unknown";
}

std::size_t VerificationReport::count(LawStatus s) const {
  return static_cast<std::size_t>(std::ranges::count_if(laws, [s](const LawResult& l) { return l.status == s; }));
}

std::vector<QuantaleHom> canonical_homs(const FiniteQuantale& q) {
  std::vector<QuantaleHom> out{identity_hom(q)};
  const auto iq = ideal_quantale(q, std::max<std::size_t>(q.size(), 1));
  std::vector<Element> embed(q.size());
  for (Element a = 0; a < q.size(); ++a) embed[a] = a;
  for (Element k = 0; k < iq.ideals.size(); ++k) embed[iq.ideals[k].apex()] = k;
  out.push_back(QuantaleHom::make(q, iq.quantale, std::move(embed), "principal_embedding"));
  const auto two = chain_frame(2);
  for (const auto& p : spectrum(q)) {
    std::vector<Element> chi(q.size());
    for (Element x = 0; x < q.size(); ++x) chi[x] = p.contains(x) ? 0 : 1;
    out.push_back(QuantaleHom::make(q, two, std::move(chi), "char_" + q.label(p.apex())));
  }
  return out;
}

VerificationReport run_suite(const FiniteQuantale& q, Suite suite, const std::vector<QuantaleHom>& homs,
                             const VerifyOptions& options) {
  if (suite == Suite::Cep && homs.empty())
    throw Error(ErrorKind::HomRequired, "the cep suite needs a homomorphism (--hom)");
  for (const auto& h : homs)
    if (!h.source().same_carrier(q))
      throw Error(ErrorKind::CarrierMismatch, "homomorphism " + h.name() + " does not start at " + q.name());

  VerificationReport rep;
  rep.instance = q.name();
  Env env{q, {}, homs, options, std::mt19937_64(options.seed)};

  const std::vector<Suite> selected = suite == Suite::All ? all_suites() : std::vector<Suite>{suite};
  const bool commutative = q.is_commutative();
  if (commutative) {
    env.ideals = enumerate_ideals(q);
    if (env.homs.empty() && suite == Suite::All) {
      try {
        env.homs = canonical_homs(q);
      } catch (const Error&) {
        // Invalid instances may have no well-defined ideal quantale; cep then
        // reports the failure itself.
      }
    }
  }

  for (Suite s : selected) {
    const auto start = std::chrono::steady_clock::now();
    Runner run(rep, env, s);
    if (s != Suite::Axioms && !commutative) {
      run.skip("*", "suite requires a commutative multiplication", "noncommutative multiplication");
    } else if (s == Suite::Cep && env.homs.empty()) {
      run.law("cep.homs", "canonical homomorphisms can be built", [&](Ctx& c) {
        c.add();
        canonical_homs(q);
        c.expect(false, {"no homomorphism available"});
      });
    } else {
      const std::size_t before = rep.laws.size();
      try {
        suite_fn(s)(run);
      } catch (const std::exception& ex) {
        rep.laws.resize(before);
        run.law("setup", "suite preconditions can be computed", [&](Ctx& c) {
          c.add();
          c.note(ex.what());
          c.expect(false, {"-"});
        });
      }
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    rep.timings.push_back({std::string(to_string(s)), took.count()});
  }
  return rep;
}

CrossOracleReport cross_oracle(const FiniteQuantale& q) {
  if (q.size() > 12) throw Error(ErrorKind::TooLarge, "cross-oracle checks are limited to 12 elements");
  CrossOracleReport r;
  const auto ideals = enumerate_ideals(q);
  r.ideal_count = ideals.size();

  auto brute = brute_force_ideals(q);
  std::vector<ElementSet> listed;
  for (const auto& i : ideals) listed.push_back(i.members());
  std::ranges::sort(brute, [](const ElementSet& x, const ElementSet& y) { return size_then_lex_less(x, y); });
  std::ranges::sort(listed, [](const ElementSet& x, const ElementSet& y) { return size_then_lex_less(x, y); });
  r.ideals_match = brute == listed;

  r.radicals_agree = std::ranges::all_of(ideals, [&](const Ideal& i) {
    const auto a = radical(i, RadicalAlgorithm::Powers);
    return a == radical(i, RadicalAlgorithm::Primes) && a == radical(i, RadicalAlgorithm::Mcsets) &&
           (q.size() > 8 || a == radical_all_mcsets(i));
  });

  r.product_matches = true;
  for (const auto& a : ideals)
    for (const auto& b : ideals)
      if (product_ideals(a, b) != product_by_closure(a, b)) r.product_matches = false;

  r.isomorphism = principal_map_is_isomorphism(ideal_quantale(q, std::max<std::size_t>(q.size(), 1)));
  return r;
}

}  // namespace qk
