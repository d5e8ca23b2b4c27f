#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "qk/decompose.hpp"
#include "qk/generators.hpp"

using namespace qk;
using fx::down;

namespace {

std::vector<Element> apexes(const std::vector<Ideal>& is) {
  std::vector<Element> out;
  for (const auto& i : is) out.push_back(i.apex());
  return out;
}

// Chain 0 < 1 < 2 < 3 with 2 idempotent and 1 & 2 = 0: the zero ideal is
// not a meet of primary ideals.
FiniteQuantale gap4() {
  return build_quantale("gap4", {"0", "1", "2", "3"}, {{"0", "1"}, {"1", "2"}, {"2", "3"}},
                        {{"0", "0", "0", "0"}, {"0", "0", "0", "1"}, {"0", "0", "2", "2"}, {"0", "1", "2", "3"}});
}

}  // namespace

TEST_SUITE("decompose") {
  TEST_CASE("irreducibility") {
    auto q = fx::q4();
    const auto z = is_irreducible(zero_ideal(q));
    CHECK_FALSE(z.ok);
    CHECK(z.witness == std::vector<Element>{q.at("a"), q.at("b")});
    CHECK_FALSE(is_strongly_irreducible(zero_ideal(q)).ok);
    CHECK(is_irreducible(down(q, "a")).ok);
    CHECK(is_strongly_irreducible(down(q, "a")).ok);
    CHECK(is_irreducible(whole(q)).ok);
    CHECK(is_strongly_irreducible(whole(q)).ok);
    auto l = fx::l3();
    CHECK(is_irreducible(down(l, "0")).ok);
    CHECK(is_strongly_irreducible(down(l, "0")).ok);
    auto m = m3_quantale();
    CHECK(is_irreducible(down(m, "a")).ok);
    CHECK_FALSE(is_strongly_irreducible(down(m, "a")).ok);
    CHECK_FALSE(is_irreducible(zero_ideal(m)).ok);
  }

  TEST_CASE("irreducible avoiding an element") {
    auto q = fx::q4();
    auto j = irreducible_avoiding(zero_ideal(q), q.at("a"));
    REQUIRE(j.has_value());
    CHECK(*j == down(q, "b"));
    CHECK_FALSE(irreducible_avoiding(down(q, "a"), q.at("a")).has_value());
  }

  TEST_CASE("irreducible decomposition") {
    auto q = fx::q4();
    CHECK(apexes(irreducible_decomposition(zero_ideal(q)).components) == std::vector<Element>{q.at("a"), q.at("b")});
    auto l = fx::l3();
    CHECK(apexes(irreducible_decomposition(down(l, "0")).components) == std::vector<Element>{0});
    for (const auto& m : maximal_ideals(q)) CHECK(irreducible_decomposition(m).components == std::vector<Ideal>{m});
    auto m3 = m3_quantale();
    CHECK(apexes(irreducible_decomposition(zero_ideal(m3)).components) == std::vector<Element>{m3.at("b"), m3.at("c")});
    CHECK_THROWS_AS(irreducible_decomposition(whole(q)), Error);
  }

  TEST_CASE("primary decomposition") {
    auto q = fx::q4();
    const auto d = primary_decomposition(zero_ideal(q));
    CHECK(apexes(d.components) == std::vector<Element>{q.at("a"), q.at("b")});
    CHECK(apexes(d.radicals) == std::vector<Element>{q.at("a"), q.at("b")});
    CHECK(d.minimal);
    auto l = fx::l3();
    const auto e = primary_decomposition(down(l, "0"));
    CHECK(apexes(e.components) == std::vector<Element>{0});
    CHECK(apexes(e.radicals) == std::vector<Element>{1});
    CHECK(e.minimal);
    CHECK(apexes(primary_decomposition(down(l, "1")).components) == std::vector<Element>{1});
    auto m = m3_quantale();
    CHECK(apexes(primary_decomposition(zero_ideal(m)).components) == std::vector<Element>{m.bottom()});
  }

  TEST_CASE("not decomposable") {
    auto g = gap4();
    REQUIRE(check_axioms(g).all_ok());
    CHECK_FALSE(is_primary(zero_ideal(g)).ok);
    try {
      primary_decomposition(zero_ideal(g));
      FAIL("expected NotDecomposable");
    } catch (const NotDecomposableError& e) {
      CHECK(e.kind() == ErrorKind::NotDecomposable);
      CHECK(e.gap() == down(g, "1"));
    }
    CHECK(enumerate_minimal_decompositions(zero_ideal(g)).empty());
    CHECK(apexes(irreducible_decomposition(zero_ideal(g)).components) == std::vector<Element>{0});
  }

  TEST_CASE("minimize") {
    auto q = fx::q4();
    Decomposition d{zero_ideal(q), {down(q, "a"), down(q, "b"), down(q, "a")}, DecompositionKind::Primary, {}, false};
    const auto m = minimize(d);
    CHECK(apexes(m.components) == std::vector<Element>{q.at("a"), q.at("b")});
    CHECK(m.minimal);
    CHECK(minimize(m).components == m.components);

    auto l = fx::l3();
    Decomposition e{down(l, "0"), {down(l, "0"), down(l, "1")}, DecompositionKind::Primary, {}, false};
    CHECK(apexes(minimize(e).components) == std::vector<Element>{0});

    Decomposition wrong{zero_ideal(q), {down(q, "a")}, DecompositionKind::Primary, {}, false};
    CHECK_THROWS_AS(minimize(wrong), Error);
    Decomposition irr{zero_ideal(q), {down(q, "a"), down(q, "b")}, DecompositionKind::Irreducible, {}, false};
    CHECK_THROWS_AS(minimize(irr), Error);
  }

  TEST_CASE("enumerated minimal decompositions") {
    auto q = fx::q4();
    const auto all = enumerate_minimal_decompositions(zero_ideal(q));
    REQUIRE(all.size() == 1);
    CHECK(apexes(all[0].components) == std::vector<Element>{q.at("a"), q.at("b")});
  }

  TEST_CASE("uniqueness report") {
    auto q = fx::q4();
    const auto r = uniqueness_report(zero_ideal(q));
    CHECK(apexes(r.associated_primes) == std::vector<Element>{q.at("a"), q.at("b")});
    CHECK(apexes(r.colon_primes) == std::vector<Element>{q.at("a"), q.at("b")});
    CHECK(apexes(r.isolated) == std::vector<Element>{q.at("a"), q.at("b")});
    CHECK(r.embedded.empty());
    CHECK(r.associated_equals_colon);
    CHECK(r.isolated_are_minimal_primes);
    CHECK(r.isolated_components_characterized);
    CHECK(r.isolated_components_match);

    auto l = fx::l3();
    const auto s = uniqueness_report(down(l, "0"));
    CHECK(apexes(s.associated_primes) == std::vector<Element>{1});
    CHECK(apexes(s.isolated) == std::vector<Element>{1});
    for (const auto& p : spectrum(q)) CHECK(uniqueness_report(p).associated_primes == std::vector<Ideal>{p});
    CHECK_THROWS_AS(uniqueness_report(zero_ideal(gap4())), NotDecomposableError);
  }

  TEST_CASE("quotient by an element") {
    auto l = fx::l3();
    const auto p = down(l, "0");
    CHECK(quotient_by_element(p, 0).is_whole());
    CHECK(quotient_by_element(p, 2) == p);
    CHECK(quotient_by_element(p, 1) == down(l, "1"));
    CHECK(is_p_primary(quotient_by_element(p, 1), down(l, "1")).ok);
    auto q = fx::q4();
    CHECK_THROWS_AS(quotient_by_element(zero_ideal(q), q.top()), Error);
  }

  TEST_CASE("arithmetic") {
    auto q = fx::q4();
    const auto r = arithmetic_equivalence_check(q);
    CHECK(r.arithmetic);
    CHECK(is_arithmetic(q));
    CHECK(apexes(r.irreducible) == std::vector<Element>{q.at("a"), q.at("b"), q.top()});
    CHECK(r.irreducible == r.strongly_irreducible);
    CHECK(r.consistent);
    CHECK(is_arithmetic(fx::l3()));
    auto m = m3_quantale();
    const auto s = arithmetic_equivalence_check(m);
    CHECK_FALSE(s.arithmetic);
    CHECK(s.distributivity_witness.size() == 3);
    CHECK(s.irreducible != s.strongly_irreducible);
    CHECK(s.irreducible_not_strong.has_value());
    CHECK(s.consistent);
  }

  TEST_CASE("minimal strongly irreducible") {
    auto q = fx::q4();
    CHECK(minimal_strongly_irreducible_over(zero_ideal(q)) == down(q, "a"));
    auto l = fx::l3();
    CHECK(minimal_strongly_irreducible_over(down(l, "0")) == down(l, "0"));
    for (const auto& m : maximal_ideals(q)) CHECK(minimal_strongly_irreducible_over(m) == m);
  }

  TEST_CASE("totally ordered ideals") {
    CHECK(totally_ordered_ideals(fx::l3()));
    CHECK_FALSE(totally_ordered_ideals(fx::q4()));
    CHECK(totally_ordered_ideals(trivial_quantale()));
  }

  TEST_CASE("classification") {
    auto l = fx::l3();
    const auto c = classify(down(l, "0"));
    CHECK(c.proper);
    CHECK(c.primary);
    CHECK_FALSE(c.prime);
    CHECK_FALSE(c.semiprime);
    CHECK(c.irreducible);
    CHECK(c.strongly_irreducible);
    CHECK(c.minimal_ideal);
    CHECK(c.radical == down(l, "1"));
    CHECK(c.witnesses.contains("prime"));
    const auto m = classify(down(l, "1"));
    CHECK(m.maximal);
    CHECK(m.prime);
    CHECK(m.minimal_prime);
  }
}
