#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "qk/generators.hpp"
#include "qk/hom.hpp"
#include "qk/ideals.hpp"

using namespace qk;
using fx::down;
using fx::set;

TEST_SUITE("ideals") {
  TEST_CASE("is_ideal") {
    auto q = fx::q4();
    CHECK(is_ideal(q, set(q, {"bot", "a"})));
    CHECK_FALSE(is_ideal(q, set(q, {"bot", "a", "b"})));
    CHECK_FALSE(is_ideal(q, set(q, {"a"})));
    CHECK_FALSE(is_ideal(q, q.empty_set()));
    CHECK(is_ideal(q, set(q, {"bot"})));
    CHECK_THROWS_AS(make_ideal(q, set(q, {"a", "b"})), Error);
  }

  TEST_CASE("principal and apex") {
    auto q = fx::q4();
    CHECK(down(q, "a").members() == set(q, {"bot", "a"}));
    CHECK(down(q, "top").is_whole());
    auto l = fx::l3();
    CHECK(make_ideal(l, set(l, {"0", "1"})).apex() == 1);
  }

  TEST_CASE("generated") {
    auto q = fx::q4();
    CHECK(generated(q, set(q, {"a", "b"})).is_whole());
    CHECK(generated(q, set(q, {"bot"})) == zero_ideal(q));
    auto l = fx::l3();
    CHECK(generated(l, set(l, {"1"})).members() == set(l, {"0", "1"}));
    CHECK_THROWS_AS(generated(q, q.empty_set()), Error);
  }

  TEST_CASE("enumeration matches brute force") {
    CHECK(enumerate_ideals(fx::q4()).size() == 4);
    CHECK(enumerate_ideals(fx::l3()).size() == 3);
    CHECK(enumerate_ideals(chain_frame(2)).size() == 2);
    CHECK(enumerate_ideals(powerset(3)).size() == 8);
    CHECK(brute_force_ideals(fx::q4()).size() == 4);
    CHECK(brute_force_ideals(m3_quantale()).size() == 6);
  }

  TEST_CASE("operations on q4") {
    auto q = fx::q4();
    const auto A = down(q, "a"), B = down(q, "b"), Z = zero_ideal(q), W = whole(q);
    CHECK(product_ideals(A, B) == Z);
    CHECK(product_by_closure(A, B) == Z);
    CHECK(residual(Z, A) == B);
    CHECK(residual(Z, B) == A);
    CHECK(meet_ideals(A, B) == Z);
    CHECK(join_ideals(A, B) == W);
    for (const auto& i : enumerate_ideals(q)) {
      CHECK(residual(i, W) == i);
      CHECK(join_ideals(i, Z) == i);
    }
    CHECK(meet_all(q, {}) == W);
    CHECK(join_all(q, {}) == Z);
  }

  TEST_CASE("products on l3 follow the oracle") {
    auto l = fx::l3();
    const auto I0 = down(l, "0"), I1 = down(l, "1"), I2 = down(l, "2");
    CHECK(product_ideals(I1, I1) == I0);
    CHECK(product_ideals(I1, I2) == I1);
    CHECK(product_ideals(I2, I2) == I2);
    CHECK(residual(I0, I1) == I1);
    CHECK(residual(I1, I1) == I2);
    for (const auto& a : enumerate_ideals(l))
      for (const auto& b : enumerate_ideals(l)) CHECK(product_ideals(a, b) == product_by_closure(a, b));
  }

  TEST_CASE("mixed carriers are rejected") {
    CHECK_THROWS_AS(meet_ideals(zero_ideal(fx::q4()), zero_ideal(fx::q4())), Error);
  }

  TEST_CASE("annihilator") {
    auto q = fx::q4();
    CHECK(annihilator(q, set(q, {"a"})) == down(q, "b"));
    CHECK(annihilator(q, set(q, {"bot"})).is_whole());
    auto l = fx::l3();
    CHECK(annihilator(l, set(l, {"2"})) == down(l, "0"));
    CHECK(annihilator(l, set(l, {"1"})) == down(l, "1"));
  }

  TEST_CASE("ideal quantale") {
    for (const auto& q : {fx::q4(), fx::l3(), trivial_quantale(), m3_quantale()}) {
      const auto iq = ideal_quantale(q);
      CHECK(iq.quantale.size() == q.size());
      CHECK(check_axioms(iq.quantale).all_ok());
      CHECK(principal_map_is_isomorphism(iq));
    }
    CHECK(ideal_quantale(fx::q4()).quantale.label(1) == "I_a");
  }

  TEST_CASE("extension and contraction") {
    auto q = fx::q4();
    auto c = fx::c2();
    std::vector<Element> map(4);
    map[q.at("bot")] = c.bottom();
    map[q.at("a")] = c.top();
    map[q.at("b")] = c.bottom();
    map[q.at("top")] = c.top();
    auto h = QuantaleHom::make(q, c, map);
    CHECK(contraction(h, zero_ideal(c)) == down(q, "b"));
    CHECK(extension(h, down(q, "a")).is_whole());
    CHECK(extension(h, down(q, "b")) == zero_ideal(c));
    auto id = identity_hom(q);
    for (const auto& i : enumerate_ideals(q)) {
      CHECK(extension(id, i) == i);
      CHECK(contraction(id, i) == i);
    }
    CHECK_THROWS_AS(contraction(h, zero_ideal(q)), Error);
  }

  TEST_CASE("formatting") {
    auto q = fx::q4();
    CHECK(format_members(down(q, "a")) == "{bot,a}");
  }
}
