#include <functional>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "qk/generators.hpp"
#include "qk/hom.hpp"

using namespace qk;

namespace {

bool same_tables(const FiniteQuantale& a, const FiniteQuantale& b) {
  if (a.size() != b.size()) return false;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (a.leq(x, y) != b.leq(x, y) || a.mul(x, y) != b.mul(x, y)) return false;
  return true;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Io;
}

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("build q4 from labels") {
    auto q = fx::q4();
    CHECK(q.size() == 4);
    CHECK(q.label(q.bottom()) == "bot");
    CHECK(q.label(q.top()) == "top");
    CHECK(q.join(fx::el(q, "a"), fx::el(q, "b")) == q.top());
    CHECK(q.meet(fx::el(q, "a"), fx::el(q, "b")) == q.bottom());
    CHECK(q.is_commutative());
  }

  TEST_CASE("build errors") {
    CHECK(kind_of([] { build_quantale("v", {"b", "x", "y"}, {{"b", "x"}, {"b", "y"}}, {{"b", "b", "b"}, {"b", "x", "b"}, {"b", "b", "y"}}); }) ==
          ErrorKind::NotALattice);
    CHECK(kind_of([] { build_quantale("cyc", {"p", "r"}, {{"p", "r"}, {"r", "p"}}, {{"p", "p"}, {"p", "r"}}); }) ==
          ErrorKind::NotAPartialOrder);
    CHECK(kind_of([] { build_quantale("dup", {"p", "p"}, {}, {{"p", "p"}, {"p", "p"}}); }) == ErrorKind::DuplicateLabel);
    CHECK(kind_of([] { build_quantale("u", {"p", "r"}, {{"p", "zz"}}, {{"p", "p"}, {"p", "r"}}); }) ==
          ErrorKind::UndeclaredLabel);
    CHECK(kind_of([] { build_quantale("ar", {"p", "r"}, {{"p", "r"}}, {{"p", "p"}}); }) == ErrorKind::RowArity);
  }

  TEST_CASE("axioms on q4 and l3") {
    CHECK(check_axioms(fx::q4()).all_ok());
    CHECK(check_axioms(fx::l3()).all_ok());
    CHECK(check_axioms(fx::q4()).counterexamples.empty());
  }

  TEST_CASE("perturbed q4 fails distributivity with a witness") {
    auto q = fx::q4();
    std::vector<Element> mul(q.mul_table().begin(), q.mul_table().end());
    const Element a = fx::el(q, "a"), b = fx::el(q, "b");
    mul[a * 4 + b] = q.top();
    mul[b * 4 + a] = q.top();
    const auto r = check_axioms(replace_mul(q, mul));
    CHECK(r.comm_ok);
    CHECK_FALSE(r.distrib_ok);
    CHECK_FALSE(r.all_ok());
    bool has_witness = false;
    for (const auto& cx : r.counterexamples)
      if (cx.axiom == "distributivity") has_witness = !cx.elements.empty();
    CHECK(has_witness);
  }

  TEST_CASE("noncommutative table is reported, not rejected") {
    auto q = fx::l3();
    std::vector<Element> mul(q.mul_table().begin(), q.mul_table().end());
    mul[1 * 3 + 2] = 0;  // 1 & 2 = 0 but 2 & 1 = 1
    auto nc = replace_mul(q, mul);
    CHECK_FALSE(nc.is_commutative());
    CHECK_FALSE(check_axioms(nc).comm_ok);
    CHECK_THROWS_AS(require_commutative(nc), Error);
  }

  TEST_CASE("power") {
    auto l = fx::l3();
    CHECK(power(l, 1, 2) == 0);
    CHECK(power(l, 2, 5) == 2);
    auto q = fx::q4();
    for (unsigned k = 1; k <= 5; ++k) CHECK(power(q, fx::el(q, "a"), k) == fx::el(q, "a"));
    CHECK_THROWS_AS(power(q, q.top(), 0), Error);
  }

  TEST_CASE("power of join") {
    auto l = fx::l3();
    CHECK(power_of_join(l, 1, 1, 2) == 0);
    CHECK(power(l, l.join(1, 1), 2) == 0);
    auto q = fx::q4();
    const Element a = fx::el(q, "a"), b = fx::el(q, "b");
    CHECK(power_of_join(q, a, b, 2) == q.top());
    for (Element x = 0; x < 4; ++x)
      for (Element y = 0; y < 4; ++y) {
        CHECK(power_of_join(q, x, y, 1) == q.join(x, y));
        for (unsigned k = 1; k <= 4; ++k) CHECK(power_of_join(q, x, y, k) == power(q, q.join(x, y), k));
      }
  }

  TEST_CASE("units") {
    auto q = fx::q4();
    CHECK(is_unit(q, q.top()));
    CHECK_FALSE(is_unit(q, fx::el(q, "a")));
    auto l = fx::l3();
    CHECK_FALSE(is_unit(l, 1));
    CHECK(is_unit(l, 2));
  }

  TEST_CASE("generators") {
    CHECK(same_tables(powerset(2), fx::q4()));
    CHECK(same_tables(lukasiewicz(3), fx::l3()));
    CHECK(same_tables(lower_sets({2, {}}), powerset(2)));
    CHECK(powerset(3).size() == 8);
    CHECK(lukasiewicz(8).size() == 8);
    CHECK(lower_sets({3, {{1, 2}, {2, 3}}}).size() == 4);
    CHECK(m3_quantale().size() == 6);
    CHECK(trivial_quantale().size() == 1);
    CHECK(check_axioms(m3_quantale()).all_ok());
    CHECK(check_axioms(trivial_quantale()).all_ok());
    CHECK(check_axioms(opens({3, {0b001, 0b011}})).all_ok());
    CHECK(generate(PowersetGen{3}).axiom_status() == AxiomStatus::Valid);
  }

  TEST_CASE("generator caps and errors") {
    CHECK(kind_of([] { powerset(13); }) == ErrorKind::TooLarge);
    CHECK(kind_of([] { powerset(3, 4); }) == ErrorKind::TooLarge);
    CHECK(kind_of([] { lower_sets({2, {{1, 2}, {2, 1}}}); }) == ErrorKind::NotAPartialOrder);
    CHECK(kind_of([] { parse_generator_spec("bogus:3"); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { parse_generator_spec("powerset:x"); }) == ErrorKind::InvalidArgument);
  }

  TEST_CASE("generator specs") {
    CHECK(generate(parse_generator_spec("powerset:2")).size() == 4);
    CHECK(generate(parse_generator_spec("lukasiewicz:5")).size() == 5);
    CHECK(generate(parse_generator_spec("chain:3")).size() == 3);
    CHECK(generate(parse_generator_spec("lowersets:3:1<2,2<3")).size() == 4);
    CHECK(generate(parse_generator_spec("lowersets:2")).size() == 4);
    CHECK(generate(parse_generator_spec("opens:2:1")).size() == 3);
    CHECK(generate(parse_generator_spec("m3")).size() == 6);
    CHECK(generate(parse_generator_spec("trivial")).size() == 1);
    auto iq = generate(parse_generator_spec("ideal_quantale:q4", [](const std::string&) { return fx::q4(); }));
    CHECK(iq.size() == 4);
  }

  TEST_CASE("poset and topology enumeration") {
    CHECK(all_posets(1).size() == 1);
    CHECK(all_posets(2).size() == 3);
    CHECK(all_posets(3).size() == 19);
    CHECK(all_posets(4).size() == 219);
    CHECK(all_topologies(1).size() == 1);
    CHECK(all_topologies(2).size() == 4);
    CHECK(all_topologies(3).size() == 29);
  }

  TEST_CASE("homomorphism checks") {
    auto q = fx::q4();
    auto c = fx::c2();
    const Element B = c.bottom(), T = c.top();
    std::vector<Element> id{0, 1, 2, 3};
    CHECK(check_hom(q, q, id).ok);

    // bot, b -> bot; a, top -> top
    std::vector<Element> good(4);
    good[q.bottom()] = B;
    good[fx::el(q, "a")] = T;
    good[fx::el(q, "b")] = B;
    good[q.top()] = T;
    CHECK(check_hom(q, c, good).ok);

    std::vector<Element> bad(4, T);
    bad[q.bottom()] = B;
    const auto r = check_hom(q, c, bad);
    CHECK_FALSE(r.ok);
    CHECK(r.condition == "meet");
    CHECK(((r.witness.first == fx::el(q, "a") && r.witness.second == fx::el(q, "b")) ||
           (r.witness.first == fx::el(q, "b") && r.witness.second == fx::el(q, "a"))));
    CHECK_THROWS_AS(QuantaleHom::make(q, c, bad), Error);

    auto h = QuantaleHom::make(q, c, good, "q4_to_c2");
    auto both = compose(identity_hom(c), compose(h, identity_hom(q)));
    CHECK(both.map() == good);
    CHECK(check_hom(both.source(), both.target(), both.map()).ok);
    CHECK_THROWS_AS(compose(h, h), Error);
  }
}
