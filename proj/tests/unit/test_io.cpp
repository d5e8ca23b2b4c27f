#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "qk/generators.hpp"
#include "qk/io.hpp"
#include "qk/report.hpp"

using namespace qk;

namespace {

ParseError parse_error(const std::string& text) {
  try {
    parse_quant(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error");
  return ParseError(ErrorKind::Io, {}, "");
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  s.replace(s.find(from), from.size(), to);
  return s;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("q4 source parses") {
    auto q = parse_quant(fx::kQ4Text);
    CHECK(q.name() == "q4");
    CHECK(q.labels() == std::vector<std::string>{"bot", "a", "b", "top"});
    CHECK(check_axioms(q).all_ok());
  }

  TEST_CASE("canonical writing reproduces the q4 source") { CHECK(write_quant(fx::q4()) == fx::kQ4Text); }

  TEST_CASE("round trips") {
    for (const auto& q : {fx::q4(), fx::l3(), trivial_quantale(), m3_quantale(), powerset(3), lukasiewicz(6),
                          ideal_quantale(fx::q4()).quantale}) {
      const auto text = write_quant(q);
      const auto back = parse_quant(text);
      CHECK(structurally_equal(back, q));
      CHECK(write_quant(back) == text);
    }
  }

  TEST_CASE("comments, blank lines and noncanonical order") {
    const std::string text =
        "# leading comment\n\nquantale l3   # trailing\nelements: 0 1 2\norder:\n  0 <= 2\n  0 <= 1\n  1 <= 2\n"
        "mul:\n  2: 0 1 2\n  0: 0 0 0\n  1: 0 0 1\nend\n\n# done\n";
    CHECK(write_quant(parse_quant(text)) == write_quant(fx::l3()));
  }

  TEST_CASE("syntax errors carry positions") {
    auto e = parse_error("quantale\n");
    CHECK(e.kind() == ErrorKind::SyntaxError);
    CHECK(e.span().line == 1);
    e = parse_error(replace(fx::kQ4Text, "order:", "order"));
    CHECK(e.kind() == ErrorKind::SyntaxError);
    CHECK(e.span().line == 3);
    e = parse_error(replace(fx::kQ4Text, "end\n", ""));
    CHECK(e.kind() == ErrorKind::SyntaxError);
    CHECK(std::string(e.what()).find("unexpected end of input") != std::string::npos);
    e = parse_error(std::string(fx::kQ4Text) + "extra\n");
    CHECK(e.kind() == ErrorKind::SyntaxError);
    CHECK(e.span().line == 14);
  }

  TEST_CASE("label errors") {
    auto e = parse_error(replace(fx::kQ4Text, "  bot <= b\n", "  x1 <= x9\n"));
    CHECK(e.kind() == ErrorKind::UndeclaredLabel);
    CHECK(e.span().line == 5);
    CHECK(e.span().column == 3);
    e = parse_error(replace(fx::kQ4Text, "elements: bot a b top", "elements: bot a a top"));
    CHECK(e.kind() == ErrorKind::DuplicateLabel);
    CHECK(e.span().column == 17);
    e = parse_error(replace(fx::kQ4Text, "  b:   bot bot b   b\n", ""));
    CHECK(e.kind() == ErrorKind::RowArity);
    CHECK(e.span().line == 12);
    e = parse_error(replace(fx::kQ4Text, "a:   bot a   bot a", "a:   bot a   bot"));
    CHECK(e.kind() == ErrorKind::RowArity);
    CHECK(e.span().line == 10);
  }

  TEST_CASE("lattice errors pass through") {
    const std::string v = "quantale v\nelements: b x y\norder:\n b <= x\n b <= y\nmul:\n b: b b b\n x: b x b\n y: b b y\nend\n";
    try {
      parse_quant(v);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotALattice);
    }
  }

  TEST_CASE("hom files") {
    const std::string text = "hom q4_to_c2 : q4 -> c2\nmap:\n  bot -> bot\n  a -> top\n  b -> bot\n  top -> top\nend\n";
    const auto src = parse_hom_source(text);
    CHECK(src.name == "q4_to_c2");
    CHECK(src.source == "q4");
    CHECK(src.target == "c2");
    const auto h = build_hom(src, fx::q4(), fx::c2());
    CHECK(write_hom(h) == text);

    const auto partial = parse_hom_source("hom p : q4 -> c2\nmap:\n  bot -> bot\nend\n");
    try {
      resolve_hom_map(partial, fx::q4(), fx::c2());
      FAIL("expected HomInvalid");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::HomInvalid);
    }
    const auto bad = parse_hom_source("hom p : q4 -> c2\nmap:\n  bot -> bot\n  a -> top\n  b -> top\n  top -> top\nend\n");
    CHECK_THROWS_AS(build_hom(bad, fx::q4(), fx::c2()), Error);
    CHECK_THROWS_AS(parse_hom_source("hom p q4 -> c2\nmap:\nend\n"), ParseError);
  }

  TEST_CASE("record and table rendering") {
    Records rs{Record{}.add("k", "v").add("n", "1"), Record{}.add("k", "↓a")};
    CHECK(render(rs, OutputFormat::Records) == "k\tv\nn\t1\n\nk\t↓a\n");
    CHECK(render(rs, OutputFormat::Table) == "k   n\nv   1\n↓a  -\n");
    CHECK(parse_output_format("table") == OutputFormat::Table);
    CHECK_THROWS_AS(parse_output_format("json"), Error);
  }
}
