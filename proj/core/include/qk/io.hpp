#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qk/hom.hpp"
#include "qk/quantale.hpp"

namespace qk {

/// A `.quant` file after parsing, before the lattice is built.
struct QuantSource {
  struct Token {
    std::string text;
    SourceSpan span;
  };
  struct OrderPair {
    Token lower;
    Token upper;
  };
  struct MulRow {
    Token row;
    std::vector<Token> entries;
  };

  std::string name;
  std::vector<Token> elements;
  std::vector<OrderPair> order;
  std::vector<MulRow> mul;
  SourceSpan end;
};

/// Grammar only, plus label and arity checks: SyntaxError, UndeclaredLabel,
/// DuplicateLabel, RowArity.
QuantSource parse_quant_source(std::string_view text);
/// Parses and builds. Lattice errors from `build_quantale` pass through.
FiniteQuantale parse_quant(std::string_view text, std::size_t cap = kDefaultElementCap);
/// Canonical text: elements and mul rows in index order, covers only.
std::string write_quant(const FiniteQuantale& q);

struct HomSource {
  std::string name;
  std::string source;
  std::string target;
  std::vector<std::pair<QuantSource::Token, QuantSource::Token>> map;
  SourceSpan end;
};

HomSource parse_hom_source(std::string_view text);
/// The map as element indices. Every source element must be mapped exactly
/// once. Throws UndeclaredLabel, DuplicateLabel, HomInvalid.
std::vector<Element> resolve_hom_map(const HomSource& src, const FiniteQuantale& source, const FiniteQuantale& target);
/// `resolve_hom_map` followed by `QuantaleHom::make`.
QuantaleHom build_hom(const HomSource& src, const FiniteQuantale& source, const FiniteQuantale& target);
std::string write_hom(const QuantaleHom& h);

/// Throws Io.
std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);
FiniteQuantale load_quant(const std::filesystem::path& path, std::size_t cap = kDefaultElementCap);

}  // namespace qk
