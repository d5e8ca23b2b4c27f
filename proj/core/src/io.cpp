#include "qk/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace qk {

namespace {

using Token = QuantSource::Token;

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

// Splits on whitespace; ':' is always a token of its own; '#' starts a comment.
std::vector<Line> lex(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      const char ch = raw[i];
      if (ch == ' ' || ch == '\t' || ch == '\r') {
        ++i;
        continue;
      }
      const std::size_t start = i;
      if (ch == ':') {
        ++i;
      } else {
        while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r' && raw[i] != ':') ++i;
      }
      line.tokens.push_back({std::string(raw.substr(start, i - start)), {number, start + 1, i - start}});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return lines;
}

[[noreturn]] void syntax(SourceSpan at, const std::string& message) {
  throw ParseError(ErrorKind::SyntaxError, at, message);
}

SourceSpan line_span(const Line& l) { return {l.number, 1, 0}; }

class Cursor {
 public:
  explicit Cursor(std::string_view text) : lines_(lex(text)) {
    eof_ = {lines_.empty() ? 1 : lines_.back().number + 1, 1, 0};
  }
  bool done() const { return next_ == lines_.size(); }
  const Line& peek(const char* expected) const {
    if (done()) syntax(eof_, std::string("unexpected end of input, expected ") + expected);
    return lines_[next_];
  }
  const Line& take(const char* expected) {
    const Line& l = peek(expected);
    ++next_;
    return l;
  }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  SourceSpan eof_;
};

bool is_word(const Token& t, std::string_view w) { return t.text == w; }

bool is_label(const Token& t) { return t.text != ":" && t.text != "<=" && t.text != "->"; }

void expect_shape(const Line& l, std::initializer_list<std::string_view> shape, const char* expected) {
  // Empty string_view in `shape` stands for any label.
  if (l.tokens.size() != shape.size()) syntax(line_span(l), std::string("expected ") + expected);
  std::size_t k = 0;
  for (std::string_view s : shape) {
    const Token& t = l.tokens[k++];
    if (s.empty() ? !is_label(t) : t.text != s) syntax(t.span, std::string("expected ") + expected);
  }
}

[[noreturn]] void undeclared(const Token& t, const std::string& where) {
  throw ParseError(ErrorKind::UndeclaredLabel, t.span, "label '" + t.text + "' is not declared in " + where);
}

std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(std::ranges::count_if(s, [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

}  // namespace

QuantSource parse_quant_source(std::string_view text) {
  Cursor cur(text);
  QuantSource src;

  const Line& header = cur.take("'quantale NAME'");
  expect_shape(header, {"quantale", ""}, "'quantale NAME'");
  src.name = header.tokens[1].text;

  const Line& elems = cur.take("'elements: LABEL ...'");
  if (elems.tokens.size() < 3 || !is_word(elems.tokens[0], "elements") || !is_word(elems.tokens[1], ":"))
    syntax(line_span(elems), "expected 'elements: LABEL ...'");
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 2; k < elems.tokens.size(); ++k) {
    const Token& t = elems.tokens[k];
    if (!is_label(t)) syntax(t.span, "expected an element label");
    if (!index.emplace(t.text, src.elements.size()).second)
      throw ParseError(ErrorKind::DuplicateLabel, t.span, "label '" + t.text + "' declared twice");
    src.elements.push_back(t);
  }

  expect_shape(cur.take("'order:'"), {"order", ":"}, "'order:'");
  auto declared = [&](const Token& t, const char* where) {
    if (!index.contains(t.text)) undeclared(t, where);
  };
  while (true) {
    const Line& l = cur.take("'A <= B' or 'mul:'");
    if (!l.tokens.empty() && is_word(l.tokens[0], "mul")) {
      expect_shape(l, {"mul", ":"}, "'mul:'");
      break;
    }
    expect_shape(l, {"", "<=", ""}, "'A <= B' or 'mul:'");
    declared(l.tokens[0], "elements");
    declared(l.tokens[2], "elements");
    src.order.push_back({l.tokens[0], l.tokens[2]});
  }

  std::vector<bool> seen(src.elements.size(), false);
  while (true) {
    const Line& l = cur.take("'ROW: ENTRY ...' or 'end'");
    if (l.tokens.size() == 1 && is_word(l.tokens[0], "end")) {
      src.end = l.tokens[0].span;
      break;
    }
    if (l.tokens.size() < 2 || !is_label(l.tokens[0]) || !is_word(l.tokens[1], ":"))
      syntax(line_span(l), "expected 'ROW: ENTRY ...' or 'end'");
    const Token& row = l.tokens[0];
    declared(row, "elements");
    const std::size_t r = index.at(row.text);
    if (seen[r]) throw ParseError(ErrorKind::RowArity, row.span, "second mul row for '" + row.text + "'");
    seen[r] = true;
    QuantSource::MulRow mr{row, {}};
    for (std::size_t k = 2; k < l.tokens.size(); ++k) {
      const Token& t = l.tokens[k];
      if (!is_label(t)) syntax(t.span, "expected an element label");
      declared(t, "elements");
      mr.entries.push_back(t);
    }
    if (mr.entries.size() != src.elements.size())
      throw ParseError(ErrorKind::RowArity, row.span,
                       "mul row '" + row.text + "' has " + std::to_string(mr.entries.size()) + " entries, expected " +
                           std::to_string(src.elements.size()));
    src.mul.push_back(std::move(mr));
  }
  for (std::size_t k = 0; k < seen.size(); ++k)
    if (!seen[k])
      throw ParseError(ErrorKind::RowArity, src.end, "mul section has no row for '" + src.elements[k].text + "'");

  if (!cur.done()) syntax(line_span(cur.peek("")), "expected end of input after 'end'");
  return src;
}

FiniteQuantale parse_quant(std::string_view text, std::size_t cap) {
  const QuantSource src = parse_quant_source(text);
  std::vector<std::string> labels;
  for (const auto& t : src.elements) labels.push_back(t.text);
  std::vector<std::pair<std::string, std::string>> order;
  for (const auto& p : src.order) order.emplace_back(p.lower.text, p.upper.text);
  std::vector<std::vector<std::string>> mul(labels.size());
  for (const auto& row : src.mul) {
    const auto r = static_cast<std::size_t>(std::ranges::find(labels, row.row.text) - labels.begin());
    for (const auto& e : row.entries) mul[r].push_back(e.text);
  }
  return build_quantale(src.name, std::move(labels), order, mul, cap);
}

std::string write_quant(const FiniteQuantale& q) {
  std::ostringstream out;
  out << "quantale " << q.name() << "\n";
  out << "elements:";
  for (const auto& l : q.labels()) out << ' ' << l;
  out << "\norder:\n";
  for (const auto& [a, b] : q.covers()) out << "  " << q.label(a) << " <= " << q.label(b) << "\n";
  out << "mul:\n";
  std::size_t width = 0;
  for (const auto& l : q.labels()) width = std::max(width, display_width(l));
  const std::size_t n = q.size();
  for (Element x = 0; x < n; ++x) {
    const auto& row = q.label(x);
    out << "  " << row << ':' << std::string(width - display_width(row), ' ');
    for (Element y = 0; y < n; ++y) {
      const auto& e = q.label(q.mul(x, y));
      out << ' ' << e;
      if (y + 1 < n) out << std::string(width - display_width(e), ' ');
    }
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

HomSource parse_hom_source(std::string_view text) {
  Cursor cur(text);
  HomSource src;
  const Line& header = cur.take("'hom NAME : SRC -> DST'");
  expect_shape(header, {"hom", "", ":", "", "->", ""}, "'hom NAME : SRC -> DST'");
  src.name = header.tokens[1].text;
  src.source = header.tokens[3].text;
  src.target = header.tokens[5].text;
  expect_shape(cur.take("'map:'"), {"map", ":"}, "'map:'");
  while (true) {
    const Line& l = cur.take("'X -> Y' or 'end'");
    if (l.tokens.size() == 1 && is_word(l.tokens[0], "end")) {
      src.end = l.tokens[0].span;
      break;
    }
    expect_shape(l, {"", "->", ""}, "'X -> Y' or 'end'");
    src.map.emplace_back(l.tokens[0], l.tokens[2]);
  }
  if (!cur.done()) syntax(line_span(cur.peek("")), "expected end of input after 'end'");
  return src;
}

std::vector<Element> resolve_hom_map(const HomSource& src, const FiniteQuantale& source,
                                     const FiniteQuantale& target) {
  constexpr Element kUnset = static_cast<Element>(-1);
  std::vector<Element> map(source.size(), kUnset);
  for (const auto& [from, to] : src.map) {
    const auto x = source.find(from.text);
    if (!x) undeclared(from, source.name());
    const auto y = target.find(to.text);
    if (!y) undeclared(to, target.name());
    if (map[*x] != kUnset)
      throw ParseError(ErrorKind::DuplicateLabel, from.span, "element '" + from.text + "' is mapped twice");
    map[*x] = *y;
  }
  for (Element x = 0; x < map.size(); ++x)
    if (map[x] == kUnset)
      throw ParseError(ErrorKind::HomInvalid, src.end, "map is not total: '" + source.label(x) + "' has no image");
  return map;
}

QuantaleHom build_hom(const HomSource& src, const FiniteQuantale& source, const FiniteQuantale& target) {
  return QuantaleHom::make(source, target, resolve_hom_map(src, source, target), src.name);
}

std::string write_hom(const QuantaleHom& h) {
  std::ostringstream out;
  out << "hom " << h.name() << " : " << h.source().name() << " -> " << h.target().name() << "\nmap:\n";
  for (Element x = 0; x < h.source().size(); ++x)
    out << "  " << h.source().label(x) << " -> " << h.target().label(h(x)) << "\n";
  out << "end\n";
  return out.str();
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorKind::Io, "write to '" + path.string() + "' failed");
}

FiniteQuantale load_quant(const std::filesystem::path& path, std::size_t cap) {
  return parse_quant(read_text(path), cap);
}

}  // namespace qk
