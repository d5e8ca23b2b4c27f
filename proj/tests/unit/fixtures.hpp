#pragma once

#include <initializer_list>
#include <string>

#include "qk/ideals.hpp"
#include "qk/io.hpp"

namespace fx {

inline constexpr const char* kQ4Text =
    "quantale q4\n"
    "elements: bot a b top\n"
    "order:\n"
    "  bot <= a\n"
    "  bot <= b\n"
    "  a <= top\n"
    "  b <= top\n"
    "mul:\n"
    "  bot: bot bot bot bot\n"
    "  a:   bot a   bot a\n"
    "  b:   bot bot b   b\n"
    "  top: bot a   b   top\n"
    "end\n";

inline qk::FiniteQuantale q4() { return qk::parse_quant(kQ4Text); }

// Lukasiewicz chain 0 < 1 < 2, a & b = max(0, a + b - 2).
inline qk::FiniteQuantale l3() {
  return qk::build_quantale("l3", {"0", "1", "2"}, {{"0", "1"}, {"1", "2"}},
                            {{"0", "0", "0"}, {"0", "0", "1"}, {"0", "1", "2"}});
}

inline qk::FiniteQuantale c2() {
  return qk::build_quantale("c2", {"bot", "top"}, {{"bot", "top"}}, {{"bot", "bot"}, {"bot", "top"}});
}

inline qk::Ideal down(const qk::FiniteQuantale& q, const std::string& label) { return qk::principal(q, q.at(label)); }

inline qk::ElementSet set(const qk::FiniteQuantale& q, std::initializer_list<const char*> labels) {
  qk::ElementSet s(q.size());
  for (const char* l : labels) s.insert(q.at(l));
  return s;
}

inline qk::Element el(const qk::FiniteQuantale& q, const char* label) { return q.at(label); }

}  // namespace fx
