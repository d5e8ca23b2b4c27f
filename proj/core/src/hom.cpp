#include "qk/hom.hpp"

namespace qk {

HomCheck check_hom(const FiniteQuantale& source, const FiniteQuantale& target, std::span<const Element> map) {
  HomCheck r;
  const auto n = static_cast<Element>(source.size());
  if (map.size() != source.size()) return {false, "totality", {0, 0}};
  for (Element x = 0; x < n; ++x)
    if (map[x] >= target.size()) return {false, "totality", {x, x}};

  auto scan = [&](const char* cond, auto&& holds) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (!holds(x, y)) {
          r = {false, cond, {x, y}};
          return false;
        }
    return true;
  };
  scan("order", [&](Element x, Element y) { return !source.leq(x, y) || target.leq(map[x], map[y]); }) &&
      scan("join", [&](Element x, Element y) { return map[source.join(x, y)] == target.join(map[x], map[y]); }) &&
      scan("meet", [&](Element x, Element y) { return map[source.meet(x, y)] == target.meet(map[x], map[y]); }) &&
      scan("mul", [&](Element x, Element y) { return map[source.mul(x, y)] == target.mul(map[x], map[y]); });
  return r;
}

QuantaleHom QuantaleHom::make(FiniteQuantale source, FiniteQuantale target, std::vector<Element> map,
                              std::string name) {
  auto c = check_hom(source, target, map);
  if (!c) {
    std::string where = c.condition == "totality"
                            ? std::string("map is not total")
                            : "'" + source.label(c.witness.first) + "', '" + source.label(c.witness.second) + "'";
    throw Error(ErrorKind::HomInvalid, name + " violates " + c.condition + " at " + where);
  }
  return QuantaleHom(std::move(source), std::move(target), std::move(map), std::move(name));
}

QuantaleHom identity_hom(const FiniteQuantale& q) {
  std::vector<Element> map(q.size());
  for (Element x = 0; x < map.size(); ++x) map[x] = x;
  return QuantaleHom::make(q, q, std::move(map), "id_" + q.name());
}

QuantaleHom compose(const QuantaleHom& g, const QuantaleHom& f) {
  if (!f.target().same_carrier(g.source()))
    throw Error(ErrorKind::CarrierMismatch, "cannot compose " + g.name() + " after " + f.name());
  std::vector<Element> map(f.source().size());
  for (Element x = 0; x < map.size(); ++x) map[x] = g(f(x));
  return QuantaleHom::make(f.source(), g.target(), std::move(map), g.name() + "." + f.name());
}

}  // namespace qk
