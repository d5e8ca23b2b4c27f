#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qk/quantale.hpp"

namespace qk {

/// Outcome of checking a candidate map against the homomorphism conditions.
/// `condition` is one of "totality", "order", "join", "meet", "mul".
struct HomCheck {
  bool ok = true;
  std::string condition;
  std::pair<Element, Element> witness{0, 0};

  explicit operator bool() const { return ok; }
};

/// Checks order preservation and preservation of binary join, binary meet and
/// multiplication, in that order; reports the first violated condition.
HomCheck check_hom(const FiniteQuantale& source, const FiniteQuantale& target, std::span<const Element> map);

/// A verified quantale homomorphism. Only constructible through `make`.
class QuantaleHom {
 public:
  /// Throws HomInvalid if `check_hom` fails.
  static QuantaleHom make(FiniteQuantale source, FiniteQuantale target, std::vector<Element> map,
                          std::string name = "hom");

  const FiniteQuantale& source() const { return source_; }
  const FiniteQuantale& target() const { return target_; }
  const std::vector<Element>& map() const { return map_; }
  const std::string& name() const { return name_; }
  Element operator()(Element x) const { return map_[x]; }

 private:
  QuantaleHom(FiniteQuantale s, FiniteQuantale t, std::vector<Element> m, std::string name)
      : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)), name_(std::move(name)) {}

  FiniteQuantale source_;
  FiniteQuantale target_;
  std::vector<Element> map_;
  std::string name_;
};

QuantaleHom identity_hom(const FiniteQuantale& q);

/// g after f. Throws CarrierMismatch unless f's target is g's source.
QuantaleHom compose(const QuantaleHom& g, const QuantaleHom& f);

}  // namespace qk
