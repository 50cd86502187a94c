#pragma once

#include "homzero/abelian.hpp"
#include "homzero/semigroup.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace homzero {

/// A 0-module over a finite semigroup with zero: the group `base` with one
/// integer matrix per nonzero element.
///
/// The right action a.s is written in column convention as
/// M(s) * a. "Act by s, then by t" is therefore M(t) * M(s) * a, and the
/// module law (a s) t = a (st) for st != 0 reads M(t) M(s) == M(st) modulo the
/// coordinate moduli. act[0] is an unused placeholder for the zero.
struct ZeroModuleAction {
  FGAbelianGroup base;
  std::vector<IntMatrix> act;

  std::size_t rank() const noexcept { return base.rank(); }
  const IntMatrix& matrix(Element s) const { return act[s]; }
};

/// Module over a semigroup without zero (bar complex coefficients); the law
/// M(t) M(s) == M(st) holds for every pair.
struct ModuleAction {
  FGAbelianGroup base;
  std::vector<IntMatrix> act;

  std::size_t rank() const noexcept { return base.rank(); }
  const IntMatrix& matrix(Element s) const { return act[s]; }
};

struct ActionVerdict {
  enum class Kind { ok, shape, ill_defined, composition };
  Kind kind = Kind::ok;
  /// composition: (s, t) with M(t)M(s) != M(st); ill_defined: (s, coordinate pair packed as i, j).
  std::optional<std::pair<Element, Element>> pair;
  std::optional<std::pair<std::size_t, std::size_t>> coordinates;
  std::string detail;

  bool valid() const noexcept { return kind == Kind::ok; }
};

ActionVerdict validate_action(const FiniteZeroSemigroup& s, const ZeroModuleAction& m);
ActionVerdict validate_action(const FiniteSemigroup& s, const ModuleAction& m);

/// True when a and b induce the same endomorphism of `base`.
bool congruent_maps(const IntMatrix& a, const IntMatrix& b, const FGAbelianGroup& base);

ZeroModuleAction trivial_module(const FiniteZeroSemigroup& s, const FGAbelianGroup& base);
ZeroModuleAction zero_action_module(const FiniteZeroSemigroup& s, const FGAbelianGroup& base);
ModuleAction trivial_module(const FiniteSemigroup& s, const FGAbelianGroup& base);

/// Restricts a module over a 0-direct union to part `part`.
ZeroModuleAction restrict_to_part(const ZeroModuleAction& m, const ZeroDirectUnion& u, std::size_t part);

/// Module over S with adjoined zero induced by a module over S.
ZeroModuleAction adjoin_zero(const ModuleAction& m);

}  // namespace homzero
