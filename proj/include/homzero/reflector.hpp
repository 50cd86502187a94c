#pragma once

#include "homzero/matrix.hpp"
#include "homzero/presentation.hpp"
#include "homzero/semigroup.hpp"
#include "homzero/zmodule.hpp"

#include <cstddef>
#include <vector>

namespace homzero {

using Sequence = std::vector<Element>;

/// Representative sequence <s1, ..., sn> of an element of the 0-reflector:
/// nonzero entries, every consecutive product zero. Equality of elements goes
/// through nu_equivalent, never through operator==.
struct ReflectorElement {
  Sequence seq;

  std::size_t length() const noexcept { return seq.size(); }
  Element first() const { return seq.front(); }
  Element last() const { return seq.back(); }

  friend bool operator==(const ReflectorElement&, const ReflectorElement&) = default;
  friend auto operator<=>(const ReflectorElement&, const ReflectorElement&) = default;
};

bool is_valid_sequence(const FiniteZeroSemigroup& s, const Sequence& seq);
/// Throws InvalidInput naming the offending position.
ReflectorElement make_reflector_element(const FiniteZeroSemigroup& s, Sequence seq);

/// Merges last(x) * first(y) when nonzero, concatenates otherwise.
ReflectorElement multiply(const FiniteZeroSemigroup& s, const ReflectorElement& x, const ReflectorElement& y);

/// Every sequence one elementary step away from `seq`, in either direction,
/// sorted and without duplicates.
std::vector<Sequence> nu_step(const FiniteZeroSemigroup& s, const Sequence& seq);

enum class NuVerdict { equal, distinct, unknown };

struct NuBounds {
  std::size_t budget = 10000;    // visited sequences, both sides together
  std::size_t max_length = 12;   // longer sequences are not expanded
};

NuVerdict nu_equivalent(const FiniteZeroSemigroup& s, const ReflectorElement& x, const ReflectorElement& y,
                        NuBounds bounds = {});

const char* to_string(NuVerdict v) noexcept;

/// M(sn) ... M(s1), entries reduced modulo the row moduli.
IntMatrix reflector_action(const ZeroModuleAction& a, const ReflectorElement& x);

/// Drops every zero relation, gamma included; what remains presents the
/// 0-reflector.
Presentation reflector_presentation(const Presentation& p);

}  // namespace homzero
