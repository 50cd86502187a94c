#pragma once

#include "homzero/errors.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace homzero {

using Element = std::size_t;

/// Thrown by table validation; carries the offending elements.
class TableViolation : public InvalidInput {
 public:
  enum class Kind { shape, non_associative, zero_not_absorbing };

  TableViolation(Kind kind, std::vector<Element> witness, const std::string& what)
      : InvalidInput(what), kind_(kind), witness_(std::move(witness)) {}

  Kind kind() const noexcept { return kind_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  Kind kind_;
  std::vector<Element> witness_;
};

/// Finite semigroup given by its Cayley table; no distinguished zero.
class FiniteSemigroup {
 public:
  /// Validates shape and associativity.
  static FiniteSemigroup from_table(std::vector<std::vector<Element>> table,
                                    std::vector<std::string> names = {});

  std::size_t size() const noexcept { return n_; }
  Element multiply(Element s, Element t) const { return table_[s * n_ + t]; }
  /// Left-to-right product of a nonempty sequence.
  Element product(std::span<const Element> seq) const;
  const std::string& name(Element s) const { return names_[s]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::vector<std::vector<Element>> rows() const;

  friend bool operator==(const FiniteSemigroup&, const FiniteSemigroup&) = default;

 protected:
  FiniteSemigroup() = default;
  void assign(std::vector<std::vector<Element>> table, std::vector<std::string> names);

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<std::string> names_;
};

/// Finite semigroup whose element 0 is an absorbing zero. Also indexes, for
/// every nonzero v, the factorizations v = t*u with t, u nonzero.
class FiniteZeroSemigroup : public FiniteSemigroup {
 public:
  static constexpr Element kZero = 0;

  static FiniteZeroSemigroup from_table(std::vector<std::vector<Element>> table,
                                        std::vector<std::string> names = {});
  /// The semigroup {0}.
  static FiniteZeroSemigroup trivial();
  /// All products zero, `nonzero` nonzero elements.
  static FiniteZeroSemigroup null_semigroup(std::size_t nonzero);

  std::size_t nonzero_count() const noexcept { return n_ - 1; }
  bool is_zero_product(std::span<const Element> seq) const { return product(seq) == kZero; }
  const std::vector<std::pair<Element, Element>>& factorizations(Element v) const {
    return factorizations_[v];
  }
  std::optional<Element> find(const std::string& name) const;

 private:
  std::vector<std::vector<std::pair<Element, Element>>> factorizations_;
};

/// Witness triple (x, y, z) with xyz = 0 but xy != 0 and yz != 0.
struct CategoricityVerdict {
  bool categorical = true;
  std::optional<std::array<Element, 3>> witness;
};

CategoricityVerdict is_categorical_at_zero(const FiniteZeroSemigroup& s);

/// Least k with S^k = 0, or nullopt when the power chain stabilizes nonzero.
std::optional<std::size_t> nilpotency_degree(const FiniteZeroSemigroup& s);

/// 0-direct union together with the embedding of every part.
struct ZeroDirectUnion {
  FiniteZeroSemigroup semigroup;
  /// embeddings[p][e] is the union index of element e of part p (0 -> 0).
  std::vector<std::vector<Element>> embeddings;
  std::vector<FiniteZeroSemigroup> parts;
};

ZeroDirectUnion zero_direct_union(std::span<const FiniteZeroSemigroup> parts);

FiniteZeroSemigroup adjoin_zero(const FiniteSemigroup& s);

/// Thrown when a proposed ideal is not closed; witness is (element, multiplier).
class NotAnIdeal : public InvalidInput {
 public:
  NotAnIdeal(Element member, Element multiplier, const std::string& what)
      : InvalidInput(what), member_(member), multiplier_(multiplier) {}
  Element member() const noexcept { return member_; }
  Element multiplier() const noexcept { return multiplier_; }

 private:
  Element member_;
  Element multiplier_;
};

/// Rees quotient S/I. Surviving elements keep their relative order after the zero.
FiniteZeroSemigroup rees_quotient(const FiniteSemigroup& s, std::span<const Element> ideal);
FiniteZeroSemigroup rees_quotient(const FiniteZeroSemigroup& s, std::span<const Element> ideal);

}  // namespace homzero
