#pragma once

#include "homzero/semigroup.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace homzero {

using Generator = std::size_t;
using Word = std::vector<Generator>;

/// lhs = rhs, or lhs = 0 when rhs is empty.
struct Relation {
  Word lhs;
  std::optional<Word> rhs;

  bool is_zero() const noexcept { return !rhs.has_value(); }
  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Generators, defining relations and the set gamma of generator pairs whose
/// product is zero.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Relation> relations;
  std::set<std::pair<Generator, Generator>> gamma;

  std::size_t generator_count() const noexcept { return generators.size(); }
  /// Throws InvalidInput on empty words or out-of-range letters.
  void validate() const;
  std::vector<std::pair<Word, Word>> nonzero_relations() const;
  bool has_zero_relations() const;
  std::string render(const Word& w) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Orders relation sides so that l(lhs) >= l(rhs) and moves length-2 zero
/// relations into gamma.
Presentation normalize(Presentation p);

struct GammaSets {
  std::set<Generator> left;   // {a_j : (j, g) in gamma}
  std::set<Generator> right;  // {a_j : (g, j) in gamma}
};

GammaSets gamma_sets(const Presentation& p, Generator g);

struct CriterionVerdict {
  enum class Failure { none, left, right };
  bool holds = true;
  std::optional<std::size_t> relation;
  Failure failure = Failure::none;
};

/// Categoricity criterion on the end letters of every nonzero relation:
/// gamma(first(A)) == gamma(first(B)) and (last(A))gamma == (last(B))gamma.
CriterionVerdict check_cat0_criterion(const Presentation& p);

/// Adjacent-letter graph of a set of relations.
struct DeltaGraph {
  std::size_t vertices = 0;
  std::set<std::pair<Generator, Generator>> edges;
  std::vector<bool> entrance;
  std::vector<bool> exit;

  bool has_edge(Generator a, Generator b) const { return edges.count({a, b}) != 0; }
};

DeltaGraph delta_graph(std::size_t generators, const std::vector<std::pair<Word, Word>>& relations);

struct EntranceExitVerdict {
  bool applicable = true;
  std::optional<std::size_t> relation;
  std::optional<Generator> letter;
  std::string detail;
};

EntranceExitVerdict entrance_exit_check(const Presentation& p);

struct LongestPath {
  std::optional<std::size_t> length;  // edge count; empty when a circuit exists
  std::vector<Generator> cycle;       // witness circuit, first vertex repeated at the end
};

LongestPath longest_path(const DeltaGraph& g);

/// gamma := complement of the adjacency graph. Throws HypothesisFailure when
/// some relation does not start at an entrance or end at an exit.
Presentation cat0_from_graph(const Presentation& p);

struct RewriteBounds {
  std::size_t max_length = 0;  // 0: 2 * (longest relation side) + 2
  std::size_t budget = 100000;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Generator g : w) h = (h ^ (g + 1)) * 1099511628211ull;
    return h;
  }
};

/// Bounded congruence closure over the words of length <= L that contain no
/// zero pattern (gamma pair or zero-relation left side). Words are numbered
/// in shortlex order and every class is represented by its shortlex-least
/// member. A class is exact when no elementary move from one of its members
/// left the length window without landing on a zero pattern; only exact
/// classes certify distinctness.
class CongruenceClosure {
 public:
  struct Query {
    bool zero = false;
    bool exact = false;
    std::optional<std::size_t> id;  // class id when nonzero and inside the window
  };

  /// `min_length` is the shortest window the caller can work with; budget
  /// pressure below it raises Undecided.
  CongruenceClosure(const Presentation& p, RewriteBounds bounds, std::size_t min_length = 1);

  std::size_t max_length() const noexcept { return max_length_; }
  std::size_t word_count() const noexcept { return words_.size(); }

  Query classify(const Word& w) const;
  bool contains_zero_pattern(const Word& w) const;
  /// Shortlex-least member of a nonzero class.
  const Word& representative(std::size_t class_id) const;
  /// All stored words of a class, in shortlex order.
  std::vector<Word> members(std::size_t class_id) const;
  bool is_exact(std::size_t class_id) const;

 private:
  std::size_t find(std::size_t x) const;
  void unite(std::size_t a, std::size_t b);
  std::optional<std::size_t> lookup(const Word& w) const;
  void apply_moves();
  bool propagate_zero();

  std::size_t generators_ = 0;
  std::size_t max_length_ = 0;
  std::vector<Word> words_;
  std::vector<std::pair<Word, Word>> moves_;
  std::vector<Word> zero_patterns_;
  std::vector<std::vector<bool>> gamma_;
  mutable std::vector<std::size_t> parent_;
  std::vector<char> tainted_;
  std::size_t zero_node_ = 0;
  std::unordered_map<Word, std::size_t, WordHash> index_;
};

/// Finite semigroup with zero presented by generators and words, one element
/// per nonzero class.
struct FiniteQuotient {
  FiniteZeroSemigroup semigroup;
  std::vector<Word> representatives;  // representatives[e] for e >= 1
  std::vector<Element> generator_elements;
};

/// Quotient of T = <gens | relations> by the ideal of elements that are not
/// factors of any relation word. Requires a presentation without gamma or zero
/// relations. Raises HypothesisFailure when a generator falls into the ideal
/// and Undecided when a needed class is not exact within bounds.
FiniteQuotient ideal_quotient(const Presentation& p, RewriteBounds bounds = {});

/// Finite semigroup presented with gamma when the graph of allowed products
/// (pairs outside gamma) is acyclic: every word longer than its longest path
/// plus one vanishes, so the closure is exact.
FiniteQuotient nilpotent_quotient(const Presentation& p, RewriteBounds bounds = {});

/// Checks the form of a gamma presentation against its finite quotient: every
/// generator and both sides of every nonzero relation are nonzero, and
/// a_i a_j == 0 exactly for (i, j) in gamma. Throws HypothesisFailure.
void verify_gamma_form(const Presentation& p, const FiniteQuotient& q);

/// Class id of `w` in the closure of `p`, or nullopt when undecided.
std::optional<std::size_t> rewrite_class(const Presentation& p, const Word& w, RewriteBounds bounds = {});

/// Text format: `generators = a, b, c`; `gamma = (a,b), (b,c)` or
/// `gamma = complement-of-delta`; relations `a.b = c.d` or `a.b.c = 0`.
struct ParsedPresentation {
  Presentation presentation;
  bool gamma_is_complement_of_delta = false;
};

ParsedPresentation parse_presentation(std::string_view text);
Word parse_word(const Presentation& p, std::string_view text);
std::string format_presentation(const Presentation& p);

}  // namespace homzero
