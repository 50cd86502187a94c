#pragma once

#include "homzero/integer.hpp"
#include "homzero/matrix.hpp"
#include "homzero/parallel.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace homzero {

/// Isomorphism class Z^r (+) Z/d1 (+) ... (+) Z/dt with d1 | d2 | ... | dt and
/// every di >= 2. This is the only form in which groups are reported.
struct AbelianGroupClass {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  /// Canonicalizes an arbitrary list of cyclic orders (entries 0 count as free
  /// summands, entries 1 are dropped).
  static AbelianGroupClass from_cyclic_orders(std::size_t free_rank, std::vector<Integer> orders);

  bool is_trivial() const noexcept { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;

  friend bool operator==(const AbelianGroupClass&, const AbelianGroupClass&) = default;
};

AbelianGroupClass direct_sum(const AbelianGroupClass& a, const AbelianGroupClass& b);

/// Finitely generated abelian group with a diagonal presentation: coordinate i
/// is Z when moduli[i] == 0 and Z/moduli[i] otherwise (moduli[i] >= 2).
struct FGAbelianGroup {
  std::vector<Integer> moduli;

  static FGAbelianGroup free(std::size_t rank) { return {std::vector<Integer>(rank)}; }
  static FGAbelianGroup cyclic(const Integer& order) { return {{order}}; }
  /// Normalizes the cokernel of an arbitrary relation matrix (generators are
  /// the rows) to diagonal form.
  static FGAbelianGroup from_relations(const IntMatrix& relations);
  /// Repeats the coordinates of `base` `copies` times.
  static FGAbelianGroup power(const FGAbelianGroup& base, std::size_t copies);

  std::size_t rank() const noexcept { return moduli.size(); }
  bool is_free() const;
  void validate() const;
  /// Diagonal relation matrix with one column per torsion coordinate.
  IntMatrix torsion_relations() const;
  AbelianGroupClass group_class() const;
  void reduce(std::span<Integer> v) const;

  friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;
};

/// boundaries[n] maps degree n to degree n-1 (n >= 1); boundaries[0] is an
/// empty placeholder so indices line up with degrees.
struct ChainComplexFG {
  std::vector<FGAbelianGroup> groups;
  std::vector<SparseMatrix> boundaries;

  std::size_t top_degree() const { return groups.empty() ? 0 : groups.size() - 1; }
  /// Throws InvalidInput on shape mismatch, ill-defined boundaries, or a
  /// nonvanishing composite.
  void validate() const;
};

/// Columnwise check that every column of `m` is zero modulo `target` moduli.
bool vanishes_modulo(const SparseMatrix& m, const FGAbelianGroup& target);

/// U * m * V == D with U, V unimodular and D diagonal, nonnegative, with the
/// divisibility chain along the diagonal.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m, Execution exec = Execution::serial);

/// Nonzero diagonal of the Smith form only; skips the transform bookkeeping.
std::vector<Integer> smith_invariants(const IntMatrix& m, Execution exec = Execution::serial);

/// Ker(boundary n) / Im(boundary n+1), computed on free covers with the
/// torsion relations of each degree adjoined. At degree 0 the kernel is the
/// whole group. Degree n+1 is treated as zero when n is the top degree.
AbelianGroupClass homology_of_complex(const ChainComplexFG& c, std::size_t n,
                                      Execution exec = Execution::serial);

}  // namespace homzero
