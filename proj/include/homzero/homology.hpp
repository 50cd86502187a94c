#pragma once

#include "homzero/abelian.hpp"
#include "homzero/parallel.hpp"
#include "homzero/reflector.hpp"
#include "homzero/semigroup.hpp"
#include "homzero/zmodule.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace homzero {

inline constexpr std::size_t kDefaultTupleCap = 1000000;
inline constexpr std::size_t kDefaultMaxDim = 4;

/// Ordered basis of one chain degree: tuples in lexicographic order. Degree 0
/// holds the single empty tuple.
struct TupleBasis {
  std::size_t n = 0;
  std::vector<Sequence> tuples;

  std::size_t size() const noexcept { return tuples.size(); }
  /// Position of `t`, or nullopt when it is not a basis tuple.
  std::optional<std::size_t> index_of(const Sequence& t) const;
};

/// D_n: n-tuples of nonzero elements whose product is nonzero. Throws
/// InvalidInput past `cap` tuples.
TupleBasis enumerate_dn(const FiniteZeroSemigroup& s, std::size_t n, std::size_t cap = kDefaultTupleCap);

/// All of S^n, for the bar complex.
TupleBasis enumerate_all_tuples(const FiniteSemigroup& s, std::size_t n, std::size_t cap = kDefaultTupleCap);

/// Complex C^0 of (S, A) through degree `maxdim`. Degree n is one copy of A per
/// D_n tuple; coordinate c of tuple j has index j * rank + c.
ChainComplexFG zero_chain_complex(const FiniteZeroSemigroup& s, const ZeroModuleAction& a, std::size_t maxdim,
                                  Execution exec = Execution::serial, std::size_t cap = kDefaultTupleCap);

/// Bar complex of a semigroup without zero, same layout with basis S^n.
ChainComplexFG bar_chain_complex(const FiniteSemigroup& s, const ModuleAction& a, std::size_t maxdim,
                                 Execution exec = Execution::serial, std::size_t cap = kDefaultTupleCap);

/// A / <M(s) a - a>.
AbelianGroupClass h0_zeroth(const FiniteZeroSemigroup& s, const ZeroModuleAction& a);

AbelianGroupClass zero_homology(const FiniteZeroSemigroup& s, const ZeroModuleAction& a, std::size_t n,
                                Execution exec = Execution::serial);

/// H_0 .. H_maxdim from one complex built through degree maxdim + 1.
std::vector<AbelianGroupClass> zero_homology_range(const FiniteZeroSemigroup& s, const ZeroModuleAction& a,
                                                   std::size_t maxdim, Execution exec = Execution::serial);

AbelianGroupClass bar_homology(const FiniteSemigroup& s, const ModuleAction& a, std::size_t n,
                               Execution exec = Execution::serial, std::size_t cap = kDefaultTupleCap);

/// Formal finite sums of a[t] with a in A; coefficients are kept reduced and
/// zero terms are dropped, so equal chains compare equal.
template <typename Key>
struct FormalChain {
  std::size_t dim = 0;
  std::map<Key, std::vector<Integer>> terms;

  void add(const FGAbelianGroup& base, const Key& key, std::vector<Integer> coeff, int sign = 1) {
    auto& slot = terms[key];
    if (slot.empty()) slot.assign(base.rank(), Integer(0));
    for (std::size_t i = 0; i < coeff.size(); ++i) slot[i] += sign * coeff[i];
    base.reduce(slot);
    bool zero = true;
    for (const auto& x : slot) zero = zero && x == 0;
    if (zero) terms.erase(key);
  }
  bool is_zero() const noexcept { return terms.empty(); }
  friend bool operator==(const FormalChain&, const FormalChain&) = default;
};

/// Chains of C^0: keys are D_n tuples.
using ZeroChain = FormalChain<Sequence>;
/// Chains of the reflector bar complex: keys are tuples of representative
/// sequences. Products are formed with `multiply`, so two chains compare equal
/// only up to the chosen representatives.
using ReflectorChain = FormalChain<std::vector<ReflectorElement>>;

ZeroChain zero_boundary(const FiniteZeroSemigroup& s, const ZeroModuleAction& a, const ZeroChain& c);
ReflectorChain reflector_boundary(const FiniteZeroSemigroup& s, const ZeroModuleAction& a, const ReflectorChain& c);

/// a[s1, ..., sn] -> a[<s1>, ..., <sn>].
ReflectorChain epsilon_map(const ZeroChain& c);

/// Left inverse of epsilon. For n >= 2 a generator a[X1, ..., Xn] goes to
/// (a X1') [x1, ..., xn] when the middle components are single letters and
/// x1 ... xn != 0, where X1' drops the last letter of X1 (identity when X1 is a
/// single letter), x1 is the last letter of X1 and xn the first letter of Xn;
/// otherwise to 0. In degree 1, a[<z1, ..., zr>] goes to the sum over i of
/// (a <z1, ..., z(i-1)>) [zi]; degree 0 is the identity.
ZeroChain beta_map(const FiniteZeroSemigroup& s, const ZeroModuleAction& a, const ReflectorChain& c);

}  // namespace homzero
