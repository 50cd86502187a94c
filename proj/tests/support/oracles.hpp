#pragma once

// Independent reference computations used to check the library. None of them
// calls into the Smith normal form or homology code.

#include "homzero/abelian.hpp"
#include "homzero/matrix.hpp"
#include "homzero/semigroup.hpp"

#include <optional>
#include <vector>

namespace oracle {

using homzero::AbelianGroupClass;
using homzero::Integer;
using homzero::IntMatrix;

// Invariant factors d_k = D_k / D_(k-1), D_k the gcd of all k x k minors.
std::vector<Integer> determinantal_invariants(const IntMatrix& m);

// Rank over Q from the largest nonvanishing minor size.
std::size_t rank_by_minors(const IntMatrix& m);

// Homology at degree n of a complex whose groups are all finite, by listing
// every element of degree n (at most `limit`) and generating the image
// subgroup by closure. The quotient is identified from the counts
// #{x : m x in image} over prime powers m.
std::optional<AbelianGroupClass> finite_homology(const std::vector<std::vector<Integer>>& moduli,
                                                 const std::vector<IntMatrix>& boundaries, std::size_t n,
                                                 std::size_t limit = 10000);

// Kernel of an endomorphism of a finite group with diagonal moduli, by
// enumeration; same identification as above.
AbelianGroupClass finite_kernel(const std::vector<Integer>& moduli, const IntMatrix& m);

// Integral homology of the cyclic group of order m with trivial Z
// coefficients, read off the periodic resolution ... -> Z -(m)-> Z -(0)-> Z.
AbelianGroupClass cyclic_group_homology(std::size_t m, std::size_t n);

// Triple loop over all nonzero x, y, z.
bool brute_categorical(const homzero::FiniteZeroSemigroup& s);

}  // namespace oracle
