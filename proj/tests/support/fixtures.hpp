#pragma once

#include "homzero/presentation.hpp"
#include "homzero/semigroup.hpp"
#include "homzero/zmodule.hpp"

namespace fixtures {

using namespace homzero;

// <a,b,c,d | ab = cd>
Presentation four_letter_presentation();
// <a,b,c | ab = ac>
Presentation left_cancel_presentation();
// <a,b,c,d,e | ab = cd, aeb = ced>
Presentation adyan_presentation();

// {0,a,b,c,d,x} with ab = cd = x and every other product 0; written out by hand.
FiniteZeroSemigroup four_letter_table();
// {0,a,b,c,x} with ab = ac = x and every other product 0.
FiniteZeroSemigroup left_cancel_table();
// {0,a,a2} with a*a = a2 and a^3 = 0.
FiniteZeroSemigroup monogenic_cube_zero();
// {0,a,b,c,ab,bc}: only ab and bc nonzero.
FiniteZeroSemigroup two_products_table();

FiniteSemigroup cyclic_group(std::size_t order);
// {e,x} with e the identity and x*x = x.
FiniteSemigroup two_element_semilattice();
FiniteSemigroup left_zero_semigroup(std::size_t size);

// Module over left_cancel_table with M(a) = ma and M(b) = M(c) = mb; the
// product ab gets mb * ma.
ZeroModuleAction left_cancel_module(const FGAbelianGroup& base, const IntMatrix& ma, const IntMatrix& mb);

// Module generated by generator matrices over a finite quotient: each element
// acts by the product along its representative word.
ZeroModuleAction module_from_generators(const FiniteQuotient& q, const FGAbelianGroup& base,
                                        const std::vector<IntMatrix>& gens);

}  // namespace fixtures
