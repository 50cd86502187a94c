#include "fixtures.hpp"

#include <array>

namespace fixtures {

namespace {

Presentation parsed(const char* text) { return parse_presentation(text).presentation; }

FiniteZeroSemigroup from_products(std::size_t n, std::vector<std::string> names,
                                  const std::vector<std::array<Element, 3>>& products) {
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n, 0));
  for (const auto& [x, y, z] : products) t[x][y] = z;
  return FiniteZeroSemigroup::from_table(std::move(t), std::move(names));
}

}  // namespace

Presentation four_letter_presentation() { return parsed("generators = a, b, c, d\nab = cd\n"); }
Presentation left_cancel_presentation() { return parsed("generators = a, b, c\nab = ac\n"); }
Presentation adyan_presentation() { return parsed("generators = a, b, c, d, e\nab = cd\naeb = ced\n"); }

FiniteZeroSemigroup four_letter_table() {
  return from_products(6, {"0", "a", "b", "c", "d", "x"}, {{1, 2, 5}, {3, 4, 5}});
}

FiniteZeroSemigroup left_cancel_table() {
  return from_products(5, {"0", "a", "b", "c", "x"}, {{1, 2, 4}, {1, 3, 4}});
}

FiniteZeroSemigroup monogenic_cube_zero() { return from_products(3, {"0", "a", "a2"}, {{1, 1, 2}}); }

FiniteZeroSemigroup two_products_table() {
  return from_products(6, {"0", "a", "b", "c", "ab", "bc"}, {{1, 2, 4}, {2, 3, 5}});
}

FiniteSemigroup cyclic_group(std::size_t order) {
  std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) t[i][j] = (i + j) % order;
  return FiniteSemigroup::from_table(std::move(t));
}

FiniteSemigroup two_element_semilattice() { return FiniteSemigroup::from_table({{0, 1}, {1, 1}}, {"e", "x"}); }

FiniteSemigroup left_zero_semigroup(std::size_t size) {
  std::vector<std::vector<Element>> t(size, std::vector<Element>(size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) t[i][j] = i;
  return FiniteSemigroup::from_table(std::move(t));
}

ZeroModuleAction left_cancel_module(const FGAbelianGroup& base, const IntMatrix& ma, const IntMatrix& mb) {
  ZeroModuleAction m{base, {IntMatrix::zero(base.rank(), base.rank()), ma, mb, mb, mb * ma}};
  return m;
}

ZeroModuleAction module_from_generators(const FiniteQuotient& q, const FGAbelianGroup& base,
                                        const std::vector<IntMatrix>& gens) {
  ZeroModuleAction m{base, {IntMatrix::zero(base.rank(), base.rank())}};
  for (std::size_t e = 1; e < q.semigroup.size(); ++e) {
    IntMatrix acc = IntMatrix::identity(base.rank());
    for (Generator g : q.representatives[e]) acc = gens[g] * acc;
    m.act.push_back(acc);
  }
  return m;
}

}  // namespace fixtures
