#include "fixtures.hpp"
#include "generators.hpp"

#include "homzero/homology.hpp"
#include "homzero/zmodule.hpp"

#include <doctest.h>

using namespace homzero;

TEST_SUITE("zmodule") {
  TEST_CASE("trivial and zero actions are modules") {
    gen::Rng rng(4);
    for (int trial = 0; trial < 30; ++trial) {
      auto inst = gen::random_instance(rng, 8, 3);
      CHECK(validate_action(inst.s, trivial_module(inst.s, inst.a.base)).valid());
      CHECK(validate_action(inst.s, zero_action_module(inst.s, inst.a.base)).valid());
      CHECK(validate_action(inst.s, inst.a).valid());
    }
    const auto z2z = FGAbelianGroup{{Integer(2), Integer(0)}};
    CHECK(validate_action(fixtures::four_letter_table(), trivial_module(fixtures::four_letter_table(), z2z)).valid());
  }

  TEST_CASE("composition violations carry the pair") {
    const auto s = fixtures::left_cancel_table();
    auto m = fixtures::left_cancel_module(FGAbelianGroup::free(1), IntMatrix{{2}}, IntMatrix{{3}});
    CHECK(validate_action(s, m).valid());
    m.act[4] = IntMatrix{{5}};
    const auto v = validate_action(s, m);
    CHECK(v.kind == ActionVerdict::Kind::composition);
    REQUIRE(v.pair);
    CHECK(s.multiply(v.pair->first, v.pair->second) == 4);
  }

  TEST_CASE("ill-defined and misshapen matrices") {
    const auto s = FiniteZeroSemigroup::null_semigroup(1);
    ZeroModuleAction m{FGAbelianGroup{{Integer(0), Integer(2)}}, {IntMatrix::zero(2, 2), IntMatrix{{1, 1}, {0, 1}}}};
    const auto v = validate_action(s, m);
    CHECK(v.kind == ActionVerdict::Kind::ill_defined);
    REQUIRE(v.coordinates);
    CHECK(*v.coordinates == std::pair<std::size_t, std::size_t>{0, 1});

    ZeroModuleAction bad{FGAbelianGroup::free(2), {IntMatrix::zero(2, 2), IntMatrix::identity(3)}};
    CHECK(validate_action(s, bad).kind == ActionVerdict::Kind::shape);
  }

  TEST_CASE("congruence of maps modulo the target") {
    const FGAbelianGroup z4 = FGAbelianGroup::cyclic(4);
    CHECK(congruent_maps(IntMatrix{{1}}, IntMatrix{{5}}, z4));
    CHECK_FALSE(congruent_maps(IntMatrix{{1}}, IntMatrix{{3}}, z4));
  }

  TEST_CASE("restriction to a part of a 0-direct union") {
    std::vector<FiniteZeroSemigroup> parts{fixtures::four_letter_table(), fixtures::left_cancel_table()};
    const auto u = zero_direct_union(parts);
    const FGAbelianGroup base{{Integer(0), Integer(3)}};
    const auto whole = trivial_module(u.semigroup, base);
    for (std::size_t p = 0; p < 2; ++p) {
      const auto r = restrict_to_part(whole, u, p);
      CHECK(r.act.size() == parts[p].size());
      CHECK(validate_action(parts[p], r).valid());
      for (Element e = 1; e < parts[p].size(); ++e) CHECK(r.matrix(e) == IntMatrix::identity(2));
    }
    CHECK_THROWS_AS(restrict_to_part(whole, u, 2), InvalidInput);
  }

  TEST_CASE("trivial coefficients survive to degree 0") {
    const FGAbelianGroup base{{Integer(2), Integer(0)}};
    const auto s = fixtures::four_letter_table();
    CHECK(h0_zeroth(s, trivial_module(s, base)) == base.group_class());
  }

  TEST_CASE("modules over an adjoined zero") {
    const auto c2 = fixtures::cyclic_group(2);
    ModuleAction m{FGAbelianGroup::free(1), {IntMatrix{{1}}, IntMatrix{{-1}}}};
    CHECK(validate_action(c2, m).valid());
    const auto z = adjoin_zero(m);
    CHECK(validate_action(adjoin_zero(c2), z).valid());
    CHECK(z.matrix(2) == IntMatrix{{-1}});
  }
}
