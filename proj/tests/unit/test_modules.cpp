#include <gtest/gtest.h>

#include "common.hpp"
#include "tgs/enumerate.hpp"
#include "tgs/errors.hpp"
#include "tgs/gamma_modules.hpp"
#include "tgs/homomorphism.hpp"
#include "tgs/ideals.hpp"
#include "tgs/standard_structures.hpp"

using namespace tgs;

TEST(Modules, RegularModulesSatisfyAxioms) {
  for (const char* name : {"b2", "m3", "m4", "m6"}) {
    const auto a = ModuleAction::regular(fixture(name));
    EXPECT_TRUE(verify_module_axioms(a, ModuleAssociativity::surrogate).all_pass()) << name;
    EXPECT_TRUE(verify_module_axioms(a, ModuleAssociativity::printed).all_pass()) << name;
  }
}

TEST(Modules, BrokenActionIsCaught) {
  const auto m3 = fixture("m3");
  const auto bad = ModuleAction::from_functions(
      m3, 3, [](int x, int y) { return (x + y) % 3; }, [](int a, int, int m, int, int b) { return (a + m + b) % 3; });
  const auto r = verify_module_axioms(bad);
  EXPECT_FALSE(r.m3.holds);
  EXPECT_FALSE(r.all_pass());
}

TEST(Modules, Annihilators) {
  const auto reg = annihilator(ModuleAction::regular(fixture("m3")));
  EXPECT_EQ(reg.set, S({0}));
  EXPECT_TRUE(reg.simple_module);
  ASSERT_TRUE(reg.prime);
  EXPECT_TRUE(reg.prime->holds);
  const auto zero = annihilator(ModuleAction::zero(fixture("m3")));
  EXPECT_FALSE(zero.proper);
  EXPECT_TRUE(zero.ideal.holds);
}

TEST(Modules, Submodules) {
  const auto a = ModuleAction::regular(fixture("m6"));
  EXPECT_EQ(enumerate_submodules(a), enumerate_ideals(fixture("m6")));
  EXPECT_FALSE(is_simple_module(a));
  EXPECT_EQ(quotient_carrier_size(a, S({0, 3})), 3);
}

TEST(Modules, PrimitiveIdeals) {
  const auto m3 = find_primitive_ideals(fixture("m3"));
  ASSERT_EQ(m3.ideals.size(), 1u);
  EXPECT_EQ(m3.ideals[0].ideal, S({0}));
  EXPECT_TRUE(m3.ideals[0].prime);
  const auto b2 = find_primitive_ideals(fixture("b2"));
  ASSERT_EQ(b2.ideals.size(), 1u);
  EXPECT_EQ(b2.ideals[0].ideal, S({0}));
  EXPECT_TRUE(find_primitive_ideals(trivial_structure()).ideals.empty());
  PrimitiveSearchOptions tight;
  tight.carrier_cap = 4;
  EXPECT_THROW(find_primitive_ideals(fixture("m3"), tight), ResourceError);
}

TEST(Modules, HomomorphismsAndFirstIsomorphism) {
  const auto m6 = fixture("m6");
  const auto a = ModuleAction::regular(m6);
  const auto homs = find_module_homomorphisms(a, a);
  ASSERT_FALSE(homs.empty());
  for (const auto& h : homs) {
    EXPECT_TRUE(is_submodule(a, h.kernel));
    EXPECT_TRUE(is_submodule(a, h.image));
  }
}

TEST(Modules, JsonRoundTrip) {
  const auto a = ModuleAction::regular(fixture("m4"));
  const auto b = module_from_json(module_to_json(a));
  EXPECT_EQ(b.carrier_order(), a.carrier_order());
  EXPECT_EQ(b.action_table(), a.action_table());
  EXPECT_EQ(b.carrier_addition(), a.carrier_addition());
}

TEST(Homomorphisms, QuotientMapOfM6) {
  const auto m6 = fixture("m6");
  const auto id = HomomorphismMap::identity(m6);
  EXPECT_TRUE(is_homomorphism(id));
  EXPECT_TRUE(id.surjective());
  EXPECT_EQ(pullback_ideal(id, S({0, 3})), S({0, 3}));
  const auto m3 = fixture("m3");
  const auto maps = find_homomorphisms(m6, m3);
  bool found_mod3 = false;
  for (const auto& f : maps) {
    EXPECT_TRUE(is_homomorphism(f));
    if (f.surjective()) {
      found_mod3 = true;
      EXPECT_EQ(pullback_ideal(f, S({0})), S({0, 3}));
      EXPECT_EQ(image_structure(f).order(), 3);
    }
  }
  EXPECT_TRUE(found_mod3);
}

TEST(Homomorphisms, RejectsBadMaps) {
  const auto m3 = fixture("m3");
  HomomorphismMap f{&m3, &m3, {0, 2, 2}, {0}};
  EXPECT_FALSE(is_homomorphism(f));
  EXPECT_THROW(pullback_ideal(f, S({0})), InputError);
  HomomorphismMap g{&m3, &m3, {0, 1}, {0}};
  EXPECT_THROW(is_homomorphism(g), InputError);
  EXPECT_TRUE(find_homomorphisms(m3, trivial_structure(2)).empty());
}
