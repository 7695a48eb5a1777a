#include <gtest/gtest.h>

#include <random>

#include "common.hpp"
#include "oracles.hpp"
#include "tgs/axioms.hpp"
#include "tgs/canonical.hpp"
#include "tgs/enumerate.hpp"
#include "tgs/errors.hpp"
#include "tgs/ideals.hpp"
#include "tgs/standard_structures.hpp"

using namespace tgs;

TEST(Structure, ShapeChecks) {
  EXPECT_THROW(GammaStructure(0, 1, {}, {}), InputError);
  EXPECT_THROW(GammaStructure(2, 1, {0, 1, 1}, std::vector<int>(8, 0)), InputError);
  EXPECT_THROW(GammaStructure(2, 1, {0, 1, 1, 0}, std::vector<int>(7, 0)), InputError);
  EXPECT_THROW(GammaStructure(2, 1, {0, 1, 1, 2}, std::vector<int>(8, 0)), InputError);
  EXPECT_NO_THROW(GammaStructure(2, 1, {0, 1, 1, 0}, std::vector<int>(8, 0)));
}

TEST(Structure, RangeCheckedProduct) {
  const auto m3 = cyclic_product(3);
  EXPECT_EQ(ternary_product(m3, 2, 0, 2, 0, 2), 2);
  EXPECT_THROW(ternary_product(m3, 3, 0, 0, 0, 0), InputError);
  EXPECT_THROW(ternary_product(m3, 0, 1, 0, 0, 0), InputError);
}

TEST(Structure, PermutationMustFixZero) {
  EXPECT_THROW(apply_permutation(cyclic_product(3), {1, 0, 2}), InputError);
  EXPECT_THROW(apply_permutation(cyclic_product(3), {0, 1, 1}), InputError);
}

TEST(Axioms, StandardFixturesPass) {
  for (const char* name : {"b2", "m3", "m4", "m6"}) EXPECT_TRUE(verify_axioms(fixture(name)).all_pass()) << name;
  EXPECT_TRUE(verify_axioms(trivial_structure()).all_pass());
  EXPECT_TRUE(verify_axioms(zero_product(cyclic_product(2))).all_pass());
}

TEST(Axioms, AdditiveProductViolatesZeroAbsorption) {
  for (int n = 2; n <= 6; ++n) {
    const auto r = verify_axioms(cyclic_sum(n));
    ASSERT_FALSE(r.t4.holds);
    EXPECT_EQ(r.t4.witness->elements, (std::vector<int>{0, 0, 1}));
    EXPECT_TRUE(r.t1.holds);
  }
}

TEST(Axioms, IdentityWitness) {
  const GammaStructure s(2, 1, {1, 1, 1, 0}, std::vector<int>(8, 0));
  const auto r = verify_axioms(s);
  ASSERT_FALSE(r.t1.holds);
  EXPECT_EQ(r.first_failure(), &r.t1);
}

TEST(Axioms, AgreeWithNaiveOracle) {
  std::mt19937 rng(7);
  const auto corpus = enumerate_structures(3, 1).structures;
  for (int i = 0; i < 200; ++i) {
    const GammaStructure s = i % 2 ? oracle::corrupt(corpus[rng() % corpus.size()], rng, 1 + i % 3)
                                   : oracle::random_structure(rng, 2 + i % 2, 1 + i % 2);
    const auto r = verify_axioms(s);
    const auto o = oracle::axioms(s);
    EXPECT_EQ(r.t1.holds, o.t1);
    EXPECT_EQ(r.t2.holds, o.t2);
    EXPECT_EQ(r.t3.holds, o.t3);
    EXPECT_EQ(r.t4.holds, o.t4);
    EXPECT_EQ(r.commutativity.holds, o.commutative);
  }
}

TEST(Json, RoundTripIsByteIdentical) {
  for (const char* name : {"b2", "m3", "m4", "m6"}) {
    const std::string text = read_text_file(std::string(TGS_FIXTURE_DIR) + "/" + name + ".json");
    EXPECT_EQ(serialize_structure(parse_structure(text)), text) << name;
  }
}

TEST(Json, RandomStructuresRoundTrip) {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto s = oracle::random_structure(rng, 1 + i % 4, 1 + i % 2);
    EXPECT_EQ(parse_structure(serialize_structure(s)), s);
  }
}

TEST(Json, ParseErrorCarriesPosition) {
  try {
    parse_structure("{\"order\": 2,, }");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 13u);
  }
  EXPECT_THROW(parse_structure("{\"order\": 2, \"gamma\": 1}"), InputError);
  EXPECT_THROW(parse_structure("[]"), InputError);
}

TEST(Canonical, InvariantUnderRelabeling) {
  const auto m3 = fixture("m3");
  EXPECT_EQ(canonical_form(m3), canonical_form(apply_permutation(m3, {0, 2, 1})));
  std::mt19937 rng(3);
  for (const auto& s : enumerate_structures(4, 1).structures) {
    const auto sigma = oracle::random_zero_fixing_permutation(rng, 4);
    EXPECT_EQ(canonical_form(s), canonical_form(apply_permutation(s, sigma)));
  }
}

TEST(Canonical, RepresentativeHasTheForm) {
  const auto m6 = fixture("m6");
  const auto rep = canonical_representative(m6);
  EXPECT_EQ(serialize_tables(rep), canonical_form(m6).bytes);
  EXPECT_EQ(zero_fixing_permutations(4).size(), 6u);
}

TEST(Canonical, GammaRelabelingFlag) {
  // Two parameters with swapped roles: identified only when the flag is on.
  const auto a = GammaStructure::from_functions(
      2, 2, [](int x, int y) { return x ^ y; },
      [](int x, int al, int y, int be, int z) { return al == 0 && be == 0 ? x & y & z : 0; });
  const auto b = apply_gamma_permutation(a, {1, 0});
  EXPECT_NE(canonical_form(a), canonical_form(b));
  EXPECT_EQ(canonical_form(a, {true}), canonical_form(b, {true}));
}

TEST(Enumerate, AdditiveMonoidCounts) {
  const std::vector<std::size_t> expected{1, 2, 5, 19};
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(enumerate_additive_monoids(n).size(), expected[n - 1]) << n;
    EXPECT_EQ(oracle::raw_additive_tables(n).size(), std::vector<std::size_t>({1, 2, 9, 94})[n - 1]);
  }
  const auto two = enumerate_additive_monoids(2);
  EXPECT_EQ(two[0], (std::vector<int>{0, 1, 1, 0}));
  EXPECT_EQ(two[1], (std::vector<int>{0, 1, 1, 1}));
}

TEST(Enumerate, StructureCountsUpToIsomorphism) {
  const std::vector<std::size_t> expected{1, 4, 19, 175};
  for (int n = 1; n <= 4; ++n) {
    std::set<std::string> forms;
    for (const auto& s : enumerate_structures(n, 1).structures) forms.insert(canonical_form(s).bytes);
    EXPECT_EQ(forms.size(), expected[n - 1]) << n;
  }
}

TEST(Enumerate, ContainsKnownStructures) {
  std::set<std::string> two, three;
  for (const auto& s : enumerate_structures(2, 1).structures) two.insert(canonical_form(s).bytes);
  for (const auto& s : enumerate_structures(3, 1).structures) three.insert(canonical_form(s).bytes);
  EXPECT_TRUE(two.count(canonical_form(boolean_two()).bytes));
  EXPECT_TRUE(two.count(canonical_form(zero_product(cyclic_product(2))).bytes));
  EXPECT_TRUE(three.count(canonical_form(fixture("m3")).bytes));
}

TEST(Enumerate, JobsDoNotChangeOutput) {
  const auto a = enumerate_structures(4, 1, {1, {}}).structures;
  const auto b = enumerate_structures(4, 1, {3, {}}).structures;
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(a[i].same_tables(b[i]));
}

TEST(Enumerate, CapsRaiseResourceError) {
  EnumerationLimits limits;
  limits.max_order = 3;
  EXPECT_THROW(enumerate_additive_monoids(4, limits), ResourceError);
  EXPECT_THROW(enumerate_structures(4, 1, {1, limits}), ResourceError);
  EXPECT_THROW(enumerate_structures(2, 3, {}), ResourceError);
  limits.max_order = 5;
  limits.node_budget = 10;
  try {
    enumerate_structures(3, 1, {1, limits});
    FAIL();
  } catch (const ResourceError& e) {
    EXPECT_FALSE(e.progress().empty());
  }
}

TEST(Enumerate, OracleEquivalenceUpToThree) {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::string> forms;
    for (const auto& s : enumerate_structures(n, 1).structures) forms.insert(canonical_form(s).bytes);
    EXPECT_EQ(forms, oracle::structure_forms(n)) << n;
  }
}
