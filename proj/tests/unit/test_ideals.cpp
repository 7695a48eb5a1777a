#include <gtest/gtest.h>

#include "common.hpp"
#include "oracles.hpp"
#include "tgs/enumerate.hpp"
#include "tgs/errors.hpp"
#include "tgs/ideals.hpp"
#include "tgs/radicals.hpp"
#include "tgs/standard_structures.hpp"

using namespace tgs;

TEST(Ideals, FixtureLists) {
  EXPECT_EQ(enumerate_ideals(fixture("m3")), (std::vector{S({0}), S({0, 1, 2})}));
  EXPECT_EQ(enumerate_ideals(fixture("m4")), (std::vector{S({0}), S({0, 2}), S({0, 1, 2, 3})}));
  EXPECT_EQ(enumerate_ideals(fixture("m6")),
            (std::vector{S({0}), S({0, 3}), S({0, 2, 4}), S({0, 1, 2, 3, 4, 5})}));
  EXPECT_EQ(enumerate_ideals(fixture("b2")), (std::vector{S({0}), S({0, 1})}));
}

TEST(Ideals, Classification) {
  const auto m3 = fixture("m3"), m4 = fixture("m4"), m6 = fixture("m6");
  EXPECT_TRUE(is_prime(m3, S({0})));
  EXPECT_TRUE(is_maximal(m3, S({0})));
  EXPECT_FALSE(is_prime(m4, S({0})));
  EXPECT_TRUE(is_prime(m4, S({0, 2})));
  EXPECT_TRUE(is_maximal(m4, S({0, 2})));
  EXPECT_FALSE(is_semiprime(m4, S({0})));
  EXPECT_TRUE(is_primary(m4, S({0})));
  EXPECT_TRUE(is_prime(m6, S({0, 3})));
  EXPECT_TRUE(is_prime(m6, S({0, 2, 4})));
  EXPECT_FALSE(is_prime(m6, S({0})));
  EXPECT_TRUE(is_semiprime(m6, S({0})));
  EXPECT_FALSE(is_maximal(m6, S({0})));
  EXPECT_EQ(prime_ideals(m6, enumerate_ideals(m6)), (std::vector{S({0, 3}), S({0, 2, 4})}));
  EXPECT_EQ(maximal_ideals(m6, enumerate_ideals(m6)), (std::vector{S({0, 3}), S({0, 2, 4})}));
}

TEST(Ideals, FailingCubeIsTheWitness) {
  const auto m4 = fixture("m4");
  const auto v = is_prime(m4, S({0}));
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->elements, (std::vector<int>{2, 2, 2}));
  const auto sp = is_semiprime(m4, S({0}));
  ASSERT_TRUE(sp.witness);
  EXPECT_EQ(sp.witness->elements.front(), 2);
}

TEST(Ideals, TestsRequireProperIdeals) {
  const auto m4 = fixture("m4");
  EXPECT_THROW(is_prime(m4, S({0, 1})), InputError);
  EXPECT_THROW(is_prime(m4, m4.all()), InputError);
  EXPECT_THROW(is_ideal(m4, ElementSet()), InputError);
  EXPECT_FALSE(is_ideal(m4, S({2})));
}

TEST(Ideals, GenerationAndSum) {
  const auto m6 = fixture("m6");
  EXPECT_EQ(generated_ideal(m6, S({2})), S({0, 2, 4}));
  EXPECT_EQ(generated_ideal(m6, S({3})), S({0, 3}));
  EXPECT_EQ(ideal_sum(m6, S({0, 3}), S({0, 2, 4})), m6.all());
}

TEST(Ideals, AgreeWithOracle) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& s : enumerate_structures(n, 1).structures) {
      const auto ideals = enumerate_ideals(s);
      EXPECT_EQ(ideals, oracle::ideals(s));
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
        EXPECT_EQ(generated_ideal(s, ElementSet(bits)), oracle::generated_ideal(s, ElementSet(bits)));
      for (ElementSet i : ideals)
        if (i != s.all()) EXPECT_EQ(is_prime(s, i).holds, oracle::is_prime(s, i));
    }
}

TEST(Ideals, LatticeCoversAndDot) {
  const auto m6 = fixture("m6");
  const auto lattice = ideal_lattice(m6);
  EXPECT_EQ(lattice.covers, (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(lattice.index_of(S({0, 3})), 1);
  EXPECT_FALSE(lattice.tags[3].proper);
  const std::string dot = lattice_to_dot(m6, lattice);
  EXPECT_EQ(dot, lattice_to_dot(m6, ideal_lattice(m6)));
  EXPECT_NE(dot.find("i3"), std::string::npos);
  EXPECT_EQ(dot.find("i4"), std::string::npos);
}

TEST(Radicals, FixtureValues) {
  const auto m4 = fixture("m4"), m6 = fixture("m6");
  EXPECT_EQ(radical_by_primes(m4, S({0})), S({0, 2}));
  EXPECT_EQ(radical_by_elements(m4, S({0})), S({0, 2}));
  EXPECT_EQ(jacobson_radical(m4), S({0, 2}));
  EXPECT_FALSE(is_semisimple(m4));
  EXPECT_EQ(jacobson_radical(m6), S({0}));
  EXPECT_TRUE(is_semisimple(m6));
  EXPECT_EQ(jacobson_radical(fixture("m3")), S({0}));
  EXPECT_EQ(jacobson_radical(fixture("b2")), S({0}));
  EXPECT_EQ(radical_by_primes(m6, S({0})), S({0}));
}

TEST(Radicals, NoPrimesGivesWholeCarrier) {
  const auto z = zero_product(cyclic_product(2));
  EXPECT_EQ(radical_by_primes(z, S({0})), z.all());
  EXPECT_EQ(jacobson_radical(trivial_structure()), S({0}));
}

TEST(Radicals, LawsOverSmallCorpus) {
  for (int n = 2; n <= 3; ++n)
    for (const auto& s : enumerate_structures(n, 1).structures) {
      const auto ideals = enumerate_ideals(s);
      for (ElementSet i : ideals) {
        const ElementSet r = radical_by_primes(s, i);
        EXPECT_TRUE(i.subset_of(r));
        EXPECT_EQ(radical_by_primes(s, r), r);
        if (r != s.all()) EXPECT_TRUE(is_semiprime(s, r).holds);
        for (ElementSet j : ideals)
          if (i.subset_of(j)) EXPECT_TRUE(r.subset_of(radical_by_primes(s, j)));
      }
    }
}
