#include <gtest/gtest.h>

#include "common.hpp"
#include "oracles.hpp"
#include "tgs/congruence.hpp"
#include "tgs/enumerate.hpp"
#include "tgs/errors.hpp"
#include "tgs/ideals.hpp"
#include "tgs/standard_structures.hpp"

using namespace tgs;

TEST(Congruence, PartitionNormalForm) {
  const auto p = CongruencePartition::from_labels({5, 3, 5, 3});
  EXPECT_EQ(p.labels(), (std::vector<int>{0, 1, 0, 1}));
  EXPECT_EQ(p.zero_class(), S({0, 2}));
  EXPECT_THROW(CongruencePartition::from_blocks(3, {{0}, {0, 1, 2}}), InputError);
  EXPECT_THROW(CongruencePartition::from_blocks(3, {{0}, {1}}), InputError);
  EXPECT_EQ(format_blocks(p), "[{0,2}|{1,3}]");
}

TEST(Congruence, FixtureCounts) {
  EXPECT_EQ(enumerate_congruences(fixture("m3")).size(), 2u);
  EXPECT_EQ(enumerate_congruences(fixture("m4")).size(), 3u);
  EXPECT_EQ(enumerate_congruences(fixture("m6")).size(), 4u);
}

TEST(Congruence, BourneOnGroups) {
  const auto m6 = fixture("m6");
  const auto rho = bourne_congruence(m6, S({0, 3}));
  EXPECT_EQ(block_lists(rho), (std::vector<std::vector<int>>{{0, 3}, {1, 4}, {2, 5}}));
  EXPECT_TRUE(is_congruence(m6, rho));
  EXPECT_EQ(quotient_structure(m6, rho).order(), 3);
  EXPECT_THROW(bourne_congruence(m6, S({0, 1})), InputError);
}

TEST(Congruence, AgreesWithPartitionOracle) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : enumerate_structures(n, 1).structures) {
      std::vector<std::vector<int>> mine;
      for (const auto& rho : enumerate_congruences(s)) mine.push_back(rho.labels());
      auto theirs = oracle::congruences(s);
      std::sort(mine.begin(), mine.end());
      std::sort(theirs.begin(), theirs.end());
      EXPECT_EQ(mine, theirs);
    }
}

TEST(Congruence, ZeroClassesAreIdeals) {
  for (const auto& s : enumerate_structures(3, 1).structures)
    for (const auto& rho : enumerate_congruences(s)) EXPECT_TRUE(is_ideal(s, congruence_to_ideal(s, rho)));
}

TEST(Congruence, CensusCountsCollisions) {
  const auto c = congruence_census(fixture("m6"));
  EXPECT_TRUE(c.computed);
  EXPECT_EQ(c.congruences, 4u);
  EXPECT_EQ(c.collisions, 0u);
  EXPECT_EQ(c.round_trip_failures, 0u);

  std::size_t collisions = 0;
  for (const auto& s : enumerate_structures(3, 1).structures) collisions += congruence_census(s).collisions;
  EXPECT_GT(collisions, 0u);
}

TEST(Congruence, ZeroDivisors) {
  EXPECT_FALSE(has_nonzero_zero_divisors(fixture("m3")));
  const auto w = find_nonzero_zero_divisor(fixture("m4"));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->elements, (std::vector<int>{2, 2, 2}));
}
