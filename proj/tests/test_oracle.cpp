#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "overring/oracle/brute_force.hpp"

using namespace overring::oracle;

TEST(Oracle, SmallCorpora) {
  EXPECT_EQ(all_semigroups(0).size(), 1u);
  // F = 1: <2,3>. F = 2: <3,4,5>. F = 3: <2,5> and <4,5,6,7>.
  EXPECT_EQ(all_semigroups(1).size(), 2u);
  EXPECT_EQ(all_semigroups(2).size(), 3u);
  EXPECT_EQ(all_semigroups(3).size(), 5u);
}

TEST(Oracle, OversemigroupsOfTwoFive) {
  EXPECT_EQ(oversemigroups({1, 3}), (std::vector<GapSet>{{}, {1}, {1, 3}}));
  EXPECT_EQ(oversemigroups({}), (std::vector<GapSet>{{}}));
}

TEST(Oracle, StronglyDivisorialOfTwoFive) {
  const auto sd = strongly_divisorial_ideals({1, 3});
  ASSERT_EQ(sd.size(), 3u);
  EXPECT_EQ(sd[0], (IntegerSet{{}, 4}));
  EXPECT_EQ(sd[1], (IntegerSet{{0, 2}, 4}));
  EXPECT_EQ(sd[2], (IntegerSet{{2}, 4}));
}

TEST(Oracle, ThreeFourFive) {
  EXPECT_EQ(strongly_divisorial_ideals({1, 2}).size(), 2u);
  // <2,3> (gaps {1}) is not divisorial over <3,4,5>.
  EXPECT_EQ(divisorial_oversemigroups({1, 2}), (std::vector<GapSet>{{}, {1, 2}}));
  EXPECT_EQ(longest_overring_chain({1, 2}), 4);
}

TEST(Oracle, Naturals) {
  EXPECT_EQ(strongly_divisorial_ideals({}), (std::vector<IntegerSet>{{{}, 0}}));
  EXPECT_EQ(longest_overring_chain({}), 2);
}

TEST(Oracle, Limits) {
  EXPECT_THROW(all_semigroups(kMaxFrobenius + 1), std::invalid_argument);
  EXPECT_THROW(oversemigroups({2}), std::invalid_argument);
}
