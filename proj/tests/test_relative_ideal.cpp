#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "overring/numsg/relative_ideal.hpp"
#include "overring/numsg/semigroup.hpp"

using namespace overring::numsg;

namespace {
NumericalSemigroup sg(std::vector<int> g) { return NumericalSemigroup::from_generators(g); }
RelativeIdeal members(const NumericalSemigroup& s, std::vector<int> small, int from) {
  return RelativeIdeal::from_members(s, small, from);
}
}  // namespace

TEST(RelativeIdeal, Construction) {
  const auto s = sg({2, 5});
  const auto m = RelativeIdeal::maximal_ideal(s);
  EXPECT_EQ(m.to_string(), "{2,4,...}");
  EXPECT_EQ(m.min(), 2);
  EXPECT_EQ(m.tail_start(), 4);
  EXPECT_TRUE(m.is_integral());
  EXPECT_EQ(m, members(s, {2}, 4));

  const auto p = RelativeIdeal::principal(s, -2);
  EXPECT_EQ(p.to_string(), "{-2,0,2,...}");
  EXPECT_FALSE(p.is_integral());

  const std::vector<int> gens{3, 4};
  EXPECT_EQ(RelativeIdeal::generated_by(s, gens).to_string(), "{3,...}");
  EXPECT_THROW(members(s, {1}, 10), std::invalid_argument);  // 1 + 2 = 3 missing
}

TEST(RelativeIdeal, OfSemigroup) {
  const auto s = sg({2, 5});
  EXPECT_EQ(RelativeIdeal::of_semigroup(s, sg({2, 3})).to_string(), "{0,2,...}");
  EXPECT_THROW(RelativeIdeal::of_semigroup(sg({2, 3}), s), std::invalid_argument);
}

TEST(RelativeIdeal, Add) {
  const auto s = sg({2, 5});
  EXPECT_EQ(add(RelativeIdeal::principal(s, 2), RelativeIdeal::principal(s, -2)), RelativeIdeal::principal(s, 0));
  const auto m = RelativeIdeal::maximal_ideal(s);
  EXPECT_EQ(add(m, dual(m)), m);
  const auto e = members(s, {3}, 5);
  EXPECT_EQ(add(RelativeIdeal::principal(s, 0), e), e);
  EXPECT_THROW(add(m, RelativeIdeal::maximal_ideal(sg({3, 4, 5}))), std::invalid_argument);
}

TEST(RelativeIdeal, Dual) {
  const auto s = sg({2, 5});
  const auto one = RelativeIdeal::principal(s, 0);
  EXPECT_EQ(dual(one), one);
  EXPECT_EQ(dual(RelativeIdeal::maximal_ideal(s)), RelativeIdeal::of_semigroup(s, sg({2, 3})));
  EXPECT_EQ(dual(members(s, {}, 4)), RelativeIdeal::of_semigroup(s, sg({1})));
  EXPECT_EQ(dual(RelativeIdeal::principal(s, 3)), RelativeIdeal::principal(s, -3));
}

TEST(RelativeIdeal, VClosure) {
  const auto s = sg({2, 5});
  EXPECT_EQ(v_closure(RelativeIdeal::principal(s, 0)), RelativeIdeal::principal(s, 0));
  const auto e = RelativeIdeal::of_semigroup(s, sg({2, 3}));
  EXPECT_EQ(v_closure(e), e);
  EXPECT_EQ(t_closure(e), e);

  const auto t = sg({3, 4, 5});
  EXPECT_EQ(v_closure(RelativeIdeal::of_semigroup(t, sg({2, 3}))), RelativeIdeal::of_semigroup(t, sg({1})));
}

TEST(RelativeIdeal, StronglyDivisorial) {
  const auto s = sg({2, 5});
  EXPECT_TRUE(is_strongly_divisorial(RelativeIdeal::maximal_ideal(s)));
  EXPECT_FALSE(is_strongly_divisorial(RelativeIdeal::principal(s, 2)));
  EXPECT_FALSE(is_strong(RelativeIdeal::principal(s, 2)));
  EXPECT_THROW(is_strongly_divisorial(RelativeIdeal::principal(s, -2)), std::invalid_argument);

  const auto n = sg({1});
  EXPECT_TRUE(is_strongly_divisorial(RelativeIdeal::principal(n, 0)));
  EXPECT_FALSE(is_strongly_divisorial(RelativeIdeal::maximal_ideal(n)));
}

TEST(RelativeIdeal, CanonicalOrder) {
  const auto s = sg({2, 5});
  const auto a = RelativeIdeal::principal(s, 0);
  const auto b = RelativeIdeal::maximal_ideal(s);
  EXPECT_LT(a, b);
  EXPECT_EQ(RelativeIdeal::generated_by(s, std::vector<int>{2, 5}), b);
}
