// Randomized properties over the Frobenius <= 15 corpus. The generator is
// seeded, so every run sees the same cases.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "overring/lattice.hpp"
#include "overring/numsg/relative_ideal.hpp"
#include "overring/numsg/report.hpp"
#include "overring/numsg/semigroup.hpp"
#include "overring/numsg/strong_ideals.hpp"
#include "overring/oracle/brute_force.hpp"

using namespace overring;
using numsg::NumericalSemigroup;
using numsg::RelativeIdeal;

namespace {

const std::vector<NumericalSemigroup>& corpus() {
  static const auto c = numsg::semigroups_up_to_frobenius(15);
  return c;
}

RelativeIdeal random_ideal(const NumericalSemigroup& s, std::mt19937& rng) {
  const int c = s.conductor();
  std::uniform_int_distribution<int> value(-c - 2, 2 * c + 2);
  std::uniform_int_distribution<int> count(1, 4);
  std::vector<int> gens(static_cast<std::size_t>(count(rng)));
  for (int& g : gens) g = value(rng);
  return RelativeIdeal::generated_by(s, gens);
}

}  // namespace

namespace {

// E together with one extra element below its minimum: a strict superset.
RelativeIdeal widened(const RelativeIdeal& e) {
  auto gens = e.small_elements();
  gens.push_back(e.min() - 1);
  for (int t = e.tail_start(); t <= e.tail_start() + e.owner().conductor(); ++t) gens.push_back(t);
  return RelativeIdeal::generated_by(e.owner(), gens);
}

}  // namespace

TEST(Properties, ClosureOperatorAndDual) {
  std::mt19937 rng(7);
  for (const auto& s : corpus()) {
    for (int k = 0; k < 6; ++k) {
      const auto e = random_ideal(s, rng);
      const auto u = widened(e);
      ASSERT_TRUE(e.subset_of(u)) << s << " " << e << " " << u;
      const auto v = numsg::v_closure(e);
      EXPECT_TRUE(e.subset_of(v)) << s.label() << " " << e.to_string();
      EXPECT_EQ(numsg::v_closure(v), v);
      EXPECT_TRUE(v.subset_of(numsg::v_closure(u)));
      EXPECT_TRUE(numsg::dual(u).subset_of(numsg::dual(e)));
      EXPECT_EQ(numsg::dual(numsg::dual(numsg::dual(e))), numsg::dual(e));
      EXPECT_EQ(add(e, RelativeIdeal::principal(s, 0)), e);
    }
  }
}

TEST(Properties, StrongIffProductIsE) {
  std::mt19937 rng(11);
  for (const auto& s : corpus()) {
    for (int k = 0; k < 4; ++k) {
      auto e = random_ideal(s, rng);
      // Shifting the minimum to c or beyond lands inside S.
      if (!e.is_integral()) e = add(e, RelativeIdeal::principal(s, s.conductor() + k - e.min()));
      ASSERT_TRUE(e.is_integral());
      const auto prod = numsg::add(e, numsg::dual(e));
      EXPECT_TRUE(prod.subset_of(RelativeIdeal::principal(s, 0)));
      EXPECT_EQ(numsg::is_strong(e), prod == e);
    }
  }
}

TEST(Properties, PhiInjectiveAndBounded) {
  for (const auto& s : corpus()) {
    const auto pairs = numsg::phi(s);
    std::vector<NumericalSemigroup> image;
    for (const auto& p : pairs) {
      EXPECT_EQ(numsg::dual(p.ideal), RelativeIdeal::of_semigroup(s, p.overring));
      image.push_back(p.overring);
    }
    std::sort(image.begin(), image.end());
    EXPECT_EQ(std::adjacent_find(image.begin(), image.end()), image.end());
    EXPECT_LE(pairs.size(), numsg::oversemigroups(s).size());
  }
}

TEST(Properties, LatticeInvariants) {
  for (const auto& s : corpus()) {
    const auto lat = lattice::semigroup_lattice(s);
    EXPECT_TRUE(lattice::check_Ot_equals_O(lat));
    const auto chain = lattice::max_chain_length(lat).value();
    const auto nodes = lat.node_count().value();
    EXPECT_LE(chain, nodes);
    EXPECT_EQ(chain == nodes, lattice::is_chain(lat));
    EXPECT_EQ(chain, oracle::longest_overring_chain(s.gaps())) << s.label();
    bool all_div = true;
    for (std::size_t i = 0; i < lat.nodes().size(); ++i)
      if (i != lat.top()) all_div = all_div && lat.nodes()[i].divisorial_fraction == Tri::yes;
    EXPECT_EQ(lattice::phi_check(lat, lattice::semigroup_sd_records(s, lat)).surjective, all_div);
  }
}

TEST(Properties, ReportsAreConsistent) {
  for (const auto& s : corpus()) {
    const auto r = numsg::nsg_report(s);
    EXPECT_TRUE(r.hierarchy_consistent());
    EXPECT_TRUE(r.conductor_nonzero);
    EXPECT_EQ(r.semigroup->integral_closure, std::vector<int>{1});
    EXPECT_EQ(r.semigroup->conductor_ideal_from, s.conductor());
  }
}
