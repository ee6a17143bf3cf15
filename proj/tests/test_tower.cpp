#include <gtest/gtest.h>

#include <stdexcept>
#include <variant>
#include <vector>

#include "overring/numsg/report.hpp"
#include "overring/tower.hpp"

using namespace overring;
using namespace overring::tower;

namespace {
numsg::NumericalSemigroup sg(std::vector<int> g) { return numsg::NumericalSemigroup::from_generators(g); }

FieldExtensionSpec nonminimal(Count c) {
  FieldExtensionSpec f;
  f.minimal = false;
  f.intermediate_rings = c;
  return f;
}
}  // namespace

TEST(FieldExtension, Invariants) {
  EXPECT_NO_THROW(FieldExtensionSpec::quadratic("Q", "Q(sqrt2)").validate());
  EXPECT_NO_THROW(FieldExtensionSpec::purely_transcendental("k", "k(X)", 1).validate());
  FieldExtensionSpec f = FieldExtensionSpec::quadratic("k", "K");
  f.intermediate_rings = Count::finite(3);
  EXPECT_THROW(f.validate(), std::invalid_argument);
  f = FieldExtensionSpec::purely_transcendental("k", "K", 2);
  f.intermediate_rings = Count::finite(4);
  EXPECT_THROW(f.validate(), std::invalid_argument);
  EXPECT_THROW(nonminimal(Count::finite(1)).validate(), std::invalid_argument);
}

TEST(Descriptor, Validation) {
  EXPECT_THROW((TowerDescriptor{PruferY{2}, {1}, ""}.validate()), std::invalid_argument);
  EXPECT_THROW((TowerDescriptor{PruferY{0}, {}, ""}.validate()), std::invalid_argument);
  EXPECT_THROW((TowerDescriptor{TrivialBase{}, {0}, ""}.validate()), std::invalid_argument);
  EXPECT_THROW((TowerDescriptor{TrivialBase{}, {}, ""}.validate()), std::invalid_argument);
  EXPECT_NO_THROW((TowerDescriptor{sg({2, 5}), {}, ""}.validate()));
}

TEST(Tower, Dimensions) {
  EXPECT_EQ(dim(TowerDescriptor{TrivialBase{}, {3}, ""}), 3);
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(dim(example_gs8(n)), n);
    EXPECT_EQ(dim_v(example_gs8(n)), n);
  }
  EXPECT_EQ(dim(example_nls5()), 1);
  EXPECT_EQ(dim_v(example_nls5()), 3);
  EXPECT_EQ(dim_v(TowerDescriptor{TrivialBase{}, {2, 2}, ""}), 4);
  EXPECT_EQ(dim(TowerDescriptor{PruferY{4}, {}, ""}), 4);
}

TEST(Tower, CountOverrings) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(count_overrings(TowerDescriptor{TrivialBase{}, {n}, ""}), Count::finite(n + 1));
  EXPECT_EQ(count_overrings(example_gs8(2)), Count::finite(5));
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(count_overrings(example_tlsd5(n)), Count::finite(n));
  EXPECT_EQ(count_overrings(example_nls5()), Count::infinite());
  EXPECT_EQ(count_overrings(TowerDescriptor{PruferY{3}, {}, ""}), Count::finite(6));
  EXPECT_EQ(count_overrings(TowerDescriptor{sg({3, 4, 5}), {2}, ""}), Count::finite(6));
}

TEST(Tower, Additivity) {
  const std::vector<Base> bases{TrivialBase{}, FieldExtensionSpec::quadratic("k", "K"), sg({2, 5}), sg({3, 4, 5})};
  for (const auto& base : bases) {
    std::vector<int> dims;
    if (!std::holds_alternative<numsg::NumericalSemigroup>(base)) dims.push_back(1);
    int total = dims.empty() ? 0 : 1;
    while (total < 10) {
      const TowerDescriptor before{base, dims, ""};
      for (int d = 1; d + total <= 10; ++d) {
        auto grown = dims;
        grown.push_back(d);
        const TowerDescriptor after{base, grown, ""};
        EXPECT_EQ(dim(after), dim(before) + d);
        EXPECT_EQ(count_overrings(after), count_overrings(before) + d);
      }
      dims.push_back(1);
      ++total;
    }
  }
}

TEST(Tower, CountSd) {
  EXPECT_EQ(count_sd(TowerDescriptor{TrivialBase{}, {4}, ""}), Count::finite(4));
  EXPECT_EQ(count_sd(TowerDescriptor{TrivialBase{}, {1}, ""}), Count::finite(1));
  EXPECT_EQ(count_sd(TowerDescriptor{FieldExtensionSpec::quadratic("k", "K"), {5}, ""}), Count::finite(6));
  EXPECT_EQ(count_sd(TowerDescriptor{sg({2, 5}), {}, ""}), Count::finite(3));
  EXPECT_EQ(count_sd(example_gs8(3)), Count::unsupported());
  EXPECT_EQ(count_sd(TowerDescriptor{nonminimal(Count::finite(3)), {1}, ""}), Count::unsupported());
}

TEST(Tower, ClassifyExamples) {
  const auto nls = classify(example_nls5());
  EXPECT_EQ(nls.is_pvd, Tri::yes);
  EXPECT_EQ(nls.is_fo, Tri::no);
  EXPECT_EQ(nls.is_super_t_linkative, Tri::no);
  EXPECT_EQ(nls.dim, 1);
  EXPECT_EQ(nls.dim_v, 3);

  for (int n = 1; n <= 5; ++n) {
    const auto y = classify(TowerDescriptor{PruferY{n}, {}, ""});
    EXPECT_EQ(y.overring_count, Count::finite(n + 3));
    EXPECT_EQ(y.phi_surjective, Tri::no);
  }

  const auto dvr = classify(TowerDescriptor{TrivialBase{}, {1}, ""});
  EXPECT_EQ(dvr.is_valuation, Tri::yes);
  EXPECT_EQ(dvr.sd_count, Count::finite(1));
  EXPECT_EQ(dvr.overring_count, Count::finite(2));
  EXPECT_EQ(dvr.t_linked_under_all_overrings, Tri::yes);

  EXPECT_EQ(classify(example_tlsd5(3)).overring_count, Count::finite(3));
  EXPECT_EQ(classify(example_gs8(1)).overring_count, Count::finite(4));
}

TEST(Tower, ClassifyMatchesNsgReport) {
  for (const auto& gens : {std::vector<int>{2, 5}, {3, 4, 5}, {1}, {4, 6, 7, 9}}) {
    const auto s = sg(gens);
    const auto expected = numsg::nsg_report(s);
    auto got = classify(TowerDescriptor{s, {}, ""});
    got.subject = expected.subject;
    got.model = expected.model;
    got.notes = expected.notes;
    EXPECT_EQ(got, expected) << s.label();
  }
}

TEST(Tower, PvdEquivalences) {
  const auto all_true = pvd_conditions(TowerDescriptor{FieldExtensionSpec::quadratic("k", "K"), {3}, ""});
  EXPECT_TRUE(all_true.phi_surjective && all_true.minimal_over_v && all_true.residue_minimal &&
              all_true.overrings_split);
  const auto all_false = pvd_conditions(TowerDescriptor{nonminimal(Count::finite(3)), {1}, ""});
  EXPECT_FALSE(all_false.phi_surjective || all_false.minimal_over_v || all_false.residue_minimal ||
               all_false.overrings_split);
  EXPECT_TRUE(pvd_equivalences(TowerDescriptor{nonminimal(Count::infinite()), {2, 1}, ""}));
  EXPECT_THROW(pvd_conditions(TowerDescriptor{TrivialBase{}, {1}, ""}), std::invalid_argument);
}

TEST(Tower, TLinkedUnder) {
  EXPECT_TRUE(t_linked_under(true, PullbackTop::valuation));
  EXPECT_TRUE(t_linked_under(true, PullbackTop::local_dim1));
  EXPECT_FALSE(t_linked_under(true, PullbackTop::power_series));
  EXPECT_FALSE(t_linked_under(false, PullbackTop::valuation));
  EXPECT_FALSE(t_linked_under(example_dtuo5()));
  EXPECT_TRUE(t_linked_under(pvd_over_valuation()));
  EXPECT_TRUE(t_linked_under(k_plus_xkx()));
  EXPECT_THROW(parse_pullback_top("polynomial"), std::invalid_argument);
}

TEST(Tower, Presets) {
  EXPECT_EQ(std::get<TowerDescriptor>(preset("gs8:3")), example_gs8(3));
  EXPECT_EQ(std::get<TowerDescriptor>(preset("tlsd5:7")), example_tlsd5(7));
  EXPECT_EQ(std::get<TowerDescriptor>(preset("nls5")), example_nls5());
  EXPECT_EQ(std::get<PullbackSquare>(preset("dtuo5")), example_dtuo5());
  EXPECT_THROW(preset("tlsd5:2"), std::invalid_argument);
  EXPECT_THROW(preset("gs8:0"), std::invalid_argument);
  EXPECT_THROW(preset("gs8"), std::invalid_argument);
  EXPECT_THROW(preset("nls5:2"), std::invalid_argument);
  EXPECT_THROW(preset("unknown"), std::invalid_argument);
  EXPECT_THROW(example_tlsd5(2), std::invalid_argument);
}

TEST(Tower, Lattices) {
  const auto v = tower_lattice(TowerDescriptor{TrivialBase{}, {4}, ""});
  EXPECT_TRUE(lattice::is_chain(v));
  EXPECT_EQ(lattice::max_chain_length(v), Count::finite(5));
  const auto y = tower_lattice(TowerDescriptor{PruferY{3}, {}, ""});
  EXPECT_FALSE(lattice::is_chain(y));
  EXPECT_EQ(y.node_count(), Count::finite(6));
  const auto pvd = TowerDescriptor{FieldExtensionSpec::quadratic("k", "K"), {2}, ""};
  const auto lat = tower_lattice(pvd);
  const auto records = tower_sd_records(pvd, lat);
  ASSERT_TRUE(records);
  EXPECT_EQ(records->size(), 3u);
  EXPECT_TRUE(lattice::phi_check(lat, *records).surjective);
}
