#include <gtest/gtest.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "overring/lattice.hpp"
#include "overring/numsg/semigroup.hpp"

using namespace overring;
using namespace overring::lattice;

namespace {
numsg::NumericalSemigroup sg(std::vector<int> g) { return numsg::NumericalSemigroup::from_generators(g); }

OverringLattice two_node() {
  std::vector<Node> nodes{{"R", NodeKind::base, true, Tri::yes}, {"L", NodeKind::field_top, true, Tri::no}};
  const std::vector<std::pair<NodeId, NodeId>> rel{{0, 1}};
  return OverringLattice::from_relations(nodes, rel);
}

// R below two incomparable rings A, B, both below L.
OverringLattice diamond(bool a_linked) {
  std::vector<Node> nodes{{"R", NodeKind::base, true, Tri::yes},
                          {"A", NodeKind::tower_node, a_linked, Tri::yes},
                          {"B", NodeKind::tower_node, true, Tri::yes},
                          {"L", NodeKind::field_top, true, Tri::no}};
  const std::vector<std::pair<NodeId, NodeId>> rel{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return OverringLattice::from_relations(nodes, rel);
}
}  // namespace

TEST(Lattice, TwoNode) {
  const auto lat = two_node();
  EXPECT_EQ(max_chain_length(lat), Count::finite(2));
  EXPECT_TRUE(check_Ot_equals_O(lat));
  EXPECT_TRUE(is_fo(lat));
  EXPECT_EQ(is_fc(lat), Tri::yes);
  EXPECT_TRUE(is_chain(lat));
  const auto p = phi_check(lat, {});
  EXPECT_TRUE(p.injective);
  EXPECT_FALSE(p.surjective);
}

TEST(Lattice, ClosureAndHasse) {
  // Transitive pair 0 <= 2 given explicitly is dropped from the Hasse edges.
  std::vector<Node> nodes{{"R", NodeKind::base, true, Tri::yes},
                          {"V", NodeKind::tower_node, true, Tri::yes},
                          {"L", NodeKind::field_top, true, Tri::no}};
  const std::vector<std::pair<NodeId, NodeId>> rel{{0, 1}, {1, 2}, {0, 2}};
  const auto lat = OverringLattice::from_relations(nodes, rel);
  EXPECT_EQ(lat.hasse_edges().size(), 2u);
  EXPECT_TRUE(lat.leq(0, 2));
  EXPECT_FALSE(lat.leq(2, 0));
  EXPECT_EQ(lat.bottom(), 0u);
  EXPECT_EQ(lat.top(), 2u);
  EXPECT_EQ(lat.find("V"), std::optional<NodeId>(1));
}

TEST(Lattice, RejectsBadOrders) {
  std::vector<Node> nodes{{"R", NodeKind::base, true, Tri::yes}, {"L", NodeKind::field_top, true, Tri::no}};
  const std::vector<std::pair<NodeId, NodeId>> cycle{{0, 1}, {1, 0}};
  EXPECT_THROW(OverringLattice::from_relations(nodes, cycle), std::invalid_argument);
  std::vector<Node> three{{"R", NodeKind::base, true, Tri::yes},
                          {"A", NodeKind::tower_node, true, Tri::yes},
                          {"B", NodeKind::tower_node, true, Tri::yes}};
  const std::vector<std::pair<NodeId, NodeId>> no_top{{0, 1}, {0, 2}};
  EXPECT_THROW(OverringLattice::from_relations(three, no_top), std::invalid_argument);
  nodes[0].t_linked = false;
  const std::vector<std::pair<NodeId, NodeId>> rel{{0, 1}};
  EXPECT_THROW(OverringLattice::from_relations(nodes, rel), std::invalid_argument);
}

TEST(Lattice, DiamondChainsAndTLinked) {
  const auto lat = diamond(true);
  EXPECT_EQ(max_chain_length(lat), Count::finite(3));
  EXPECT_FALSE(is_chain(lat));
  EXPECT_TRUE(check_Ot_equals_O(lat));
  EXPECT_FALSE(check_Ot_equals_O(diamond(false)));
}

TEST(Lattice, PhiCheckErrors) {
  const auto lat = two_node();
  const std::vector<SDRecord> dangling{{std::string("X"), 7}};
  EXPECT_THROW(phi_check(lat, dangling), std::out_of_range);
  const std::vector<SDRecord> on_top{{std::string("X"), 1}};
  EXPECT_THROW(phi_check(lat, on_top), std::invalid_argument);
  const std::vector<SDRecord> dup{{std::string("X"), 0}, {std::string("Y"), 0}};
  EXPECT_FALSE(phi_check(lat, dup).injective);
}

TEST(Lattice, SemigroupLattices) {
  const auto a = sg({2, 5});
  const auto lat = semigroup_lattice(a);
  EXPECT_EQ(lat.node_count(), Count::finite(4));
  EXPECT_EQ(max_chain_length(lat), Count::finite(4));
  EXPECT_TRUE(check_Ot_equals_O(lat));
  auto p = phi_check(lat, semigroup_sd_records(a, lat));
  EXPECT_TRUE(p.injective);
  EXPECT_TRUE(p.surjective);

  const auto b = sg({3, 4, 5});
  const auto lb = semigroup_lattice(b);
  p = phi_check(lb, semigroup_sd_records(b, lb));
  EXPECT_TRUE(p.injective);
  EXPECT_FALSE(p.surjective);
  EXPECT_EQ(lb.nodes()[*lb.find("<2,3>")].divisorial_fraction, Tri::no);
}

TEST(Lattice, Opaque) {
  const auto lat = OverringLattice::opaque(Count::infinite(), Tri::no, "infinitely many intermediate fields");
  EXPECT_FALSE(lat.is_explicit());
  EXPECT_FALSE(is_fo(lat));
  EXPECT_EQ(is_fc(lat), Tri::no);
  EXPECT_EQ(max_chain_length(lat), Count::infinite());
  EXPECT_THROW(lat.nodes(), std::domain_error);
  EXPECT_THROW(OverringLattice::opaque(Count::finite(5), Tri::unknown, "x"), std::invalid_argument);
}

TEST(Lattice, RenderText) {
  const auto text = render_text(diamond(true));
  EXPECT_NE(text.find("R"), std::string::npos);
  EXPECT_NE(text.find("(*)"), std::string::npos);  // L reached twice
}
