#include "overring/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "overring/numsg/strong_ideals.hpp"

namespace overring::lattice {

namespace {

using Row = std::vector<std::uint64_t>;

bool test_bit(const Row& r, std::size_t i) { return (r[i / 64] >> (i % 64)) & 1U; }
void set_bit(Row& r, std::size_t i) { r[i / 64] |= std::uint64_t{1} << (i % 64); }

bool rows_intersect(const Row& a, const Row& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] & b[w]) return true;
  }
  return false;
}

}  // namespace

std::string to_string(NodeKind k) {
  switch (k) {
    case NodeKind::base:
      return "base";
    case NodeKind::oversemigroup:
      return "oversemigroup";
    case NodeKind::tower_node:
      return "tower_node";
    case NodeKind::field_top:
      break;
  }
  return "field_top";
}

NodeKind parse_node_kind(std::string_view s) {
  if (s == "base") return NodeKind::base;
  if (s == "oversemigroup") return NodeKind::oversemigroup;
  if (s == "tower_node") return NodeKind::tower_node;
  if (s == "field_top") return NodeKind::field_top;
  throw std::invalid_argument("unknown node kind '" + std::string(s) + "'");
}

OverringLattice OverringLattice::from_relations(std::vector<Node> nodes,
                                                std::span<const std::pair<NodeId, NodeId>> relations) {
  const std::size_t n = nodes.size();
  if (n == 0) throw std::invalid_argument("overring lattice: no nodes");
  const std::size_t words = (n + 63) / 64;
  std::vector<Row> up(n, Row(words, 0));
  for (std::size_t a = 0; a < n; ++a) set_bit(up[a], a);
  for (auto [lo, hi] : relations) {
    if (lo >= n || hi >= n) throw std::invalid_argument("overring lattice: relation names a missing node");
    set_bit(up[lo], hi);
  }
  // Warshall on bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      if (a == k || !test_bit(up[a], k)) continue;
      for (std::size_t w = 0; w < words; ++w) up[a][w] |= up[k][w];
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (test_bit(up[a], b) && test_bit(up[b], a)) {
        throw std::invalid_argument("overring lattice: order is not antisymmetric (" + nodes[a].label + ", " +
                                    nodes[b].label + ")");
      }
    }
  }

  std::optional<NodeId> bottom;
  std::optional<NodeId> top;
  for (std::size_t a = 0; a < n; ++a) {
    bool below_all = true;
    bool above_all = true;
    for (std::size_t b = 0; b < n; ++b) {
      below_all = below_all && test_bit(up[a], b);
      above_all = above_all && test_bit(up[b], a);
    }
    if (below_all) bottom = a;
    if (above_all) top = a;
  }
  if (!bottom) throw std::invalid_argument("overring lattice: no unique bottom");
  if (!top) throw std::invalid_argument("overring lattice: no unique top");
  if (!nodes[*bottom].t_linked) throw std::invalid_argument("overring lattice: the base ring must be t-linked");

  // Down-sets, for the cover test below.
  std::vector<Row> down(n, Row(words, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (test_bit(up[a], b)) set_bit(down[b], a);
    }
  }
  OverringLattice lat;
  for (std::size_t a = 0; a < n; ++a) {
    Row strict_up = up[a];
    strict_up[a / 64] &= ~(std::uint64_t{1} << (a % 64));
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a || !test_bit(up[a], b)) continue;
      Row strict_down = down[b];
      strict_down[b / 64] &= ~(std::uint64_t{1} << (b % 64));
      if (!rows_intersect(strict_up, strict_down)) lat.hasse_.emplace_back(a, b);
    }
  }
  lat.nodes_ = std::move(nodes);
  lat.up_ = std::move(up);
  lat.bottom_ = *bottom;
  lat.top_ = *top;
  return lat;
}

OverringLattice OverringLattice::opaque(Count node_count, Tri chains_finite, std::string reason) {
  if (node_count.is_finite() && chains_finite != Tri::yes) {
    throw std::invalid_argument("overring lattice: a finite overring set has only finite chains");
  }
  OverringLattice lat;
  lat.opaque_ = Opaque{node_count, chains_finite, std::move(reason)};
  return lat;
}

void OverringLattice::require_explicit(const char* what) const {
  if (opaque_) {
    throw std::domain_error(std::string(what) + ": overring set is not enumerated (" + opaque_->reason + ")");
  }
}

Count OverringLattice::node_count() const {
  if (opaque_) return opaque_->node_count;
  return Count::finite(static_cast<std::int64_t>(nodes_.size()));
}

const std::string& OverringLattice::opaque_reason() const {
  static const std::string none;
  return opaque_ ? opaque_->reason : none;
}

const std::vector<Node>& OverringLattice::nodes() const {
  require_explicit("nodes");
  return nodes_;
}

const std::vector<std::pair<NodeId, NodeId>>& OverringLattice::hasse_edges() const {
  require_explicit("hasse_edges");
  return hasse_;
}

NodeId OverringLattice::bottom() const {
  require_explicit("bottom");
  return bottom_;
}

NodeId OverringLattice::top() const {
  require_explicit("top");
  return top_;
}

bool OverringLattice::leq(NodeId a, NodeId b) const {
  require_explicit("leq");
  if (a >= nodes_.size() || b >= nodes_.size()) throw std::out_of_range("leq: node id out of range");
  return test_bit(up_[a], b);
}

std::optional<NodeId> OverringLattice::find(std::string_view label) const {
  require_explicit("find");
  for (NodeId i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].label == label) return i;
  }
  return std::nullopt;
}

bool operator==(const OverringLattice& a, const OverringLattice& b) {
  if (a.opaque_ || b.opaque_) {
    return a.opaque_ && b.opaque_ && a.opaque_->node_count == b.opaque_->node_count &&
           a.opaque_->chains_finite == b.opaque_->chains_finite && a.opaque_->reason == b.opaque_->reason;
  }
  return a.nodes_ == b.nodes_ && a.up_ == b.up_;
}

std::string describe(const SDRecord& r) {
  if (const auto* e = std::get_if<numsg::RelativeIdeal>(&r.ideal)) return e->to_string();
  return std::get<std::string>(r.ideal);
}

Count max_chain_length(const OverringLattice& lat) {
  if (!lat.is_explicit()) return lat.chains_finite() == Tri::no ? Count::infinite() : Count::unsupported();
  const auto& nodes = lat.nodes();
  const std::size_t n = nodes.size();
  // Sorting by down-set size gives a topological order of the Hasse DAG.
  std::vector<std::size_t> below(n, 0);
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = 0; b < n; ++b) below[b] += lat.leq(a, b) ? 1 : 0;
  }
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(), [&](NodeId x, NodeId y) { return below[x] < below[y]; });

  std::vector<std::vector<NodeId>> covers(n);
  for (auto [lo, hi] : lat.hasse_edges()) covers[lo].push_back(hi);
  std::vector<std::int64_t> longest(n, 0);
  longest[lat.bottom()] = 1;
  for (NodeId a : order) {
    if (longest[a] == 0) continue;
    for (NodeId b : covers[a]) longest[b] = std::max(longest[b], longest[a] + 1);
  }
  return Count::finite(longest[lat.top()]);
}

bool check_Ot_equals_O(const OverringLattice& lat) {
  const auto& nodes = lat.nodes();
  return std::all_of(nodes.begin(), nodes.end(), [](const Node& v) { return v.t_linked; });
}

PhiCheck phi_check(const OverringLattice& lat, std::span<const SDRecord> sd) {
  const auto& nodes = lat.nodes();
  std::set<NodeId> image;
  bool injective = true;
  for (const SDRecord& r : sd) {
    if (r.node >= nodes.size()) {
      throw std::out_of_range("phi_check: record " + describe(r) + " names missing node " + std::to_string(r.node));
    }
    if (r.node == lat.top()) throw std::invalid_argument("phi_check: record " + describe(r) + " maps to the top");
    injective = image.insert(r.node).second && injective;
  }
  std::set<NodeId> targets;
  for (NodeId i = 0; i < nodes.size(); ++i) {
    if (i != lat.top() && nodes[i].t_linked) targets.insert(i);
  }
  return PhiCheck{injective, image == targets};
}

bool is_fo(const OverringLattice& lat) { return lat.node_count().is_finite(); }

Tri is_fc(const OverringLattice& lat) {
  if (is_fo(lat)) return Tri::yes;
  return lat.chains_finite();
}

bool is_chain(const OverringLattice& lat) {
  const std::size_t n = lat.nodes().size();
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      if (!lat.leq(a, b) && !lat.leq(b, a)) return false;
    }
  }
  return true;
}

OverringLattice semigroup_lattice(const numsg::NumericalSemigroup& s) {
  const std::vector<numsg::NumericalSemigroup> over = numsg::oversemigroups(s);
  std::vector<Node> nodes;
  nodes.reserve(over.size() + 1);
  for (const auto& t : over) {
    const auto tset = numsg::RelativeIdeal::of_semigroup(s, t);
    nodes.push_back(Node{t.label(), t == s ? NodeKind::base : NodeKind::oversemigroup, true,
                         to_tri(numsg::v_closure(tset) == tset)});
  }
  const NodeId top = nodes.size();
  nodes.push_back(Node{"L", NodeKind::field_top, true, Tri::no});

  std::vector<std::pair<NodeId, NodeId>> relations;
  for (NodeId i = 0; i < over.size(); ++i) {
    relations.emplace_back(i, top);
    for (NodeId j = 0; j < over.size(); ++j) {
      if (i != j && over[j].includes(over[i])) relations.emplace_back(i, j);
    }
  }
  return OverringLattice::from_relations(std::move(nodes), relations);
}

std::vector<SDRecord> semigroup_sd_records(const numsg::NumericalSemigroup& s, const OverringLattice& lat) {
  std::vector<SDRecord> out;
  for (numsg::PhiPair& p : numsg::phi(s)) {
    auto node = lat.find(p.overring.label());
    if (!node) throw std::logic_error("semigroup_sd_records: " + p.overring.label() + " missing from lattice");
    out.push_back(SDRecord{std::move(p.ideal), *node});
  }
  return out;
}

std::string render_text(const OverringLattice& lat) {
  std::ostringstream os;
  if (!lat.is_explicit()) {
    os << "(" << lat.node_count() << " overrings, not enumerated: " << lat.opaque_reason() << ")\n";
    return os.str();
  }
  const auto& nodes = lat.nodes();
  std::vector<std::vector<NodeId>> covers(nodes.size());
  for (auto [lo, hi] : lat.hasse_edges()) covers[lo].push_back(hi);
  std::vector<bool> seen(nodes.size(), false);
  auto visit = [&](auto&& self, NodeId v, int depth) -> void {
    os << std::string(static_cast<std::size_t>(2 * depth), ' ') << nodes[v].label;
    if (seen[v]) {
      os << " (*)\n";
      return;
    }
    seen[v] = true;
    if (v != lat.top()) {
      os << "  [" << (nodes[v].t_linked ? "t-linked" : "not t-linked")
         << ", divisorial: " << to_string(nodes[v].divisorial_fraction) << "]";
    }
    os << '\n';
    for (NodeId w : covers[v]) self(self, w, depth + 1);
  };
  visit(visit, lat.bottom(), 0);
  return os.str();
}

}  // namespace overring::lattice
