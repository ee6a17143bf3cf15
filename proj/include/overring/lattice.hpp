#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "overring/common.hpp"
#include "overring/numsg/relative_ideal.hpp"
#include "overring/numsg/semigroup.hpp"

namespace overring::lattice {

using NodeId = std::size_t;

enum class NodeKind : std::uint8_t { base, oversemigroup, tower_node, field_top };

std::string to_string(NodeKind k);
NodeKind parse_node_kind(std::string_view s);

struct Node {
  std::string label;
  NodeKind kind = NodeKind::tower_node;
  bool t_linked = true;
  /// Whether the overring is a fractional v-ideal of the base ring. Only
  /// decided where a rule applies.
  Tri divisorial_fraction = Tri::unknown;

  friend bool operator==(const Node&, const Node&) = default;
};

/// Finite poset of overrings between a domain R (bottom) and its quotient
/// field L (top), or an opaque stand-in when the overring set is not
/// enumerable (infinite, or finite with an order the models cannot pin).
///
/// Explicit lattices keep the order as its Hasse reduction plus a
/// reachability index. Opaque lattices answer only the rule-level queries and
/// refuse enumeration with std::domain_error.
class OverringLattice {
 public:
  /// Builds the reflexive-transitive closure of `relations` (pairs
  /// lower, upper). Throws std::invalid_argument unless the result is a
  /// partial order with a unique bottom and a unique top.
  static OverringLattice from_relations(std::vector<Node> nodes,
                                        std::span<const std::pair<NodeId, NodeId>> relations);

  static OverringLattice opaque(Count node_count, Tri chains_finite, std::string reason);

  bool is_explicit() const { return !opaque_; }
  Count node_count() const;
  /// Explicit lattices: always yes. Opaque: the rule-derived flag.
  Tri chains_finite() const { return opaque_ ? opaque_->chains_finite : Tri::yes; }
  const std::string& opaque_reason() const;

  const std::vector<Node>& nodes() const;
  const std::vector<std::pair<NodeId, NodeId>>& hasse_edges() const;
  NodeId bottom() const;
  NodeId top() const;
  bool leq(NodeId a, NodeId b) const;
  std::optional<NodeId> find(std::string_view label) const;

  friend bool operator==(const OverringLattice& a, const OverringLattice& b);

 private:
  struct Opaque {
    Count node_count;
    Tri chains_finite;
    std::string reason;
  };

  void require_explicit(const char* what) const;

  std::vector<Node> nodes_;
  std::vector<std::pair<NodeId, NodeId>> hasse_;
  std::vector<std::vector<std::uint64_t>> up_;  // up_[a] has bit b iff a <= b
  NodeId bottom_ = 0;
  NodeId top_ = 0;
  std::optional<Opaque> opaque_;
};

/// A strongly divisorial ideal and its image under I ↦ (I : I). Semigroup
/// models carry the actual ideal; symbolic models carry a tag.
struct SDRecord {
  std::variant<numsg::RelativeIdeal, std::string> ideal;
  NodeId node;
};

std::string describe(const SDRecord& r);

struct PhiCheck {
  bool injective;
  bool surjective;
};

/// Node count of the longest bottom-to-top chain. Opaque lattices give
/// "infinite" when some chain is known to be infinite, else "unsupported".
Count max_chain_length(const OverringLattice& lat);

/// Every overring t-linked. Explicit lattices only.
bool check_Ot_equals_O(const OverringLattice& lat);

/// injective: record nodes pairwise distinct. surjective: record nodes are
/// exactly the t-linked nodes other than the top. Throws std::out_of_range
/// for dangling node ids and std::invalid_argument for records on the top.
PhiCheck phi_check(const OverringLattice& lat, std::span<const SDRecord> sd);

/// Finitely many overrings.
bool is_fo(const OverringLattice& lat);
/// Every chain of overrings finite.
Tri is_fc(const OverringLattice& lat);

bool is_chain(const OverringLattice& lat);

/// Oversemigroups of S ordered by inclusion, plus the quotient field on top.
/// Every node is t-linked (one-dimensional local); divisorial_fraction is
/// S − (S − T) = T.
OverringLattice semigroup_lattice(const numsg::NumericalSemigroup& s);

/// phi(S) placed on the nodes of semigroup_lattice(S).
std::vector<SDRecord> semigroup_sd_records(const numsg::NumericalSemigroup& s, const OverringLattice& lat);

/// Indented rendering along Hasse edges from the bottom. A node reached a
/// second time is printed with "(*)" and not expanded again.
std::string render_text(const OverringLattice& lat);

}  // namespace overring::lattice
