#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "overring/classification.hpp"
#include "overring/common.hpp"
#include "overring/lattice.hpp"
#include "overring/numsg/semigroup.hpp"

namespace overring::tower {

/// Residue field extension k ⊆ K of a D+M construction with D = k. The
/// field theory is input, not computed: minimality, transcendence degree
/// and the number of rings between k and K are hypotheses supplied by the
/// caller (or a preset).
struct FieldExtensionSpec {
  std::string bottom_name = "k";
  std::string top_name = "K";
  bool algebraic = true;
  int trdeg = 0;
  /// Every α ∈ K \ k generates K over k, i.e. no ring lies strictly between.
  bool minimal = true;
  /// Rings between k and K, both ends included.
  Count intermediate_rings = Count::finite(2);

  /// Throws std::invalid_argument naming the violated invariant:
  /// minimal ⇔ intermediate_rings = 2; trdeg ≥ 1 ⇒ infinite; algebraic ⇔
  /// trdeg = 0; intermediate_rings ≥ 2.
  void validate() const;

  /// A degree-2 extension: minimal, two intermediate rings.
  static FieldExtensionSpec quadratic(std::string bottom, std::string top);
  /// k ⊂ k(X1..Xn): infinitely many intermediate rings.
  static FieldExtensionSpec purely_transcendental(std::string bottom, std::string top, int trdeg);

  friend bool operator==(const FieldExtensionSpec&, const FieldExtensionSpec&) = default;
};

/// D = K: the tower is a plain valuation domain.
struct TrivialBase {
  friend bool operator==(const TrivialBase&, const TrivialBase&) = default;
};

/// Prüfer domain with two maximal ideals and Y-shaped spectrum
/// (0) ⊂ P1 ⊂ ... ⊂ P(n-1) ⊂ M, N. Standalone; takes no layers.
struct PruferY {
  int dim = 1;
  friend bool operator==(const PruferY&, const PruferY&) = default;
};

using Base = std::variant<TrivialBase, FieldExtensionSpec, numsg::NumericalSemigroup, PruferY>;

/// R = B + M1 + M2 + ...: each layer is a valuation domain V_i = L_i + M_i
/// of dimension valuation_dims[i] whose residue field L_i is the quotient
/// field of the stage below.
struct TowerDescriptor {
  Base base;
  std::vector<int> valuation_dims;
  std::string name;

  /// Throws std::invalid_argument on a malformed descriptor.
  void validate() const;

  friend bool operator==(const TowerDescriptor&, const TowerDescriptor&) = default;
};

/// Human-readable rendering, e.g. "k[[<2,5>]] + M(1)".
std::string describe(const TowerDescriptor& d);

/// Krull dimension.
int dim(const TowerDescriptor& d);

/// Valuative dimension. The semigroup base contributes 1; for semigroup
/// bases under layers this is the standard D+M additivity rule.
int dim_v(const TowerDescriptor& d);

/// |O(B + M)| = |O(B)| + dim(layer), since every overring is comparable to
/// the layer's valuation ring.
Count count_overrings(const TowerDescriptor& d);

/// Strongly divisorial ideals where a closed form exists: valuation domains
/// (= dim), PVDs over a minimal residue extension (= dim + 1), bare
/// semigroup rings (enumerated). Anything else is "unsupported".
Count count_sd(const TowerDescriptor& d);

/// Explicit overring lattice, or an opaque one when the overring set is
/// infinite or the order among intermediate fields is not determined.
lattice::OverringLattice tower_lattice(const TowerDescriptor& d);

/// SD records on tower_lattice(d) for the closed-form cases of count_sd.
std::optional<std::vector<lattice::SDRecord>> tower_sd_records(const TowerDescriptor& d,
                                                               const lattice::OverringLattice& lat);

ClassificationReport classify(const TowerDescriptor& d);

/// The four PVD conditions, each evaluated along its own route.
struct PvdConditions {
  bool phi_surjective = false;    // SD image covers every non-top overring
  bool minimal_over_v = false;    // no ring strictly between R and V
  bool residue_minimal = false;   // K = k(α) for every α ∈ K \ k
  bool overrings_split = false;   // |O(R)| = 1 + |O(V)|

  bool all_agree() const;
};

/// Throws std::invalid_argument unless the base is a field extension.
PvdConditions pvd_conditions(const TowerDescriptor& d);

/// True iff all four PVD conditions agree.
bool pvd_equivalences(const TowerDescriptor& d);

/// Kind of the top ring T in a pullback R = φ⁻¹(D) over T → T/M.
enum class PullbackTop { valuation, local_dim1, power_series };

std::string to_string(PullbackTop t);
/// Throws std::invalid_argument for an unknown kind.
PullbackTop parse_pullback_top(std::string_view s);

/// A pullback square with T local and M maximal in T.
struct PullbackSquare {
  bool base_is_field = true;
  PullbackTop top = PullbackTop::valuation;
  std::string name;

  friend bool operator==(const PullbackSquare&, const PullbackSquare&) = default;
};

/// R is t-linked under T iff D is a field and M is a t-ideal of T. M is a
/// t-ideal when T is a valuation ring (Prüfer) or M has height one; in a
/// power series ring in two or more variables M_v = T.
bool t_linked_under(bool base_is_field, PullbackTop top);

inline bool t_linked_under(const PullbackSquare& p) { return t_linked_under(p.base_is_field, p.top); }

using Descriptor = std::variant<TowerDescriptor, PullbackSquare>;

/// k[[X²,X⁵]] followed by n − 1 one-dimensional layers. n ≥ 1.
TowerDescriptor example_gs8(int n);
/// k + Z k(X,Y)[[Z]].
TowerDescriptor example_nls5();
/// Q + M over a valuation stack of total dimension n − 2 with residue
/// field Q(√2). n ≥ 3.
TowerDescriptor example_tlsd5(int n);
/// Q + M inside Q(√2)[[X,Y]].
PullbackSquare example_dtuo5();
/// A PVD over its associated valuation ring.
PullbackSquare pvd_over_valuation();
/// k + X K[X] over K[X].
PullbackSquare k_plus_xkx();

/// Parses "gs8:N", "nls5", "tlsd5:N", "dtuo5", "pvd-over-v", "k-plus-xkx".
/// Throws std::invalid_argument on unknown names or out-of-range N.
Descriptor preset(std::string_view spec);

}  // namespace overring::tower
