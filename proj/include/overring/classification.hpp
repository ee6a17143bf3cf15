#pragma once

#include <optional>
#include <string>
#include <vector>

#include "overring/common.hpp"
#include "overring/lattice.hpp"

namespace overring {

/// Invariants specific to a semigroup ring k[[S]].
struct SemigroupFacts {
  std::vector<int> generators;
  std::vector<int> gaps;
  int frobenius = -1;
  int conductor = 0;
  int multiplicity = 1;
  /// Generators of the integral closure (always <1>, i.e. k[[X]]).
  std::vector<int> integral_closure;
  /// S − N = [conductor_ideal_from, ∞); the conductor of k[[S]] in k[[X]].
  int conductor_ideal_from = 0;

  friend bool operator==(const SemigroupFacts&, const SemigroupFacts&) = default;
};

/// Computed invariants and rule-derived flags for one domain instance.
struct ClassificationReport {
  std::string subject;
  std::string model;  // "numsg", "tower" or "prufer_y"
  int dim = 0;
  int dim_v = 0;
  Count overring_count = Count::unsupported();
  Count sd_count = Count::unsupported();
  Count max_chain_length = Count::unsupported();
  Tri is_local = Tri::unknown;
  Tri is_valuation = Tri::unknown;
  Tri is_pvd = Tri::unknown;
  Tri is_fo = Tri::unknown;
  Tri is_fc = Tri::unknown;
  Tri is_t_linkative = Tri::unknown;
  Tri is_super_t_linkative = Tri::unknown;
  Tri phi_surjective = Tri::unknown;
  Tri t_linked_under_all_overrings = Tri::unknown;
  bool conductor_nonzero = false;
  std::optional<SemigroupFacts> semigroup;
  std::optional<lattice::OverringLattice> lattice;
  std::vector<std::string> notes;

  /// is_fo ⇒ is_fc ⇒ is_super_t_linkative ⇒ is_t_linkative, read on the
  /// decided values only.
  bool hierarchy_consistent() const;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

}  // namespace overring
