#pragma once

#include <optional>
#include <vector>

#include "overring/numsg/relative_ideal.hpp"
#include "overring/numsg/semigroup.hpp"

namespace overring::numsg {

/// The set of E as a semigroup, when E is one (min 0 and additively
/// closed); otherwise nullopt. Used to read an overring off (E : E).
std::optional<NumericalSemigroup> as_semigroup(const RelativeIdeal& e);

/// All integral strongly divisorial ideals of S in canonical order.
///
/// Each candidate is E = S − T for an oversemigroup T; E is kept iff it is
/// strongly divisorial and S − E = T. This is complete: a strongly
/// divisorial E satisfies E = S − (S − E) and S − E is an oversemigroup.
std::vector<RelativeIdeal> sd_enumerate(const NumericalSemigroup& s);

struct PhiPair {
  RelativeIdeal ideal;
  NumericalSemigroup overring;  // S − ideal, equal to (ideal : ideal)
};

/// E ↦ S − E on the strongly divisorial ideals, in sd_enumerate order.
std::vector<PhiPair> phi(const NumericalSemigroup& s);

/// True iff every oversemigroup T is divisorial over S: S − (S − T) = T.
bool phi_surjective(const NumericalSemigroup& s);

/// Node count of the longest chain S = T0 ⊂ T1 ⊂ ... ⊂ N of
/// oversemigroups, plus one for the quotient field on top.
int max_overring_chain(const NumericalSemigroup& s);

}  // namespace overring::numsg
