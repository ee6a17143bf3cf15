#pragma once

#include <compare>
#include <vector>

// Exhaustive reference computations over small numerical semigroups. Written
// against raw bitmasks and gap lists only, so it shares no code with the
// production numsg path it is used to check.

namespace overring::oracle {

/// Largest Frobenius number the oracle accepts. Ideal windows span 4·c
/// values in a 128-bit mask.
inline constexpr int kMaxFrobenius = 24;

/// A semigroup is identified by its sorted gap list.
using GapSet = std::vector<int>;

/// An explicit integer set: `small` ∪ [from, ∞), with every element of
/// `small` below `from` and `from - 1` not a member.
struct IntegerSet {
  std::vector<int> small;
  int from = 0;

  friend auto operator<=>(const IntegerSet&, const IntegerSet&) = default;
};

/// Every numerical semigroup with Frobenius number ≤ f_max: all subsets of
/// [1, f_max] whose complement in N is additively closed. Lexicographic
/// order on gap lists.
std::vector<GapSet> all_semigroups(int f_max);

/// All T ⊇ S: every subset of gaps(S) removed from the gap list, kept when
/// the result is additively closed. Lexicographic order on gap lists.
std::vector<GapSet> oversemigroups(const GapSet& gaps);

/// All integral ideals E of S with min(E) ≤ conductor that satisfy
/// E = E + (S − E) and E = S − (S − E), by depth-first enumeration of every
/// S-closed subset of [0, 2c). Sorted.
std::vector<IntegerSet> strongly_divisorial_ideals(const GapSet& gaps);

/// The oversemigroups T with S − (S − T) = T, as gap sets. Sorted.
std::vector<GapSet> divisorial_oversemigroups(const GapSet& gaps);

/// Node count of the longest chain S ⊂ ... ⊂ N under gap-set inclusion,
/// plus one for the quotient field.
int longest_overring_chain(const GapSet& gaps);

}  // namespace overring::oracle
