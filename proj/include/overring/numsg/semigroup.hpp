#pragma once

#include <compare>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace overring::numsg {

/// A numerical semigroup: a cofinite additive submonoid of the naturals.
/// It stands for the value semigroup of the complete semigroup ring k[[S]].
///
/// Values are canonical: two semigroups compare equal iff they have the same
/// gap set, regardless of the generators they were built from. The stored
/// generator list is always the minimal generating system.
class NumericalSemigroup {
 public:
  /// Semigroup generated by `gens`. Throws std::invalid_argument on empty
  /// input, non-positive entries, or gcd != 1 (not cofinite).
  static NumericalSemigroup from_generators(std::span<const int> gens);

  /// Semigroup with gap set `gaps`. Throws std::invalid_argument when the
  /// complement of `gaps` is not closed under addition.
  static NumericalSemigroup from_gaps(std::span<const int> gaps);

  /// The naturals themselves, <1>.
  static NumericalSemigroup naturals();

  const std::vector<int>& generators() const { return generators_; }
  const std::vector<int>& gaps() const { return gaps_; }
  int frobenius() const { return conductor_ - 1; }
  int conductor() const { return conductor_; }
  int multiplicity() const { return generators_.front(); }
  int genus() const { return static_cast<int>(gaps_.size()); }
  /// Largest minimal generator.
  int max_generator() const { return generators_.back(); }

  bool contains(int n) const {
    if (n < 0) return false;
    if (n >= conductor_) return true;
    return member_[static_cast<std::size_t>(n)];
  }

  bool is_naturals() const { return conductor_ == 0; }

  /// True iff `other` is a subset of this semigroup.
  bool includes(const NumericalSemigroup& other) const;

  /// "<2,5>"; the naturals print as "<1>".
  std::string label() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.gaps_ == b.gaps_;
  }
  /// Canonical order: more gaps first, then lexicographic gap set. A proper
  /// subsemigroup always precedes its oversemigroups.
  friend std::strong_ordering operator<=>(const NumericalSemigroup& a, const NumericalSemigroup& b);

 private:
  NumericalSemigroup(std::vector<bool> member_below_conductor);

  std::vector<int> generators_;
  std::vector<int> gaps_;
  std::vector<bool> member_;  // indices [0, conductor)
  int conductor_ = 0;
};

std::ostream& operator<<(std::ostream& os, const NumericalSemigroup& s);

/// All T with S ⊆ T ⊆ N, each once, in canonical order (descending gap
/// count, then lexicographic gap set), so S comes first and N last.
/// Enumerated by walking the genus tree down from N and pruning branches
/// that remove an element of S.
std::vector<NumericalSemigroup> oversemigroups(const NumericalSemigroup& s);

/// Every numerical semigroup with Frobenius number at most `f_max`
/// (including N), canonically ordered.
std::vector<NumericalSemigroup> semigroups_up_to_frobenius(int f_max);

}  // namespace overring::numsg
