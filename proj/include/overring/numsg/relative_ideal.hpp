#pragma once

#include <compare>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "overring/numsg/semigroup.hpp"

namespace overring::numsg {

/// A relative (fractional) ideal E of a numerical semigroup S: a nonempty
/// subset of Z, bounded below, with E + S ⊆ E. Models a fractional ideal of
/// k[[S]] through its value set.
///
/// Storage is the window [min, min + conductor + W] with W the largest
/// minimal generator of S; every integer past the window is a member. Since
/// min + S ⊆ E, membership is already total from min + conductor on, so the
/// window is lossless and two equal ideals have identical storage.
class RelativeIdeal {
 public:
  /// The smallest relative ideal containing `generators` (nonempty).
  static RelativeIdeal generated_by(const NumericalSemigroup& owner, std::span<const int> generators);

  /// shift + S.
  static RelativeIdeal principal(const NumericalSemigroup& owner, int shift);

  /// The set of an oversemigroup T ⊇ S viewed as a fractional ideal of S.
  /// Throws std::invalid_argument if T does not contain S.
  static RelativeIdeal of_semigroup(const NumericalSemigroup& owner, const NumericalSemigroup& t);

  /// M = S \ {0}. For S = N this is 1 + N.
  static RelativeIdeal maximal_ideal(const NumericalSemigroup& owner);

  /// E = elements ∪ [from, ∞). Throws std::invalid_argument unless E is
  /// closed under adding S.
  static RelativeIdeal from_members(const NumericalSemigroup& owner, std::span<const int> elements, int from);

  const NumericalSemigroup& owner() const { return owner_; }
  int min() const { return min_; }
  bool contains(int z) const;
  /// Smallest t with [t, ∞) ⊆ E.
  int tail_start() const;
  /// Members below tail_start(), ascending.
  std::vector<int> small_elements() const;

  /// E ⊆ S.
  bool is_integral() const;
  /// Set inclusion. Throws std::invalid_argument on owner mismatch.
  bool subset_of(const RelativeIdeal& other) const;

  /// "{2,4,...}" style rendering: small elements then the tail start.
  std::string to_string() const;

  friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) {
    return a.min_ == b.min_ && a.window_ == b.window_ && a.owner_ == b.owner_;
  }
  /// Canonical order: by min, then windowed bitset.
  friend std::strong_ordering operator<=>(const RelativeIdeal& a, const RelativeIdeal& b);

 private:
  // Members are lo + i for set bits i; every integer from lo + bits.size()
  // on is a member.
  RelativeIdeal(const NumericalSemigroup& owner, int lo, const std::vector<bool>& bits);

  friend RelativeIdeal add(const RelativeIdeal& e, const RelativeIdeal& f);
  friend RelativeIdeal dual(const RelativeIdeal& e);

  int window_length() const { return owner_.conductor() + owner_.max_generator() + 1; }

  NumericalSemigroup owner_;
  int min_ = 0;
  std::vector<bool> window_;
};

std::ostream& operator<<(std::ostream& os, const RelativeIdeal& e);

/// {e + f : e ∈ E, f ∈ F}. Models the ideal product.
RelativeIdeal add(const RelativeIdeal& e, const RelativeIdeal& f);

/// S − E = {z ∈ Z : z + E ⊆ S}. Models (R : I).
RelativeIdeal dual(const RelativeIdeal& e);

/// dual(dual(E)).
RelativeIdeal v_closure(const RelativeIdeal& e);

/// Relative ideals of a numerical semigroup are finitely generated, so the
/// t-closure coincides with the v-closure.
inline RelativeIdeal t_closure(const RelativeIdeal& e) { return v_closure(e); }

/// E = E + (S − E).
bool is_strong(const RelativeIdeal& e);

/// Strong and divisorial. Requires E integral; throws std::invalid_argument
/// otherwise.
bool is_strongly_divisorial(const RelativeIdeal& e);

}  // namespace overring::numsg
